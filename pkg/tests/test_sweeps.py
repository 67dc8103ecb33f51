import pytest

from straightnet import (
    DEFAULT_SWEEP_SUBDIVISION,
    GridSpec,
    RadialSpec,
    generate_radioconcentric,
    generate_rectilinear,
    summarize,
    sweep_radial,
    sweep_rectilinear,
)
from straightnet.tables import (
    RADIAL_SWEEP_HEADER,
    RECT_SWEEP_HEADER,
    read_table,
    write_radial_sweep_csv,
    write_rect_sweep_csv,
)


class TestRectSweep:
    def test_single_cell_matches_direct_summary(self):
        result = sweep_rectilinear([1])[0]
        assert result.parameters == {"squares_per_side": 1}
        assert result.summary == summarize(generate_rectilinear(GridSpec(1)))
        assert result.wall_time_ms >= 0

    def test_unit_square_mean(self):
        result = sweep_rectilinear([1])[0]
        assert result.summary.mean == pytest.approx(0.9023689270621825, abs=1e-12)

    def test_row_per_size_in_order(self):
        results = sweep_rectilinear([3, 1, 2])
        sizes = [r.parameters["squares_per_side"] for r in results]
        assert sizes == [3, 1, 2]

    @pytest.mark.parametrize("size", [0, 51, -2])
    def test_size_guard(self, size):
        with pytest.raises(ValueError, match="outside"):
            sweep_rectilinear([size])


class TestRadialSweep:
    def test_corner_only_square_wheel_is_straight(self):
        # with subdivision 1 the k=4, m=1 wheel scores a perfect mean
        result = sweep_radial([4], [1], subdivision=1)[0]
        assert result.summary.mean == 1.0

    def test_cell_matches_direct_summary(self):
        result = sweep_radial([5], [2], subdivision=3)[0]
        expected = summarize(generate_radioconcentric(RadialSpec(5, 2, 3)))
        assert result.summary == expected

    def test_grid_ordering_radii_major(self):
        results = sweep_radial([3, 4], [1, 2], subdivision=1)
        cells = [(r.parameters["radii"], r.parameters["rings"]) for r in results]
        assert cells == [(3, 1), (3, 2), (4, 1), (4, 2)]

    def test_default_subdivision_places_nodes_between_spokes(self):
        assert DEFAULT_SWEEP_SUBDIVISION > 1
        sparse = sweep_radial([4], [1], subdivision=1)[0].summary.mean
        meshed = sweep_radial([4], [1])[0].summary.mean
        assert meshed < sparse  # intermediate destinations force detours

    def test_invalid_radii_propagates(self):
        with pytest.raises(ValueError):
            sweep_radial([2], [1])

    def test_ring_count_matters_less_than_spoke_count(self):
        """Across the sweep, ring count moves the mean far less than spokes."""
        spokes = [3, 10, 20]
        rings = [1, 2, 3, 4, 5]
        table = {
            (r.parameters["radii"], r.parameters["rings"]): r.summary.mean
            for r in sweep_radial(spokes, rings)
        }
        ring_spread = max(
            max(table[(k, m)] for m in rings) - min(table[(k, m)] for m in rings)
            for k in spokes
        )
        spoke_spread = min(
            max(table[(k, m)] for k in spokes) - min(table[(k, m)] for k in spokes)
            for m in rings
        )
        assert ring_spread < spoke_spread


class TestSweepCsv:
    def test_rect_schema(self, tmp_path):
        path = tmp_path / "rect.csv"
        write_rect_sweep_csv(path, sweep_rectilinear([1, 2]))
        header, rows = read_table(path)
        assert header == RECT_SWEEP_HEADER
        assert [r["squares_per_side"] for r in rows] == ["1", "2"]
        assert rows[0]["mean"] == "0.902368927"
        assert rows[0]["pair_count"] == "6"
        assert rows[0]["skipped"] == "0"

    def test_radial_schema(self, tmp_path):
        path = tmp_path / "radial.csv"
        write_radial_sweep_csv(path, sweep_radial([4], [1], subdivision=1))
        header, rows = read_table(path)
        assert header == RADIAL_SWEEP_HEADER
        assert rows[0]["radii"] == "4"
        assert rows[0]["rings"] == "1"
        assert rows[0]["mean"] == "1"
        assert rows[0]["std_dev"] == "0"

    def test_newline_discipline(self, tmp_path):
        path = tmp_path / "rect.csv"
        write_rect_sweep_csv(path, sweep_rectilinear([1]))
        raw = path.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")
