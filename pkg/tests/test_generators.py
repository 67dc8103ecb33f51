import math

import numpy as np
import pytest

from straightnet import (
    GridSpec,
    RadialSpec,
    generate_radioconcentric,
    generate_rectilinear,
    grid_node_id,
    ring_node_id,
    sector_angle,
    side_node_id,
)


class TestSpecValidation:
    def test_grid_size_must_be_positive(self):
        with pytest.raises(ValueError):
            GridSpec(0)

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_too_few_radii(self, k):
        with pytest.raises(ValueError, match="at least 3"):
            RadialSpec(k, 1)

    def test_rings_must_be_positive(self):
        with pytest.raises(ValueError):
            RadialSpec(4, 0)

    def test_subdivision_must_be_positive(self):
        with pytest.raises(ValueError):
            RadialSpec(4, 1, 0)


class TestRectilinear:
    def test_unit_square(self):
        g = generate_rectilinear(GridSpec(1))
        assert g.node_count == 4
        assert g.edge_count == 4

    def test_two_by_two(self):
        g = generate_rectilinear(GridSpec(2))
        assert g.node_count == 9
        assert g.edge_count == 12  # 2*s*(s+1)

    def test_row_major_ids(self):
        spec = GridSpec(4)
        g = generate_rectilinear(spec)
        assert g.node_count == 25
        assert g.edge_count == 40
        assert grid_node_id(spec, 3, 4) == 23
        assert g.point(23) == (3.0, 4.0)
        assert g.point(0) == (0.0, 0.0)

    def test_all_edges_unit_length(self):
        g = generate_rectilinear(GridSpec(5))
        assert np.all(g.edge_lengths == 1.0)

    def test_node_id_bounds_checked(self):
        with pytest.raises(ValueError):
            grid_node_id(GridSpec(2), 3, 0)

    def test_translation_symmetry(self):
        """Shifting any non-boundary column node by (1, 0) lands on a node."""
        g = generate_rectilinear(GridSpec(4))
        node_set = {tuple(p) for p in g.positions}
        for x, y in g.positions:
            if x <= 3:
                assert (x + 1.0, y) in node_set

    def test_degree_pattern(self):
        g = generate_rectilinear(GridSpec(3))
        degrees = sorted(len(g.neighbors(i)) for i in range(g.node_count))
        # 4 corners, 8 boundary, 4 interior for s=3
        assert degrees == [2] * 4 + [3] * 8 + [4] * 4


class TestRadioconcentric:
    def test_small_wheel(self):
        spec = RadialSpec(4, 1)
        g = generate_radioconcentric(spec)
        assert g.node_count == 5
        assert g.edge_count == 8
        ring = [g.point(ring_node_id(spec, 1, i)) for i in range(4)]
        assert ring[0] == pytest.approx((1.0, 0.0), abs=1e-15)
        assert ring[1] == pytest.approx((0.0, 1.0), abs=1e-15)
        assert ring[2] == pytest.approx((-1.0, 0.0), abs=1e-15)
        assert ring[3] == pytest.approx((0.0, -1.0), abs=1e-15)

    def test_side_chords_of_square_wheel(self):
        g = generate_radioconcentric(RadialSpec(4, 1))
        chords = sorted(g.edge_lengths)[4:]  # radial edges are the 4 shortest
        assert chords == pytest.approx([math.sqrt(2)] * 4, abs=1e-12)

    def test_two_ring_triangle_counts(self):
        spec = RadialSpec(3, 2)
        g = generate_radioconcentric(spec)
        assert g.node_count == 7
        assert g.edge_count == 12
        outer = g.point(ring_node_id(spec, 2, 0))
        assert outer == pytest.approx((2.0, 0.0), abs=1e-15)

    def test_outer_chord_scales_with_ring(self):
        spec = RadialSpec(3, 2)
        g = generate_radioconcentric(spec)
        a = g.point(ring_node_id(spec, 2, 0))
        b = g.point(ring_node_id(spec, 2, 1))
        # ring-2 chord: 2 * 2 * sin(pi/3) = 2 * sqrt(3)
        assert math.dist(a, b) == pytest.approx(2 * math.sqrt(3), abs=1e-12)

    def test_subdivided_counts(self):
        g = generate_radioconcentric(RadialSpec(8, 1, 4))
        assert g.node_count == 1 + 8 + 8 * 3
        assert g.edge_count == 8 + 8 * 4  # radial + chord segments

    def test_node_and_edge_count_formula(self):
        for k, m, q in [(3, 1, 1), (5, 2, 1), (4, 3, 2), (6, 2, 5)]:
            g = generate_radioconcentric(RadialSpec(k, m, q))
            assert g.node_count == 1 + k * m + k * m * (q - 1)
            assert g.edge_count == k * m + k * m * q

    def test_rotation_symmetry(self):
        """Rotating the node set by one sector angle maps it onto itself."""
        for spec in (RadialSpec(5, 2), RadialSpec(6, 3, 3)):
            g = generate_radioconcentric(spec)
            theta = sector_angle(spec.radii_count)
            c, s = math.cos(theta), math.sin(theta)
            rotated = g.positions @ np.array([[c, s], [-s, c]])
            for point in rotated:
                nearest = np.min(np.hypot(*(g.positions - point).T))
                assert nearest <= 1e-9

    def test_subdivision_nodes_collinear_with_chord(self):
        spec = RadialSpec(7, 2, 5)
        g = generate_radioconcentric(spec)
        for ring in (1, 2):
            for side in range(7):
                a = np.array(g.point(ring_node_id(spec, ring, side)))
                b = np.array(g.point(ring_node_id(spec, ring, (side + 1) % 7)))
                direction = (b - a) / np.hypot(*(b - a))
                normal = np.array([-direction[1], direction[0]])
                for step in range(1, 5):
                    p = np.array(g.point(side_node_id(spec, ring, side, step)))
                    assert abs((p - a) @ normal) <= 1e-12

    def test_subdivision_positions_scale_across_rings(self):
        spec = RadialSpec(5, 3, 4)
        g = generate_radioconcentric(spec)
        for side in range(5):
            for step in range(1, 4):
                base = np.array(g.point(side_node_id(spec, 1, side, step)))
                for ring in (2, 3):
                    p = np.array(g.point(side_node_id(spec, ring, side, step)))
                    assert np.allclose(p, ring * base, atol=1e-12)

    def test_side_node_id_requires_subdivision(self):
        with pytest.raises(ValueError, match="no subdivision"):
            side_node_id(RadialSpec(4, 1), 1, 0, 1)

    def test_index_helpers_bounds(self):
        spec = RadialSpec(4, 2, 3)
        with pytest.raises(ValueError):
            ring_node_id(spec, 3, 0)
        with pytest.raises(ValueError):
            ring_node_id(spec, 1, 4)
        with pytest.raises(ValueError):
            side_node_id(spec, 1, 0, 3)

    def test_center_is_node_zero(self):
        g = generate_radioconcentric(RadialSpec(9, 2))
        assert g.point(0) == (0.0, 0.0)
        assert len(g.neighbors(0)) == 9
