"""Skeletal expansion: 2-skeletons, boundary spheres, the n=3 criterion."""

from __future__ import annotations

import pytest

from skelex.errors import NotGoodColoring, UnsupportedDimension
from skelex.expansion import (
    boundary_sphere_complex,
    criterion_3d,
    expand2,
    full_expand,
    sphere_check,
    _subcomplex,
)
from skelex.generators import gen_cube, gen_nonorientable_surface, gen_orientable_surface
from skelex.nests import enumerate_nests, nest_label


class TestExpand2:
    def test_k4_cells(self):
        c = expand2(gen_nonorientable_surface(1))
        assert c.counts() == (4, 6, 3)

    def test_cube_cells(self, cube2):
        c = expand2(cube2)
        assert c.counts() == (8, 12, 6)
        assert c.euler() == 2

    def test_torus_cells(self):
        c = expand2(gen_orientable_surface(1))
        assert c.counts() == (8, 12, 4)

    def test_nongood_refused(self, nongood):
        with pytest.raises(NotGoodColoring):
            expand2(nongood)

    def test_low_dimension_refused(self):
        with pytest.raises(UnsupportedDimension):
            expand2(gen_cube(1))

    def test_boundary_condition(self, cube2, cube3):
        assert expand2(cube2).boundary_condition_holds()
        assert full_expand(cube3).complex.boundary_condition_holds()

    def test_face_incidence_mirrors_nests(self, cube2):
        c = expand2(cube2)
        for disc in c.cells_by_dim[2]:
            assert set(disc.faces) == set(disc.nest.edge_ids)
            for e in disc.faces:
                edge_cell = c.cells_by_dim[1][e]
                assert disc.nest.contains(edge_cell.nest)


class TestBoundarySphere:
    def test_hypercube_three_nest_boundary(self, cube3):
        skeleton = expand2(cube3)
        nest = enumerate_nests(cube3, 3)[0]
        F = boundary_sphere_complex(cube3, skeleton, nest)
        assert F.counts() == (8, 12, 6)
        assert F.euler() == 2
        assert sphere_check(F, 2).ok

    def test_counterexample_nest_types(self, counterexample):
        skeleton = expand2(counterexample)
        eulers = {}
        for nest in enumerate_nests(counterexample, 3):
            F = boundary_sphere_complex(counterexample, skeleton, nest)
            label = nest_label(nest)
            eulers.setdefault(label, []).append(
                (F.euler(), sphere_check(F, 2).ok)
            )
        # two projective planes on the x1x2x3 side, three spheres elsewhere
        assert eulers["x1·x2·x3"] == [(1, False), (1, False)]
        for label in ("x0·x1·x2", "x0·x1·x3", "x0·x2·x3"):
            assert eulers[label] == [(2, True)]

    def test_dim_mismatch(self, cube3):
        skeleton = expand2(cube3)
        with pytest.raises(ValueError):
            boundary_sphere_complex(cube3, skeleton, enumerate_nests(cube3, 2)[0])


class TestSphereCheck:
    def test_circle(self, cube2):
        skeleton = expand2(cube2)
        nest = enumerate_nests(cube2, 2)[0]
        keep = [
            {c.index for c in cells if nest.contains(c.nest)}
            for cells in skeleton.cells_by_dim[:2]
        ]
        F = _subcomplex(skeleton, keep)
        assert sphere_check(F, 1).ok

    def test_two_disjoint_circles_fail(self, cube2):
        skeleton = expand2(cube2)
        nests = enumerate_nests(cube2, 2)
        # two vertex-disjoint squares of the cube
        a = next(n for n in nests if n.vertex_ids == (0, 1, 2, 3))
        b = next(n for n in nests if n.vertex_ids == (4, 5, 6, 7))
        keep = [
            {
                c.index
                for c in cells
                if a.contains(c.nest) or b.contains(c.nest)
            }
            for cells in skeleton.cells_by_dim[:2]
        ]
        F = _subcomplex(skeleton, keep)
        verdict = sphere_check(F, 1)
        assert not verdict.ok
        assert "connected" in verdict.reason

    def test_projective_plane_is_not_sphere(self):
        c = expand2(gen_nonorientable_surface(1))
        verdict = sphere_check(c, 2)
        assert not verdict.ok
        assert "euler characteristic 1" in verdict.reason

    def test_cube_surface_is_sphere(self, cube2):
        assert sphere_check(expand2(cube2), 2).ok

    def test_unsupported_dimension(self, cube2):
        with pytest.raises(UnsupportedDimension):
            sphere_check(expand2(cube2), 3)


class TestCriterion:
    def test_hypercube_satisfies(self, cube3):
        crit = criterion_3d(cube3)
        assert crit.holds
        assert crit.counts() == (16, 24, 8)
        assert crit.three_nests == crit.two_nests - crit.vertex_count

    def test_counterexample_fails_with_exact_counts(self, counterexample):
        crit = criterion_3d(counterexample)
        assert not crit.holds
        assert crit.counts() == (8, 12, 5)

    def test_wrong_n(self, cube2):
        with pytest.raises(UnsupportedDimension):
            criterion_3d(cube2)


class TestFullExpand:
    def test_surface_always_completes(self, cube2):
        out = full_expand(cube2)
        assert out.completed and out.reached_dim == 2
        assert out.complex.euler() == 2

    def test_hypercube_completes(self, cube3):
        out = full_expand(cube3)
        assert out.completed and out.reached_dim == 3
        assert out.complex.counts() == (16, 32, 24, 8)
        assert out.complex.euler() == 0

    def test_counterexample_obstructed(self, counterexample):
        out = full_expand(counterexample)
        assert not out.completed
        assert out.reached_dim == 2
        assert out.obstruction.counts == (8, 12, 5)

    def test_each_two_cell_in_two_three_cells(self, cube3):
        c = full_expand(cube3).complex
        for uses in c.cofaces(2):
            assert len(uses) == 2

    def test_n4_stops_at_two_skeleton(self):
        out = full_expand(gen_cube(4))
        assert not out.completed
        assert out.reached_dim == 2
        assert "unsupported" in out.obstruction.reason

    def test_n1_rejected(self):
        with pytest.raises(UnsupportedDimension):
            full_expand(gen_cube(1))
