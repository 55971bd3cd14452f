import pytest

from gridknot.braid import invariants
from gridknot.convert import classical_invariants, grid_to_braid
from gridknot.equiv import (
    NO,
    UNKNOWN,
    YES,
    SearchBudget,
    equivalent,
    orbit_size,
    tc_orbit_equal,
)
from gridknot.errors import UnsupportedClass
from gridknot.grid import census, validate
from gridknot.moves import Stabilize, Translate, apply


class TestTcOrbitEqual:
    def test_translation(self, u2):
        assert tc_orbit_equal(u2, apply(u2, Translate("U")))

    def test_the_other_two_by_two(self, u2):
        assert tc_orbit_equal(u2, validate(2, [0, 1], [1, 0]))

    def test_different_grid_numbers(self, u2, g5):
        assert not tc_orbit_equal(u2, g5)

    def test_disjoint_orbits_same_n(self, u2):
        # stabilizations of opposite signs land in different orbits
        a = apply(u2, Stabilize("X", "NW", 0))
        b = apply(u2, Stabilize("X", "SW", 0))
        assert not tc_orbit_equal(a, b)

    def test_closed_under_all_tc_moves(self, make_grid, rnd):
        from gridknot.moves import CommuteCols, CommuteRows, legal_moves

        for _ in range(25):
            g = make_grid(rnd.randint(2, 5))
            for m in legal_moves(g):
                if isinstance(m, (Translate, CommuteRows, CommuteCols)):
                    assert tc_orbit_equal(g, apply(g, m))


class TestOrbitSize:
    def test_u2(self, u2):
        assert orbit_size(u2) == 2

    def test_constant_on_orbit(self, make_grid, rnd):
        for _ in range(10):
            g = make_grid(3)
            size = orbit_size(g)
            assert size >= 1
            assert orbit_size(apply(g, Translate("L"))) == size

    def test_non_tc_rejected(self, u2):
        with pytest.raises(UnsupportedClass):
            orbit_size(u2, "K")


class TestEquivalent:
    def test_legendrian_detects_stabilization(self, u2):
        res = equivalent(u2, apply(u2, Stabilize("X", "NW", 0)), "L")
        assert res.verdict == NO
        assert res.reason == "tb: -1 vs -2"

    def test_transverse_detects_positive_stab(self, u2):
        res = equivalent(u2, apply(u2, Stabilize("X", "NW", 0)), "T")
        assert res.verdict == NO
        assert res.reason == "sl: -1 vs -3"

    def test_topological_undoes_stab(self, u2):
        g2 = apply(u2, Stabilize("X", "NW", 0))
        res = equivalent(u2, g2, "K")
        assert res.verdict == YES
        assert len(res.script.moves) == 1
        assert res.script.replay(u2) == g2

    def test_transverse_absorbs_negative_stab(self, u2):
        g2 = apply(u2, Stabilize("X", "SE", 0))
        res = equivalent(u2, g2, "T")
        assert res.verdict == YES
        assert res.script.replay(u2) == g2
        res_l = equivalent(u2, g2, "L")
        assert res_l.verdict == NO
        assert res_l.reason == "tb: -1 vs -2"

    def test_component_precheck(self, u2):
        g2 = validate(4, [1, 0, 3, 2], [0, 1, 2, 3])
        res = equivalent(u2, g2, "K")
        assert res.verdict == NO
        assert res.reason == "components: 1 vs 2"

    def test_braid_class_precheck(self, u2):
        g2 = apply(u2, Stabilize("X", "SW", 0))
        res = equivalent(u2, g2, "B")
        assert res.verdict == NO
        assert "vs" in res.reason

    def test_braid_class_ne_se_yes(self, u2, rnd):
        g2 = apply(apply(u2, Stabilize("X", "NE", 1)), Stabilize("X", "SE", 0))
        res = equivalent(u2, g2, "B")
        assert res.verdict == YES
        assert res.script.replay(u2) == g2

    def test_unknown_under_tiny_budget(self, u2, make_grid):
        g2 = apply(apply(u2, Stabilize("X", "NE", 0)), Stabilize("X", "NE", 1))
        res = equivalent(u2, g2, "K", SearchBudget(max_grid_number=4, max_states=4))
        assert res.verdict in (UNKNOWN, YES)

    def test_no_cites_recomputable_values(self, u2, make_grid, rnd):
        for _ in range(10):
            g2 = make_grid(rnd.randint(2, 4))
            res = equivalent(u2, g2, "L", SearchBudget(max_states=3000, max_seconds=5))
            if res.verdict == NO:
                name, _, rest = res.reason.partition(":")
                left, _, right = rest.partition(" vs ")
                maps = {
                    "components": lambda g: census(g).components,
                    "tb": lambda g: classical_invariants(g).tb,
                    "r": lambda g: classical_invariants(g).r,
                }
                assert maps[name](u2) == int(left)
                assert maps[name](g2) == int(right)

    def test_scripts_replay_exactly(self, u2, rnd):
        from gridknot.moves import MoveScript, legal_moves

        # scramble u2 by legal class-L moves, then ask for a way back
        g = u2
        for _ in range(3):
            options = [
                m
                for m in legal_moves(g)
                if not isinstance(m, Stabilize) or (m.kind == "X" and m.corner in ("NE", "SW"))
            ]
            options = [m for m in options if not _is_o_move(m)]
            g = apply(g, rnd.choice(options))
        res = equivalent(u2, g, "L", SearchBudget(max_grid_number=g.n + 1))
        assert res.verdict == YES
        assert res.script.replay(u2) == g

    def test_monotone_in_class(self, u2):
        g2 = apply(apply(u2, Stabilize("X", "NE", 0)), Translate("L"))
        for cls in ("L", "T", "K"):
            res = equivalent(u2, g2, cls)
            assert res.verdict == YES
            assert res.script.replay(u2) == g2

    def test_class_b_consistent_with_word_relation(self, u2):
        from gridknot.braid import conjugacy_oracle

        g2 = apply(apply(u2, Stabilize("X", "SE", 0)), Translate("U"))
        res = equivalent(u2, g2, "B")
        assert res.verdict == YES
        w1, w2 = grid_to_braid(u2), grid_to_braid(g2)
        assert w1.strands == w2.strands
        assert conjugacy_oracle(w1, w2, max_depth=4).verdict == YES


def _is_o_move(m):
    kind = getattr(m, "kind", None)
    return kind == "O"
