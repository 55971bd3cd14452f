"""Acceptance criteria, one test each, at their stated sizes and budgets.

Run ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  Every check is exact; bounded-search answers of Unknown
count as failures at these sizes.
"""

import itertools
import random
import time

from gridknot import braid, convert, equiv, grid, moves
from gridknot.braid import BraidWord
from gridknot.suites import random_braid_word, random_grid

SEED = 52


def _report(num: int, name: str, elapsed: float, limit: float, ok: bool) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d} {name}: {verdict} ({elapsed:.2f}s / limit {limit:.0f}s)")
    assert ok, f"criterion {num} ({name}) failed"
    assert elapsed < limit, f"criterion {num} exceeded {limit}s: {elapsed:.2f}s"


def test_criterion_1_roundtrip():
    t0 = time.time()
    rnd = random.Random(SEED)
    ok = True
    known = BraidWord(3, (-2, 1, 2, 2, 1, 1))
    ok &= convert.grid_to_braid(convert.braid_to_grid(known)) == known
    for _ in range(200):
        n = rnd.randint(1, 4)
        w = random_braid_word(n, rnd.randint(0, 8) if n > 1 else 0, rnd)
        ok &= convert.grid_to_braid(convert.braid_to_grid(w)) == w
    _report(1, "braid->grid->braid verbatim", time.time() - t0, 5, ok)


def _sample_grids(count: int, max_n: int, seed: int = SEED):
    rnd = random.Random(seed)
    return [random_grid(rnd.randint(2, max_n), rnd) for _ in range(count)]


def test_criterion_2_braid_column():
    t0 = time.time()
    ok = True
    markov_checked = 0
    for g in _sample_grids(100, 6):
        w = convert.grid_to_braid(g)
        e = braid.invariants(w).exponent_sum
        for c in range(g.n):
            for corner, deltas in (("NE", None), ("SE", None), ("SW", (1, 1)), ("NW", (-1, 1))):
                g2 = moves.apply(g, moves.Stabilize("X", corner, c))
                w2 = convert.grid_to_braid(g2)
                if deltas is None:
                    ok &= w2.strands == w.strands and braid.words_equal(w2, w)
                else:
                    got = (braid.invariants(w2).exponent_sum - e, w2.strands - w.strands)
                    ok &= got == deltas
                if corner == "SW" and g.n <= 4:
                    markov_checked += 1
                    ok &= braid.markov_oracle(w, w2).verdict == braid.YES
    assert markov_checked > 0
    _report(2, "stabilization effect on the braid word", time.time() - t0, 60, ok)


def test_criterion_3_legendrian_transverse_columns():
    t0 = time.time()
    ok = True
    for g in _sample_grids(100, 6):
        ci = convert.classical_invariants(g)
        for m in moves.legal_moves(g):
            if isinstance(m, (moves.Translate, moves.CommuteRows, moves.CommuteCols)):
                ci2 = convert.classical_invariants(moves.apply(g, m))
                ok &= (ci2.tb, ci2.r) == (ci.tb, ci.r)
        for c in range(g.n):
            for corner, want in (("NE", (0, 0)), ("SW", (0, 0)), ("SE", (-1, -1)), ("NW", (-1, 1))):
                ci2 = convert.classical_invariants(moves.apply(g, moves.Stabilize("X", corner, c)))
                ok &= (ci2.tb - ci.tb, ci2.r - ci.r) == want
                ok &= (ci2.sl - ci.sl) == (-2 if corner == "NW" else 0)
    _report(3, "stabilization effect on (tb, r, sl)", time.time() - t0, 30, ok)


def test_criterion_4_sl_coherence():
    t0 = time.time()
    ok = True
    for g in _sample_grids(500, 7):
        ok &= convert.sl_from_braid(convert.grid_to_braid(g)) == convert.classical_invariants(g).sl
    _report(4, "self-linking agrees along both routes", time.time() - t0, 30, ok)


def test_criterion_5_translation_commutation_vs_braid():
    t0 = time.time()
    rnd = random.Random(SEED)
    ok = True
    instances = 0
    while instances < 50:
        g = random_grid(rnd.randint(2, 6), rnd)
        w = convert.grid_to_braid(g)
        if w.strands > 4:
            continue
        instances += 1
        for d in ("L", "R"):
            w2 = convert.grid_to_braid(moves.apply(g, moves.Translate(d)))
            res = braid.conjugacy_oracle(w, w2, max_depth=g.n, max_states=50000)
            ok &= res.verdict == braid.YES
        for d in ("U", "D"):
            w2 = convert.grid_to_braid(moves.apply(g, moves.Translate(d)))
            res = braid.conjugacy_oracle(w, w2, max_depth=g.n + 2, max_states=50000)
            ok &= res.verdict == braid.YES
        for m in moves.legal_moves(g):
            if isinstance(m, moves.CommuteRows):
                w2 = convert.grid_to_braid(moves.apply(g, m))
                ok &= w2.strands == w.strands and braid.exchange_related(w, w2)
            if isinstance(m, moves.CommuteCols):
                w2 = convert.grid_to_braid(moves.apply(g, m))
                ok &= w2.strands == w.strands and braid.words_equal(w, w2)
    _report(5, "translations conjugate, row commutations exchange", time.time() - t0, 120, ok)


def test_criterion_6_exchange_decomposition():
    t0 = time.time()
    ok = True
    letters = (1, -1, 2, -2)
    pool = [()]
    for length in range(1, 4):
        pool.extend(itertools.product(letters, repeat=length))
    for b1 in pool:
        for b2 in pool:
            steps = braid.birman_wrinkle_script(b1, b2, 4)
            start = BraidWord(4, tuple(b1) + (3,) + tuple(b2) + (-3,))
            target = BraidWord(4, tuple(b1) + (-3,) + tuple(b2) + (3,))
            kinds = [s.kind for s in steps]
            ok &= kinds.count("conj") == 5 and kinds.count("stab+") == 1 and kinds.count("destab+") == 1
            ok &= braid.verify_steps(start, steps)
            ok &= braid.words_equal(steps[-1].word, target)
    _report(6, "exchange = conjugations + one positive stab/destab", time.time() - t0, 60, ok)


def test_criterion_7_symmetries_permute_stabilizations():
    from gridknot.suites import _table2_instance

    t0 = time.time()
    rnd = random.Random(SEED)
    ok = True
    for _ in range(50):
        g = random_grid(rnd.randint(2, 5), rnd)
        p = rnd.randrange(g.n)
        for s in moves.SYMMETRIES:
            for t in moves.CORNERS:
                ok &= _table2_instance(g, s, t, p)
    _report(7, "symmetry/stabilization conjugation law", time.time() - t0, 120, ok)


def test_criterion_8_o_stabilization_reduction():
    t0 = time.time()
    rnd = random.Random(SEED)
    pairing = {"NW": "SE", "NE": "SW", "SW": "NE", "SE": "NW"}
    ok = True
    for _ in range(50):
        g = random_grid(rnd.randint(2, 4), rnd)
        corner = rnd.choice(moves.CORNERS)
        c = rnd.randrange(g.n)
        script = moves.o_stab_script(g, corner, c)
        stabs = [m for m in script.moves if isinstance(m, moves.Stabilize)]
        ok &= len(stabs) == 1 and stabs[0].kind == "X" and stabs[0].corner == pairing[corner]
        ok &= not any(isinstance(m, moves.Destabilize) for m in script.moves)
        ok &= equiv.tc_orbit_equal(script.replay(g), moves.apply(g, moves.Stabilize("O", corner, c)))
    _report(8, "O stabilizations reduce to paired X moves", time.time() - t0, 60, ok)


def test_criterion_9_equivalence_engine_sanity():
    t0 = time.time()
    u2 = grid.validate(2, [1, 0], [0, 1])
    nw = moves.apply(u2, moves.Stabilize("X", "NW", 0))
    se = moves.apply(u2, moves.Stabilize("X", "SE", 0))
    ok = True

    res = equiv.equivalent(u2, nw, "L")
    ok &= res.verdict == equiv.NO and res.reason == "tb: -1 vs -2"
    res = equiv.equivalent(u2, nw, "T")
    ok &= res.verdict == equiv.NO and res.reason == "sl: -1 vs -3"
    res = equiv.equivalent(u2, nw, "K")
    ok &= res.verdict == equiv.YES and len(res.script.moves) == 1 and res.script.replay(u2) == nw
    res = equiv.equivalent(u2, se, "T")
    ok &= res.verdict == equiv.YES and res.script.replay(u2) == se
    res = equiv.equivalent(u2, se, "L")
    ok &= res.verdict == equiv.NO and res.reason == "tb: -1 vs -2"
    _report(9, "class engine separates and joins the unknot stabs", time.time() - t0, 5, ok)


def test_criterion_10_involutions_and_identities():
    t0 = time.time()
    rnd = random.Random(SEED)
    ok = True
    cases = 0
    while cases < 150:  # symmetry involutions
        g = random_grid(rnd.randint(2, 7), rnd)
        s = rnd.choice(moves.SYMMETRIES)
        ok &= moves.symmetry(moves.symmetry(g, s), s) == g
        cases += 1
    stab_cases = 0
    while stab_cases < 150:  # stabilize then destabilize, all eight types
        g = random_grid(rnd.randint(2, 6), rnd)
        kind = rnd.choice("XO")
        corner = rnd.choice(moves.CORNERS)
        c = rnd.randrange(g.n)
        m = moves.Stabilize(kind, corner, c)
        g2 = moves.apply(g, m)
        ok &= moves.apply(g2, moves.inverse_move(g, m)) == g
        stab_cases += 1
    exch_cases = 0
    while exch_cases < 100:  # exchange is an involution where defined
        w = random_braid_word(4, rnd.randint(2, 8), rnd)
        try:
            e = braid.exchange(w)
        except braid.NoExchangePattern:
            continue
        ok &= braid.words_equal(braid.exchange(e), w)
        exch_cases += 1
    for _ in range(100):  # text roundtrip
        g = random_grid(rnd.randint(2, 8), rnd)
        ok &= grid.parse(grid.serialize(g)) == g
    _report(10, "involutions and inverse pairs", time.time() - t0, 10, ok)
