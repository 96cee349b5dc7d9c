"""Acceptance suite: one PASS/FAIL line per criterion, with pinned limits.

Run with ``pytest tests/test_acceptance.py -v`` (lines go straight to the
terminal) or ``python3 tests/test_acceptance.py``.  All comparisons are
exact; the only tolerances are the wall-clock limits below.
"""

import itertools
import sys
import time

import pytest

from iconic.algebras import check_strict_algebra, evaluate_pd, small_fixtures, validate_strict3
from iconic.freecat import PathCell, check_colax, check_monad_laws_free, colax_rearrange, free_mult, \
    non_surjectivity_witness, rearrange_preimage
from iconic.pasting import Row, check_beck_axioms, distributive_law, enumerate_pds, enumerate_rectangular, \
    fresh_labels
from iconic.pseudo import biased_round_trip, bicategory_fixtures, check_bicategory, check_pseudo_icon, \
    cocycle_bicategory, compare_pastings, strictify
from iconic.counterexample import omega_example, witness_counterexample
from iconic.wgraph import graph_from_edges, two_graph

LIMITS = {1: 1.0, 2: 1.0, 3: 10.0, 4: 10.0, 5: 5.0, 6: 5.0, 7: 30.0, 8: None}

_reporter = None


@pytest.fixture(autouse=True)
def _terminal(request):
    # lines bypass output capture so they show up in ordinary runs
    global _reporter
    _reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    yield
    _reporter = None


LOOP = graph_from_edges(("x",), {("x", "x"): ["e"]})
ARROW = graph_from_edges(("x", "y"), {("x", "y"): ["e"]})


def emit(n: int, ok: bool, elapsed: float, detail: str) -> None:
    limit = LIMITS[n]
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    bound = f"limit {limit:.0f} s" if limit else "no time limit"
    line = f"{status} criterion {n}: {detail} [{elapsed:.2f} s, {bound}]"
    if _reporter is not None:
        _reporter.write_line(line)
    else:
        print(line, flush=True)


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def _assert(n, ok, elapsed, detail):
    emit(n, ok, elapsed, detail)
    assert ok, detail
    if LIMITS[n] is not None:
        assert elapsed < LIMITS[n], f"criterion {n} took {elapsed:.2f} s"


# 1 -------------------------------------------------------------------------


def test_criterion_1_free_monad_laws():
    def run():
        return [check_monad_laws_free(A, 4, max_len=3) for A in (LOOP, ARROW)]

    reps, dt = timed(run)
    ok = all(r.ok for r in reps)
    _assert(1, ok, dt, f"monad laws on loop and arrow, ≤ 4 cells, ≤ 3 steps per level: "
                       f"{sum(r.checked for r in reps)} instances, "
                       f"{sum(len(r.violations) for r in reps)} violations")


# 2 -------------------------------------------------------------------------


def test_criterion_2_colax():
    def run():
        reps = [check_colax(A, B, 4) for A in (LOOP, ARROW) for B in (LOOP, ARROW)]
        return reps, non_surjectivity_witness(LOOP, LOOP)

    (reps, witness), dt = timed(run)
    ok = all(r.ok for r in reps) and witness is not None
    if witness is not None:
        pa, pb = witness
        # mixed lengths cannot come from a path in the tensor graph
        ok = ok and len(pa) != len(pb) and rearrange_preimage(pa, pb) is None
        # and every path of equal lengths does have a preimage
        p = PathCell((("x", "x"), ("x", "x")), (("e", "e"),))
        ok = ok and rearrange_preimage(*colax_rearrange(p)) == p
    _assert(2, ok, dt, f"colax axioms {sum(r.checked for r in reps)} instances; "
                       f"non-iso witness {witness}")


# 3 -------------------------------------------------------------------------


def _skeletons():
    """Edge multisets on the vertices x, y with three edges, up to swapping x and y."""
    pairs = [(s, t) for s in "xy" for t in "xy"]
    seen, out = set(), []
    for ms in itertools.combinations_with_replacement(pairs, 3):
        sw = tuple(sorted(({"x": "y", "y": "x"}[s], {"x": "y", "y": "x"}[t]) for s, t in ms))
        key = min(tuple(sorted(ms)), sw)
        if key not in seen:
            seen.add(key)
            out.append(ms)
    return out


def _generic_graph(ms):
    edges = {f"e{i}": p for i, p in enumerate(ms)}
    return two_graph(("x", "y"), edges, {(f, g): 1 for f in edges for g in edges if edges[f] == edges[g]})


def _transpose_oracle(r: PathCell) -> Row:
    # independent of the library: zip over the row matrix
    top = r.vertices[0]
    if not r.cells:
        cols = [PathCell((f,), ()) for f in top.cells]
    else:
        edge_cols = list(zip(*[P.cells for P in r.vertices]))
        cell_cols = list(zip(*[rw.cells for rw in r.cells]))
        cols = [PathCell(tuple(es), tuple(cs)) for es, cs in zip(edge_cols, cell_cols)]
    return Row(tuple(top.vertices), tuple(cols))


def test_criterion_3_distributive_law():
    def run():
        beck, rect, agree = [], 0, 0
        for ms in _skeletons():
            A = _generic_graph(ms)
            beck.append(check_beck_axioms(A, 4, generic=True))
            for r in enumerate_rectangular(A, 4):
                r = fresh_labels(r)
                rect += 1
                agree += distributive_law(r) == _transpose_oracle(r)
        return beck, rect, agree

    (beck, rect, agree), dt = timed(run)
    ok = all(r.ok for r in beck) and rect > 0 and agree == rect
    _assert(3, ok, dt, f"Beck axioms on {len(beck)} generic 2-graphs (covering ≤ 2 vertices, ≤ 3 edges), "
                       f"{sum(r.checked for r in beck)} instances; λ = transpose on {agree}/{rect} rectangular pds")


# 4 -------------------------------------------------------------------------


def test_criterion_4_algebra_laws():
    def run():
        reps, orders, pds = [], 0, 0
        for S in small_fixtures():
            reps.append(validate_strict3(S))
            outer = None if len(S.one_cells.morphisms) == 1 else (1, 2)
            reps.append(check_strict_algebra(S, 4, outer_len=outer))
            for p in enumerate_pds(S.graph, 4, 2):
                pds += 1
                orders += evaluate_pd(S, p, "rows") == evaluate_pd(S, p, "columns")
        return reps, orders, pds

    (reps, orders, pds), dt = timed(run)
    ok = all(r.ok for r in reps) and orders == pds
    _assert(4, ok, dt, f"{len(reps) // 2} strict 3-categories, a∘η = 1 and a∘Ta = a∘μ on "
                       f"{sum(r.checked for r in reps)} instances; row/column order agree on {orders}/{pds} pds")


# 5 -------------------------------------------------------------------------


def test_criterion_5_strictification():
    def run():
        S = strictify(cocycle_bicategory(), 1)
        return check_bicategory(S, strict=True), compare_pastings(S, samples=50, seed=0)

    (strict, paste), dt = timed(run)
    ok = strict.ok and paste.ok and paste.checked == 100
    _assert(5, ok, dt, f"strictified Z/2 cocycle: strict validation {strict.checked} instances, "
                       f"{paste.checked // 2}/50 seeded pastings agree")


# 6 -------------------------------------------------------------------------


def test_criterion_6_biased_unbiased():
    names = ("ld(2)", "Z/2 cocycle", "Z/3 discrete")

    def run():
        out = []
        for B in bicategory_fixtures():
            if B.name in names:
                B2, icon = biased_round_trip(B)
                out.append((B.name, B2.to_json() == B.to_json(), check_pseudo_icon(icon)))
        return out

    results, dt = timed(run)
    ok = len(results) >= 3 and all(same and rep.ok for _, same, rep in results)
    _assert(6, ok, dt, "round trip icons invertible and lawful on " + ", ".join(n for n, _, _ in results))


# 7 -------------------------------------------------------------------------


def test_criterion_7_witness():
    report, dt = timed(lambda: witness_counterexample(omega_example()))
    e, q = report.enumeration, report.equivalences
    ok = (report.conclusive and report.axioms["ok"] and not report.axioms["violations"]
          and e.complete and e.accepted == e.symmetric and e.non_symmetric == 0
          and e.validator_disagreements == 0 and q.to_symmetric == 0 and report.extraction_matches)
    _assert(7, ok, dt, f"Z/3 bicharacter: axioms {report.axioms['checked']} instances all pass; "
                       f"{e.accepted}/{e.accepted} strict algebras symmetric over {e.hom_categories} homs; "
                       f"{q.braided_equivalences} braided equivalences, {q.to_symmetric} to symmetric targets")


# 8 -------------------------------------------------------------------------


def _drop_last(p):
    q = free_mult(p)
    return PathCell(q.vertices[:-1], q.cells[:-1]) if q.cells else q


def _swap_columns(c):
    p = distributive_law(c)
    if len(p) < 2:
        return p
    cs = list(p.cells)
    cs[0], cs[1] = cs[1], cs[0]
    return Row(p.objects, tuple(cs))


def test_criterion_8_negative_controls():
    PAR = two_graph(("x", "y"), {"f": ("x", "y"), "g": ("x", "y")}, {("f", "g"): 1, ("g", "f"): 1})

    def run():
        return {
            "corrupted flatten": (check_monad_laws_free(LOOP, 4, flatten=_drop_last), check_monad_laws_free(LOOP, 4)),
            "swapped λ columns": (check_beck_axioms(PAR, 4, law=_swap_columns), check_beck_axioms(PAR, 4)),
            "perturbed associator": (check_bicategory(cocycle_bicategory({(1, 1, 0): 1})),
                                     check_bicategory(cocycle_bicategory())),
        }

    results, dt = timed(run)
    detected = {k: not bad.ok and all(v.location for v in bad.violations) for k, (bad, _) in results.items()}
    controls = all(good.ok for _, good in results.values())
    ok = all(detected.values()) and controls
    detail = "; ".join(f"{k}: {len(bad.violations)} located violations, first {bad.violations[0].law}"
                       if not bad.ok else f"{k}: MISSED" for k, (bad, _) in results.items())
    _assert(8, ok, dt, detail + ("; unmutated controls pass" if controls else "; a control failed"))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
