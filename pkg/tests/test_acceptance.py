"""One test per acceptance criterion.  Each records a pass/fail line that the
terminal summary prints at the end of the run."""

import time

from properconn.families import gen_petersen
from properconn.graph import to_graph6
from properconn.sweeps import (
    atlas_connected,
    bridgeless_corpus,
    eight_vertex_min_degree,
    suite_bridgeless,
    suite_cycle_chord,
    suite_dense,
    suite_dirac,
    suite_general_bound,
    suite_gk,
    suite_min_degree_half,
    suite_monotonicity,
    suite_oracle,
    suite_ore,
    suite_pc2_landmarks,
    suite_small_values,
)

from conftest import ACCEPTANCE_LINES


def _record(num, title, ok, res, extra=""):
    failed = "; ".join(f"{c}: {d}" for c, _, d in res.failures())
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}  {title}  ({res.seconds:.1f}s, {len(res.rows)} rows)"
    if extra:
        line += f"  {extra}"
    if failed:
        line += f"  failing: {failed}"
    ACCEPTANCE_LINES[num] = line
    print(line)
    return ok, line


def test_01_small_values():
    res = suite_small_values()
    ok = res.passed and res.seconds < 60
    ok, line = _record(1, "pc(K_n)=1, pc(K_1,m)=m, pc(T)=Delta(T) for trees n<=9", ok, res)
    assert ok, line


def test_02_pc2_landmarks():
    res = suite_pc2_landmarks()
    ok = res.passed and res.seconds < 60 and len(res.rows) == 5
    ok, line = _record(2, "pc2(C5)=3, pc2(C4)=2, pc2(K_n)=2 for n=4..6", ok, res)
    assert ok, line


def test_03_cycle_chord():
    res = suite_cycle_chord()
    ok = res.passed and len(res.rows) == 13
    ok, line = _record(3, "cycle plus chord, n=4..16: palette 2, two disjoint proper paths", ok, res)
    assert ok, line


def test_04_bridgeless():
    corpus = bridgeless_corpus()
    names = " ".join(name for name, _ in corpus)
    covered = all(tag in names for tag in ("petersen", "prism", "theta", "wheel"))
    small = all(g.n <= 10 for _, g in corpus)
    has_petersen = any(to_graph6(g) == to_graph6(gen_petersen()) for _, g in corpus)
    res = suite_bridgeless()
    ok = res.passed and len(corpus) >= 200 and covered and small and has_petersen
    ok, line = _record(
        4, "bridgeless corpus: <=3 colours (2 if bipartite), strong property", ok, res, f"corpus={len(corpus)}"
    )
    assert ok, line


def test_05_general_bound():
    # connected graphs on 2..7 vertices: 1 + 2 + 6 + 21 + 112 + 853
    n_graphs = len(atlas_connected(7))
    res = suite_general_bound()
    ok = res.passed and n_graphs == 995 and len(res.rows) == 7
    ok, line = _record(5, "pc <= max{3, Delta(G*)} on all connected n<=7; S_r^t palette = bound", ok, res)
    assert ok, line


def test_06_gk_tightness():
    res = suite_gk()
    ok, line = _record(6, "pc(G_k) = k+1 for n<=9, k<=3", res.passed, res)
    assert ok, line


def test_07_dirac_sweep():
    res = suite_dirac(100)
    ok = res.passed and res.seconds < 300 and len(res.rows) == 7
    ok, line = _record(7, "min-degree sweep, 100 graphs per n=6..12", ok, res)
    assert ok, line


def test_08_ore_sweep():
    res = suite_ore(100)
    ok = res.passed and len(res.rows) == 7
    ok, line = _record(8, "degree-sum sweep, 100 graphs per n=6..12, m >= n^2/4 on each", ok, res)
    assert ok, line


def test_09_dense_pipeline():
    res = suite_dense()
    two = [r for r in res.rows if r[0].startswith("two/")]
    three = [r for r in res.rows if r[0].startswith("three/")]
    ok = res.passed and len(two) == 25 and len(three) == 25 and res.seconds < 600
    ok, line = _record(9, "dense graphs: 25 two-colourings, 25 colourings with <=3", ok, res)
    assert ok, line


def test_10_oracle_equivalence():
    res = suite_oracle(6, 9, 3)
    ok, line = _record(10, "path engine vs exhaustive enumeration, n<=6, m<=9, <=3 colours", res.passed, res)
    assert ok, line


def test_11_monotonicity():
    res = suite_monotonicity(500, 2024)
    ok, line = _record(11, "pc(G) <= pc(H) for 500 spanning subgraphs, n<=7", res.passed, res)
    assert ok, line


def test_12_min_degree_half():
    t0 = time.perf_counter()
    n8 = len(eight_vertex_min_degree(4))
    res = suite_min_degree_half()
    res.seconds += time.perf_counter() - t0
    ok = res.passed and {r[0].split()[0] for r in res.rows} == {f"n={n}" for n in range(4, 9)}
    ok, line = _record(
        12, "noncomplete connected n<=8 with delta >= n/2 have pc = 2", ok, res, f"n=8 corpus={n8}"
    )
    assert ok, line
