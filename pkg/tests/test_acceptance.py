"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line in ``RESULTS``; the conftest hook
prints them at the end of the pytest run.  ``python tests/test_acceptance.py``
runs them directly and prints the same lines.
"""
import itertools
import json
import subprocess
import sys
import time
from contextlib import contextmanager

from hic.complex import build_ind_complex
from hic.domination import distance_domination_number, set_domination_number
from hic.fixtures import long_star, reverse_construction
from hic.generators import path_graph, wheel_graph
from hic.graph import serialize_graph
from hic.homology import reduced_homology
from hic.homotopy import CONTRACTIBLE, sphere
from hic.chordal import chordal_homotopy_type
from hic.synthesis import WedgeSpec
from hic.verify import SUITES, SuiteConfig, run_suite

RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str, budget: float | None):
    start = time.perf_counter()
    detail = {}
    try:
        yield detail
    except AssertionError as e:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"[{number:>2}] FAIL {title} ({elapsed:.1f}s): {e}")
        raise
    elapsed = time.perf_counter() - start
    over = budget is not None and elapsed >= budget
    extra = " ".join(f"{k}={v}" for k, v in detail.items())
    limit = f" < {budget:g}s" if budget is not None else ""
    status = "FAIL" if over else "PASS"
    RESULTS.append(f"[{number:>2}] {status} {title} ({elapsed:.1f}s{limit}) {extra}".rstrip())
    assert not over, f"runtime {elapsed:.1f}s exceeds {budget}s"


def _clean(report):
    assert report.failed == 0, f"{report.failed} failures: {report.counterexamples[:1]}"
    assert report.skipped == 0, f"{report.skipped} instances ran out of budget"


def _hic(*args):
    proc = subprocess.run([sys.executable, "-m", "hic", *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def test_criterion_01_golden_reverse_construction(tmp_path):
    with criterion(1, "golden 13-vertex chordal graph, r=2", 10) as d:
        g = tmp_path / "g.txt"
        g.write_text(serialize_graph(reverse_construction()[0]))
        wedge = _hic("chordal", "--graph", str(g), "--r", "2")
        assert wedge == {"type": "wedge", "spheres": [
            {"dim": 1, "count": 1}, {"dim": 3, "count": 2}]}, wedge
        homology = _hic("homology", "--graph", str(g), "--r", "2")
        assert homology["dims"] == [
            {"d": 1, "betti": 1, "torsion": []},
            {"d": 3, "betti": 2, "torsion": []},
        ], homology
        d["engine"] = "S^1vS^3vS^3"
        d["betti"] = "{1:1,3:2}"


def test_criterion_02_golden_long_star():
    with criterion(2, "gamma_2=1 and omega_2=5 on the long star", 1) as d:
        G = long_star()
        g = distance_domination_number(G, 2).value
        w = set_domination_number(G, 2).value
        assert (g, w) == (1, 5), (g, w)
        d["gamma_2"], d["omega_2"] = g, w


def test_criterion_03_path_table():
    with criterion(3, "paths r in {2,3}, n in 1..12", 60) as d:
        report = run_suite(SuiteConfig("paths", max_n=12, r_min=2, r_max=3))
        _clean(report)
        assert report.passed == report.run == 12
        # spot the closed form directly as well
        for r in (2, 3):
            for n in range(1, 13):
                k, rem = divmod(n + 1, r + 2)
                want = sphere(r * k - 1) if k and rem in (0, 1) else CONTRACTIBLE
                assert chordal_homotopy_type(path_graph(n), r)[0] == want, (n, r)
        d["instances"] = 24


def test_criterion_04_wheels():
    with criterion(4, "Ind_{n-1}(W_n) for n in 3..6", 120) as d:
        report = run_suite(SuiteConfig("wheels", max_n=6))
        _clean(report)
        assert report.passed == report.run == 4
        for n in range(3, 7):
            H = reduced_homology(build_ind_complex(wheel_graph(n), n - 1))
            assert H.betti_numbers() == {n - 2: n} and H.torsion_free, (n, str(H))
        d["wheels"] = "3..6"


def test_criterion_05_chordal_oracle_equivalence():
    with criterion(5, "engine vs brute force on 100 random chordal graphs", 600) as d:
        report = run_suite(SuiteConfig("chordal-oracle", trials=100, max_n=12, r_min=1, r_max=3))
        _clean(report)
        assert report.run == 100 and report.passed == 100
        d["instances"] = 300


def test_criterion_06_domination_vanishing():
    with criterion(6, "gamma_r and omega_r vanishing on 200 ER trials", 900) as d:
        for name in ("thm-domination", "thm-set-domination"):
            report = run_suite(SuiteConfig(name, trials=200, max_n=9, r_min=1, r_max=3))
            _clean(report)
            assert report.run == 200
            assert report.vacuous_fraction < 1.0, f"{name} entirely vacuous"
            d[f"{name}.vacuous"] = f"{report.vacuous_fraction:.3f}"


def test_criterion_07_chordal_omega():
    with criterion(7, "omega_r > k forces vanishing through rk-1 on chordal graphs", None) as d:
        report = run_suite(SuiteConfig("chordal-omega", trials=100, max_n=12, r_min=1, r_max=3))
        _clean(report)
        assert not report.inconclusive
        d["exercised"] = report.passed - report.vacuous
        d["vacuous"] = report.vacuous


def test_criterion_08_synthesis_round_trip():
    with criterion(8, "synthesis round trip, r in {2,3}, n<=2, d<=3, k<=2", 600) as d:
        report = run_suite(SuiteConfig("synth-roundtrip", r_min=2, r_max=3))
        _clean(report)
        specs = [
            WedgeSpec(r, tuple(zip(ds, ks)))
            for r in (2, 3) for c in (1, 2)
            for ds in itertools.product(range(1, 4), repeat=c)
            for ks in itertools.product(range(1, 3), repeat=c)
        ]
        assert report.run == report.passed == len(specs)
        small = sum(1 for s in specs if s.n_vertices <= 14)
        assert report.notes["oracle_confirmed"] == small
        d["specs"] = len(specs)
        d["oracle_confirmed"] = small


def test_criterion_09_structural_suites():
    with criterion(9, "star cover, simplicial supports, low-degree vanishing", None) as d:
        star = run_suite(SuiteConfig("star-cover", trials=50, max_n=9, r_min=1, r_max=3))
        _clean(star)
        assert star.passed == 50
        remark = run_suite(SuiteConfig("remark-supports", max_n=7, r_min=1, r_max=3))
        _clean(remark)
        assert remark.run == 996  # connected graphs on 1..7 vertices
        cor = run_suite(SuiteConfig("cor44-torsion", trials=80, max_n=9, r_min=2, r_max=3))
        _clean(cor)
        qualifying = cor.passed - cor.vacuous
        assert qualifying >= 50, f"only {qualifying} qualifying instances"
        d["star_cover"] = star.passed
        d["atlas_graphs"] = remark.run
        d["cor_qualifying"] = qualifying


def test_criterion_10_determinism():
    with criterion(10, "same seed gives byte-identical JSON for every suite", None) as d:
        small = {"trials": 12, "max_n": 8}
        for name in sorted(SUITES):
            cfg = SuiteConfig(name, seed=11, **small)
            a, b = run_suite(cfg).to_json(), run_suite(cfg).to_json()
            assert a == b, f"{name} differs between runs"
        d["suites"] = len(SUITES)


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]
    for t in tests:
        try:
            if "tmp_path" in t.__code__.co_varnames[: t.__code__.co_argcount]:
                with tempfile.TemporaryDirectory() as tmp:
                    t(Path(tmp))
            else:
                t()
        except AssertionError:
            pass
    print("\n".join(RESULTS))
    sys.exit(0 if all(" PASS " in line for line in RESULTS) else 1)
