"""Seeded empirical checks of structural results against brute force.

Each suite is a corpus of trials plus a per-instance check.  A trial is one
graph, checked at one or more values of ``r``; every instance reports
``pass``, ``fail``, ``skip`` (a face or recursion budget ran out) or
``vacuous`` (the hypothesis never held).  Failed instances are kept as
self-contained bundles that :func:`replay_bundle` re-runs.

Reports contain no timing unless asked for, so the same configuration always
serialises to the same bytes.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from .chordal import (
    EngineBudgetExceeded,
    EngineLimits,
    chordal_homotopy_type,
    decompose_at_vertex,
    low_degree_condition,
    replay_trace,
)
from .complex import BuildLimits, FaceBudgetExceeded, build_ind_complex, star
from .domination import (
    InfeasibleDomination,
    distance_domination_number,
    domination_number,
    set_domination_number,
    strong_domination_number,
    supports,
)
from .fixtures import long_star, reverse_construction
from .generators import erdos_renyi, path_graph, random_chordal, wheel_graph
from .graph import (
    Graph,
    chordality,
    connected_components,
    delete_closed_neighborhood,
    simplicial_vertices,
)
from .homology import homology_of_type, reduced_homology
from .homotopy import CONTRACTIBLE, EMPTY, dims_mod_r_valid, sphere, suspend, wedge, wedge_combine
from .synthesis import WedgeSpec, synthesize_chordal

__all__ = [
    "SUITES",
    "SuiteConfig",
    "SuiteReport",
    "Outcome",
    "UnknownSuite",
    "run_suite",
    "golden_report",
    "replay_bundle",
    "path_homotopy_type",
]


class UnknownSuite(KeyError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    trials: int = 50
    max_n: int = 9
    r_max: int = 3
    r_min: int = 1
    seed: int = 0
    max_faces: int = 2_000_000
    max_nodes: int = 1_000_000
    oracle_max_n: int = 14
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.r_min < 1 or self.r_max < self.r_min:
            raise ValueError("need 1 <= r_min <= r_max")

    @property
    def r_values(self) -> range:
        return range(self.r_min, self.r_max + 1)


@dataclass
class Outcome:
    status: str  # pass | fail | skip | vacuous
    values: dict = field(default_factory=dict)


@dataclass
class SuiteReport:
    suite: str
    config: dict
    run: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    vacuous: int = 0
    counterexamples: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    wall_clock: float = 0.0

    @property
    def vacuous_fraction(self) -> float:
        return self.vacuous / self.run if self.run else 0.0

    @property
    def inconclusive(self) -> bool:
        """No trial exercised its hypothesis (all vacuous or skipped)."""
        return self.failed == 0 and self.passed - self.vacuous == 0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and not self.inconclusive

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "config": self.config,
            "run": self.run,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "vacuous": self.vacuous,
            "vacuous_fraction": round(self.vacuous_fraction, 6),
            "inconclusive": self.inconclusive,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if timing:
            d["wall_clock"] = self.wall_clock
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    def summary(self) -> str:
        flag = "OK" if self.ok else ("INCONCLUSIVE" if self.inconclusive else "FAIL")
        return (
            f"{self.suite}: {flag} run={self.run} passed={self.passed} "
            f"failed={self.failed} skipped={self.skipped} vacuous={self.vacuous}"
        )


# ---------------------------------------------------------------------------
# helpers

def _graph_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def _graph_from(d: dict) -> Graph:
    return Graph(d["n"], frozenset(tuple(e) for e in d["edges"]))


def _oracle(G: Graph, r: int, cfg: SuiteConfig):
    return reduced_homology(build_ind_complex(G, r, BuildLimits(cfg.max_faces)))


def _engine(G: Graph, r: int, cfg: SuiteConfig, choose="min"):
    return chordal_homotopy_type(G, r, EngineLimits(cfg.max_nodes), choose=choose)


def path_homotopy_type(n: int, r: int):
    """Closed form for ``Ind_r(P_n)``: ``S^{rk-1}`` when ``n`` is ``(r+2)k`` or
    ``(r+2)k - 1``, otherwise a point."""
    if n == 0:
        return EMPTY
    k, rem = divmod(n + 1, r + 2)
    if rem in (0, 1) and k >= 1:
        return sphere(r * k - 1)
    return CONTRACTIBLE


def _rng(cfg: SuiteConfig, trial: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{cfg.suite}:{trial}")


# ---------------------------------------------------------------------------
# corpora: each yields (graph, r values, extra) per trial

def _er_instance(cfg: SuiteConfig, i: int, r_floor: int = 1):
    rng = _rng(cfg, i)
    n = rng.randint(min(4, cfg.max_n), min(9, cfg.max_n))
    p = rng.choice((0.2, 0.35, 0.5))
    r = rng.randint(max(cfg.r_min, r_floor), max(cfg.r_max, r_floor))
    gseed = rng.getrandbits(32)
    G = erdos_renyi(n, p, gseed)
    return G, [r], {"n": n, "p": p, "graph_seed": gseed}


def _chordal_instance(cfg: SuiteConfig, i: int):
    rng = _rng(cfg, i)
    n = rng.randint(min(4, cfg.max_n), min(12, cfg.max_n))
    gseed = rng.getrandbits(32)
    connected = i % 4 != 0
    G = random_chordal(n, gseed, connected=connected)
    return G, list(cfg.r_values), {"n": n, "graph_seed": gseed, "connected": connected}


def _corpus_er(cfg):
    return [_er_instance(cfg, i) for i in range(cfg.trials)]


def _corpus_chordal(cfg):
    return [_chordal_instance(cfg, i) for i in range(cfg.trials)]


def _corpus_paths(cfg):
    return [(path_graph(n), list(cfg.r_values), {"n": n}) for n in range(1, cfg.max_n + 1)]


def _corpus_wheels(cfg):
    return [(wheel_graph(n), [n - 1], {"n": n}) for n in range(3, max(3, cfg.max_n) + 1)]


def _corpus_atlas(cfg):
    import networkx as nx

    out = []
    for H in nx.graph_atlas_g():
        n = H.number_of_nodes()
        if n == 0 or n > min(cfg.max_n, 7) or not nx.is_connected(H):
            continue
        G = Graph(n, frozenset(H.edges()))
        out.append((G, list(cfg.r_values), {"atlas_n": n}))
    return out


def _corpus_low_degree(cfg):
    return [_er_instance(cfg, i, r_floor=2) for i in range(cfg.trials)]


def _corpus_synth(cfg):
    out = []
    for r in range(max(2, cfg.r_min), max(2, cfg.r_max) + 1):
        for count in (1, 2):
            for ds in itertools.product(range(1, 4), repeat=count):
                for ks in itertools.product(range(1, 3), repeat=count):
                    spec = WedgeSpec(r, tuple(zip(ds, ks)))
                    G = synthesize_chordal(spec).graph
                    out.append((G, [r], {"summands": [list(s) for s in spec.summands]}))
    return out


def _corpus_golden(cfg):
    fig2, _ = reverse_construction()
    return [
        (long_star(), [2], {"fixture": "long_star"}),
        (fig2, [2], {"fixture": "reverse_construction"}),
        (synthesize_chordal(WedgeSpec(2, ((1, 1), (2, 2)))).graph, [2],
         {"fixture": "synthesis", "summands": [[1, 1], [2, 2]]}),
    ]


def _corpus_r1_strong(cfg):
    out = []
    for i in range(cfg.trials):
        if i % 2 == 0:
            G, _, extra = _er_instance(cfg, i)
            extra["family"] = "erdos_renyi"
        else:
            G, _, extra = _chordal_instance(cfg, i)
            extra["family"] = "random_chordal"
        out.append((G, [1], extra))
    return out


# ---------------------------------------------------------------------------
# checks: (G, r, extra, cfg) -> Outcome

def _check_paths(G, r, extra, cfg):
    expected = path_homotopy_type(G.n, r)
    T, _ = _engine(G, r, cfg)
    H = _oracle(G, r, cfg)
    ok = T == expected and H == homology_of_type(expected)
    return Outcome("pass" if ok else "fail", {
        "expected": expected.to_dict(), "engine": T.to_dict(), "oracle": H.to_dict(),
    })


def _check_wheels(G, r, extra, cfg):
    n = extra["n"]
    expected = wedge({n - 2: n})
    H = _oracle(G, r, cfg)
    hub = n
    parts = [suspend(EMPTY if R.n == 0 else CONTRACTIBLE, r)
             for _, R, _ in decompose_at_vertex(G, hub, r)]
    symbolic = wedge_combine(parts) if all(p.is_wedge for p in parts) else None
    ok = H == homology_of_type(expected) and symbolic == expected
    return Outcome("pass" if ok else "fail", {
        "expected": expected.to_dict(), "oracle": H.to_dict(),
        "decomposition": None if symbolic is None else symbolic.to_dict(),
    })


def _check_domination(G, r, extra, cfg):
    gamma = distance_domination_number(G, r).value
    ks = [k for k in range(1, G.n + 1) if gamma > 2 * k]
    if not ks:
        return Outcome("vacuous", {"gamma_r": gamma})
    H = _oracle(G, r, cfg)
    bad = [k for k in ks if not H.vanishes_through(k + r - 2)]
    return Outcome("fail" if bad else "pass", {
        "gamma_r": gamma, "ks": ks, "failing_k": bad, "oracle": H.to_dict(),
    })


def _check_set_domination(G, r, extra, cfg):
    omega = set_domination_number(G, r).value
    ks = [k for k in range(1, G.n + 1) if omega > 2 * k]
    if not ks:
        return Outcome("vacuous", {"omega_r": omega})
    H = _oracle(G, r, cfg)
    bad = [k for k in ks if not H.vanishes_through(k - 1)]
    return Outcome("fail" if bad else "pass", {
        "omega_r": omega, "ks": ks, "failing_k": bad, "oracle": H.to_dict(),
    })


def _check_chordal_oracle(G, r, extra, cfg):
    T, trace = _engine(G, r, cfg)
    T_max, _ = _engine(G, r, cfg, choose="max")
    H = _oracle(G, r, cfg)
    checks = {
        "oracle_agrees": H == homology_of_type(T),
        "torsion_free": H.torsion_free,
        "dims_mod_r": dims_mod_r_valid(T, r),
        "choice_invariant": T == T_max,
        "trace_replays": replay_trace(trace.root, r) == T,
    }
    return Outcome("pass" if all(checks.values()) else "fail", {
        "engine": T.to_dict(), "oracle": H.to_dict(), "checks": checks,
    })


def _check_chordal_omega(G, r, extra, cfg):
    omega = set_domination_number(G, r).value
    ks = [k for k in range(1, G.n + 1) if omega > k]
    if not ks:
        return Outcome("vacuous", {"omega_r": omega})
    H = _oracle(G, r, cfg)
    bad = [k for k in ks if not H.vanishes_through(r * k - 1)]
    return Outcome("fail" if bad else "pass", {
        "omega_r": omega, "ks": ks, "failing_k": bad, "oracle": H.to_dict(),
    })


def _check_star_cover(G, r, extra, cfg):
    K = build_ind_complex(G, r, BuildLimits(cfg.max_faces))
    faces = K.face_set
    bad = []
    for v in G.vertices:
        union = set(star(K, (v,)))
        for S in supports(G, v, r).vertex_sets():
            union |= star(K, S)
        if union != faces:
            bad.append(v)
    return Outcome("fail" if bad else "pass", {"failing_vertices": bad, "faces": len(faces)})


def _check_remark_supports(G, r, extra, cfg):
    simp = set(simplicial_vertices(G))
    bad = []
    for v in G.vertices:
        fam = supports(G, v, r)
        if v in simp and not (fam.connected and fam.dominating):
            bad.append([v, "simplicial vertex with a bad support"])
        if r == 2 and fam.connected != (v in simp):
            bad.append([v, "r=2 connectivity differs from simpliciality"])
    return Outcome("fail" if bad else "pass", {"violations": bad})


def _check_low_degree(G, r, extra, cfg):
    qualifying = [v for v in G.vertices if low_degree_condition(G, v, r)]
    if not qualifying:
        return Outcome("vacuous", {})
    H = _oracle(G, r, cfg)
    fam_ok = all(supports(G, v, r).connected for v in qualifying)
    checks = {
        "supports_connected": fam_ok,
        "vanishes_below_r_minus_1": H.vanishes_through(r - 2),
        "torsion_free_r_minus_1_and_r": not H.torsion(r - 1) and not H.torsion(r),
    }
    return Outcome("pass" if all(checks.values()) else "fail", {
        "qualifying_vertices": qualifying, "oracle": H.to_dict(), "checks": checks,
    })


def _is_path_graph(G: Graph) -> bool:
    if G.n == 0:
        return True
    return (
        G.m == G.n - 1
        and len(connected_components(G)) == 1
        and all(G.degree(v) <= 2 for v in G.vertices)
    )


def _check_synth(G, r, extra, cfg):
    spec = WedgeSpec(r, tuple(tuple(s) for s in extra["summands"]))
    res = synthesize_chordal(spec)
    v1, v2 = 0, 1
    hubs = [x for _, x in res.hubs]
    fam = supports(G, v1, r)
    want = sorted(tuple(sorted(list(range(1, r)) + [x])) for x in hubs)
    residual_ok = True
    for (i, x) in res.hubs:
        k = spec.summands[i - 1][1]
        R, _ = delete_closed_neighborhood(G, list(range(1, r)) + [x])
        if not (_is_path_graph(R) and R.n == max((r + 2) * (k - 1) - 1, 0)):
            residual_ok = False
    T, _ = _engine(G, r, cfg)
    checks = {
        "chordal": chordality(G).chordal,
        "v1_simplicial": v1 in simplicial_vertices(G) and G.adj[v1] == frozenset({v2}),
        "supports_match": fam.vertex_sets() == want and len(fam) == sum(d for d, _ in spec.summands),
        "residual_paths": residual_ok,
        "engine_matches": T == res.expected,
    }
    values = {"n": G.n, "engine": T.to_dict(), "expected": res.expected.to_dict()}
    if G.n <= cfg.oracle_max_n:
        H = _oracle(G, r, cfg)
        checks["oracle_matches"] = H == homology_of_type(res.expected)
        values["oracle"] = H.to_dict()
    values["checks"] = checks
    return Outcome("pass" if all(checks.values()) else "fail", values)


def _check_golden(G, r, extra, cfg):
    name = extra["fixture"]
    if name == "long_star":
        g = distance_domination_number(G, 2).value
        w = set_domination_number(G, 2).value
        ok = (g, w) == (1, 5)
        return Outcome("pass" if ok else "fail", {"gamma_2": g, "omega_2": w})
    expected = wedge({1: 1, 3: 2})
    T, _ = _engine(G, r, cfg)
    H = _oracle(G, r, cfg)
    checks = {"engine": T == expected, "oracle": H == homology_of_type(expected)}
    if name == "synthesis":
        checks["same_graph_as_fixture"] = G == reverse_construction()[0]
    return Outcome("pass" if all(checks.values()) else "fail", {
        "engine": T.to_dict(), "oracle": H.to_dict(), "checks": checks,
    })


def _check_r1_strong(G, r, extra, cfg):
    H = _oracle(G, 1, cfg)
    values = {}
    bad = []
    exercised = False
    try:
        g0 = strong_domination_number(G).value
    except InfeasibleDomination:
        g0 = None
    values["Gamma0"] = g0
    gamma = domination_number(G).value
    values["Gamma"] = gamma
    if g0 is not None:
        for k in range(1, G.n + 1):
            if g0 > 2 * k:
                exercised = True
                if H.betti(k - 1) or H.torsion(k - 1):
                    bad.append(["strong", k])
    if chordality(G).chordal:
        for k in range(1, G.n + 1):
            if gamma > k:
                exercised = True
                if H.betti(k - 1) or H.torsion(k - 1):
                    bad.append(["chordal", k])
    values["oracle"] = H.to_dict()
    values["violations"] = bad
    if bad:
        return Outcome("fail", values)
    return Outcome("pass" if exercised else "vacuous", values)


Check = Callable[[Graph, int, dict, SuiteConfig], Outcome]

SUITES: dict[str, tuple[Callable, Check]] = {
    "paths": (_corpus_paths, _check_paths),
    "wheels": (_corpus_wheels, _check_wheels),
    "thm-domination": (_corpus_er, _check_domination),
    "thm-set-domination": (_corpus_er, _check_set_domination),
    "chordal-oracle": (_corpus_chordal, _check_chordal_oracle),
    "chordal-omega": (_corpus_chordal, _check_chordal_omega),
    "star-cover": (_corpus_er, _check_star_cover),
    "remark-supports": (_corpus_atlas, _check_remark_supports),
    "cor44-torsion": (_corpus_low_degree, _check_low_degree),
    "synth-roundtrip": (_corpus_synth, _check_synth),
    "golden": (_corpus_golden, _check_golden),
    "meshulam-r1": (_corpus_r1_strong, _check_r1_strong),
}

# suites whose corpus is fixed (trial count comes from the corpus, not the config)
EXHAUSTIVE = {"paths", "wheels", "remark-supports", "synth-roundtrip", "golden"}


# ---------------------------------------------------------------------------
# running

def _run_instance(check: Check, G: Graph, r: int, extra: dict, cfg: SuiteConfig) -> Outcome:
    try:
        return check(G, r, extra, cfg)
    except FaceBudgetExceeded as e:
        return Outcome("skip", {"reason": str(e)})
    except EngineBudgetExceeded as e:
        return Outcome("skip", {"reason": str(e)})


def _run_trial(args):
    suite, index, G, rs, extra, cfg = args
    check = SUITES[suite][1]
    return index, [(r, _run_instance(check, G, r, extra, cfg)) for r in rs]


_PRIORITY = ("fail", "skip", "pass", "vacuous")


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    if cfg.suite not in SUITES:
        raise UnknownSuite(f"unknown suite {cfg.suite!r}; choose from {sorted(SUITES)}")
    corpus_fn, _ = SUITES[cfg.suite]
    start = time.perf_counter()
    corpus = corpus_fn(cfg)
    jobs = [(cfg.suite, i, G, rs, extra, cfg) for i, (G, rs, extra) in enumerate(corpus)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=4))
    else:
        results = [_run_trial(job) for job in jobs]
    results.sort(key=lambda t: t[0])

    config = asdict(cfg)
    config.pop("workers")
    report = SuiteReport(cfg.suite, config)
    for (index, outcomes), (G, _, extra) in zip(results, corpus):
        statuses = {o.status for _, o in outcomes}
        status = next(s for s in _PRIORITY if s in statuses)
        report.run += 1
        if status == "fail":
            report.failed += 1
        elif status == "skip":
            report.skipped += 1
        else:
            report.passed += 1
            if status == "vacuous":
                report.vacuous += 1
        for r, o in outcomes:
            if o.status == "fail":
                report.counterexamples.append({
                    "suite": cfg.suite,
                    "trial": index,
                    "r": r,
                    "graph": _graph_dict(G),
                    "extra": extra,
                    "values": o.values,
                    "config": config,
                })
    if cfg.suite == "meshulam-r1":
        report.notes["gamma1_differs_from_strong_domination"] = sum(
            1 for _, outcomes in results for _, o in outcomes
            if o.values.get("Gamma0") != o.values.get("Gamma")
        )
    if cfg.suite == "synth-roundtrip":
        report.notes["oracle_confirmed"] = sum(
            1 for _, outcomes in results for _, o in outcomes
            if o.status == "pass" and "oracle" in o.values
        )
    if cfg.suite in EXHAUSTIVE:
        report.notes["exhaustive_corpus"] = True
    report.wall_clock = time.perf_counter() - start
    return report


def golden_report() -> SuiteReport:
    return run_suite(SuiteConfig("golden", trials=1))


def replay_bundle(bundle: dict) -> Outcome:
    """Re-run the single instance stored in a counterexample bundle."""
    suite = bundle["suite"]
    if suite not in SUITES:
        raise UnknownSuite(suite)
    cfg = SuiteConfig(**bundle["config"])
    check = SUITES[suite][1]
    return _run_instance(check, _graph_from(bundle["graph"]), bundle["r"], bundle["extra"], cfg)
