"""Verification campaigns for the two spectral perfect-matching conditions.

A campaign sweeps exhaustive and seeded random graphs through the theorem
checks, measures how tightly the extremal graphs meet their thresholds, and
evaluates the strict eigenvalue orderings between the intermediate graph
families.  Output is deterministic for a fixed configuration.
"""

from __future__ import annotations

import csv
import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Iterator, Mapping, Sequence

from .graph_core import (
    Bipartition,
    GammaGraph,
    Graph,
    GraphError,
    build_g2,
    build_g3,
    build_g4,
    build_g5,
    build_gamma,
    build_split_family,
    is_connected,
    reachable,
    to_graph6,
    two_coloring,
)
from .matching import hall_violation, has_perfect_matching, max_matching_bipartite
from .spectral import dsl_radius
from .thresholds import gamma_radius, kappa, theorem1_threshold

log = logging.getLogger(__name__)

ENUMERATION_CAP = 7
BIPARTITE_ENUMERATION_CAP = 4
RANDOM_ATTEMPT_CAP = 10**5
THRESHOLD_TOL = 1e-9
SHARPNESS_TOL = 1e-6
ORDERING_MARGIN = 1e-9
WORKERS_ENV = "DSLPM_WORKERS"

# "kappa": the published quartic root; "gamma": the measured radius of
# Gamma_{n-1,n-2} from its corrected quotient matrix
THEOREM2_THRESHOLDS = {"kappa": kappa, "gamma": gamma_radius}

CONSISTENT = "consistent"
COUNTEREXAMPLE = "counterexample"
ABOVE_THRESHOLD = "above-threshold"

_MASK64 = (1 << 64) - 1


class ConfigError(ValueError):
    pass


class XorShift64Star:
    """xorshift64* generator.

    State update: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` (mod 2**64);
    output ``x * 0x2545F4914F6CDD1D`` (mod 2**64).  The seed is first passed
    through one splitmix64 step so that small seeds give unrelated streams
    and seed 0 is usable.
    """

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 output bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


# Graph sources

def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labelled connected graph on ``n`` vertices, by increasing edge mask."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ConfigError(f"labelled enumeration is capped at n={ENUMERATION_CAP}, got {n}")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            m >>= 1
            i += 1
        g = Graph(n, tuple(adj))
        if reachable(g, 0, full) == full:
            yield g


def enumerate_connected_bipartite(side: int) -> Iterator[tuple[Graph, Bipartition]]:
    """Every connected graph with X = 0..side-1 and Y = side..2*side-1, edges only across."""
    if not 1 <= side <= BIPARTITE_ENUMERATION_CAP:
        raise ConfigError(f"bipartite enumeration is capped at side={BIPARTITE_ENUMERATION_CAP}")
    pairs = [(x, side + y) for x in range(side) for y in range(side)]
    n = 2 * side
    full = (1 << n) - 1
    left = frozenset(range(side))
    right = frozenset(range(side, n))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if reachable(g, 0, full) == full:
            yield g, Bipartition(left, right)


def _check_probability(p: float) -> None:
    if not 0 < p <= 1:
        raise ConfigError(f"edge probability must be in (0, 1], got {p}")


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), redrawn until connected."""
    _check_probability(p)
    rng = XorShift64Star(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(RANDOM_ATTEMPT_CAP):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g
    raise ConfigError(f"no connected draw in {RANDOM_ATTEMPT_CAP} attempts (n={n}, p={p})")


def random_balanced_bipartite(n: int, p: float, seed: int) -> tuple[Graph, Bipartition]:
    """Random connected subgraph of K_{n,n}: each cross edge kept with probability ``p``."""
    _check_probability(p)
    rng = XorShift64Star(seed)
    pairs = [(x, n + y) for x in range(n) for y in range(n)]
    b = Bipartition(frozenset(range(n)), frozenset(range(n, 2 * n)))
    for _ in range(RANDOM_ATTEMPT_CAP):
        g = Graph.from_edges(2 * n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g, b
    raise ConfigError(f"no connected draw in {RANDOM_ATTEMPT_CAP} attempts (n={n}, p={p})")


# Per-graph checks

@dataclass(frozen=True)
class CheckReport:
    graph_id: str
    eta1: float
    threshold: float
    below_threshold: bool
    has_pm: bool
    verdict: str
    theorem: int = 1

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _classify(eta1: float, threshold: float, has_pm: bool, tol: float) -> tuple[bool, str]:
    # within tol of the threshold counts as "not below": the conditions are strict
    below = eta1 < threshold - tol
    if has_pm:
        return below, CONSISTENT
    return below, COUNTEREXAMPLE if below else ABOVE_THRESHOLD


def check_theorem1(g: Graph, tol: float = THRESHOLD_TOL) -> CheckReport:
    if g.order < 4 or g.order % 2:
        raise GraphError(f"theorem 1 needs an even order >= 4, got {g.order}")
    if not is_connected(g):
        raise GraphError("theorem 1 needs a connected graph")
    eta1 = dsl_radius(g)
    threshold = theorem1_threshold(g.order)
    pm = has_perfect_matching(g)
    below, verdict = _classify(eta1, threshold, pm, tol)
    return CheckReport(to_graph6(g), eta1, threshold, below, pm, verdict, 1)


def check_theorem2(g: Graph, b: Bipartition | None = None, tol: float = THRESHOLD_TOL,
                   threshold: float | None = None) -> CheckReport:
    """Classify ``g`` against kappa(n); ``b`` defaults to the BFS 2-colouring."""
    if not is_connected(g):
        raise GraphError("theorem 2 needs a connected graph")
    if b is None:
        b = two_coloring(g)
        if b is None:
            raise GraphError("graph is not bipartite")
    if not b.balanced:
        raise GraphError(f"bipartition is unbalanced ({len(b.left)} vs {len(b.right)})")
    n = len(b.left)
    if n < 3:
        raise GraphError(f"theorem 2 needs side size n >= 3, got {n}")
    eta1 = dsl_radius(g)
    if threshold is None:
        threshold = kappa(n)
    pm = max_matching_bipartite(g, b).is_perfect
    below, verdict = _classify(eta1, threshold, pm, tol)
    return CheckReport(to_graph6(g), eta1, threshold, below, pm, verdict, 2)


# Extremal graphs

def extremal_theorem1(n: int) -> Graph:
    """The non-matchable graph that meets the theorem-1 threshold at order ``n``."""
    if n in (6, 8, 10):
        return build_g5(n // 2 - 1)
    return build_g4(n)


def extremal_theorem2(n: int) -> GammaGraph:
    return build_gamma(n, n - 1, n - 2)


def sharpness_theorem1(n: int) -> tuple[float, float]:
    return dsl_radius(extremal_theorem1(n)), theorem1_threshold(n)


def sharpness_theorem2(n: int) -> tuple[float, float]:
    return dsl_radius(extremal_theorem2(n).graph), kappa(n)


@dataclass
class SharpnessRecord:
    theorem: int
    n: int
    eta1: float
    threshold: float
    gap: float
    extremal_has_pm: bool

    def within(self, tol: float) -> bool:
        return abs(self.gap) <= tol and not self.extremal_has_pm


def sharpness_records(theorem: int, lo: int, hi: int, theorem2_threshold: str = "kappa") -> list[SharpnessRecord]:
    out = []
    if theorem == 1:
        for n in range(max(lo, 4) + (max(lo, 4) % 2), hi + 1, 2):
            eta1, thr = sharpness_theorem1(n)
            pm = has_perfect_matching(extremal_theorem1(n))
            out.append(SharpnessRecord(1, n, eta1, thr, eta1 - thr, pm))
    else:
        for n in range(max(lo, 3), hi + 1):
            gg = extremal_theorem2(n)
            eta1, thr = dsl_radius(gg.graph), THEOREM2_THRESHOLDS[theorem2_threshold](n)
            pm = hall_violation(gg.graph, gg.bipartition) is None
            out.append(SharpnessRecord(2, n, eta1, thr, eta1 - thr, pm))
    return out


# Orderings between intermediate families

@dataclass
class OrderingResult:
    claim: str
    instances: int = 0
    violations: int = 0
    min_margin: float = float("inf")
    failures: list[dict[str, Any]] = field(default_factory=list)

    def record(self, smaller: float, larger: float, **params: Any) -> None:
        self.instances += 1
        margin = larger - smaller
        self.min_margin = min(self.min_margin, margin)
        if not margin > ORDERING_MARGIN:
            self.violations += 1
            self.failures.append({**params, "smaller": smaller, "larger": larger})

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "violations": self.violations,
            "instances": self.instances,
            "min_margin": self.min_margin if self.instances else None,
            "failures": self.failures,
        }


def odd_partitions(total: int, parts: int, largest: int | None = None) -> Iterator[list[int]]:
    """Non-increasing lists of ``parts`` odd positive integers summing to ``total``."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield []
        return
    top = min(largest, total - (parts - 1))
    for first in range(top, 0, -1):
        if first % 2:
            for rest in odd_partitions(total - first, parts - 1, first):
                yield [first] + rest


DEFAULT_ORDERING_RANGES = {"general_max_n": 14, "bipartite_max_n": 8}


def ordering_suite(ranges: Mapping[str, int] | None = None) -> list[OrderingResult]:
    """Check each strict eigenvalue ordering over its declared parameter range.

    ``general_max_n`` bounds the even orders used for the split families
    (from 4), ``bipartite_max_n`` the side sizes of the Gamma family (from 3).
    """
    r = {**DEFAULT_ORDERING_RANGES, **(ranges or {})}
    radius_cache: dict[tuple, float] = {}

    def eta(key: tuple, build) -> float:
        if key not in radius_cache:
            radius_cache[key] = dsl_radius(build())
        return radius_cache[key]

    g1_g2 = OrderingResult("eta1(G2) < eta1(G1): s >= 1, q >= s+2, odd parts, G1 not G2")
    g2_g3 = OrderingResult("eta1(G3) < eta1(G2): q >= s+4")
    g3_g4 = OrderingResult("eta1(G4) < eta1(G3): s >= 2, n >= 2s+4")
    for n in range(4, r["general_max_n"] + 1, 2):
        for s in range(1, n):
            for q in range(s + 2, n - s + 1, 2):
                e2 = eta(("g2", n, s, q), lambda: build_g2(n, s, q))
                for parts in odd_partitions(n - s, q):
                    if parts[1] == 1:
                        continue  # identical to G2
                    e1 = eta(("g1", s, tuple(parts)), lambda: build_split_family(s, parts))
                    g1_g2.record(e2, e1, n=n, s=s, parts=parts)
                if q >= s + 4:
                    e3 = eta(("g2", n, s, s + 2), lambda: build_g3(n, s))
                    g2_g3.record(e3, e2, n=n, s=s, q=q)
        for s in range(2, (n - 4) // 2 + 1):
            e4 = eta(("g2", n, 1, 3), lambda: build_g4(n))
            e3 = eta(("g2", n, s, s + 2), lambda: build_g3(n, s))
            g3_g4.record(e4, e3, n=n, s=s)

    gk = OrderingResult("eta1(Gamma_{s,s-1}) < eta1(Gamma_{s,k}): 1 <= k <= s-2")
    gs = OrderingResult("eta1(Gamma_{n-1,n-2}) < eta1(Gamma_{s,s-1}): 2 <= s <= n-2")
    for n in range(3, r["bipartite_max_n"] + 1):
        for s in range(2, n):
            tight = eta(("gamma", n, s, s - 1), lambda: build_gamma(n, s, s - 1).graph)
            for k in range(1, s - 1):
                loose = eta(("gamma", n, s, k), lambda: build_gamma(n, s, k).graph)
                gk.record(tight, loose, n=n, s=s, k=k)
            if s <= n - 2:
                ext = eta(("gamma", n, n - 1, n - 2), lambda: build_gamma(n, n - 1, n - 2).graph)
                gs.record(ext, tight, n=n, s=s)
    return [g1_g2, g2_g3, g3_g4, gk, gs]


def g3_boundary_matchings(max_s: int = 8) -> list[dict[str, Any]]:
    """Whether K_s v (K_1 u co-K_{s+1}) (the n = 2s+2 member) has a perfect matching."""
    out = []
    for s in range(1, max_s + 1):
        g = build_g3(2 * s + 2, s)
        out.append({"s": s, "n": 2 * s + 2, "has_pm": has_perfect_matching(g)})
    return out


# Campaigns

@dataclass
class RandomSpec:
    count: int
    n_min: int
    n_max: int
    p: tuple[float, ...]


@dataclass
class CampaignConfig:
    seed: int = 0
    tolerance: float = THRESHOLD_TOL
    sharpness_tolerance: float = SHARPNESS_TOL
    workers: int = 1
    theorem1_exhaustive: tuple[int, ...] = ()
    theorem1_random: RandomSpec | None = None
    theorem2_exhaustive: tuple[int, ...] = ()
    theorem2_random: RandomSpec | None = None
    sharpness_theorem1: tuple[int, int] | None = None
    sharpness_theorem2: tuple[int, int] | None = None
    orderings: dict[str, int] | None = None
    theorem2_threshold: str = "kappa"
    keep_reports: bool = False

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> CampaignConfig:
        if not isinstance(data, Mapping):
            raise ConfigError("config must be a mapping")
        known = {"seed", "tolerance", "sharpness_tolerance", "workers", "theorem1",
                 "theorem2", "sharpness", "orderings", "csv", "theorem2_threshold"}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(
            seed=_int(data.get("seed", 0), "seed"),
            tolerance=_positive(data.get("tolerance", THRESHOLD_TOL), "tolerance"),
            sharpness_tolerance=_positive(data.get("sharpness_tolerance", SHARPNESS_TOL),
                                          "sharpness_tolerance"),
            workers=_int(data.get("workers", default_workers()), "workers"),
            keep_reports=bool(data.get("csv")),
        )
        if cfg.workers < 1:
            raise ConfigError("workers must be >= 1")
        cfg.theorem2_threshold = data.get("theorem2_threshold", "kappa")
        if cfg.theorem2_threshold not in THEOREM2_THRESHOLDS:
            raise ConfigError(f"theorem2_threshold must be one of {sorted(THEOREM2_THRESHOLDS)}")
        for theorem in (1, 2):
            section = data.get(f"theorem{theorem}")
            if section is None:
                continue
            if not isinstance(section, Mapping):
                raise ConfigError(f"theorem{theorem} must be a mapping")
            raw = section.get("exhaustive", ())
            if isinstance(raw, int):
                raw = (raw,)
            if not isinstance(raw, (list, tuple)):
                raise ConfigError(f"theorem{theorem}.exhaustive must be an integer or a list")
            exhaustive = tuple(_int(v, "exhaustive") for v in raw)
            for n in exhaustive:
                if theorem == 1 and (n % 2 or n < 4 or n > ENUMERATION_CAP):
                    raise ConfigError(f"theorem1 exhaustive order {n} must be even, 4..{ENUMERATION_CAP}")
                if theorem == 2 and not 3 <= n <= BIPARTITE_ENUMERATION_CAP:
                    raise ConfigError(f"theorem2 exhaustive side {n} must be in 3..{BIPARTITE_ENUMERATION_CAP}")
            rnd = section.get("random")
            rnd_spec = None
            if rnd is not None:
                if not isinstance(rnd, Mapping):
                    raise ConfigError(f"theorem{theorem}.random must be a mapping")
                rnd_spec = RandomSpec(
                    count=_int(rnd.get("count", 0), "count"),
                    n_min=_int(rnd.get("n_min", 4 if theorem == 1 else 3), "n_min"),
                    n_max=_int(rnd.get("n_max", 10 if theorem == 1 else 6), "n_max"),
                    p=tuple(float(x) for x in rnd.get("p", (0.3, 0.5, 0.7))),
                )
                for p in rnd_spec.p:
                    _check_probability(p)
                lowest = 4 if theorem == 1 else 3
                if rnd_spec.n_min < lowest or rnd_spec.n_max < rnd_spec.n_min:
                    raise ConfigError(f"theorem{theorem} random range invalid")
                if theorem == 1 and not any(n % 2 == 0 for n in range(rnd_spec.n_min, rnd_spec.n_max + 1)):
                    raise ConfigError("theorem1 random range has no even order")
            if theorem == 1:
                cfg.theorem1_exhaustive, cfg.theorem1_random = exhaustive, rnd_spec
            else:
                cfg.theorem2_exhaustive, cfg.theorem2_random = exhaustive, rnd_spec
        sharp = data.get("sharpness")
        if sharp is not None:
            if not isinstance(sharp, Mapping):
                raise ConfigError("sharpness must be a mapping")
            for key in sharp:
                if key not in ("theorem1", "theorem2"):
                    raise ConfigError(f"unknown sharpness key {key!r}")
            if "theorem1" in sharp:
                cfg.sharpness_theorem1 = _range(sharp["theorem1"], "sharpness.theorem1")
            if "theorem2" in sharp:
                cfg.sharpness_theorem2 = _range(sharp["theorem2"], "sharpness.theorem2")
        orderings = data.get("orderings")
        if orderings is True:
            cfg.orderings = dict(DEFAULT_ORDERING_RANGES)
        elif isinstance(orderings, Mapping):
            unknown = set(orderings) - set(DEFAULT_ORDERING_RANGES)
            if unknown:
                raise ConfigError(f"unknown ordering ranges: {sorted(unknown)}")
            cfg.orderings = {**DEFAULT_ORDERING_RANGES,
                             **{k: _int(v, k) for k, v in orderings.items()}}
        elif orderings not in (None, False):
            raise ConfigError("orderings must be true, false or a mapping of ranges")
        if not cfg.has_work():
            raise ConfigError("config specifies no work")
        return cfg

    def has_work(self) -> bool:
        return bool(self.theorem1_exhaustive or self.theorem2_exhaustive
                    or (self.theorem1_random and self.theorem1_random.count)
                    or (self.theorem2_random and self.theorem2_random.count)
                    or self.sharpness_theorem1 or self.sharpness_theorem2 or self.orderings)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d.pop("keep_reports")
        return d


def _int(v: Any, name: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f"{name} must be an integer, got {v!r}")
    return v


def _positive(v: Any, name: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0:
        raise ConfigError(f"{name} must be a positive number, got {v!r}")
    return float(v)


def _range(v: Any, name: str) -> tuple[int, int]:
    if not isinstance(v, Sequence) or len(v) != 2:
        raise ConfigError(f"{name} must be a [lo, hi] pair")
    lo, hi = _int(v[0], name), _int(v[1], name)
    if hi < lo:
        raise ConfigError(f"{name} is empty")
    return lo, hi


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", WORKERS_ENV, env)
    return os.cpu_count() or 1


@dataclass
class CampaignSummary:
    config: dict[str, Any]
    graphs_checked: int
    counterexamples: list[CheckReport]
    sharpness: list[SharpnessRecord]
    orderings: list[OrderingResult]
    side_claims: list[dict[str, Any]] = field(default_factory=list)
    reports: list[CheckReport] = field(default_factory=list)
    sharpness_tolerance: float = SHARPNESS_TOL

    @property
    def passed(self) -> bool:
        return not self.counterexamples and all(
            r.within(self.sharpness_tolerance) for r in self.sharpness)

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config,
            "graphs_checked": self.graphs_checked,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "sharpness": [asdict(r) for r in self.sharpness],
            "orderings": [o.to_dict() for o in self.orderings],
            "side_claims": self.side_claims,
            "passed": self.passed,
        }

    def reports_csv(self) -> str:
        buf = io.StringIO()
        fields = list(CheckReport.__dataclass_fields__)
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in self.reports:
            writer.writerow(r.to_dict())
        return buf.getvalue()


# A task is a picklable description of a slice of the sweep.
_Task = tuple[str, tuple, int, int]


def _run_task(task: _Task) -> tuple[int, list[CheckReport], list[CheckReport]]:
    kind, params, start, stop = task
    tol, keep = params[-2], params[-1]
    checked = 0
    bad: list[CheckReport] = []
    kept: list[CheckReport] = []
    for report in _task_reports(kind, params, start, stop, tol):
        checked += 1
        if report.verdict == COUNTEREXAMPLE:
            bad.append(report)
        if keep:
            kept.append(report)
    return checked, bad, kept


def _task_reports(kind: str, params: tuple, start: int, stop: int, tol: float) -> Iterator[CheckReport]:
    if kind == "exhaustive1":
        n = params[0]
        for i, g in enumerate(enumerate_connected(n)):
            if start <= i < stop:
                yield check_theorem1(g, tol)
    elif kind == "exhaustive2":
        side = params[0]
        threshold = THEOREM2_THRESHOLDS[params[-3]](side)
        for i, (g, b) in enumerate(enumerate_connected_bipartite(side)):
            if start <= i < stop:
                yield check_theorem2(g, b, tol, threshold)
    elif kind in ("random1", "random2"):
        draws = params[0]
        for n, p, seed in draws[start:stop]:
            if kind == "random1":
                yield check_theorem1(random_connected(n, p, seed), tol)
            else:
                g, b = random_balanced_bipartite(n, p, seed)
                yield check_theorem2(g, b, tol, THEOREM2_THRESHOLDS[params[-3]](n))
    else:
        raise ValueError(kind)


def _random_draws(rnd_spec: RandomSpec, seed: int, even_only: bool) -> tuple[tuple[int, float, int], ...]:
    orders = [n for n in range(rnd_spec.n_min, rnd_spec.n_max + 1) if not even_only or n % 2 == 0]
    rng = XorShift64Star(seed)
    draws = []
    for _ in range(rnd_spec.count):
        n = orders[rng.below(len(orders))]
        p = rnd_spec.p[rng.below(len(rnd_spec.p))]
        draws.append((n, p, rng.next_u64()))
    return tuple(draws)


def _count_exhaustive(kind: str, n: int) -> int:
    source = enumerate_connected(n) if kind == "exhaustive1" else enumerate_connected_bipartite(n)
    return sum(1 for _ in source)


def _plan(cfg: CampaignConfig) -> list[_Task]:
    tasks: list[_Task] = []
    tail = (cfg.theorem2_threshold, cfg.tolerance, cfg.keep_reports)
    chunks = max(1, cfg.workers)
    for kind, orders in (("exhaustive1", cfg.theorem1_exhaustive),
                         ("exhaustive2", cfg.theorem2_exhaustive)):
        for n in orders:
            total = _count_exhaustive(kind, n) if chunks > 1 else 1 << 62
            step = -(-total // chunks)
            for start in range(0, total, step):
                tasks.append((kind, (n,) + tail, start, start + step))
    for theorem, rnd_spec in ((1, cfg.theorem1_random), (2, cfg.theorem2_random)):
        if rnd_spec and rnd_spec.count:
            draws = _random_draws(rnd_spec, cfg.seed + theorem, even_only=theorem == 1)
            step = -(-len(draws) // chunks)
            for start in range(0, len(draws), step):
                tasks.append((f"random{theorem}", (draws,) + tail, start, start + step))
    return tasks


def run_campaign(config: CampaignConfig | Mapping[str, Any]) -> CampaignSummary:
    cfg = config if isinstance(config, CampaignConfig) else CampaignConfig.from_mapping(config)
    if not cfg.has_work():
        raise ConfigError("config specifies no work")
    tasks = _plan(cfg)
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    checked = sum(r[0] for r in results)
    order = lambda rep: (rep.theorem, rep.graph_id, rep.eta1)  # noqa: E731
    counterexamples = sorted((c for r in results for c in r[1]), key=order)
    reports = sorted((c for r in results for c in r[2]), key=order)
    log.info("checked %d graphs, %d counterexamples", checked, len(counterexamples))

    sharpness: list[SharpnessRecord] = []
    if cfg.sharpness_theorem1:
        sharpness += sharpness_records(1, *cfg.sharpness_theorem1)
    if cfg.sharpness_theorem2:
        sharpness += sharpness_records(2, *cfg.sharpness_theorem2, cfg.theorem2_threshold)
    orderings = ordering_suite(cfg.orderings) if cfg.orderings else []
    side_claims = []
    if cfg.orderings:
        boundary = g3_boundary_matchings()
        side_claims.append({
            "claim": "K_s v (K_1 u co-K_{s+1}) has a perfect matching",
            "holds": [b for b in boundary if b["has_pm"]],
            "fails": [b for b in boundary if not b["has_pm"]],
        })
    return CampaignSummary(cfg.to_dict(), checked, counterexamples, sharpness, orderings,
                           side_claims, reports, cfg.sharpness_tolerance)
