"""Bounded-frontier checks for the properties H_k, G and M.

None of these functions can decide whether a set is infinite. They count
inside nested frontiers instead: a count that keeps growing along a ladder of
rank bounds is evidence that the set is infinite, a count that does not move
is evidence that it is finite.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import PosetView, SupportedFunction, mobius, zeta_transform_on
from .keys import ElementKey, format_rational
from .zoo import LETTERS, CounterexampleP, CounterexampleQ, build_counterexample_P, build_counterexample_Q

GROWTH = "growth-observed"
STABLE = "stabilized"
INCONCLUSIVE = "inconclusive"

DEFAULT_LADDER = (25, 50, 100)
SAMPLE_LIMIT = 5


def ladder_from_bound(n: int) -> tuple[int, ...]:
    """Geometric ladder ending at ``n``: (ceil(n/4), ceil(n/2), n)."""
    if n < 3:
        raise ValueError(f"rank bound must be >= 3, got {n}")
    return (math.ceil(n / 4), math.ceil(n / 2), n)


def check_ladder(ladder: Sequence[int]) -> tuple[int, ...]:
    ladder = tuple(int(m) for m in ladder)
    if not ladder:
        raise ValueError("empty frontier ladder")
    if any(m < 0 for m in ladder) or any(a >= b for a, b in zip(ladder, ladder[1:])):
        raise ValueError(f"frontier ladder must be nonnegative and strictly increasing: {ladder}")
    return ladder


def strictly_increasing(counts: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(counts, counts[1:]))


def constant(counts: Sequence[int]) -> bool:
    return all(a == b for a, b in zip(counts, counts[1:]))


def ladder_verdict(series: Iterable[Sequence[int]], *, any_growth: bool = True) -> str:
    """``growth-observed`` if some (or every) series grows strictly,
    ``stabilized`` if every series is constant, else ``inconclusive``."""
    series = [list(s) for s in series]
    grows = [strictly_increasing(s) and len(s) > 1 for s in series]
    if series and (any(grows) if any_growth else all(grows)):
        return GROWTH
    if all(constant(s) for s in series):
        return STABLE
    return INCONCLUSIVE


# ----------------------------------------------------------------------
# H_k witnesses


@dataclass
class CandidateWitnesses:
    z: ElementKey
    count: int
    samples: list[ElementKey]
    stabilized: bool


@dataclass
class WitnessReport:
    """Witnesses x >= z with x not >= any other member of S, per z in S."""

    S: list[ElementKey]
    frontier: int
    per_candidate: dict[ElementKey, CandidateWitnesses]

    def counts(self) -> dict[ElementKey, int]:
        return {z: c.count for z, c in self.per_candidate.items()}


def _witness_lists(P: PosetView, S: Sequence[ElementKey], elements: Iterable[ElementKey]):
    found: dict[ElementKey, list[ElementKey]] = {z: [] for z in S}
    leq = P.leq
    for x in elements:
        hit = None
        for y in S:
            if leq(y, x):
                if hit is not None:
                    hit = None
                    break
                hit = y
        else:
            if hit is not None:
                found[hit].append(x)
    return found


def _validate_set(P: PosetView, S: Sequence[ElementKey]) -> list[ElementKey]:
    S = sorted(set(S))
    if not S:
        raise ValueError("S must be nonempty")
    for z in S:
        P.check(z)
    return S


def hk_witnesses(P: PosetView, S: Sequence[ElementKey], n: int, *, samples: int = SAMPLE_LIMIT) -> WitnessReport:
    """Count H_k witnesses for each z in S inside ``frontier(n)``.

    ``stabilized`` compares against ``frontier(n - 1)``.
    """
    S = _validate_set(P, S)
    found = _witness_lists(P, S, P.frontier(n))
    per = {}
    for z in S:
        xs = sorted(found[z])
        prev = sum(1 for x in xs if P.in_frontier(x, n - 1)) if n > 0 else 0
        per[z] = CandidateWitnesses(z, len(xs), xs[:samples], prev == len(xs))
    return WitnessReport(S, n, per)


def witness_ladder(P: PosetView, S: Sequence[ElementKey], ladder: Sequence[int]) -> dict[ElementKey, list[int]]:
    """Witness counts per candidate at each rung, from one scan of the top rung."""
    ladder = check_ladder(ladder)
    S = _validate_set(P, S)
    found = _witness_lists(P, S, P.frontier(ladder[-1]))
    return {z: [sum(1 for x in found[z] if P.in_frontier(x, m)) for m in ladder] for z in S}


def witness_report(P: PosetView, S: Sequence[ElementKey], ladder: Sequence[int] = DEFAULT_LADDER) -> dict:
    ladder = check_ladder(ladder)
    S = _validate_set(P, S)
    top = hk_witnesses(P, S, ladder[-1])
    counts = witness_ladder(P, S, ladder)
    per = [
        {
            "z": P.format_key(z),
            "counts": counts[z],
            "stabilized": constant(counts[z]) and top.per_candidate[z].stabilized,
            "samples": [P.format_key(x) for x in top.per_candidate[z].samples],
        }
        for z in S
    ]
    return {
        "property": f"H_{len(S)}",
        "poset": P.name,
        "frontier_ladder": list(ladder),
        "per_candidate": per,
        "verdict": ladder_verdict(counts.values()),
    }


def exhaustive_hk(P: PosetView, k: int, n: int, ladder: Sequence[int]) -> list[list[ElementKey]]:
    """Every k-subset S of ``frontier(n)`` whose witness counts never grow along ``ladder``.

    Exponential in k; meant for k <= 3 on small frontiers.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    failures = []
    for S in combinations(P.frontier(n), k):
        counts = witness_ladder(P, S, ladder)
        if not any(strictly_increasing(c) for c in counts.values()):
            failures.append(list(S))
    return failures


def sampled_hk(P: PosetView, k: int, n: int, ladder: Sequence[int], trials: int, seed: int = 0) -> list[list[ElementKey]]:
    """Random k-subsets of ``frontier(n)``; returns those showing no growth."""
    rng = random.Random(seed)
    pool = P.frontier(n)
    failures = []
    for _ in range(trials):
        S = sorted(rng.sample(pool, k))
        counts = witness_ladder(P, S, ladder)
        if not any(strictly_increasing(c) for c in counts.values()):
            failures.append(S)
    return failures


# ----------------------------------------------------------------------
# property G


def check_G(P: PosetView, x: ElementKey, n: int, *, samples: int = SAMPLE_LIMIT) -> tuple[int, list[ElementKey]]:
    """Number of y in ``frontier(n)`` with μ(x, y) != 0, plus a few of them."""
    P.check(x)
    hits = [y for y in P.frontier(n) if P.leq(x, y) and mobius(P, x, y) != 0]
    return len(hits), hits[:samples]


def check_G_ladder(P: PosetView, x: ElementKey, ladder: Sequence[int]) -> list[int]:
    ladder = check_ladder(ladder)
    P.check(x)
    hits = [y for y in P.frontier(ladder[-1]) if P.leq(x, y) and mobius(P, x, y) != 0]
    return [sum(1 for y in hits if P.in_frontier(y, m)) for m in ladder]


def check_g_report(P: PosetView, xs: Sequence[ElementKey], ladder: Sequence[int] = DEFAULT_LADDER) -> dict:
    ladder = check_ladder(ladder)
    per = []
    series = []
    for x in sorted(xs):
        counts = check_G_ladder(P, x, ladder)
        _, sample = check_G(P, x, ladder[0])
        series.append(counts)
        per.append(
            {
                "z": P.format_key(x),
                "counts": counts,
                "stabilized": constant(counts),
                "samples": [P.format_key(y) for y in sample],
            }
        )
    return {
        "property": "G",
        "poset": P.name,
        "frontier_ladder": list(ladder),
        "per_candidate": per,
        "verdict": ladder_verdict(series, any_growth=False),
    }


# ----------------------------------------------------------------------
# property M


@dataclass
class ExperimentResult:
    f: SupportedFunction
    g_support_counts: dict[int, int]
    g_samples: list[tuple[ElementKey, Fraction]]
    g: dict[ElementKey, Fraction] = field(default_factory=dict, repr=False)

    @property
    def ladder(self) -> list[int]:
        return sorted(self.g_support_counts)

    @property
    def counts(self) -> list[int]:
        return [self.g_support_counts[m] for m in self.ladder]

    @property
    def verdict(self) -> str:
        return ladder_verdict([self.counts])


def uncertainty_experiment(
    P: PosetView, f: SupportedFunction, n: int, ladder: Sequence[int] | None = None, *, samples: int = SAMPLE_LIMIT
) -> ExperimentResult:
    """g = ζ * f on ``frontier(n)``; |supp(g) ∩ frontier(m)| for m on the ladder."""
    if not f:
        raise ValueError("f must be nonzero")
    ladder = check_ladder(ladder if ladder is not None else ladder_from_bound(n))
    if ladder[-1] > n:
        raise ValueError(f"ladder {ladder} exceeds rank bound {n}")
    g = zeta_transform_on(P, f, P.frontier(n))
    nonzero = sorted(x for x, v in g.items() if v)
    counts = {m: sum(1 for x in nonzero if P.in_frontier(x, m)) for m in ladder}
    return ExperimentResult(f, counts, [(x, g[x]) for x in nonzero[:samples]], g)


def experiment_report(P: PosetView, f: SupportedFunction, ladder: Sequence[int] = DEFAULT_LADDER) -> dict:
    ladder = check_ladder(ladder)
    res = uncertainty_experiment(P, f, ladder[-1], ladder)
    return {
        "property": "M",
        "poset": P.name,
        "frontier_ladder": list(ladder),
        "per_candidate": [{"z": "supp(g)", "counts": res.counts, "stabilized": constant(res.counts)}],
        "verdict": res.verdict,
        "f": [{"x": P.format_key(x), "value": format_rational(v)} for x, v in f.items()],
        "g_samples": [{"x": P.format_key(x), "value": format_rational(v)} for x, v in res.g_samples],
    }


def necessity_function(P: PosetView, S: Sequence[ElementKey], n: int | None = None) -> SupportedFunction:
    """The function that breaks M when H_1 or H_2 fails for S.

    For S = [z1, z2] this is 1_{z2} - 1_{z1}. For S = [z] it is the indicator
    of a maximal element of the up-set of z, provided that up-set looks finite
    (identical inside frontier(n) and frontier(2n)); otherwise 1_z.
    """
    S = list(S)
    if len(S) not in (1, 2) or len(set(S)) != len(S):
        raise ValueError("S must have one or two distinct elements")
    for z in S:
        P.check(z)
    if len(S) == 2:
        z1, z2 = S
        return SupportedFunction({z1: -1, z2: 1})
    (z,) = S
    if n is None:
        return SupportedFunction.indicator(z)
    up = P.up_set_in(z, n)
    if up and sorted(up) == sorted(P.up_set_in(z, 2 * n)):
        maximal = [x for x in up if not any(P.lt(x, y) for y in up)]
        return SupportedFunction.indicator(min(maximal))
    return SupportedFunction.indicator(z)


def up_set_symmetric_difference(P: PosetView, z1: ElementKey, z2: ElementKey, n: int) -> set[ElementKey]:
    """(U(z1) △ U(z2)) ∩ frontier(n)."""
    return {x for x in P.frontier(n) if P.leq(z1, x) != P.leq(z2, x)}


# ----------------------------------------------------------------------
# certification of the two counterexamples


def _check(name: str, counts, expected: str, passed: bool) -> dict:
    return {"name": name, "counts": counts, "expected": expected, "passed": bool(passed)}


def certify_theorem4(ladder: Sequence[int] = DEFAULT_LADDER) -> dict:
    """Counterexample P: G holds (μ-counts grow), H_2 fails at {z1, z2}."""
    ladder = check_ladder(ladder)
    P = build_counterexample_P()
    checks = []
    per = []
    for label, x in (
        ("u", P.u),
        ("D0 element", P.d0(2)),
        ("P1 element", P.m(1, 1)),
        ("z1", P.z1),
        ("z2", P.z2),
    ):
        counts = check_G_ladder(P, x, ladder)
        checks.append(_check(f"G growth at {label} ({P.format_key(x)})", counts, "strictly increasing", strictly_increasing(counts)))
    S = [P.z1, P.z2]
    counts = witness_ladder(P, S, ladder)
    top = hk_witnesses(P, S, ladder[-1])
    for z in S:
        ok = all(c == 1 for c in counts[z]) and top.per_candidate[z].stabilized
        checks.append(_check(f"H_2 witnesses of {P.format_key(z)} in {{z1,z2}}", counts[z], "exactly 1 at every rung", ok))
        per.append({"z": P.format_key(z), "counts": counts[z], "stabilized": constant(counts[z]) and top.per_candidate[z].stabilized})
    res = uncertainty_experiment(P, necessity_function(P, S), ladder[-1], ladder)
    checks.append(_check("supp(g) for f = 1_z2 - 1_z1", res.counts, "exactly 2 at every rung", all(c == 2 for c in res.counts)))
    return {
        "property": "theorem4",
        "poset": P.name,
        "frontier_ladder": list(ladder),
        "per_candidate": per,
        "checks": checks,
        "verdict": "pass" if all(c["passed"] for c in checks) else "fail",
    }


def theorem5_battery(Q: CounterexampleQ, seed: int = 0, per_case: int = 5) -> list[tuple[str, SupportedFunction]]:
    """Nonzero finitely supported f covering the three cases of the M argument for Q.

    Random members use values in [-3, 3] and support size <= 5, with indices
    small enough to sit inside any frontier of rank >= 6.
    """
    rng = random.Random(seed)
    d1 = [Q.u] + [Q.d0(d) for d in range(2, 7)]
    rest = [Q.letter(x) for x in LETTERS] + [Q.copy(x, l, d) for x in LETTERS for l in range(1, 7) for d in range(1, 7)]
    nz = [v for v in range(-3, 4) if v]

    battery = [
        ("meets D1", SupportedFunction({Q.u: 1})),
        ("meets D1", SupportedFunction({Q.d0(6): 1})),
        ("meets D1", SupportedFunction({Q.u: 1, Q.d0(2): -1, Q.letter("a"): -1})),
        ("f(a)+f(b) != 0", SupportedFunction({Q.letter("a"): 1})),
        ("f(a)+f(b) != 0", SupportedFunction({Q.letter("a"): 2, Q.letter("b"): -1, Q.copy("c", 1, 1): 3})),
        ("f(a)+f(b) != 0 up to S3", SupportedFunction({Q.letter("b"): 1, Q.letter("a"): -1})),
        ("inside one copy", SupportedFunction({Q.copy("a", 1, 1): 1})),
        ("inside one copy", SupportedFunction({Q.copy("b", 2, 3): -2, Q.copy("b", 2, 6): 2})),
        ("inside one copy", SupportedFunction({Q.copy("c", 1, 2): 1, Q.copy("c", 3, 1): -1})),
    ]
    for _ in range(per_case):
        vals = {z: rng.choice(nz) for z in rng.sample(d1, rng.randint(1, 3))}
        vals.update({z: rng.choice(nz) for z in rng.sample(rest, rng.randint(0, 2))})
        battery.append(("meets D1", SupportedFunction(vals)))
    for _ in range(per_case):
        fa = rng.choice(range(-3, 4))
        fb = rng.choice([v for v in range(-3, 4) if v != -fa])
        vals = {Q.letter("a"): fa, Q.letter("b"): fb}
        extra = [z for z in rest if z.payload[0] == "q" or z == Q.letter("c")]
        vals.update({z: rng.choice(nz) for z in rng.sample(extra, rng.randint(0, 3))})
        battery.append(("f(a)+f(b) != 0", SupportedFunction(vals)))
    for _ in range(per_case):
        x = rng.choice(LETTERS)
        cells = [Q.copy(x, l, d) for l in range(1, 7) for d in range(1, 7)]
        battery.append(("inside one copy", SupportedFunction({z: rng.choice(nz) for z in rng.sample(cells, rng.randint(1, 5))})))
    return battery


def certify_theorem5(ladder: Sequence[int] = DEFAULT_LADDER, seed: int = 0, per_case: int = 5) -> dict:
    """Counterexample Q: H_3 fails at {a, b, c}, yet every tested f has growing supp(g)."""
    ladder = check_ladder(ladder)
    Q = build_counterexample_Q()
    checks = []
    per = []
    S = [Q.letter(x) for x in LETTERS]
    counts = witness_ladder(Q, S, ladder)
    top = hk_witnesses(Q, S, ladder[-1])
    for z in S:
        ok = all(c == 1 for c in counts[z]) and top.per_candidate[z].stabilized
        checks.append(_check(f"H_3 witnesses of {Q.format_key(z)} in {{a,b,c}}", counts[z], "exactly 1 at every rung", ok))
        per.append({"z": Q.format_key(z), "counts": counts[z], "stabilized": constant(counts[z]) and top.per_candidate[z].stabilized})

    frontier = Q.frontier(ladder[-1])
    for case, f in theorem5_battery(Q, seed, per_case):
        g = zeta_transform_on(Q, f, frontier)
        nonzero = [x for x, v in g.items() if v]
        sizes = [sum(1 for x in nonzero if Q.in_frontier(x, m)) for m in ladder]
        desc = ", ".join(f"{Q.format_key(x)}={v}" for x, v in f.items())
        checks.append(_check(f"supp(g) growth [{case}] f = {{{desc}}}", sizes, "strictly increasing", strictly_increasing(sizes)))
    return {
        "property": "theorem5",
        "poset": Q.name,
        "frontier_ladder": list(ladder),
        "per_candidate": per,
        "checks": checks,
        "verdict": "pass" if all(c["passed"] for c in checks) else "fail",
    }
