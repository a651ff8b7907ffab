"""Executable law suites: every proposition the library claims, as checks.

Each suite returns exact pass/fail counts; the CLI's ``suite run`` and the
acceptance tests both call these functions, so there is a single place
where the laws are spelled out.  All arithmetic is exact; a failure lists
the witness that broke.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .enriched import slice_complete, slice_table, table_space
from .partitions import EMPTY, Partition, partitions_of, partitions_up_to
from .quantale import INF, ZERO, LValue, leq, monus, tropical_add, tropical_mul
from .symfunc import (
    SymFunc,
    complete,
    coproduct_add,
    coproduct_mult,
    counit_add,
    counit_mult,
    expand_in_vars,
    from_polynomial,
    monomial,
    multiply,
    plethysm,
    poly_mul,
)
from .witt import additive_unit, from_points, multiplicative_unit, tau, theta
from . import generate
from .plancherel import growth_step, plancherel_measure, sample_path

_MAX_FAILURES = 12
DEFAULT_SEED = 20260811


@dataclass
class SuiteResult:
    name: str
    module: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, cond: bool, label: str) -> None:
        if cond:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < _MAX_FAILURES:
                self.failures.append(label)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "module": self.module,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
        }


def _rationals_with_units(rng: random.Random, count: int) -> list[LValue]:
    values = [ZERO, INF]
    while len(values) < count:
        values.append(generate.random_rational(rng))
    return values


# -- 1: identities carried over from the source formulas -------------------------


def suite_identities(seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("identities", "symfunc")
    N = 8
    m = lambda *parts: monomial(Partition(parts), N)
    one = SymFunc.one(N)

    for n in range(1, N + 1):
        cop = coproduct_add(m(n))
        expected = {
            (Partition([n]), EMPTY): 1,
            (EMPTY, Partition([n])): 1,
        }
        res.check(
            dict(cop.items()) == expected, f"coproduct_add(m({n})) two-term form"
        )
    cop21 = coproduct_add(m(2, 1))
    expected21 = {
        (Partition([2, 1]), EMPTY): 1,
        (Partition([2]), Partition([1])): 1,
        (Partition([1]), Partition([2])): 1,
        (EMPTY, Partition([2, 1])): 1,
    }
    res.check(dict(cop21.items()) == expected21, "coproduct_add(m(2,1)) four-term form")

    for n in range(1, N + 1):
        cop = coproduct_mult(m(n))
        res.check(
            dict(cop.items()) == {(Partition([n]), Partition([n])): 1},
            f"coproduct_mult(m({n})) = m({n})⊗m({n})",
        )

    for lam in partitions_up_to(6):
        f = monomial(lam, N)
        res.check(
            counit_add(f) == (1 if lam.is_empty() else 0),
            f"counit_add(m{lam})",
        )
        res.check(
            counit_mult(f) == (1 if lam.is_empty() or lam.is_row() else 0),
            f"counit_mult(m{lam})",
        )

    for n in range(1, N + 1):
        total = SymFunc.zero(N)
        for lam in partitions_of(n):
            total = total + monomial(lam, N)
        res.check(complete(n, N) == total, f"h_{n} = sum of m over size {n}")

    for n in range(1, N + 1):
        for np in range(1, N + 1):
            if n * np > N:
                continue
            res.check(
                plethysm(m(n), m(np)) == monomial(Partition([n * np]), N),
                f"m({n}) ∘ m({np}) = m({n * np})",
            )
    res.check(plethysm(m(2), m(3)) == m(6), "composition sends rows to their product")
    res.check(one * m(2, 1) == m(2, 1), "multiplicative unit")
    return res


# -- 2: rig laws in the Witt rig -------------------------------------------------


def suite_witt_rig_laws(seed: int = DEFAULT_SEED, triples: int = 200) -> SuiteResult:
    res = SuiteResult("witt-rig-laws", "witt")
    N = 6
    rng = random.Random(seed)
    zero = additive_unit(N)
    one = multiplicative_unit(N)
    for i in range(triples):
        f = generate.random_witt_elem(rng, N)
        g = generate.random_witt_elem(rng, N)
        h = generate.random_witt_elem(rng, N)
        res.check(f.add(g) == g.add(f), f"add commutative #{i}")
        res.check(f.mul(g) == g.mul(f), f"mul commutative #{i}")
        res.check(f.add(g).add(h) == f.add(g.add(h)), f"add associative #{i}")
        res.check(f.mul(g).mul(h) == f.mul(g.mul(h)), f"mul associative #{i}")
        res.check(
            f.mul(g.add(h)) == f.mul(g).add(f.mul(h)), f"distributivity #{i}"
        )
        res.check(f.add(zero) == f, f"additive unit #{i}")
        res.check(f.mul(one) == f, f"multiplicative unit #{i}")
    return res


# -- 3: the scalar embedding is monoidal and lands in valid elements ----------------


def suite_theta_functor(seed: int = DEFAULT_SEED, pairs: int = 200) -> SuiteResult:
    res = SuiteResult("theta-functor", "witt")
    N = 8
    rng = random.Random(seed)
    values = _rationals_with_units(rng, pairs)
    res.check(theta(ZERO, N) == multiplicative_unit(N), "theta(0) is the unit")
    boundary = [
        (ZERO, ZERO),
        (ZERO, INF),
        (INF, INF),
        (ZERO, generate.random_rational(rng)),
        (INF, generate.random_rational(rng)),
    ]
    for i in range(pairs):
        if i < len(boundary):
            r, rp = boundary[i]
        else:
            r = values[rng.randrange(len(values))]
            rp = values[rng.randrange(len(values))]
        res.check(theta(r, N).validate().ok, f"theta({r}) validates #{i}")
        res.check(
            theta(r, N).mul(theta(rp, N)) == theta(r + rp, N),
            f"theta({r})·theta({rp}) = theta({r}+{rp}) #{i}",
        )
        lo, hi = (r, rp) if leq(r, rp) else (rp, r)
        res.check(
            theta(lo, N).leq(theta(hi, N)), f"theta monotone at ({r},{rp}) #{i}"
        )
    return res


# -- 4: the two negative results, reproduced exactly ---------------------------------


def suite_negative_results(seed: int = DEFAULT_SEED, pairs: int = 50) -> SuiteResult:
    res = SuiteResult("negative-results", "witt")
    N = 6
    rng = random.Random(seed)
    lam = Partition([2, 1])
    one = multiplicative_unit(N)
    doubled = one.add(one)
    res.check(doubled.value(lam) == ZERO, "unit ⊕ unit hits 0 at (2,1)")
    res.check(one.value(lam) == INF, "unit itself is ∞ at (2,1)")
    res.check(doubled != one, "the rig is not of characteristic one")
    for i in range(pairs):
        r = generate.random_rational(rng)
        rp = generate.random_rational(rng)
        got = theta(r, N).add(theta(rp, N)).value(lam)
        want = tropical_add(2 * r + rp, r + 2 * rp)
        res.check(got == want, f"(θ{r} ⊕ θ{rp})(m(2,1)) = min(2r+r', r+2r') #{i}")
        res.check(
            theta(tropical_add(r, rp), N).value(lam) == INF
            and got != INF,
            f"θ(min) differs from θ⊕θ at (2,1) for ({r},{rp}) #{i}",
        )
    return res


# -- 5: adjunction between the embedding and the initial value ------------------------


def suite_adjunction(seed: int = DEFAULT_SEED, samples: int = 500) -> SuiteResult:
    res = SuiteResult("adjunction", "witt")
    N = 6
    rng = random.Random(seed)
    for i in range(samples):
        f = generate.random_witt_elem(rng, N, max_points=4)
        if rng.random() < 0.25:
            f = f.mul(generate.random_witt_elem(rng, N, max_points=2))
        if not f.is_lipschitz():
            res.check(False, f"generated element outside the adjunction domain #{i}")
            continue
        mode = i % 3
        if mode == 0:
            r = tau(f)  # boundary case
        elif mode == 1:
            r = generate.random_lvalue(rng)
        else:
            r = tau(f) + generate.random_rational(rng, 4)
        lhs = theta(r, N).leq(f)
        rhs = leq(r, tau(f))
        res.check(lhs == rhs, f"adjunction at r={r}, tau={tau(f)} #{i}")
    return res


# -- 6: enriched axioms and slice propositions -----------------------------------------


def suite_enriched(seed: int = DEFAULT_SEED, spaces: int = 50) -> SuiteResult:
    res = SuiteResult("enriched-axioms", "enriched")
    N = 6
    rng = random.Random(seed)
    labels = ("a", "b", "c", "d")
    saw_nonzero_self = False
    for i in range(spaces):
        if i % 2 == 0:
            space = generate.random_theta_space(rng, labels, N)
        else:
            space = generate.random_point_eval_space(rng, labels, N)
        res.check(space.validate().ok, f"space #{i} validates")
        for n in range(1, N + 1):
            row = table_space(space, slice_table(space, Partition([n])))
            res.check(row.validate().ok, f"space #{i} slice ({n}) is metric")
            hn = table_space(space, slice_complete(space, n))
            res.check(hn.validate().ok, f"space #{i} complete slice {n} is metric")
        for lam in partitions_up_to(N):
            if lam.is_empty():
                continue
            table = slice_table(space, lam)
            ok = all(
                table[(x, z)] <= table[(x, y)] + table[(y, z)]
                for x in labels
                for y in labels
                for z in labels
            )
            res.check(ok, f"space #{i} slice {lam} triangle inequality")
            if not lam.is_row() and any(
                table[(x, x)] != ZERO and table[(x, x)] != INF for x in labels
            ):
                saw_nonzero_self = True
    res.check(
        saw_nonzero_self, "some generated slice has finite nonzero self-distance"
    )
    return res


# -- 7: point evaluation turns unions into sums ------------------------------------------


def suite_root_calculus(seed: int = DEFAULT_SEED, samples: int = 100) -> SuiteResult:
    res = SuiteResult("root-calculus", "witt")
    N = 6
    rng = random.Random(seed)
    for i in range(samples):
        a = [generate.random_rational(rng) for _ in range(rng.randint(1, 3))]
        b = [generate.random_rational(rng) for _ in range(rng.randint(1, 3))]
        fa, fb = from_points(a, N), from_points(b, N)
        res.check(
            fa.add(fb) == from_points(a + b, N),
            f"addition is multiset union #{i}",
        )
        res.check(
            fa.mul(fb) == from_points([x + y for x in a for y in b], N),
            f"multiplication is pairwise sum #{i}",
        )
    return res


# -- 8: truncated subtraction is the internal hom -----------------------------------------


def suite_residuation(seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("residuation", "quantale")
    grid = sorted(
        {LValue(Fraction(p, q)) for p in range(13) for q in (1, 2, 3)}
    ) + [INF]
    for x in grid:
        for y in grid:
            # the order is definable from addition alone
            res.check(
                leq(x, y) == (tropical_add(x, y) == y),
                f"order vs addition at x={x}, y={y}",
            )
            for z in grid:
                lhs = leq(tropical_mul(x, z), y)
                rhs = leq(z, monus(y, x))
                res.check(
                    lhs == rhs, f"residuation at x={x}, y={y}, z={z}"
                )
    return res


# -- 9: measure and growth-chain identities ------------------------------------------------


def suite_plancherel(seed: int = DEFAULT_SEED, paths: int = 10_000) -> SuiteResult:
    res = SuiteResult("plancherel", "plancherel")
    for n in range(1, 13):
        total = sum(plancherel_measure(n).values())
        res.check(total == 1, f"measure on size {n} sums to 1")
    for n in range(1, 9):
        pushed: dict[Partition, Fraction] = {}
        for lam, p in plancherel_measure(n).items():
            for mu, q in growth_step(lam).items():
                pushed[mu] = pushed.get(mu, Fraction(0)) + p * q
        res.check(
            pushed == plancherel_measure(n + 1),
            f"pushforward of size-{n} measure is the size-{n + 1} measure",
        )
    res.check(
        sample_path(6, seed) == sample_path(6, seed), "same seed, same path"
    )

    horizon = 5
    counts: dict[int, dict[Partition, int]] = {
        n: {} for n in range(1, horizon + 1)
    }
    for i in range(paths):
        path = sample_path(horizon, seed + i)
        for n, lam in enumerate(path.steps, start=1):
            counts[n][lam] = counts[n].get(lam, 0) + 1
    for n in range(1, horizon + 1):
        for lam, p in plancherel_measure(n).items():
            freq = Fraction(counts[n].get(lam, 0), paths)
            sigma = (float(p) * (1 - float(p)) / paths) ** 0.5
            res.check(
                abs(float(freq - p)) <= 3 * sigma + 1e-12,
                f"marginal at size {n}, partition {lam}: freq {float(freq):.4f} "
                f"vs exact {float(p):.4f}",
            )
    return res


# -- 10: combinatorial routes match the brute-force expansions -------------------------------


def suite_oracle_coherence(seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("oracle-coherence", "symfunc")

    for lam in partitions_up_to(6):
        if lam.is_empty():
            continue
        k = lam.size
        poly = expand_in_vars(monomial(lam, k), 2 * k)
        rebuilt: dict[tuple[int, ...], int] = {}
        for (mu, nu), c in coproduct_add(monomial(lam, k)).items():
            left = expand_in_vars(monomial(mu, k), k)
            right = expand_in_vars(monomial(nu, k), k)
            for el, cl in left.items():
                for er, cr in right.items():
                    key = el + er
                    rebuilt[key] = rebuilt.get(key, 0) + c * cl * cr
        res.check(
            rebuilt == poly,
            f"two-alphabet expansion matches splittings at {lam}",
        )

    for mu in partitions_up_to(5):
        for nu in partitions_up_to(5):
            if mu.is_empty() or nu.is_empty():
                continue
            d = mu.size + nu.size
            if d > 6:
                continue
            direct = multiply(monomial(mu, d), monomial(nu, d))
            oracle = from_polynomial(
                poly_mul(
                    expand_in_vars(monomial(mu, d), d),
                    expand_in_vars(monomial(nu, d), d),
                ),
                d,
            )
            res.check(direct == oracle, f"product at ({mu}, {nu}) matches expansion")

    for n in range(1, 5):
        for np in range(n, 9 - n):
            d = n + np
            direct = multiply(monomial(Partition([n]), d), monomial(Partition([np]), d))
            oracle = from_polynomial(
                poly_mul(
                    expand_in_vars(monomial(Partition([n]), d), d),
                    expand_in_vars(monomial(Partition([np]), d), d),
                ),
                d,
            )
            res.check(direct == oracle, f"row product ({n})·({np}) matches expansion")
    return res


SUITES = {
    "identities": suite_identities,
    "witt-rig-laws": suite_witt_rig_laws,
    "theta-functor": suite_theta_functor,
    "negative-results": suite_negative_results,
    "adjunction": suite_adjunction,
    "enriched-axioms": suite_enriched,
    "root-calculus": suite_root_calculus,
    "residuation": suite_residuation,
    "plancherel": suite_plancherel,
    "oracle-coherence": suite_oracle_coherence,
}

_MODULE_OF = {
    "identities": "symfunc",
    "witt-rig-laws": "witt",
    "theta-functor": "witt",
    "negative-results": "witt",
    "adjunction": "witt",
    "enriched-axioms": "enriched",
    "root-calculus": "witt",
    "residuation": "quantale",
    "plancherel": "plancherel",
    "oracle-coherence": "symfunc",
}


def run_all(module: str | None = None, seed: int = DEFAULT_SEED) -> list[SuiteResult]:
    """Run every suite (optionally only those tagged with one module)."""
    out = []
    for name, fn in SUITES.items():
        if module is not None and _MODULE_OF[name] != module:
            continue
        out.append(fn(seed))
    return out
