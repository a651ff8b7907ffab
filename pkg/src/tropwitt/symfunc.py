"""Symmetric functions with natural-number coefficients, monomial basis.

Everything is truncated at a per-value degree bound: a ``SymFunc`` only
stores terms m_λ with |λ| ≤ degree_bound, and products drop the terms that
would land beyond it (or raise in strict mode).  The bound is sound for the
rest of the package because both coproducts respect the grading: the
additive one splits degree across the two factors and the multiplicative
one preserves it on each side.

Two computation routes coexist deliberately.  The product and the additive
coproduct use direct combinatorics (exponent-vector alignment counts and
multiset splittings); :func:`expand_in_vars` / :func:`from_polynomial`
give the brute-force polynomial route that the test suite replays against
them.  The multiplicative coproduct is defined by expanding m_λ at a
doubled alphabet x_i·y_j; here that expansion is aggregated by row and
column sums of the exponent matrix, which avoids materializing the |λ|²
variables while computing exactly the same coefficients.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from itertools import product as iter_product
from typing import Iterator, Mapping

from .errors import ConstantTermError, DegreeOverflowError, FormatError, NotSymmetricError
from .partitions import EMPTY, Partition, partitions_of

Poly = dict[tuple[int, ...], int]


class SymFunc:
    """A finitely supported ℕ-combination of monomial basis elements m_λ."""

    __slots__ = ("_coeffs", "_degree_bound")

    def __init__(self, coeffs: Mapping[Partition, int], degree_bound: int):
        if degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        clean: dict[Partition, int] = {}
        for lam, c in coeffs.items():
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient of {lam} must be int, got {c!r}")
            if c < 0:
                raise ValueError(f"coefficient of {lam} must be ≥ 0, got {c}")
            if c == 0:
                continue
            if lam.size > degree_bound:
                raise DegreeOverflowError(
                    f"term m{lam} exceeds degree bound {degree_bound}"
                )
            clean[lam] = c
        self._coeffs = clean
        self._degree_bound = degree_bound

    # -- accessors ---------------------------------------------------------

    @property
    def degree_bound(self) -> int:
        return self._degree_bound

    def coefficient(self, lam: Partition) -> int:
        return self._coeffs.get(lam, 0)

    def support(self) -> list[Partition]:
        return sorted(self._coeffs)

    def items(self) -> Iterator[tuple[Partition, int]]:
        return iter(sorted(self._coeffs.items()))

    def degree(self) -> int:
        """Largest |λ| in the support; 0 for the zero element."""
        return max((lam.size for lam in self._coeffs), default=0)

    @property
    def constant_term(self) -> int:
        return self._coeffs.get(EMPTY, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def with_degree_bound(self, degree_bound: int) -> "SymFunc":
        return SymFunc(self._coeffs, degree_bound)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, degree_bound: int) -> "SymFunc":
        return cls({}, degree_bound)

    @classmethod
    def one(cls, degree_bound: int) -> "SymFunc":
        return cls({EMPTY: 1}, degree_bound)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        _check_bounds(self, other)
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(out, self._degree_bound)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "SymFunc":
        if c < 0:
            raise ValueError("scalar must be ≥ 0")
        return SymFunc({lam: c * v for lam, v in self._coeffs.items()}, self._degree_bound)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymFunc)
            and self._degree_bound == other._degree_bound
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        if not self._coeffs:
            return "SymFunc<0>"
        terms = []
        for lam, c in self.items():
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}m{lam}")
        return "SymFunc<" + " + ".join(terms) + ">"

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree_bound": self._degree_bound,
            "coeffs": {lam.key(): c for lam, c in self.items()},
        }

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        if not isinstance(data, dict) or "degree_bound" not in data or "coeffs" not in data:
            raise FormatError("SymFunc JSON needs 'degree_bound' and 'coeffs'")
        bound = data["degree_bound"]
        if not isinstance(bound, int) or bound < 0:
            raise FormatError(f"bad degree_bound {bound!r}")
        raw = data["coeffs"]
        if not isinstance(raw, dict):
            raise FormatError("'coeffs' must be an object")
        coeffs = {}
        for key, c in raw.items():
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise FormatError(f"bad coefficient {c!r} for key {key!r}")
            coeffs[Partition.from_key(key)] = c
        try:
            return cls(coeffs, bound)
        except DegreeOverflowError as exc:
            raise FormatError(str(exc)) from exc


class TensorSymFunc:
    """An ℕ-combination of basis tensors m_μ ⊗ m_ν, bounded per factor."""

    __slots__ = ("_coeffs", "_degree_bound")

    def __init__(self, coeffs: Mapping[tuple[Partition, Partition], int], degree_bound: int):
        clean: dict[tuple[Partition, Partition], int] = {}
        for pair, c in coeffs.items():
            if c < 0:
                raise ValueError(f"coefficient of {pair} must be ≥ 0")
            if c == 0:
                continue
            mu, nu = pair
            if mu.size > degree_bound or nu.size > degree_bound:
                raise DegreeOverflowError(f"tensor term {pair} exceeds bound {degree_bound}")
            clean[pair] = c
        self._coeffs = clean
        self._degree_bound = degree_bound

    @property
    def degree_bound(self) -> int:
        return self._degree_bound

    def coefficient(self, mu: Partition, nu: Partition) -> int:
        return self._coeffs.get((mu, nu), 0)

    def support(self) -> list[tuple[Partition, Partition]]:
        return sorted(self._coeffs, key=lambda p: (p[0].sort_key(), p[1].sort_key()))

    def items(self):
        return ((pair, self._coeffs[pair]) for pair in self.support())

    def __add__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        if not isinstance(other, TensorSymFunc):
            return NotImplemented
        if self._degree_bound != other._degree_bound:
            raise ValueError("degree bounds differ")
        out = dict(self._coeffs)
        for pair, c in other._coeffs.items():
            out[pair] = out.get(pair, 0) + c
        return TensorSymFunc(out, self._degree_bound)

    def scale(self, c: int) -> "TensorSymFunc":
        if c < 0:
            raise ValueError("scalar must be ≥ 0")
        return TensorSymFunc(
            {pair: c * v for pair, v in self._coeffs.items()}, self._degree_bound
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorSymFunc)
            and self._degree_bound == other._degree_bound
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        if not self._coeffs:
            return "TensorSymFunc<0>"
        terms = []
        for (mu, nu), c in self.items():
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}m{mu}⊗m{nu}")
        return "TensorSymFunc<" + " + ".join(terms) + ">"

    def to_json(self) -> dict:
        return {
            "degree_bound": self._degree_bound,
            "coeffs": {f"{mu.key()}|{nu.key()}": c for (mu, nu), c in self.items()},
        }

    @classmethod
    def from_json(cls, data) -> "TensorSymFunc":
        if not isinstance(data, dict) or "degree_bound" not in data or "coeffs" not in data:
            raise FormatError("TensorSymFunc JSON needs 'degree_bound' and 'coeffs'")
        bound = data["degree_bound"]
        raw = data["coeffs"]
        if not isinstance(bound, int) or not isinstance(raw, dict):
            raise FormatError("bad TensorSymFunc JSON")
        coeffs = {}
        for key, c in raw.items():
            if key.count("|") != 1:
                raise FormatError(f"tensor key must be 'mu|nu', got {key!r}")
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise FormatError(f"bad coefficient {c!r} for key {key!r}")
            left, right = key.split("|")
            coeffs[(Partition.from_key(left), Partition.from_key(right))] = c
        return cls(coeffs, bound)


# -- basis elements ---------------------------------------------------------


def monomial(lam: Partition, degree_bound: int) -> SymFunc:
    """The basis element m_λ; m_∅ is the multiplicative unit."""
    return SymFunc({lam: 1}, degree_bound)


def elementary(n: int, degree_bound: int) -> SymFunc:
    """e_n = m_(1,…,1) with n ones; e_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return monomial(Partition([1] * n), degree_bound)


def complete(n: int, degree_bound: int) -> SymFunc:
    """h_n = Σ over all λ of size n of m_λ; h_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > degree_bound:
        raise DegreeOverflowError(f"h_{n} exceeds degree bound {degree_bound}")
    return SymFunc({lam: 1 for lam in partitions_of(n)}, degree_bound)


# -- product ------------------------------------------------------------------


def _distinct_perms(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Each distinct ordering of a multiset exactly once."""
    counts = Counter(items)
    values = sorted(counts)
    n = len(items)
    perm = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(perm)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                perm[i] = v
                yield from rec(i + 1)
                counts[v] += 1

    yield from rec(0)


@cache
def _basis_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Structure constants of m_μ · m_ν in the monomial basis.

    The coefficient at λ counts the ways to write the exponent vector λ as
    a componentwise sum a + b where a arranges the parts of μ over the
    positions of λ and b the parts of ν.
    """
    if mu.is_empty():
        return ((nu, 1),)
    if nu.is_empty():
        return ((mu, 1),)
    total = mu.size + nu.size
    out = []
    for lam in partitions_of(total):
        length = lam.length
        if length > mu.length + nu.length or length < max(mu.length, nu.length):
            continue
        padded = mu.parts + (0,) * (length - mu.length)
        count = 0
        for arr in _distinct_perms(padded):
            residual = []
            for want, got in zip(lam.parts, arr):
                if got > want:
                    break
                if want > got:
                    residual.append(want - got)
            else:
                residual.sort(reverse=True)
                if tuple(residual) == nu.parts:
                    count += 1
        if count:
            out.append((lam, count))
    return tuple(out)


def multiply(f: SymFunc, g: SymFunc, strict: bool = False) -> SymFunc:
    """Product in the monomial basis, truncated at the degree bound.

    Terms of degree above the bound are dropped silently; with
    ``strict=True`` such a term raises instead.
    """
    _check_bounds(f, g)
    bound = f.degree_bound
    out: dict[Partition, int] = {}
    for mu, a in f._coeffs.items():
        for nu, b in g._coeffs.items():
            if mu.size + nu.size > bound:
                if strict:
                    raise DegreeOverflowError(
                        f"product term m{mu}·m{nu} exceeds degree bound {bound}"
                    )
                continue
            for lam, c in _basis_product(mu, nu):
                out[lam] = out.get(lam, 0) + a * b * c
    return SymFunc(out, bound)


# -- coproducts ----------------------------------------------------------------


@cache
def _splittings(lam: Partition) -> tuple[tuple[Partition, Partition], ...]:
    """All ordered pairs (μ, ν) with μ ⊎ ν = λ as multisets, each once."""
    counts = Counter(lam.parts)
    values = sorted(counts)
    pairs = []
    for take in iter_product(*(range(counts[v] + 1) for v in values)):
        left: list[int] = []
        right: list[int] = []
        for v, k in zip(values, take):
            left.extend([v] * k)
            right.extend([v] * (counts[v] - k))
        pairs.append((Partition(left), Partition(right)))
    return tuple(pairs)


def coproduct_add(f: SymFunc) -> TensorSymFunc:
    """Additive coproduct: on m_λ the sum of m_μ ⊗ m_ν over multiset
    splittings λ = μ ⊎ ν, extended linearly."""
    out: dict[tuple[Partition, Partition], int] = {}
    for lam, c in f._coeffs.items():
        for pair in _splittings(lam):
            out[pair] = out.get(pair, 0) + c
    return TensorSymFunc(out, f.degree_bound)


@cache
def _comult_pairs(lam: Partition) -> tuple[tuple[tuple[Partition, Partition], int], ...]:
    """Coefficients of the multiplicative coproduct of m_λ.

    Expanding m_λ at the doubled alphabet x_i·y_j and collecting by the
    exponents each x_i and y_j receives, the coefficient of m_μ ⊗ m_ν is
    the number of matrices whose nonzero entries form the multiset λ, with
    row-sum vector μ and column-sum vector ν.  Both factors always have
    degree exactly |λ|.
    """
    if lam.is_empty():
        return (((EMPTY, EMPTY), 1),)
    out = []
    for mu in partitions_of(lam.size):
        for nu in partitions_of(lam.size):
            c = _matrix_count(lam, mu, nu)
            if c:
                out.append(((mu, nu), c))
    return tuple(out)


def _matrix_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    entries = lam.length
    if entries < mu.length or entries < nu.length or entries > mu.length * nu.length:
        return 0
    if lam.parts[0] > mu.parts[0] or lam.parts[0] > nu.parts[0]:
        return 0
    cols = list(nu.parts)
    ncols = len(cols)
    remaining = Counter(lam.parts)
    values = sorted(remaining, reverse=True)
    count = 0

    def fill_row(r: int) -> None:
        nonlocal count
        if r == mu.length:
            count += 1
            return
        target = mu.parts[r]

        def place(j: int, acc: int) -> None:
            if acc == target:
                fill_row(r + 1)
                return
            if j == ncols or acc + sum(cols[j:]) < target:
                return
            place(j + 1, acc)
            room = target - acc
            cap = cols[j]
            for v in values:
                if v <= room and v <= cap and remaining[v]:
                    remaining[v] -= 1
                    cols[j] -= v
                    place(j + 1, acc + v)
                    remaining[v] += 1
                    cols[j] += v

        place(0, 0)

    fill_row(0)
    return count


def coproduct_mult(f: SymFunc) -> TensorSymFunc:
    """Multiplicative coproduct, extended linearly from the basis."""
    out: dict[tuple[Partition, Partition], int] = {}
    for lam, c in f._coeffs.items():
        for pair, k in _comult_pairs(lam):
            out[pair] = out.get(pair, 0) + c * k
    return TensorSymFunc(out, f.degree_bound)


# -- counits ---------------------------------------------------------------------


def counit_add(f: SymFunc) -> int:
    """Evaluation at the all-zero point: the coefficient of m_∅."""
    return f.constant_term


def counit_mult(f: SymFunc) -> int:
    """Evaluation at (1,0,0,…): coefficient of m_∅ plus those of all m_(n)."""
    total = f.constant_term
    for lam, c in f._coeffs.items():
        if lam.is_row():
            total += c
    return total


def tensor_counit_left(t: TensorSymFunc, kind: str) -> SymFunc:
    """Apply a counit ('add' or 'mult') to the left tensor factor."""
    eps = counit_add if kind == "add" else counit_mult
    out: dict[Partition, int] = {}
    for (mu, nu), c in t.items():
        e = eps(monomial(mu, t.degree_bound))
        if e:
            out[nu] = out.get(nu, 0) + c * e
    return SymFunc(out, t.degree_bound)


def tensor_counit_right(t: TensorSymFunc, kind: str) -> SymFunc:
    eps = counit_add if kind == "add" else counit_mult
    out: dict[Partition, int] = {}
    for (mu, nu), c in t.items():
        e = eps(monomial(nu, t.degree_bound))
        if e:
            out[mu] = out.get(mu, 0) + c * e
    return SymFunc(out, t.degree_bound)


# -- brute-force polynomial route ---------------------------------------------------


@cache
def _expand_monomial(lam: Partition, k: int) -> tuple[tuple[int, ...], ...]:
    """All distinct exponent vectors of m_λ in k variables (empty if λ has
    more parts than there are variables)."""
    if lam.length > k:
        return ()
    padded = lam.parts + (0,) * (k - lam.length)
    return tuple(_distinct_perms(padded))


def expand_in_vars(f: SymFunc, k: int) -> Poly:
    """Substitute x_{k+1} = x_{k+2} = … = 0 and expand into monomials."""
    out: Poly = {}
    for lam, c in f._coeffs.items():
        for expo in _expand_monomial(lam, k):
            out[expo] = out.get(expo, 0) + c
    return out


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Multiply two polynomials given as exponent-tuple → coefficient maps."""
    out: Poly = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def from_polynomial(p: Poly, k: int, degree_bound: int | None = None) -> SymFunc:
    """Recover a SymFunc from a symmetric polynomial in k variables.

    Greedily peels the lexicographically leading monomial into an m_λ term
    and subtracts its full orbit; raises NotSymmetricError if a coefficient
    would go negative or the residual cannot reach zero.
    """
    work: Poly = {}
    for expo, c in p.items():
        if len(expo) != k:
            raise ValueError(f"exponent tuple {expo} does not have {k} entries")
        if c < 0:
            raise NotSymmetricError("negative coefficient in input polynomial")
        if c:
            work[expo] = c
    if degree_bound is None:
        degree_bound = max((sum(e) for e in work), default=0)
    out: dict[Partition, int] = {}
    while work:
        lead = max(work)
        c = work[lead]
        lam = Partition(e for e in lead if e)
        if lam.size > degree_bound:
            raise DegreeOverflowError(
                f"term m{lam} exceeds degree bound {degree_bound}"
            )
        for expo in _expand_monomial(lam, k):
            residual = work.get(expo, 0) - c
            if residual < 0:
                raise NotSymmetricError(
                    f"polynomial is not symmetric (short at {expo})"
                )
            if residual:
                work[expo] = residual
            else:
                work.pop(expo, None)
        out[lam] = out.get(lam, 0) + c
    return SymFunc(out, degree_bound)


# -- composition ------------------------------------------------------------------------


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """Composition f ∘ g: substitute the monomials of g for f's variables.

    g is expanded in degree_bound variables and its monomials, with
    multiplicity equal to their coefficients, become the alphabet at which
    f is evaluated.  Exact whenever deg f · deg g fits under the bound,
    which is enforced.
    """
    _check_bounds(f, g)
    bound = f.degree_bound
    if g.constant_term != 0:
        raise ConstantTermError("inner argument must have zero constant term")
    if f.degree() * g.degree() > bound:
        raise DegreeOverflowError(
            f"composition degree {f.degree()}·{g.degree()} exceeds bound {bound}"
        )
    alphabet: list[tuple[int, ...]] = []
    for expo, c in sorted(expand_in_vars(g, bound).items()):
        alphabet.extend([expo] * c)
    slots = len(alphabet)
    out: Poly = {}
    for lam, c in f._coeffs.items():
        for choice in _expand_monomial(lam, slots):
            combined = [0] * bound
            for power, mono in zip(choice, alphabet):
                if power:
                    for j, e in enumerate(mono):
                        combined[j] += power * e
            key = tuple(combined)
            out[key] = out.get(key, 0) + c
    return from_polynomial(out, bound, bound)


def _check_bounds(f: SymFunc, g: SymFunc) -> None:
    if f.degree_bound != g.degree_bound:
        raise ValueError(
            f"degree bounds differ: {f.degree_bound} vs {g.degree_bound}"
        )
