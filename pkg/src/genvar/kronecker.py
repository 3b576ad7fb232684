"""The three bases of the double-arrow (rank-2 affine) cluster algebra and
exact base changes between their imaginary layers.

All three families share the cluster monomials and differ in the layer
indexed by multiples of delta = (1,1):

    G  : powers z^n of the quasi-simple character z
    SZ : F_n(z), the trace-normalized family (F_n(t + 1/t) = t^n + t^-n)
    CZ : S_n(z), the quotient-normalized family

with the index-0 element of every layer normalized to 1. Base changes are
computed from integer recurrences and re-verified as exact Laurent
identities, so the frozen matrices in the comparison tests are checked
against two independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import affine, ccmap, mutation
from .errors import ConsistencyError, InputError
from .laurent import LaurentPoly
from .linalg import rank_fraction
from .quiver import DimVector, kronecker
from .repfq import DEFAULT_BUDGET, DEFAULT_PRIMES

KINDS = ("G", "SZ", "CZ")

_Z_CACHE: list = []


def z_character(pool=DEFAULT_PRIMES, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """The quasi-simple character z = (1 + u1^2 + u2^2) / (u1 u2),
    cross-checked against the module-character route."""
    if not _Z_CACHE:
        closed = LaurentPoly(2, {(1, -1): 1, (-1, -1): 1, (-1, 1): 1})
        q = kronecker()
        m = affine.quasi_simple_kronecker(q, 1)
        computed = ccmap.cc_of_module(m, pool=pool, budget=budget)
        if computed != closed:
            raise ConsistencyError(
                "quasi-simple character disagrees with its closed form")
        _Z_CACHE.append(closed)
    return _Z_CACHE[0]


def family_element(kind: str, n: int, pool=DEFAULT_PRIMES,
                   budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """n-th imaginary-layer element of a family (index 0 is 1)."""
    if kind not in KINDS:
        raise InputError("unknown family %r" % (kind,))
    if n < 0:
        raise InputError("layer index must be nonnegative")
    z = z_character(pool=pool, budget=budget)
    if n == 0:
        return LaurentPoly.one(2)
    if kind == "G":
        return z ** n
    coeffs = affine.chebyshev_f(n) if kind == "SZ" else affine.chebyshev_s(n)
    return affine.substitute(coeffs, z)


_EXPAND_CACHE: dict[int, tuple] = {}


def expand_in_F(n: int) -> list[int]:
    """Coefficients lambda with z^n = sum_i lambda_i * E_i where E_0 = 1
    and E_i = F_i(z); computed by the multiply-by-z recurrence and
    re-verified as an exact Laurent identity."""
    if n < 0:
        raise InputError("n >= 0 required")
    if n not in _EXPAND_CACHE:
        lam = [1]
        for _ in range(n):
            new = [0] * (len(lam) + 1)
            for i, c in enumerate(lam):
                if c == 0:
                    continue
                if i == 0:
                    new[1] += c
                elif i == 1:
                    new[0] += 2 * c
                    new[2] += c
                else:
                    new[i - 1] += c
                    new[i + 1] += c
            lam = new
        lam = lam[:n + 1]
        acc = LaurentPoly.zero(2)
        for i, c in enumerate(lam):
            if c:
                acc = acc + family_element("SZ", i).scale(c)
        if acc != family_element("G", n):
            raise ConsistencyError("F-expansion of z^%d fails to verify" % n)
        _EXPAND_CACHE[n] = tuple(lam)
    return list(_EXPAND_CACHE[n])


def expand_in_S(n: int) -> list[int]:
    """Coefficients mu with z^n = sum_i mu_i * E_i, E_0 = 1, E_i = S_i(z):
    mu_i = lambda_i - lambda_{i+2}."""
    lam = expand_in_F(n)
    mu = [lam[i] - (lam[i + 2] if i + 2 <= n else 0) for i in range(n + 1)]
    acc = LaurentPoly.zero(2)
    for i, c in enumerate(mu):
        if c:
            acc = acc + family_element("CZ", i).scale(c)
    if acc != family_element("G", n):
        raise ConsistencyError("S-expansion of z^%d fails to verify" % n)
    return mu


def _column(source: str, target: str, j: int) -> list[int]:
    """Expansion of source element j in the target layer (length j+1)."""
    if source == target:
        return [0] * j + [1]
    if source == "G" and target == "SZ":
        return expand_in_F(j)
    if source == "G" and target == "CZ":
        return expand_in_S(j)
    if source == "SZ" and target == "G":
        return [1] if j == 0 else affine.chebyshev_f(j)
    if source == "CZ" and target == "G":
        return affine.chebyshev_s(j)
    if source == "SZ" and target == "CZ":
        col = [0] * (j + 1)
        col[j] += 1
        if j >= 2:
            col[j - 2] -= 1
        return col
    if source == "CZ" and target == "SZ":
        return affine.s_as_f_sum(j)
    raise InputError("unknown family pair %r -> %r" % (source, target))


@dataclass(frozen=True)
class BaseChangeMatrix:
    source: str
    target: str
    size: int
    matrix: tuple   # rows; column j expands source_j over target elements
    inverse: tuple

    def to_json(self) -> dict:
        return {"source": self.source, "target": self.target,
                "size": self.size,
                "matrix": [list(r) for r in self.matrix],
                "inverse": [list(r) for r in self.inverse]}


def base_change(source: str, target: str, size: int) -> BaseChangeMatrix:
    """Integer base-change matrix between two imaginary layers, with its
    inverse; every column is re-verified as an exact Laurent identity and
    the two matrices are checked to be mutually inverse, unit upper
    triangular, and supported on the parity checkerboard."""
    for kind in (source, target):
        if kind not in KINDS:
            raise InputError("unknown family %r" % (kind,))
    if size < 1:
        raise InputError("size must be positive")
    mat = _square(source, target, size)
    inv = _square(target, source, size)
    _check_identity(mat, inv)
    _check_identity(inv, mat)
    for m in (mat, inv):
        for i in range(size):
            for j in range(size):
                if i == j and m[i][j] != 1:
                    raise ConsistencyError("base change is not unipotent")
                if i > j and m[i][j] != 0:
                    raise ConsistencyError("base change is not triangular")
                if (i - j) % 2 and m[i][j] != 0:
                    raise ConsistencyError("base change breaks parity")
    for j in range(size):
        acc = LaurentPoly.zero(2)
        for i in range(size):
            if mat[i][j]:
                acc = acc + family_element(target, i).scale(mat[i][j])
        if acc != family_element(source, j):
            raise ConsistencyError(
                "column %d of %s->%s fails the Laurent identity"
                % (j, source, target))
    return BaseChangeMatrix(source=source, target=target, size=size,
                            matrix=mat, inverse=inv)


def _square(source: str, target: str, size: int) -> tuple:
    cols = []
    for j in range(size):
        c = _column(source, target, j)
        cols.append(list(c[:size]) + [0] * (size - min(size, len(c))))
    return tuple(tuple(cols[j][i] for j in range(size)) for i in range(size))


def _check_identity(a, b):
    n = len(a)
    for i in range(n):
        for j in range(n):
            s = sum(a[i][k] * b[k][j] for k in range(n))
            if s != (1 if i == j else 0):
                raise ConsistencyError("base-change matrices are not inverse")


def positivity_report(mat) -> dict:
    """Unipotence/nonnegativity summary of an integer matrix."""
    n = len(mat)
    neg = [[i, j, mat[i][j]] for i in range(n) for j in range(n)
           if mat[i][j] < 0]
    unipotent = all(mat[i][i] == 1 for i in range(n)) and all(
        mat[i][j] == 0 for i in range(n) for j in range(n) if i > j)
    return {"unipotent": unipotent, "nonnegative": not neg,
            "negative_entries": neg}


@dataclass(frozen=True)
class BasisFamily:
    kind: str
    n_max: int
    monomial_bound: DimVector
    elements: tuple  # ((name, poly), ...) monomial layer then imaginary layer

    def to_json(self) -> dict:
        return {"kind": self.kind, "n_max": self.n_max,
                "monomial_bound": list(self.monomial_bound),
                "elements": [[name, p.to_json()] for name, p in self.elements]}


def build_basis(kind: str, n_max: int, monomial_bound=(2, 2), seed: int = 0,
                pool=DEFAULT_PRIMES, budget: int = DEFAULT_BUDGET) -> BasisFamily:
    """Finite window of one of the three families: all cluster monomials
    with denominator in the box plus the imaginary layer up to n_max."""
    if kind not in KINDS:
        raise InputError("unknown family %r" % (kind,))
    bound = tuple(int(x) for x in monomial_bound)
    if len(bound) != 2 or any(x < 0 for x in bound):
        raise InputError("monomial bound must be a nonnegative pair")
    if n_max < 0:
        raise InputError("n_max must be nonnegative")
    q = kronecker()
    table = mutation.enumerate_cluster_variables(q, max(bound) + 3)
    monos = mutation.cluster_monomials(table, q, bound)
    elements = []
    seen = set()
    for poly in sorted(monos, key=lambda p: (p.denominator_vector(), p.key())):
        name = "mono:%d,%d" % poly.denominator_vector()
        elements.append((name, poly))
        seen.add(poly.key())
    for n in range(1, n_max + 1):
        p = family_element(kind, n, pool=pool, budget=budget)
        if p.denominator_vector() != (n, n):
            raise ConsistencyError(
                "layer element %d has denominator %r" % (n, p.denominator_vector()))
        if p.key() in seen:
            raise ConsistencyError("layer element %d collides with a monomial" % n)
        seen.add(p.key())
        elements.append(("imag:%d" % n, p))
    if len(seen) != len(elements):
        raise ConsistencyError("family window has repeated elements")
    return BasisFamily(kind=kind, n_max=n_max, monomial_bound=bound,
                       elements=tuple(elements))


def independence_check(family: BasisFamily, extra=()) -> dict:
    """Exact linear-independence report over the rationals for the family
    window (plus optional extra polynomials as a negative control)."""
    polys = [p for _n, p in family.elements] + list(extra)
    support = sorted({m for p in polys for m in p.terms})
    rows = [[p.terms.get(m, 0) for m in support] for p in polys]
    r = rank_fraction(rows)
    return {"elements": len(polys), "rank": r,
            "independent": r == len(polys)}
