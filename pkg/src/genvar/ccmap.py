"""Cluster-character evaluation: Laurent expansions of modules and of
generic objects with a given dimension vector.

The character of a module M is

    X_M = sum_e chi(Gr_e(M)) * prod_i u_i^( -<e, a_i> - <a_i, dim M - e> )

with a_i the i-th unit vector and <,> the homological Euler form; shifted
projectives contribute plain variables. Generic values are computed from
certified representatives: the canonical decomposition prescribes the
expected endomorphism dimension, every sample must hit it exactly, and
non-rigid vectors additionally require three independently accepted
samples to agree. den(X_d) = d is asserted on every result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import candecomp, rng
from .errors import BudgetError, ConsistencyError, InputError
from .laurent import LaurentPoly
from .quiver import DimVector, Quiver, negative_part, positive_part
from .repfq import (DEFAULT_BUDGET, DEFAULT_PRIMES, Representation, chi_all,
                    ext_dim, hom_dim, sample_integer_rep)

GENERIC_RETRIES = 12


@dataclass(frozen=True)
class DecoratedRep:
    """A module together with multiplicities of shifted projectives."""
    module: Representation
    shifts: DimVector

    def __post_init__(self):
        if self.module.p != 0:
            raise InputError("decorated objects use integer (p=0) modules")
        if len(self.shifts) != self.module.quiver.vertices:
            raise InputError("shift vector length mismatch")
        if any(s < 0 for s in self.shifts):
            raise InputError("shift multiplicities must be nonnegative")

    def dimension_vector(self) -> DimVector:
        return tuple(m - s for m, s in zip(self.module.dim, self.shifts))


def cc_of_module(m: Representation, pool=DEFAULT_PRIMES,
                 budget: int = DEFAULT_BUDGET,
                 guards: tuple = ()) -> LaurentPoly:
    """Laurent expansion of the character of a module over the integers.

    `guards` are passed through to the prime filter: reductions must
    preserve Hom against them, keeping subrepresentation counts on the
    polynomial branch the rational module certifies."""
    q = m.quiver
    n = q.vertices
    if m.p != 0:
        raise InputError("character evaluation needs an integer module")
    if not any(m.dim):
        return LaurentPoly.one(n)
    chi = chi_all(m, pool=pool, budget=budget, guards=guards)
    d = m.dim
    acc: dict[tuple, int] = {}
    for e, c in chi.items():
        if c == 0:
            continue
        rest = tuple(a - b for a, b in zip(d, e))
        exp = tuple(-q.euler_form(e, _unit(n, i)) - q.euler_form(_unit(n, i), rest)
                    for i in range(n))
        acc[exp] = acc.get(exp, 0) + c
    return LaurentPoly(n, acc)


def _unit(n: int, i: int) -> DimVector:
    return tuple(1 if j == i else 0 for j in range(n))


def cc_of_object(obj: DecoratedRep, pool=DEFAULT_PRIMES,
                 budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """Character of a decorated object: shifted projectives multiply in
    as plain variables."""
    q = obj.module.quiver
    x = cc_of_module(obj.module, pool=pool, budget=budget)
    shift = LaurentPoly.monomial(q.vertices, tuple(obj.shifts), 1)
    return x * shift


@dataclass(frozen=True)
class GenericValue:
    vector: DimVector
    poly: LaurentPoly
    rigid: bool
    summands: tuple
    predicted_hom: int
    samples: tuple  # accepted integer representatives (dim, matrices)

    def to_json(self) -> dict:
        return {"vector": list(self.vector),
                "poly": self.poly.to_json(),
                "rigid": self.rigid,
                "summands": [{"vector": list(e), "multiplicity": m, "kind": t}
                             for e, m, t in self.summands],
                "predicted_hom": self.predicted_hom,
                "samples": [{"dim": list(d),
                             "matrices": [[list(r) for r in mat] for mat in mats]}
                            for d, mats in self.samples]}


_GENERIC_CACHE: dict[tuple, GenericValue] = {}


def generic_variable(q: Quiver, d, seed: int = 0, pool=DEFAULT_PRIMES,
                     budget: int = DEFAULT_BUDGET,
                     retries: int = GENERIC_RETRIES) -> GenericValue:
    """Character of the generic decorated object with dimension vector d.

    Negative coordinates contribute shifted projectives (plain variable
    factors); the positive part is evaluated on a certified generic
    module. The denominator vector of the result must equal d exactly.
    """
    d = tuple(int(x) for x in d)
    if len(d) != q.vertices:
        raise InputError("dimension vector length mismatch")
    key = (q.vertices, q.arrows, d, int(seed), tuple(pool))
    if key in _GENERIC_CACHE:
        return _GENERIC_CACHE[key]
    n = q.vertices
    dp, dn = positive_part(d), negative_part(d)
    shift = LaurentPoly.monomial(n, dn, 1)
    if not any(dp):
        out = GenericValue(vector=d, poly=shift, rigid=True, summands=(),
                           predicted_hom=0, samples=())
        _GENERIC_CACHE[key] = out
        return out

    dec = candecomp.canonical_decomposition(q, dp, method="auto", seed=seed)
    instances = dec.expanded()
    tags = [t for _e, mult, t in dec.summands for _ in range(mult)]
    predicted = len(instances) + sum(
        max(q.euler_form(a, b), 0)
        for i, a in enumerate(instances) for j, b in enumerate(instances) if i != j)
    rigid_shape = all(t == "real_schur" for _e, _m, t in dec.summands)
    guard_dims = [] if rigid_shape else candecomp.exceptional_regular_dims(q)
    guards = [rigid_integer_rep(q, e, seed=rng.derive(seed, "guard", e))
              for e in guard_dims]

    accepted: list[Representation] = []
    values: list[LaurentPoly] = []
    need = 1 if rigid_shape else 3
    for attempt in range(retries):
        parts = _sample_parts(q, instances, seed, attempt)
        m = _direct_sum_all(q, parts)
        if hom_dim(m, m) != predicted:
            continue
        if rigid_shape:
            if ext_dim(m, m) != 0:
                continue
        else:
            # Guards certify that the non-rigid summands avoid the
            # exceptional tubes; rigid summands may legitimately share a
            # dimension vector with a guard, so they are excluded here.
            imag = _direct_sum_all(
                q, [part for part, t in zip(parts, tags) if t != "real_schur"])
            if any(hom_dim(imag, g) != 0 or hom_dim(g, imag) != 0
                   for g in guards):
                continue
        accepted.append(m)
        values.append(cc_of_module(m, pool=pool, budget=budget,
                                   guards=tuple(guards)))
        if len(accepted) >= need:
            break
    if len(accepted) < need:
        raise BudgetError(
            "no certified generic representative of %r within %d attempts"
            % (dp, retries))
    if any(v != values[0] for v in values[1:]):
        raise ConsistencyError(
            "accepted samples of %r disagree on the character" % (dp,))

    poly = values[0] * shift
    if poly.denominator_vector() != d:
        raise ConsistencyError(
            "denominator vector %r of the generic character differs from %r"
            % (poly.denominator_vector(), d))
    out = GenericValue(vector=d, poly=poly, rigid=rigid_shape,
                       summands=dec.summands, predicted_hom=predicted,
                       samples=tuple((m.dim, m.matrices) for m in accepted))
    _GENERIC_CACHE[key] = out
    return out


def _sample_parts(q: Quiver, instances, seed: int,
                  attempt: int) -> list[Representation]:
    """Independently sampled integer representative per summand instance.
    The entry range widens with the attempt number so that repeated
    certificate failures escape parameter collisions."""
    bound = 3 + attempt
    return [sample_integer_rep(q, e,
                               rng.make_rng(seed, "generic", tuple(e), attempt, i),
                               lo=-bound, hi=bound)
            for i, e in enumerate(instances)]


def _direct_sum_all(q: Quiver, parts) -> Representation:
    from .repfq import direct_sum, zero_rep
    total = zero_rep(q, 0)
    for part in parts:
        total = direct_sum(total, part)
    return total


def _sample_generic(q: Quiver, instances, seed: int, attempt: int) -> Representation:
    """Direct sum of independently sampled integer summand representatives."""
    return _direct_sum_all(q, _sample_parts(q, instances, seed, attempt))


def rigid_integer_rep(q: Quiver, e, seed: int = 0,
                      retries: int = GENERIC_RETRIES) -> Representation:
    """An integer representation of a real Schur root with End = Q and
    Ext = 0, found by small-entry sampling."""
    e = tuple(int(x) for x in e)
    if q.q_norm(e) != 1:
        raise InputError("rigid representatives need a real root")
    for attempt in range(retries):
        r = rng.make_rng(seed, "rigid", e, attempt)
        m = sample_integer_rep(q, e, r)
        if hom_dim(m, m) == 1 and ext_dim(m, m) == 0:
            return m
    raise BudgetError("no rigid representative of %r within %d attempts"
                      % (e, retries))


def express_in_basis(x: LaurentPoly, basis: list[LaurentPoly]):
    """Solve x = sum_j c_j * basis_j exactly over the rationals.

    Returns the coefficient list, or None if the system is inconsistent
    or underdetermined (dependent basis)."""
    if not basis:
        return [] if x.is_zero() else None
    n = x.nvars
    support = set(x.terms)
    for b in basis:
        if b.nvars != n:
            raise InputError("mixed variable counts in basis expansion")
        support.update(b.terms)
    rows = sorted(support)
    a_rows = [[Fraction(b.terms.get(m, 0)) for b in basis] for m in rows]
    b_col = [Fraction(x.terms.get(m, 0)) for m in rows]
    # eliminate; track pivots to detect free columns
    ncols = len(basis)
    aug = [row + [v] for row, v in zip(a_rows, b_col)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            return None  # dependent/unused column: expansion not unique
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if len(pivots) < ncols:
        return None
    for i in range(r, len(aug)):
        if aug[i][ncols] != 0:
            return None  # inconsistent
    coeffs = [aug[i][ncols] for i in range(ncols)]
    # exactness re-check in the Laurent ring with cleared denominators
    from math import lcm
    m = lcm(*[c.denominator for c in coeffs]) if coeffs else 1
    acc = LaurentPoly.zero(n)
    for c, b in zip(coeffs, basis):
        acc = acc + b.scale(int(c * m))
    if acc != x.scale(m):
        return None
    return coeffs
