"""Seed mutation: clusters, cluster variables, cluster monomials.

A seed is a skew-symmetric exchange matrix plus a cluster of Laurent
polynomials written in the initial variables. The exchange step divides
exactly in the Laurent ring; an inexact division is an implementation
bug and raises ConsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import ConsistencyError, InputError
from .laurent import LaurentPoly
from .quiver import DimVector, Quiver


@dataclass(frozen=True)
class Seed:
    b: tuple[tuple[int, ...], ...]
    cluster: tuple[LaurentPoly, ...]

    def key(self) -> tuple:
        """Seeds are identified by the multiset of cluster polynomials."""
        return tuple(sorted(x.key() for x in self.cluster))


def initial_seed(q: Quiver) -> Seed:
    n = q.vertices
    b = [[0] * n for _ in range(n)]
    for s, t in q.arrows:
        b[s - 1][t - 1] += 1
        b[t - 1][s - 1] -= 1
    cluster = tuple(LaurentPoly.variable(n, i) for i in range(1, n + 1))
    return Seed(tuple(tuple(r) for r in b), cluster)


def mutate(seed: Seed, k: int) -> Seed:
    """Mutate at vertex k (1-based)."""
    n = len(seed.b)
    if not 1 <= k <= n:
        raise InputError("mutation vertex %d out of range" % k)
    kk = k - 1
    nv = seed.cluster[0].nvars
    m_plus = LaurentPoly.one(nv)
    m_minus = LaurentPoly.one(nv)
    for i in range(n):
        bik = seed.b[i][kk]
        if bik > 0:
            m_plus = m_plus * seed.cluster[i] ** bik
        elif bik < 0:
            m_minus = m_minus * seed.cluster[i] ** (-bik)
    new_var = (m_plus + m_minus).divide_exact(seed.cluster[kk])
    cluster = tuple(new_var if i == kk else seed.cluster[i] for i in range(n))
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                b[i][j] = -seed.b[i][j]
            else:
                b[i][j] = seed.b[i][j] + (abs(seed.b[i][kk]) * seed.b[kk][j]
                                          + seed.b[i][kk] * abs(seed.b[kk][j])) // 2
    for i in range(n):
        for j in range(n):
            if b[i][j] != -b[j][i]:
                raise ConsistencyError("mutated matrix lost skew-symmetry")
    return Seed(tuple(tuple(r) for r in b), cluster)


@dataclass
class ClusterVariableTable:
    quiver: Quiver
    entries: dict[DimVector, LaurentPoly] = field(default_factory=dict)
    provenance: dict[DimVector, tuple[int, ...]] = field(default_factory=dict)
    clusters: set[frozenset[DimVector]] = field(default_factory=set)

    def add_variable(self, x: LaurentPoly, word: tuple[int, ...]) -> None:
        den = x.denominator_vector()
        old = self.entries.get(den)
        if old is None:
            self.entries[den] = x
            self.provenance[den] = word
        elif old != x:
            raise ConsistencyError(
                "two distinct cluster variables share denominator vector %r" % (den,))

    def add_cluster(self, seed: Seed) -> None:
        self.clusters.add(frozenset(x.denominator_vector() for x in seed.cluster))

    def variables(self) -> list[LaurentPoly]:
        return [self.entries[d] for d in sorted(self.entries)]


def enumerate_cluster_variables(q: Quiver, depth: int, sweeps: int = 0) -> ClusterVariableTable:
    """BFS over seeds up to `depth` mutations, deduplicated by cluster
    multiset; terminates early when the exchange graph closes (finite
    type). `sweeps` additionally runs that many directed sink-sweep and
    source-sweep rounds to extend the table along the preprojective and
    preinjective chains without exploring the whole exchange graph.
    """
    if depth < 0:
        raise InputError("depth must be nonnegative")
    table = ClusterVariableTable(quiver=q)
    s0 = initial_seed(q)
    for x in s0.cluster:
        table.add_variable(x, ())
    table.add_cluster(s0)
    seen = {s0.key()}
    frontier = [(s0, ())]
    for _ in range(depth):
        nxt = []
        for seed, word in frontier:
            for k in range(1, q.vertices + 1):
                new = mutate(seed, k)
                key = new.key()
                if key in seen:
                    continue
                seen.add(key)
                new_word = word + (k,)
                table.add_variable(new.cluster[k - 1], new_word)
                table.add_cluster(new)
                nxt.append((new, new_word))
        if not nxt:
            break
        frontier = nxt
    for direction in ("sink", "source"):
        seed, word = s0, ()
        for _ in range(sweeps):
            for k in _boundary_vertices(seed, direction):
                seed = mutate(seed, k)
                word = word + (k,)
                table.add_variable(seed.cluster[k - 1], word)
                table.add_cluster(seed)
    return table


def _boundary_vertices(seed: Seed, direction: str) -> list[int]:
    """Current sinks (no arrow out, b[k][j] <= 0) or sources of the seed quiver."""
    n = len(seed.b)
    out = []
    for k in range(n):
        row = seed.b[k]
        if direction == "sink" and all(v <= 0 for v in row):
            out.append(k + 1)
        elif direction == "source" and all(v >= 0 for v in row):
            out.append(k + 1)
    return out


def cluster_monomials(table: ClusterVariableTable, q: Quiver, max_den,
                      min_den=None) -> list[LaurentPoly]:
    """All monomials in the variables of a single recorded cluster whose
    denominator vector lies in the box min_den <= den <= max_den
    (componentwise; min_den defaults to -max_den). Deduplicated, sorted.

    The box keeps the answer finite: initial variables have nonpositive
    denominator vectors, so an upper bound alone admits arbitrary powers.
    Exponents are capped at sum(|bounds|) + 2, generous for every cluster
    whose denominator vectors are linearly independent.
    """
    max_den = tuple(int(x) for x in max_den)
    if len(max_den) != q.vertices:
        raise InputError("max_den has wrong length")
    if min_den is None:
        min_den = tuple(-x for x in max_den)
    min_den = tuple(int(x) for x in min_den)
    if len(min_den) != q.vertices:
        raise InputError("min_den has wrong length")
    cap = sum(abs(a) + abs(b) for a, b in zip(min_den, max_den)) + 2
    found: dict[tuple, LaurentPoly] = {}
    one = LaurentPoly.one(q.vertices)
    if all(a <= 0 <= b for a, b in zip(min_den, max_den)):
        found[one.key()] = one
    for cluster in sorted(table.clusters, key=sorted):
        dens = sorted(cluster)
        polys = [table.entries[d] for d in dens]
        for exps in product(range(cap + 1), repeat=len(polys)):
            if not any(exps):
                continue
            den_sum = tuple(sum(m * d[i] for m, d in zip(exps, dens))
                            for i in range(q.vertices))
            if not all(a <= x <= b for a, x, b in zip(min_den, den_sum, max_den)):
                continue
            mono = one
            for m, x in zip(exps, polys):
                if m:
                    mono = mono * x ** m
            if mono.denominator_vector() != den_sum:
                raise ConsistencyError("cluster monomial denominator is not additive")
            found[mono.key()] = mono
    return [found[k] for k in sorted(found)]


def monomials_by_den(monomials: list[LaurentPoly]) -> dict[DimVector, LaurentPoly]:
    """Index monomials by denominator vector, requiring injectivity."""
    out: dict[DimVector, LaurentPoly] = {}
    for m in monomials:
        den = m.denominator_vector()
        if den in out and out[den] != m:
            raise ConsistencyError("two cluster monomials share denominator %r" % (den,))
        out[den] = m
    return out


def laurent_check(table: ClusterVariableTable) -> dict:
    """Summary of the table: every stored variable is an integer Laurent
    polynomial by construction; report sizes and coefficient positivity."""
    max_abs = 0
    max_terms = 0
    all_positive = True
    for x in table.entries.values():
        max_terms = max(max_terms, len(x.terms))
        for c in x.terms.values():
            max_abs = max(max_abs, abs(c))
            if c <= 0:
                all_positive = False
    return {"variables": len(table.entries),
            "clusters": len(table.clusters),
            "max_abs_coefficient": max_abs,
            "max_terms": max_terms,
            "all_coefficients_positive": all_positive}
