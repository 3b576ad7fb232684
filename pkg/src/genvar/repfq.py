"""Quiver representations over F_p or Q: Hom/Ext dimensions, sampling,
subrepresentation counting and Euler characteristics by interpolation.

The counting engine enumerates subspace tuples vertex-by-vertex in
topological order. The subspace at a vertex must contain the images of
the subspaces already chosen at arrow sources, which prunes hard; at
vertices with no outgoing arrows nothing downstream depends on the
choice, so those factors are summed in closed form (Gaussian binomials)
instead of enumerated. When the transposed representation is cheaper to
enumerate, the engine counts quotients there instead (duality).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import BudgetError, ConsistencyError, InputError
from .laurent import LaurentPoly  # noqa: F401  (re-exported convenience)
from .linalg import (gauss_binom, iter_subspaces, iter_superspaces, rank_fraction,
                     rank_mod_p, rref_mod_p)
from .quiver import DimVector, Quiver

DEFAULT_BUDGET = 10_000_000
DEFAULT_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    p: int  # prime field characteristic, or 0 for the rationals
    dim: DimVector
    matrices: tuple  # per arrow: rows (length dim[target]) of tuples (length dim[source])

    def __post_init__(self):
        q = self.quiver
        d = tuple(int(x) for x in self.dim)
        if len(d) != q.vertices or any(x < 0 for x in d):
            raise InputError("bad dimension vector %r" % (self.dim,))
        if self.p < 0 or self.p == 1:
            raise InputError("field characteristic must be 0 or a prime")
        if len(self.matrices) != len(q.arrows):
            raise InputError("expected %d arrow matrices" % len(q.arrows))
        mats = []
        for (s, t), m in zip(q.arrows, self.matrices):
            rows = tuple(tuple(int(x) % self.p if self.p else int(x) for x in row)
                         for row in m)
            if len(rows) != d[t - 1] or any(len(r) != d[s - 1] for r in rows):
                raise InputError("matrix shape mismatch on arrow (%d,%d)" % (s, t))
            mats.append(rows)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "matrices", tuple(mats))

    def key(self) -> tuple:
        return (self.quiver.vertices, self.quiver.arrows, self.p, self.dim, self.matrices)

    def total_dim(self) -> int:
        return sum(self.dim)

    def to_json(self) -> dict:
        return {"dim": list(self.dim),
                "matrices": [[list(r) for r in m] for m in self.matrices]}

    @classmethod
    def from_json(cls, q: Quiver, doc: dict, p: int = 0) -> "Representation":
        if not isinstance(doc, dict) or "dim" not in doc or "matrices" not in doc:
            raise InputError("representation document needs 'dim' and 'matrices'")
        return cls(q, p, tuple(doc["dim"]), tuple(tuple(tuple(r) for r in m)
                                                  for m in doc["matrices"]))


# ------------------------------------------------------------ constructors

def zero_rep(q: Quiver, p: int = 0) -> Representation:
    return Representation(q, p, (0,) * q.vertices, tuple(() for _ in q.arrows))


def simple_rep(q: Quiver, i: int, p: int = 0) -> Representation:
    d = [0] * q.vertices
    d[i - 1] = 1
    mats = []
    for s, t in q.arrows:
        mats.append(tuple(tuple(0 for _ in range(d[s - 1])) for _ in range(d[t - 1])))
    return Representation(q, p, tuple(d), tuple(mats))


def projective_rep(q: Quiver, i: int, p: int = 0) -> Representation:
    """Indecomposable projective at vertex i: basis = paths starting at i,
    arrows act by path concatenation."""
    paths: list[tuple] = [()]  # path = tuple of arrow indices, start fixed at i
    frontier = [((), i)]
    ends = {(): i}
    while frontier:
        path, v = frontier.pop()
        for idx, (s, t) in enumerate(q.arrows):
            if s == v:
                new = path + (idx,)
                paths.append(new)
                ends[new] = t
                frontier.append((new, t))
    by_vertex: dict[int, list[tuple]] = {v: [] for v in range(1, q.vertices + 1)}
    for path in sorted(paths):
        by_vertex[ends[path]].append(path)
    d = tuple(len(by_vertex[v]) for v in range(1, q.vertices + 1))
    mats = []
    for idx, (s, t) in enumerate(q.arrows):
        src = by_vertex[s]
        tgt = by_vertex[t]
        rows = [[0] * len(src) for _ in range(len(tgt))]
        for c, path in enumerate(src):
            rows[tgt.index(path + (idx,))][c] = 1
        mats.append(tuple(tuple(r) for r in rows))
    return Representation(q, p, d, tuple(mats))


def direct_sum(a: Representation, b: Representation) -> Representation:
    if a.quiver != b.quiver or a.p != b.p:
        raise InputError("direct sum needs matching quiver and field")
    d = tuple(x + y for x, y in zip(a.dim, b.dim))
    mats = []
    for (s, t), ma, mb in zip(a.quiver.arrows, a.matrices, b.matrices):
        rs, cs = a.dim[t - 1], a.dim[s - 1]
        rows = []
        for r in range(d[t - 1]):
            row = []
            for c in range(d[s - 1]):
                if r < rs and c < cs:
                    row.append(ma[r][c])
                elif r >= rs and c >= cs:
                    row.append(mb[r - rs][c - cs])
                else:
                    row.append(0)
            rows.append(tuple(row))
        mats.append(tuple(rows))
    return Representation(a.quiver, a.p, d, tuple(mats))


def dual_rep(m: Representation) -> Representation:
    """Linear dual over the opposite quiver; subreps become quotients."""
    qop = m.quiver.opposite()
    mats = []
    for mat, (s, t) in zip(m.matrices, m.quiver.arrows):
        rows = tuple(tuple(mat[r][c] for r in range(m.dim[t - 1]))
                     for c in range(m.dim[s - 1]))
        mats.append(rows)
    return Representation(qop, m.p, m.dim, tuple(mats))


def rep_mod(m: Representation, p: int) -> Representation:
    if m.p != 0:
        raise InputError("can only reduce an integer representation")
    return Representation(m.quiver, p, m.dim, m.matrices)


def sample_representation(q: Quiver, d, p: int, rng_seed: int) -> Representation:
    """Uniformly random arrow matrices over F_p, deterministic in rng_seed."""
    d = tuple(int(x) for x in d)
    rng = random.Random(rng_seed)
    mats = []
    for s, t in q.arrows:
        mats.append(tuple(tuple(rng.randrange(p) for _ in range(d[s - 1]))
                          for _ in range(d[t - 1])))
    return Representation(q, p, d, tuple(mats))


def sample_integer_rep(q: Quiver, d, rng: random.Random,
                       lo: int = -3, hi: int = 3) -> Representation:
    """Random integer representation with entries in [lo, hi], over Q."""
    d = tuple(int(x) for x in d)
    mats = []
    for s, t in q.arrows:
        mats.append(tuple(tuple(rng.randint(lo, hi) for _ in range(d[s - 1]))
                          for _ in range(d[t - 1])))
    return Representation(q, 0, d, tuple(mats))


# ------------------------------------------------------------- hom and ext

def hom_dim(m: Representation, n: Representation) -> int:
    """Dimension of the space of intertwiners m -> n."""
    if m.quiver != n.quiver:
        raise InputError("hom_dim needs a common quiver")
    if m.p != n.p:
        raise InputError("hom_dim needs a common field")
    offs = []
    total = 0
    for v in range(m.quiver.vertices):
        offs.append(total)
        total += n.dim[v] * m.dim[v]
    if total == 0:
        return 0
    rows = []
    for (s, t), ma, na in zip(m.quiver.arrows, m.matrices, n.matrices):
        ss, tt = s - 1, t - 1
        # phi_t * M_a - N_a * phi_s = 0, one equation per (r, c)
        for r in range(n.dim[tt]):
            for c in range(m.dim[ss]):
                row = [0] * total
                for k in range(m.dim[tt]):
                    row[offs[tt] + r * m.dim[tt] + k] += ma[k][c]
                for k in range(n.dim[ss]):
                    row[offs[ss] + k * m.dim[ss] + c] -= na[r][k]
                rows.append(row)
    if not rows:
        return total
    rank = rank_mod_p(rows, m.p) if m.p else rank_fraction(rows)
    return total - rank


def ext_dim(m: Representation, n: Representation) -> int:
    """dim Ext^1 = hom_dim - <dim m, dim n>; nonnegative for hereditary
    path algebras, so a negative value is a bug."""
    e = hom_dim(m, n) - m.quiver.euler_form(m.dim, n.dim)
    if e < 0:
        raise ConsistencyError("negative ext dimension computed")
    return e


# -------------------------------------------------------- subrep counting

_COUNT_CACHE: dict[tuple, dict[DimVector, int]] = {}


def count_all_subreps(m: Representation, budget: int = DEFAULT_BUDGET) -> dict[DimVector, int]:
    """Number of subrepresentations of every dimension vector at once."""
    if m.p == 0:
        raise InputError("subrep counting needs a finite field")
    key = m.key()
    hit = _COUNT_CACHE.get(key)
    if hit is not None:
        return hit
    direct_cost = _enum_cost(m)
    dual = dual_rep(m)
    if _enum_cost(dual) < direct_cost:
        dual_counts = _count_engine(dual, budget)
        counts = {tuple(a - b for a, b in zip(m.dim, e)): c
                  for e, c in dual_counts.items()}
    else:
        counts = _count_engine(m, budget)
    _COUNT_CACHE[key] = counts
    return counts


def count_subreps(m: Representation, e, budget: int = DEFAULT_BUDGET) -> int:
    """Number of subspace tuples of dimension e stable under all arrows."""
    e = tuple(int(x) for x in e)
    if len(e) != m.quiver.vertices or any(x < 0 or x > dv for x, dv in zip(e, m.dim)):
        raise InputError("e must satisfy 0 <= e <= dim")
    return count_all_subreps(m, budget).get(e, 0)


def _enum_cost(m: Representation) -> int:
    """Upper estimate of enumerated subspace tuples: product over vertices
    that have outgoing arrows of the total subspace counts."""
    cost = 1
    has_out = {s for s, _ in m.quiver.arrows}
    for v in range(1, m.quiver.vertices + 1):
        if v in has_out:
            cost *= sum(gauss_binom(m.dim[v - 1], k, m.p) for k in range(m.dim[v - 1] + 1))
    return cost


def _mat_vec(mat, vec, p):
    return tuple(sum(a * b for a, b in zip(row, vec)) % p for row in mat)


_INV_CACHE: dict[int, tuple] = {}


def _inv_table(p: int) -> tuple:
    """Lookup table of modular inverses: table[x] = x^-1 mod p."""
    tab = _INV_CACHE.get(p)
    if tab is None:
        tab = (0,) + tuple(pow(x, -1, p) for x in range(1, p))
        _INV_CACHE[p] = tab
    return tab


def _rank_accumulate(pivrows: list, pivcols: list, vec, p: int) -> int:
    """Reduce vec against the pivot rows; append if independent. Returns
    1 when the rank grew."""
    inv = _inv_table(p)
    v = list(vec)
    for row, c in zip(pivrows, pivcols):
        f = v[c]
        if f:
            v = [(a - f * b) % p for a, b in zip(v, row)]
    for c, x in enumerate(v):
        if x:
            s = inv[x]
            pivrows.append([(a * s) % p for a in v])
            pivcols.append(c)
            return 1
    return 0


def _count_engine(m: Representation, budget: int) -> dict[DimVector, int]:
    q = m.quiver
    p = m.p
    order = q.topological_order()
    has_out = {s for s, _ in q.arrows}
    if len(has_out) == 1 and next(iter(has_out)) not in {t for _, t in q.arrows}:
        return _count_engine_source(m, budget)
    enum_verts = [v for v in order if v in has_out]
    sink_verts = [v for v in order if v not in has_out]
    in_arrows_of = {v: [(i, s) for i, (s, t) in enumerate(q.arrows) if t == v]
                    for v in order}
    visits = 0
    hist: dict[tuple, int] = {}
    chosen: dict[int, list] = {}

    def forced(v: int):
        piv_rows: list = []
        piv_cols: list = []
        for ai, s in in_arrows_of[v]:
            mat = m.matrices[ai]
            for u in chosen[s]:
                _rank_accumulate(piv_rows, piv_cols, _mat_vec(mat, u, p), p)
        return piv_rows

    def dfs(idx: int, dims: tuple):
        nonlocal visits
        if idx == len(enum_verts):
            fs = []
            for w in sink_verts:
                fs.append(len(forced(w)))
            key = (dims, tuple(fs))
            hist[key] = hist.get(key, 0) + 1
            return
        v = enum_verts[idx]
        dv = m.dim[v - 1]
        f_rows = forced(v)
        f_rref, f_pivots = rref_mod_p(f_rows, p) if f_rows else ([], [])
        f = len(f_rref)
        for ev in range(f, dv + 1):
            for rows in iter_superspaces(f_rref, f_pivots, dv, ev, p):
                visits += 1
                if visits > budget:
                    raise BudgetError("subspace enumeration budget exceeded")
                chosen[v] = rows
                dfs(idx + 1, dims + (ev,))
        chosen.pop(v, None)

    dfs(0, ())
    return _hist_to_counts(m, enum_verts, sink_verts, hist)


def _hist_to_counts(m: Representation, enum_verts, sink_verts,
                    hist: dict) -> dict[DimVector, int]:
    """Expand a histogram keyed by (enumerated dims, forced sink dims) into
    per-dimension-vector counts: each sink contributes a Gaussian-binomial
    factor counting subspaces between the forced image and the full fibre."""
    q, p = m.quiver, m.p
    counts: dict[DimVector, int] = {}
    sink_ranges = [range(m.dim[w - 1] + 1) for w in sink_verts]
    for (dims, fs), mult in hist.items():
        for sink_dims in product(*sink_ranges):
            factor = mult
            for w, ew, fw in zip(sink_verts, sink_dims, fs):
                factor *= gauss_binom(m.dim[w - 1] - fw, ew - fw, p)
                if not factor:
                    break
            if not factor:
                continue
            e = [0] * q.vertices
            for v, ev in zip(enum_verts, dims):
                e[v - 1] = ev
            for w, ew in zip(sink_verts, sink_dims):
                e[w - 1] = ew
            e = tuple(e)
            counts[e] = counts.get(e, 0) + factor
    return counts


def _canonical_lines(n: int, p: int):
    """Canonical representatives of the lines of F_p^n: first nonzero
    coordinate equal to 1.  Every row of a reduced echelon basis is one."""
    rng = range(p)
    for lead in range(n):
        head = (0,) * lead + (1,)
        for tail in product(rng, repeat=n - lead - 1):
            yield head + tail


def _count_engine_source(m: Representation, budget: int) -> dict[DimVector, int]:
    """Fast path when one vertex carries every arrow tail and receives no
    arrow: enumerate subspaces of its fibre row by row in reduced echelon
    form.  The sink-image ranks are merged incrementally from per-line
    blocks precomputed once, so siblings in the enumeration tree share all
    rank work above the deepest row."""
    q, p = m.quiver, m.p
    v = next(iter({s for s, _ in q.arrows}))
    dv = m.dim[v - 1]
    sink_verts = [w for w in range(1, q.vertices + 1) if w != v]
    mats_by_sink = [[m.matrices[ai] for ai, (s, t) in enumerate(q.arrows) if t == w]
                    for w in sink_verts]
    inv = _inv_table(p)

    def reduce_into(rows: list, cols: list, vec) -> None:
        u = list(vec)
        for row, c in zip(rows, cols):
            f = u[c]
            if f:
                u = [(a - f * b) % p for a, b in zip(u, row)]
        for c, x in enumerate(u):
            if x:
                s = inv[x]
                rows.append(tuple((a * s) % p for a in u))
                cols.append(c)
                return

    line_blocks: dict[tuple, tuple] = {}
    for line in _canonical_lines(dv, p):
        per = []
        for mats in mats_by_sink:
            rows: list = []
            cols: list = []
            for mat in mats:
                reduce_into(rows, cols, _mat_vec(mat, line, p))
            per.append((tuple(rows), tuple(cols)))
        line_blocks[line] = tuple(per)

    def merge(state, block):
        brows, _ = block
        if not brows:
            return state
        rows = list(state[0])
        cols = list(state[1])
        for vec in brows:
            u = list(vec)
            for row, c in zip(rows, cols):
                f = u[c]
                if f:
                    u = [(a - f * b) % p for a, b in zip(u, row)]
            for c, x in enumerate(u):
                if x:
                    s = inv[x]
                    rows.append(tuple((a * s) % p for a in u))
                    cols.append(c)
                    break
        return tuple(rows), tuple(cols)

    hist: dict[tuple, int] = {((0,), tuple(0 for _ in sink_verts)): 1}
    visits = 1
    empty_state = tuple(((), ()) for _ in sink_verts)
    rng = range(p)

    for k in range(1, dv + 1):
        for pivots in combinations(range(dv), k):
            pivset = set(pivots)
            free_cols = [[j for j in range(c + 1, dv) if j not in pivset]
                         for c in pivots]

            def walk(i: int, states) -> None:
                nonlocal visits
                base = [0] * dv
                base[pivots[i]] = 1
                fc = free_cols[i]
                last = i == k - 1
                for vals in product(rng, repeat=len(fc)):
                    for j, val in zip(fc, vals):
                        base[j] = val
                    blocks = line_blocks[tuple(base)]
                    new_states = tuple(merge(st, bl)
                                       for st, bl in zip(states, blocks))
                    if last:
                        visits += 1
                        if visits > budget:
                            raise BudgetError("subspace enumeration budget exceeded")
                        key = ((k,), tuple(len(st[0]) for st in new_states))
                        hist[key] = hist.get(key, 0) + 1
                    else:
                        walk(i + 1, new_states)

            walk(0, empty_state)

    return _hist_to_counts(m, [v], sink_verts, hist)


# --------------------------------------------- Euler characteristic by chi

def good_primes(m_int: Representation, pool, count: int,
                guards: tuple = ()) -> list[int]:
    """First `count` primes from the pool whose reduction preserves the
    rational self-Hom dimension of m_int and every Hom dimension against
    the guard representations; BudgetError when the pool is too small.

    The guard comparison matters for non-rigid modules: a prime can keep
    End(m) intact while sliding a summand's isomorphism class into a
    special position mod p, which changes subrepresentation counts and
    would poison the interpolation."""
    target = hom_dim(m_int, m_int)
    guard_targets = [(g, hom_dim(m_int, g), hom_dim(g, m_int)) for g in guards]
    good = []
    for p in pool:
        mp = rep_mod(m_int, p)
        if hom_dim(mp, mp) != target:
            continue
        ok = True
        for g, to_g, from_g in guard_targets:
            gp = rep_mod(g, p)
            if hom_dim(mp, gp) != to_g or hom_dim(gp, mp) != from_g:
                ok = False
                break
        if not ok:
            continue
        good.append(p)
        if len(good) == count:
            return good
    raise BudgetError("prime pool has only %d usable primes, need %d"
                      % (len(good), count))


def _lagrange_coeffs(points: list[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (ascending degree) of the interpolating polynomial."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def counting_polynomial(m_int: Representation, e, pool=DEFAULT_PRIMES,
                        budget: int = DEFAULT_BUDGET,
                        guards: tuple = ()) -> list[int]:
    """Integer coefficients of the polynomial counting e-dimensional
    subrepresentations of m_int over F_q, fitted through D+1 primes and
    verified on every further computed prime."""
    e = tuple(int(x) for x in e)
    d = m_int.dim
    if any(x < 0 or x > dv for x, dv in zip(e, d)):
        raise InputError("e must satisfy 0 <= e <= dim")
    degree = sum(x * (dv - x) for x, dv in zip(e, d))
    primes = good_primes(m_int, pool, degree + 2, guards)
    pts = [(p, count_all_subreps(rep_mod(m_int, p), budget).get(e, 0)) for p in primes]
    coeffs = _lagrange_coeffs(pts[:degree + 1])
    if any(c.denominator != 1 for c in coeffs):
        raise ConsistencyError("interpolated counting polynomial is not integral")
    ints = [int(c) for c in coeffs]
    for p, cnt in pts[degree + 1:]:
        if _poly_eval(ints, p) != cnt:
            raise ConsistencyError("counting polynomial fails the extra-prime check")
    return ints


def _poly_eval(coeffs: list[int], x: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * x + c
    return out


def euler_char_grassmannian(q: Quiver, m_int: Representation, e,
                            pool=DEFAULT_PRIMES, budget: int = DEFAULT_BUDGET) -> int:
    """chi of the submodule grassmannian: counting polynomial at q = 1."""
    if m_int.quiver != q:
        raise InputError("representation does not live on the given quiver")
    if m_int.p != 0:
        raise InputError("need an integer-matrix representation")
    return _poly_eval(counting_polynomial(m_int, e, pool, budget), 1)


def chi_all(m_int: Representation, pool=DEFAULT_PRIMES,
            budget: int = DEFAULT_BUDGET,
            guards: tuple = ()) -> dict[DimVector, int]:
    """chi(Gr_e) for every 0 <= e <= dim at once, sharing prime sweeps."""
    d = m_int.dim
    max_degree = max((sum(x * (dv - x) for x, dv in zip(e, d))
                      for e in product(*[range(x + 1) for x in d])), default=0)
    primes = good_primes(m_int, pool, max_degree + 2, guards)
    per_prime = {p: count_all_subreps(rep_mod(m_int, p), budget) for p in primes}
    out: dict[DimVector, int] = {}
    for e in product(*[range(x + 1) for x in d]):
        degree = sum(x * (dv - x) for x, dv in zip(e, d))
        pts = [(p, per_prime[p].get(e, 0)) for p in primes]
        coeffs = _lagrange_coeffs(pts[:degree + 1])
        if any(c.denominator != 1 for c in coeffs):
            raise ConsistencyError("interpolated counting polynomial is not integral")
        ints = [int(c) for c in coeffs]
        for p, cnt in pts[degree + 1:]:
            if _poly_eval(ints, p) != cnt:
                raise ConsistencyError("counting polynomial fails the extra-prime check")
        out[e] = _poly_eval(ints, 1)
    return out
