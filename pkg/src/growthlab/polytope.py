"""Exact rational polytope algebra.

Polytopes carry both a vertex and a facet description, kept consistent by
construction: the convex hull is computed incrementally in exact arithmetic
and then certified by regenerating the vertices from the facet intersection.
Lower-dimensional polytopes (slices, faces) are stored in ambient
coordinates together with an affine-span basis and a full-dimensional
polytope in span coordinates.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from . import lp
from .errors import (
    DegenerateInput,
    DimensionMismatch,
    GrowthLabError,
    NotDelzantVertex,
    NotLatticePolytope,
    NotNormalized,
)
from .rationals import (
    det,
    dot,
    inverse,
    is_integral,
    mat_vec,
    primitive_integer,
    rank,
    rat,
    rat_str,
    solve,
    solve_general,
    vec,
    vsub,
)


@dataclass(frozen=True)
class HalfSpace:
    """The set {x : <normal, x> <= offset}, normal a primitive integer vector."""

    normal: tuple
    offset: Fraction

    def value(self, x):
        return dot(self.normal, x)

    def contains(self, x, strict=False):
        v = self.value(x)
        return v < self.offset if strict else v <= self.offset

    def to_json_dict(self):
        return {"normal": [rat_str(a) for a in self.normal],
                "offset": rat_str(self.offset)}


@dataclass(frozen=True)
class UnimodularMap:
    """Affine map p -> A (p - base) with A in GL(n, Z)."""

    matrix: tuple
    base: tuple

    def apply(self, p):
        return mat_vec(self.matrix, vsub(vec(p), self.base))

    def inverse_apply(self, q):
        inv = inverse(self.matrix)
        return tuple(x + b for x, b in zip(mat_vec(inv, vec(q)), self.base))

    def to_json_dict(self):
        return {"matrix": [[rat_str(x) for x in row] for row in self.matrix],
                "base": [rat_str(x) for x in self.base]}


class _CertificationFailure(GrowthLabError):
    """Internal: incremental hull output failed its own H/V consistency check."""


class Polytope:
    """Immutable exact polytope; do not mutate attributes after construction."""

    def __init__(self, ambient_dim, vertices, facets, dim, span_point=None,
                 span_basis=None, span_poly=None):
        self.ambient_dim = ambient_dim
        self.vertices = tuple(sorted(vertices))
        self.facets = facets
        self.dim = dim
        self._span_point = span_point
        self._span_basis = span_basis
        self._span_poly = span_poly

    # -- constructors --------------------------------------------------

    @classmethod
    def empty(cls, ambient_dim):
        return cls(ambient_dim, (), (), -1)

    @classmethod
    def from_points(cls, points, ambient_dim=None):
        """Convex hull of arbitrary points; lower-dimensional results allowed."""
        pts = [vec(p) for p in points]
        if ambient_dim is None:
            if not pts:
                raise DegenerateInput("ambient dimension unknown for empty input")
            ambient_dim = len(pts[0])
        if any(len(p) != ambient_dim for p in pts):
            raise DimensionMismatch("points of mixed dimension")
        if not pts:
            return cls.empty(ambient_dim)
        pts = sorted(set(pts))
        base = pts[0]
        basis = _affine_basis(pts, base)
        d = len(basis)
        if d == 0:
            return cls(ambient_dim, (base,), (), 0)
        if d == ambient_dim:
            facets, verts = _hull_full_dim(pts, ambient_dim)
            return cls(ambient_dim, verts, facets, ambient_dim)
        # project to span coordinates and hull there
        coords = []
        cols = list(zip(*basis))  # n x d system
        for p in pts:
            s = solve_general(cols, vsub(p, base))
            if s is None:
                raise GrowthLabError("span projection failed")
            coords.append(s)
        span_poly = cls.from_points(coords, d)
        verts = tuple(_from_span(base, basis, s) for s in span_poly.vertices)
        return cls(ambient_dim, verts, (), d, span_point=base,
                   span_basis=tuple(basis), span_poly=span_poly)

    # -- basic queries --------------------------------------------------

    @property
    def is_empty(self):
        return self.dim < 0

    @property
    def is_point(self):
        return self.dim == 0

    @property
    def is_full_dim(self):
        return self.dim == self.ambient_dim and self.dim >= 0

    def contains(self, x):
        x = vec(x)
        if len(x) != self.ambient_dim:
            raise DimensionMismatch("point/polytope dimension mismatch")
        if self.is_empty:
            return False
        if self.is_point:
            return x == self.vertices[0]
        if self.is_full_dim:
            return all(f.contains(x) for f in self.facets)
        cols = list(zip(*self._span_basis))
        s = solve_general(cols, vsub(x, self._span_point))
        if s is None:
            return False
        if _from_span(self._span_point, self._span_basis, s) != x:
            return False
        return self._span_poly.contains(s)

    def active_facets(self, v):
        v = vec(v)
        return tuple(f for f in self.facets if f.value(v) == f.offset)

    def edges(self):
        """Vertex index pairs forming 1-faces."""
        if not self.is_full_dim:
            if self.dim == 1:
                return [(0, 1)]
            if self.dim <= 0:
                return []
            amb = [_from_span(self._span_point, self._span_basis, s)
                   for s in self._span_poly.vertices]
            index = {v: i for i, v in enumerate(self.vertices)}
            return [(index[amb[i]], index[amb[j]])
                    for i, j in self._span_poly.edges()]
        n = self.ambient_dim
        active = [frozenset(i for i, f in enumerate(self.facets)
                            if f.value(v) == f.offset) for v in self.vertices]
        out = []
        for i, j in combinations(range(len(self.vertices)), 2):
            common = active[i] & active[j]
            if len(common) < n - 1:
                continue
            normals = [self.facets[k].normal for k in common]
            if rank(normals) == n - 1:
                out.append((i, j))
        return out

    def neighbors(self, v):
        v = vec(v)
        idx = self.vertices.index(v)
        return [self.vertices[j if i == idx else i]
                for i, j in self.edges() if idx in (i, j)]

    def scaled(self, k):
        k = rat(k)
        return Polytope.from_points([tuple(k * x for x in v) for v in self.vertices],
                                    self.ambient_dim)

    def translated(self, t):
        t = vec(t)
        return Polytope.from_points([tuple(x + y for x, y in zip(v, t))
                                     for v in self.vertices], self.ambient_dim)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self, with_facets=True):
        d = {"dim": self.ambient_dim,
             "vertices": [[rat_str(x) for x in v] for v in self.vertices]}
        if with_facets and self.is_full_dim:
            d["facets"] = [f.to_json_dict() for f in self.facets]
        return d

    @classmethod
    def from_json_dict(cls, d):
        pts = [[rat(x) for x in v] for v in d["vertices"]]
        return cls.from_points(pts, d["dim"])

    def __eq__(self, other):
        return (isinstance(other, Polytope)
                and self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        if self.is_empty:
            return f"Polytope(empty, ambient={self.ambient_dim})"
        return (f"Polytope(dim={self.dim}, ambient={self.ambient_dim}, "
                f"vertices={len(self.vertices)})")


# -- hull machinery -------------------------------------------------------


def _from_span(base, basis, s):
    out = list(base)
    for coef, b in zip(s, basis):
        for i in range(len(out)):
            out[i] += coef * b[i]
    return tuple(out)


def _affine_basis(pts, base):
    basis = []
    for p in pts[1:]:
        d = vsub(p, base)
        if rank(basis + [d]) > len(basis):
            basis.append(d)
            if len(basis) == len(base):
                break
    return basis


def _midpoint_sieve(pts):
    """Drop points that are midpoints of two others; cheap and exact."""
    pset = set(pts)
    keep = []
    for q in pts:
        mid = False
        for a in pts:
            if a == q:
                continue
            b = tuple(2 * x - y for x, y in zip(q, a))
            if b != q and b in pset:
                mid = True
                break
        if not mid:
            keep.append(q)
    return keep


def _hyperplane(points):
    """Exact hyperplane through n affinely independent points in R^n."""
    p0 = points[0]
    diffs = [vsub(p, p0) for p in points[1:]]
    n = len(p0)
    rows = [list(d) for d in diffs]
    # row reduce to find the one-dimensional null space
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != n - 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    a = [Fraction(0)] * n
    a[free] = Fraction(1)
    for i, c in enumerate(pivots):
        a[c] = -rows[i][free]
    a = tuple(a)
    return a, dot(a, p0)


def _canonical_halfspace(a, b):
    scaled = primitive_integer(tuple(a) + (rat(b),))
    return HalfSpace(scaled[:-1], Fraction(scaled[-1]))


def _incremental_hull(pts, n):
    """Simplicial facet list [(ids frozenset, a, b)] of the hull of pts."""
    base = pts[0]
    simplex = [0]
    for i in range(1, len(pts)):
        cur = [vsub(pts[j], base) for j in simplex[1:]]
        if rank(cur + [vsub(pts[i], base)]) > len(cur):
            simplex.append(i)
            if len(simplex) == n + 1:
                break
    ref = tuple(sum(pts[i][c] for i in simplex) / (n + 1) for c in range(n))

    facets = []
    for drop in range(n + 1):
        ids = [simplex[i] for i in range(n + 1) if i != drop]
        hp = _hyperplane([pts[i] for i in ids])
        if hp is None:
            raise _CertificationFailure("degenerate initial simplex facet")
        a, b = hp
        side = dot(a, ref)
        if side == b:
            raise _CertificationFailure("reference point on facet plane")
        if side > b:
            a, b = tuple(-x for x in a), -b
        facets.append((frozenset(ids), a, b))

    in_simplex = set(simplex)
    for idx in range(len(pts)):
        if idx in in_simplex:
            continue
        p = pts[idx]
        visible = [f for f in facets if dot(f[1], p) > f[2]]
        if not visible:
            continue
        ridge_count = {}
        for ids, _, _ in visible:
            for r in combinations(sorted(ids), n - 1):
                ridge_count[r] = ridge_count.get(r, 0) + 1
        horizon = [r for r, cnt in ridge_count.items() if cnt == 1]
        visible_set = {f[0] for f in visible}
        facets = [f for f in facets if f[0] not in visible_set]
        for ridge in horizon:
            ids = frozenset(ridge) | {idx}
            hp = _hyperplane([pts[i] for i in ids])
            if hp is None:
                raise _CertificationFailure("degenerate horizon facet")
            a, b = hp
            side = dot(a, ref)
            if side == b:
                raise _CertificationFailure("reference point on new facet plane")
            if side > b:
                a, b = tuple(-x for x in a), -b
            facets.append((ids, a, b))
    return facets


def _brute_force_facets(pts, n):
    seen = set()
    out = []
    for ids in combinations(range(len(pts)), n):
        hp = _hyperplane([pts[i] for i in ids])
        if hp is None:
            continue
        a, b = hp
        vals = [dot(a, p) for p in pts]
        if all(v <= b for v in vals):
            hs = _canonical_halfspace(a, b)
        elif all(v >= b for v in vals):
            hs = _canonical_halfspace(tuple(-x for x in a), -b)
        else:
            continue
        if hs not in seen:
            seen.add(hs)
            out.append(hs)
    return out


def _certify(pts, halfspaces, n):
    """Regenerate vertices from facets; raise unless H and V agree exactly."""
    for p in pts:
        for hs in halfspaces:
            if hs.value(p) > hs.offset:
                raise _CertificationFailure("input point outside facet intersection")
    # bounded iff the outward normals positively span R^n
    normals = [hs.normal for hs in halfspaces]
    coords = list(zip(*normals))
    for j in range(n):
        for sign in (1, -1):
            target = [Fraction(sign if i == j else 0) for i in range(n)]
            status, _, _ = lp.solve_lp(coords, target, [Fraction(0)] * len(normals))
            if status != lp.OPTIMAL:
                raise _CertificationFailure("facet intersection unbounded")
    pset = set(pts)
    verts = set()
    for chosen in combinations(range(len(halfspaces)), n):
        A = [halfspaces[i].normal for i in chosen]
        b = [halfspaces[i].offset for i in chosen]
        x = solve(A, b)
        if x is None or x in verts:
            continue
        if all(hs.value(x) <= hs.offset for hs in halfspaces):
            if x not in pset:
                raise _CertificationFailure("facet intersection has a foreign vertex")
            verts.add(x)
    if not verts:
        raise _CertificationFailure("no vertices regenerated")
    return tuple(sorted(verts))


def _dedupe_halfspaces(facets):
    seen = set()
    out = []
    for _, a, b in facets:
        hs = _canonical_halfspace(a, b)
        if hs not in seen:
            seen.add(hs)
            out.append(hs)
    return out


def _hull_full_dim(pts, n):
    pts = _midpoint_sieve(pts)
    if n == 1:
        lo = min(p[0] for p in pts)
        hi = max(p[0] for p in pts)
        if lo == hi:
            raise DegenerateInput("1-d hull of a single point")
        facets = (HalfSpace((1,), Fraction(hi)), HalfSpace((-1,), Fraction(-lo)))
        return tuple(sorted(facets, key=lambda h: (h.normal, h.offset))), ((lo,), (hi,))
    try:
        halfspaces = _dedupe_halfspaces(_incremental_hull(pts, n))
        verts = _certify(pts, halfspaces, n)
    except _CertificationFailure:
        from math import comb
        if comb(len(pts), n) > 5 * 10 ** 6:
            raise GrowthLabError("hull fallback too large; report this input")
        halfspaces = _brute_force_facets(pts, n)
        verts = _certify(pts, halfspaces, n)
    halfspaces = tuple(sorted(halfspaces, key=lambda h: (h.normal, h.offset)))
    return halfspaces, verts


# -- public operations ------------------------------------------------------


def hull(points):
    """Exact convex hull; requires a full-dimensional affine span."""
    pts = [vec(p) for p in points]
    if not pts:
        raise DegenerateInput("hull of no points")
    n = len(pts[0])
    P = Polytope.from_points(pts, n)
    if not P.is_full_dim:
        raise DegenerateInput(f"affine span has dimension {P.dim} < {n}")
    return P


@dataclass(frozen=True)
class DelzantVertexReport:
    vertex: tuple
    ok: bool
    generators: tuple
    determinant: Fraction | None


@dataclass(frozen=True)
class DelzantReport:
    entries: tuple
    ok: bool

    def failing_vertices(self):
        return [e.vertex for e in self.entries if not e.ok]

    def to_json_dict(self):
        return {"ok": self.ok,
                "vertices": [{"vertex": [rat_str(x) for x in e.vertex],
                              "ok": e.ok,
                              "generators": [[rat_str(x) for x in g] for g in e.generators],
                              "det": None if e.determinant is None else rat_str(e.determinant)}
                             for e in self.entries]}


def _edge_generators(P, v):
    return sorted(primitive_integer(vsub(w, v)) for w in P.neighbors(v))


def is_delzant(P):
    """Per-vertex unimodularity check for a full-dimensional lattice polytope."""
    if not P.is_full_dim:
        raise DegenerateInput("Delzant check requires a full-dimensional polytope")
    if not all(is_integral(v) for v in P.vertices):
        raise NotLatticePolytope("vertices must be integral")
    n = P.ambient_dim
    entries = []
    all_ok = True
    for v in P.vertices:
        gens = _edge_generators(P, v)
        if len(gens) != n:
            entries.append(DelzantVertexReport(v, False, tuple(gens), None))
            all_ok = False
            continue
        d = det([list(g) for g in gens])
        ok = abs(d) == 1
        entries.append(DelzantVertexReport(v, ok, tuple(gens), d))
        all_ok = all_ok and ok
    return DelzantReport(tuple(entries), all_ok)


def normalize_at_vertex(P, v):
    """Translate v to the origin and map its edge cone to the positive orthant.

    The unimodular map sends the primitive edge generators, sorted in
    descending lexicographic order, to e_1, ..., e_n; the descending order
    makes the map the identity on an already normalized vertex.  Returns
    (normalized polytope, map).
    """
    v = vec(v)
    if v not in P.vertices:
        raise NotDelzantVertex(f"{v} is not a vertex")
    n = P.ambient_dim
    gens = sorted(_edge_generators(P, v), reverse=True)
    if len(gens) != n:
        raise NotDelzantVertex(f"vertex {v} has {len(gens)} edges, expected {n}")
    G = tuple(tuple(rat(gens[c][r]) for c in range(n)) for r in range(n))
    if abs(det(G)) != 1:
        raise NotDelzantVertex(f"edge generators at {v} are not unimodular")
    A = inverse(G)
    umap = UnimodularMap(A, v)
    Q = Polytope.from_points([umap.apply(p) for p in P.vertices], n)
    if any(any(x < 0 for x in q) for q in Q.vertices):
        raise GrowthLabError("normalized polytope left the positive orthant")
    return Q, umap


def lattice_points(P, k=1):
    """Integer points of the dilate kP, sorted; exact membership per point."""
    if P.is_empty:
        return []
    k = int(k)
    if k < 1:
        raise ValueError("dilation factor must be a positive integer")
    n = P.ambient_dim
    los, his = [], []
    for c in range(n):
        vals = [k * v[c] for v in P.vertices]
        los.append(ceil(min(vals)))
        his.append(floor(max(vals)))
    out = []
    if P.is_full_dim:
        scaled = [HalfSpace(f.normal, k * f.offset) for f in P.facets]
        for x in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
            if all(dot(f.normal, x) <= f.offset for f in scaled):
                out.append(x)
    else:
        for x in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
            if P.contains(tuple(Fraction(c, k) for c in x)):
                out.append(x)
    return out


def triangulate(P):
    """Simplices (tuples of dim+1 vertices) partitioning a full-dim polytope."""
    if not P.is_full_dim:
        if P.dim <= 0:
            return []
        inner = triangulate(P._span_poly)
        return [tuple(_from_span(P._span_point, P._span_basis, s) for s in simplex)
                for simplex in inner]
    n = P.ambient_dim
    if n == 1:
        return [tuple(P.vertices)]
    v0 = P.vertices[0]
    simplices = []
    for f in P.facets:
        if f.value(v0) == f.offset:
            continue
        face_pts = [v for v in P.vertices if f.value(v) == f.offset]
        face = Polytope.from_points(face_pts, n)
        for s in triangulate(face):
            simplices.append((v0,) + s)
    return simplices


def volume(P):
    """Exact Lebesgue volume; 0 for empty or lower-dimensional input."""
    if not P.is_full_dim:
        return Fraction(0)
    n = P.ambient_dim
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    total = Fraction(0)
    for s in triangulate(P):
        M = [vsub(p, s[0]) for p in s[1:]]
        total += abs(det(M))
    return total / fact


def integer_kernel(rows):
    """Basis of {x in Z^n : R x = 0} for an integer matrix R, via column ops."""
    m = len(rows)
    n = len(rows[0])
    A = [list(map(int, r)) for r in rows]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_addmul(t, s, f):
        for i in range(m):
            A[i][t] += f * A[i][s]
        for i in range(n):
            U[i][t] += f * U[i][s]

    def col_swap(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in U:
            r[i], r[j] = r[j], r[i]

    r = 0
    for i in range(m):
        while True:
            nz = [j for j in range(r, n) if A[i][j] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(A[i][j]))
            q = A[i][nz[1]] // A[i][nz[0]]
            col_addmul(nz[1], nz[0], -q)
        nz = [j for j in range(r, n) if A[i][j] != 0]
        if nz:
            col_swap(r, nz[0])
            r += 1
    return [tuple(U[i][j] for i in range(n)) for j in range(r, n)]


def relative_volume(P):
    """Volume in the affine span, normalized so a lattice cell has volume 1."""
    if P.is_empty:
        return Fraction(0)
    if P.is_point:
        return Fraction(1)
    if P.is_full_dim:
        return volume(P)
    n = P.ambient_dim
    dirs = [primitive_integer(d) for d in P._span_basis]
    # orthogonal complement of the direction space, as integer rows
    rowsA = [list(d) for d in dirs]
    perp = []
    for cand in integer_kernel(rowsA) or []:
        perp.append(cand)
    if len(perp) != n - P.dim:
        raise GrowthLabError("span complement has wrong dimension")
    basis = integer_kernel(perp)
    if len(basis) != P.dim:
        raise GrowthLabError("direction lattice has wrong rank")
    cols = list(zip(*basis))
    coords = []
    for v in P.vertices:
        s = solve_general(cols, vsub(v, P.vertices[0]))
        if s is None:
            raise GrowthLabError("vertex outside direction lattice span")
        coords.append(s)
    return volume(Polytope.from_points(coords, P.dim))


def simplex_inclusion(P):
    """sup of lam >= 0 with lam * (standard simplex) inside P, exact.

    Requires P normalized: the origin is a vertex and P sits in the positive
    orthant.  The value is the facet minimum of offset / max(normal coord),
    over facets whose normal has a positive coordinate.
    """
    _require_normalized(P)
    best = None
    for f in P.facets:
        m = max(f.normal)
        if m <= 0:
            continue
        lam = Fraction(f.offset, m)
        if best is None or lam < best:
            best = lam
    if best is None:
        raise GrowthLabError("bounded polytope must bound the simplex scale")
    return best


def _require_normalized(P):
    if not P.is_full_dim:
        raise NotNormalized("polytope must be full-dimensional")
    zero = tuple(Fraction(0) for _ in range(P.ambient_dim))
    if zero not in P.vertices:
        raise NotNormalized("origin must be a vertex")
    if any(any(x < 0 for x in v) for v in P.vertices):
        raise NotNormalized("polytope must lie in the positive orthant")


def cut(P, normal, value):
    """P intersect {x : <normal, x> = value}; empty result is a value."""
    u = vec(normal)
    value = rat(value)
    if P.is_empty:
        return Polytope.empty(P.ambient_dim)
    if P.is_point:
        v = P.vertices[0]
        return P if dot(u, v) == value else Polytope.empty(P.ambient_dim)
    if not P.is_full_dim:
        # restriction of <u, .> to span coordinates
        w = tuple(dot(u, b) for b in P._span_basis)
        c0 = dot(u, P._span_point)
        if all(x == 0 for x in w):
            return P if c0 == value else Polytope.empty(P.ambient_dim)
        inner = cut(P._span_poly, w, value - c0)
        pts = [_from_span(P._span_point, P._span_basis, s) for s in inner.vertices]
        return Polytope.from_points(pts, P.ambient_dim) if pts else Polytope.empty(P.ambient_dim)
    vals = [dot(u, v) for v in P.vertices]
    pts = [v for v, t in zip(P.vertices, vals) if t == value]
    for i, j in P.edges():
        ti, tj = vals[i], vals[j]
        if (ti < value < tj) or (tj < value < ti):
            t = (value - ti) / (tj - ti)
            vi, vj = P.vertices[i], P.vertices[j]
            pts.append(tuple(x + t * (y - x) for x, y in zip(vi, vj)))
    if not pts:
        return Polytope.empty(P.ambient_dim)
    return Polytope.from_points(pts, P.ambient_dim)


def sum_slice(P, lam):
    """Slice by the total-coordinate hyperplane sum(x) = lam."""
    if P.is_empty:
        return Polytope.empty(P.ambient_dim)
    ones = tuple(Fraction(1) for _ in range(P.ambient_dim))
    return cut(P, ones, lam)


def strict_inclusion(A, B):
    """True iff A avoids every positive-offset facet of B strictly.

    Facets through the origin (offset 0) are checked non-strictly: for
    normalized slope polytopes both sides share the base vertex at 0, and
    growth comparisons only see the facets not through it.
    """
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    if not B.is_full_dim:
        raise DegenerateInput("outer polytope must be full-dimensional")
    if A.is_empty:
        return True
    for f in B.facets:
        m = max(dot(f.normal, v) for v in A.vertices)
        if f.offset > 0:
            if m >= f.offset:
                return False
        elif m > f.offset:
            return False
    return True


def standard_simplex(n):
    """conv{0, e_1, ..., e_n}."""
    zero = tuple(Fraction(0) for _ in range(n))
    pts = [zero]
    for i in range(n):
        pts.append(tuple(Fraction(1 if j == i else 0) for j in range(n)))
    return hull(pts)


def box(sides):
    """Axis box prod [0, a_i]."""
    sides = [rat(a) for a in sides]
    n = len(sides)
    pts = [tuple(sides[i] if bit else Fraction(0) for i, bit in enumerate(bits))
           for bits in product((0, 1), repeat=n)]
    return hull(pts)
