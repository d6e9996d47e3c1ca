"""Convex functions on R^n: max-affine forms, smooth toric potentials,
Legendre transforms, radial decomposition and the regularized max.

Max-affine data is exact (Fraction slopes and offsets; float offsets are
converted exactly).  Smooth families evaluate in floating point with
numerically stable formulas.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import polytope as pt
from .errors import (
    DegenerateInput,
    DimensionMismatch,
    EmptyInput,
    IncomparableFamilies,
    NonpositiveEpsilon,
)
from .lp import envelope_min
from .rationals import dot, rat, rat_str, vec

INF = math.inf


@dataclass(frozen=True)
class AffinePiece:
    slope: tuple
    offset: Fraction

    def value(self, x):
        return dot(self.slope, x) + self.offset


def _is_exact_point(x):
    return all(isinstance(c, (int, Fraction)) for c in x)


class MaxAffineFunction:
    """Finite maximum of affine forms; immutable."""

    def __init__(self, pieces):
        if not pieces:
            raise EmptyInput("a max-affine function needs at least one piece")
        by_slope = {}
        for p in pieces:
            if isinstance(p, AffinePiece):
                s, c = p.slope, p.offset
            else:
                s, c = p
            s = vec(s)
            c = rat(c)
            if s not in by_slope or c > by_slope[s]:
                by_slope[s] = c
        self.pieces = tuple(AffinePiece(s, by_slope[s]) for s in sorted(by_slope))
        self.dim = len(self.pieces[0].slope)
        if any(len(p.slope) != self.dim for p in self.pieces):
            raise DimensionMismatch("pieces of mixed dimension")

    @classmethod
    def support_function(cls, P):
        """h_P = max over vertices of <v, .>, the polyhedral representative."""
        if P.is_empty:
            raise EmptyInput("support function of an empty polytope")
        return cls([(v, 0) for v in P.vertices])

    def __call__(self, x):
        if len(x) != self.dim:
            raise DimensionMismatch("point has wrong dimension")
        if _is_exact_point(x):
            return max(p.value(vec(x)) for p in self.pieces)
        xs = [float(c) for c in x]
        return max(sum(float(s) * c for s, c in zip(p.slope, xs)) + float(p.offset)
                   for p in self.pieces)

    @cached_property
    def _float_data(self):
        A = np.array([[float(s) for s in p.slope] for p in self.pieces])
        c = np.array([float(p.offset) for p in self.pieces])
        return A, c

    def eval_many(self, X, dtype=np.float64):
        A, c = self._float_data
        X = np.asarray(X, dtype=dtype)
        return (X @ A.T.astype(dtype) + c.astype(dtype)).max(axis=1)

    @cached_property
    def _pruned_pieces(self):
        slopes = [p.slope for p in self.pieces]
        values = [-p.offset for p in self.pieces]
        keep = []
        for i, p in enumerate(self.pieces):
            if len(self.pieces) == 1:
                keep.append(p)
                continue
            best = envelope_min(slopes, values, p.slope, exclude=i)
            if best is None or best > -p.offset:
                keep.append(p)
        return tuple(keep)

    def pruned(self):
        """Drop pieces that never strictly attain the maximum."""
        return MaxAffineFunction(self._pruned_pieces)

    def piece_set(self):
        return frozenset((p.slope, p.offset) for p in self._pruned_pieces)

    def same_function(self, other):
        """Exact equality as functions (canonical pruned piece sets agree)."""
        return self.piece_set() == other.piece_set()

    @cached_property
    def slope_polytope(self):
        return pt.Polytope.from_points([p.slope for p in self._pruned_pieces], self.dim)

    @property
    def slope_sum_max(self):
        return max(sum(p.slope) for p in self.pieces)

    def shifted(self, c):
        return MaxAffineFunction([(p.slope, p.offset + rat(c)) for p in self.pieces])

    def to_json_dict(self):
        return {"pieces": [{"slope": [rat_str(s) for s in p.slope],
                            "offset": rat_str(p.offset)} for p in self.pieces]}

    @classmethod
    def from_json_dict(cls, d):
        return cls([([rat(s) for s in p["slope"]], rat(p["offset"]))
                    for p in d["pieces"]])

    def __repr__(self):
        return f"MaxAffineFunction({len(self.pieces)} pieces, dim={self.dim})"


class ConvexConjugate:
    """Legendre transform of a max-affine function.

    Finite exactly on the slope polytope; the value at y is the lower convex
    envelope of the points (slope, -offset) evaluated at y, computed by an
    exact LP.
    """

    def __init__(self, breakpoints, dim):
        self.breakpoints = tuple(breakpoints)  # (slope, value = -offset)
        self.dim = dim

    @cached_property
    def domain(self):
        return pt.Polytope.from_points([s for s, _ in self.breakpoints], self.dim)

    def __call__(self, y):
        y = vec(y)
        if len(y) != self.dim:
            raise DimensionMismatch("point has wrong dimension")
        slopes = [s for s, _ in self.breakpoints]
        values = [v for _, v in self.breakpoints]
        best = envelope_min(slopes, values, y)
        return INF if best is None else best

    def conjugate(self):
        """Conjugate back: recovers the pruned original (Legendre involution)."""
        return MaxAffineFunction([(s, -v) for s, v in self.breakpoints])


def legendre(f):
    """Conjugate description of a max-affine function: domain + roof values."""
    pruned = f.pruned()
    return ConvexConjugate([(p.slope, -p.offset) for p in pruned.pieces], f.dim)


class SmoothToricPotential:
    """Smooth convex function from a named family.

    lse:    (1/k) ln sum over stored exponents of exp(<a, x>)
    fs:     lam * ln(1 + sum_i exp(x_i))      (scaled Fubini-Study potential)
    affine: <alpha, x> + c
    """

    def __init__(self, family, *, k=None, exponents=None, lam=None,
                 alpha=None, const=None, polytope=None):
        self.family = family
        if family == "lse":
            self.k = int(k)
            self.exponents = tuple(sorted(tuple(int(a) for a in e) for e in exponents))
            if not self.exponents:
                raise EmptyInput("log-sum-exp needs at least one exponent")
            self.dim = len(self.exponents[0])
            self._polytope = polytope
        elif family == "fs":
            self.lam = rat(lam)
            if self.lam <= 0:
                raise ValueError("scaled Fubini-Study needs lam > 0")
            self.dim = None  # fixed on first use or via with_dim
        elif family == "affine":
            self.alpha = vec(alpha)
            self.const = rat(const if const is not None else 0)
            self.dim = len(self.alpha)
        else:
            raise ValueError(f"unknown family {family!r}")

    @classmethod
    def log_sum_exp(cls, exponents, k, polytope=None):
        return cls("lse", k=k, exponents=exponents, polytope=polytope)

    @classmethod
    def fubini_study(cls, lam, dim=None):
        u = cls("fs", lam=lam)
        u.dim = dim
        return u

    @classmethod
    def affine_form(cls, alpha, const=0):
        return cls("affine", alpha=alpha, const=const)

    @property
    def lattice_count(self):
        if self.family != "lse":
            raise IncomparableFamilies("lattice count only defined for lse")
        return len(self.exponents)

    def _need_dim(self, x):
        if self.dim is None:
            self.dim = len(x)
        if len(x) != self.dim:
            raise DimensionMismatch("point has wrong dimension")

    @cached_property
    def _exp_arr(self):
        return np.array(self.exponents, dtype=float)

    def __call__(self, x):
        self._need_dim(x)
        xs = np.array([float(c) for c in x])
        return float(self.value_many(xs[None, :])[0])

    def value_many(self, X, dtype=np.float64):
        X = np.asarray(X, dtype=dtype)
        if self.family == "lse":
            XA = X @ self._exp_arr.T.astype(dtype)
            m = XA.max(axis=1)
            return (m + np.log(np.exp(XA - m[:, None]).sum(axis=1))) / self.k
        if self.family == "fs":
            m = np.maximum(0, X.max(axis=1))
            s = np.exp(-m) + np.exp(X - m[:, None]).sum(axis=1)
            return float(self.lam) * (m + np.log(s))
        A = np.array([float(a) for a in self.alpha], dtype=dtype)
        return X @ A + float(self.const)

    def grad_many(self, X):
        """Exact-formula gradients; for lse this is the softmax average of
        exponents over k, which lies in the slope polytope."""
        X = np.asarray(X, dtype=float)
        if self.family == "lse":
            XA = X @ self._exp_arr.T
            XA -= XA.max(axis=1, keepdims=True)
            W = np.exp(XA)
            W /= W.sum(axis=1, keepdims=True)
            return (W @ self._exp_arr) / self.k
        if self.family == "fs":
            m = np.maximum(0, X.max(axis=1, keepdims=True))
            E = np.exp(X - m)
            denom = np.exp(-m[:, 0]) + E.sum(axis=1)
            return float(self.lam) * E / denom[:, None]
        return np.broadcast_to(np.array([float(a) for a in self.alpha]), X.shape).copy()

    def grad(self, x):
        return self.grad_many(np.array([[float(c) for c in x]]))[0]

    @cached_property
    def slope_polytope(self):
        if self.family == "lse":
            if self._polytope is not None:
                return self._polytope
            pts = [tuple(Fraction(a, self.k) for a in e) for e in self.exponents]
            return pt.Polytope.from_points(pts, self.dim)
        if self.family == "fs":
            if self.dim is None:
                raise DimensionMismatch("fs potential has no dimension fixed yet")
            return pt.standard_simplex(self.dim).scaled(self.lam)
        return pt.Polytope.from_points([self.alpha], self.dim)

    @property
    def slope_sum_max(self):
        return max(sum(v) for v in self.slope_polytope.vertices)

    def to_json_dict(self):
        if self.family == "lse":
            return {"family": "lse", "k": self.k,
                    "polytope": self.slope_polytope.to_json_dict(with_facets=False)}
        if self.family == "fs":
            return {"family": "fs", "lambda": rat_str(self.lam)}
        return {"family": "affine", "alpha": [rat_str(a) for a in self.alpha],
                "const": rat_str(self.const)}

    @classmethod
    def from_json_dict(cls, d):
        if d["family"] == "lse":
            P = pt.Polytope.from_json_dict(d["polytope"])
            return logsumexp_from_polytope(P, int(d["k"]))
        if d["family"] == "fs":
            return cls.fubini_study(rat(d["lambda"]), dim=d.get("dim"))
        return cls.affine_form([rat(a) for a in d["alpha"]],
                               rat(d.get("const", 0)))

    def __repr__(self):
        if self.family == "lse":
            return f"SmoothToricPotential(lse, k={self.k}, N={len(self.exponents)})"
        if self.family == "fs":
            return f"SmoothToricPotential(fs, lam={self.lam})"
        return f"SmoothToricPotential(affine, alpha={self.alpha})"


def logsumexp_from_polytope(P, k):
    """Toric potential u_k from the lattice points of kP.

    Requires P normalized (origin vertex, positive orthant) with integral
    vertices, so that h_P <= u_k <= h_P + ln(N(k))/k holds for every k >= 1.
    """
    pt._require_normalized(P)
    from .errors import NotNormalized
    from .rationals import is_integral
    if not all(is_integral(v) for v in P.vertices):
        raise NotNormalized("polytope must be a lattice polytope")
    exps = pt.lattice_points(P, k)
    return SmoothToricPotential.log_sum_exp(exps, k, polytope=P)


@dataclass(frozen=True)
class BoundedDifferenceCertificate:
    """Certified global bounds lower <= f - g <= upper (infinite ends carry a
    recession witness direction)."""

    lower: object
    upper: object
    method: str
    witnesses: dict = field(default_factory=dict)

    @property
    def finite(self):
        return self.lower != -INF and self.upper != INF

    def to_json_dict(self):
        def fmt(v):
            if v == INF:
                return "inf"
            if v == -INF:
                return "-inf"
            if isinstance(v, Fraction):
                return rat_str(v)
            return float(v)
        wit = {}
        for key, val in self.witnesses.items():
            if isinstance(val, tuple):
                wit[key] = [rat_str(x) if isinstance(x, Fraction) else x for x in val]
            else:
                wit[key] = val if not isinstance(val, Fraction) else rat_str(val)
        return {"lower": fmt(self.lower), "upper": fmt(self.upper),
                "method": self.method, "witnesses": wit}


def _separating_direction(point, P):
    """A direction d with <d, point> strictly above max over P; exact."""
    from .rationals import inverse, mat_vec, solve, vsub
    if P.is_point:
        return vsub(point, P.vertices[0])
    if P.is_full_dim:
        for f in P.facets:
            if f.value(point) > f.offset:
                return f.normal
        raise ValueError("point is inside the polytope")
    # residual of the exact orthogonal projection onto the span, else recurse
    B = P._span_basis
    gram = [[dot(a, b) for b in B] for a in B]
    rhs = [dot(a, vsub(point, P._span_point)) for a in B]
    s = solve(gram, rhs)
    proj = pt._from_span(P._span_point, B, s)
    r = vsub(point, proj)
    if any(x != 0 for x in r):
        return r
    inner = _separating_direction(s, P._span_poly)
    coef = mat_vec(inverse(gram), inner)  # dual basis lift of the in-span normal
    return tuple(sum(c * b[i] for c, b in zip(coef, B)) for i in range(len(point)))


def _sup_max_affine(f, g):
    """Exact sup of f - g for two max-affine functions, or (inf, witness)."""
    fp = f.pruned()
    conj = legendre(g)
    best = None
    best_piece = None
    for p in fp.pieces:
        val = conj(p.slope)
        if val == INF:
            d = _separating_direction(p.slope, g.slope_polytope)
            return INF, {"recession_direction": d, "escaping_slope": p.slope}
        cand = p.offset + val
        if best is None or cand > best:
            best, best_piece = cand, p.slope
    return best, {"sup_witness_slope": best_piece}


def sup_difference(f, g):
    """Certificate for inf/sup of f - g.

    Both max-affine: exact LP values, finite iff the slope polytopes agree.
    A log-sum-exp potential against a max-affine over the same polytope:
    the analytic bound [0, ln N(k)/k] shifted by the exact polyhedral part.
    """
    if isinstance(f, MaxAffineFunction) and isinstance(g, MaxAffineFunction):
        up, wit_up = _sup_max_affine(f, g)
        down, wit_dn = _sup_max_affine(g, f)
        lower = -INF if down == INF else -down
        wit = {("sup_" + k if not k.startswith("sup") else k): v for k, v in wit_up.items()}
        for k, v in wit_dn.items():
            wit["inf_" + k.removeprefix("sup_")] = v
        return BoundedDifferenceCertificate(lower, up, "exact-lp", wit)
    if isinstance(f, SmoothToricPotential) and f.family == "lse" \
            and isinstance(g, MaxAffineFunction):
        P = f.slope_polytope
        if g.slope_polytope != P:
            raise IncomparableFamilies(
                "log-sum-exp and max-affine must share the slope polytope")
        h = MaxAffineFunction.support_function(P)
        gap = Fraction(0) if g.same_function(h) else None
        n_count = f.lattice_count
        width = math.log(n_count) / f.k
        if gap == 0:
            return BoundedDifferenceCertificate(
                Fraction(0), width, "lattice-count",
                {"lattice_count": n_count, "k": f.k, "tight_at": "origin"})
        inner = sup_difference(h, g)
        return BoundedDifferenceCertificate(
            _add_bound(inner.lower, 0), _add_bound(inner.upper, width),
            "lattice-count", {"lattice_count": n_count, "k": f.k})
    if isinstance(g, SmoothToricPotential) and g.family == "lse" \
            and isinstance(f, MaxAffineFunction):
        c = sup_difference(g, f)
        return BoundedDifferenceCertificate(
            _neg_bound(c.upper), _neg_bound(c.lower), c.method, c.witnesses)
    raise IncomparableFamilies(
        f"cannot bound difference of {type(f).__name__} and {type(g).__name__}")


def _add_bound(a, b):
    if a in (INF, -INF):
        return a
    return a + b


def _neg_bound(a):
    if a == INF:
        return -INF
    if a == -INF:
        return INF
    return -a


def radial_component(f, lam):
    """Component of f at logarithmic homogeneity lam.

    Computes inf over t of f(x + t*ones) - lam*t as an exact max-affine
    function whose slopes all have coordinate sum lam, or None when the
    infimum is identically -infinity (lam outside the slope sums of f).
    For a support function h_P the result is the support function of the
    slice of P at total coordinate lam.
    """
    lam = rat(lam)
    fp = f.pruned()
    offsets = {p.offset for p in fp.pieces}
    if len(offsets) == 1:
        S = fp.slope_polytope
        sl = pt.sum_slice(S, lam)
        if sl.is_empty:
            return None
        c0 = next(iter(offsets))
        return MaxAffineFunction([(v, c0) for v in sl.vertices])
    n = fp.dim
    if not fp.slope_polytope.is_full_dim:
        raise DegenerateInput(
            "mixed offsets with a lower-dimensional slope polytope")
    cap = max(-p.offset for p in fp.pieces) + 1
    pts = [p.slope + (-p.offset,) for p in fp.pieces]
    pts += [p.slope + (cap,) for p in fp.pieces]
    Q = pt.Polytope.from_points(pts, n + 1)
    u = tuple([Fraction(1)] * n + [Fraction(0)])
    W = pt.cut(Q, u, lam)
    if W.is_empty:
        return None
    proj = [w[:n] for w in W.vertices]
    heights = [w[n] for w in W.vertices]
    pieces = []
    for i, w in enumerate(W.vertices):
        low = envelope_min(proj, heights, proj[i])
        if low == heights[i]:
            pieces.append((proj[i], -heights[i]))
    return MaxAffineFunction(pieces).pruned()


def reassemble(components):
    """Pointwise max of radial components: the union of their pieces."""
    parts = [c for c in components.values() if c is not None] \
        if isinstance(components, dict) else [c for c in components if c is not None]
    if not parts:
        raise EmptyInput("no nonempty components to reassemble")
    pieces = []
    for c in parts:
        pieces.extend(c.pieces)
    return MaxAffineFunction(pieces)


def grows_slower(f, g):
    """Decide whether g - f is bounded below and proper toward |z| -> infinity.

    Decision rule: strict inclusion of slope polytopes (strict on facets with
    positive offset).  Returns (bool, witness); the witness of a failure is
    the escaping vertex and the violated facet.
    """
    A = _growth_slope_polytope(f, role="source")
    B = _growth_slope_polytope(g, role="target")
    return slope_inclusion_witness(A, B)


def _growth_slope_polytope(u, role):
    if isinstance(u, MaxAffineFunction):
        return u.slope_polytope
    if isinstance(u, SmoothToricPotential):
        if role == "source" and u.family == "fs":
            return u.slope_polytope
        if role == "target" and u.family == "lse":
            return u.slope_polytope
    raise IncomparableFamilies(f"unsupported {role} family for growth comparison")


def slope_inclusion_witness(A, B):
    """Shared core of the growth comparison: strict inclusion of slope
    polytopes (strict only on positive-offset facets), with a violation
    witness (vertex, facet) when it fails."""
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    if not B.is_full_dim:
        raise DegenerateInput("target slope polytope must be full-dimensional")
    for facet in B.facets:
        vals = [(dot(facet.normal, v), v) for v in A.vertices]
        m, vtx = max(vals)
        bad = m >= facet.offset if facet.offset > 0 else m > facet.offset
        if bad:
            return False, {"vertex": vtx, "facet": facet}
    return True, None


def regularized_max(a, b, eps):
    """C^1 convex regularization of max(a, b).

    Equals max(a, b) exactly when |a - b| >= eps, and lies in
    [max, max + eps/4] inside the band.  Exact on Fraction inputs.
    """
    if eps <= 0:
        raise NonpositiveEpsilon("regularization width must be positive")
    s = a - b
    if abs(s) >= eps:
        return a if s > 0 else b
    if isinstance(s, Fraction) and isinstance(eps, Fraction):
        half = Fraction(1, 2)
        return (a + b) * half + (s * s + eps * eps) / (4 * eps)
    return (a + b) / 2 + (s * s + eps * eps) / (4 * eps)


def regularized_max_many(a, b, eps):
    """Vectorized regularized max; branch values match max(a, b) bitwise."""
    if eps <= 0:
        raise NonpositiveEpsilon("regularization width must be positive")
    a = np.asarray(a)
    b = np.asarray(b)
    s = a - b
    smooth = (a + b) / 2 + (s * s + eps * eps) / (4 * eps)
    return np.where(np.abs(s) >= eps, np.maximum(a, b), smooth)
