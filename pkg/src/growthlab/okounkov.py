"""Monomial orders, valuations of exponent supports, Okounkov bodies of
graded monomial series, the flag blowup map, and Chebyshev transforms."""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from . import convexfn as cf
from . import polytope as pt
from .errors import DimensionMismatch, EmptySupport, IncomparableFamilies
from .rationals import rat_str

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class MonomialOrder:
    """Total additive order on N^n: 'lex' or 'deglex', after permuting the
    coordinates by `perm` (the flag choice)."""

    kind: str = "deglex"
    perm: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "deglex"):
            raise ValueError(f"unknown order kind {self.kind!r}")

    def permuted(self, a):
        if self.perm is None:
            return tuple(a)
        return tuple(a[i] for i in self.perm)

    def compare(self, a, b):
        if len(a) != len(b):
            raise DimensionMismatch("exponents of different lengths")
        if self.kind == "deglex":
            da, db = sum(a), sum(b)
            if da != db:
                return LESS if da < db else GREATER
        pa, pb = self.permuted(a), self.permuted(b)
        if pa == pb:
            return EQUAL
        return LESS if pa < pb else GREATER

    def sort_key(self):
        return cmp_to_key(self.compare)


def compare(a, b, order):
    return order.compare(tuple(a), tuple(b))


def valuation(support, order):
    """Order-minimum of a nonempty exponent support.

    For deglex this only depends on the slice of minimal total degree, the
    support of the leading homogeneous part.
    """
    support = [tuple(int(x) for x in a) for a in support]
    if not support:
        raise EmptySupport("valuation of an empty support")
    best = support[0]
    for a in support[1:]:
        if order.compare(a, best) < 0:
            best = a
    return best


class GradedMonomialSeries:
    """Per-degree finite sets of exponent vectors in N^n."""

    def __init__(self, degrees):
        self.degrees = {int(k): frozenset(tuple(int(x) for x in a) for a in v)
                        for k, v in degrees.items() if v}
        if not self.degrees:
            raise EmptySupport("series has no nonempty degree")
        dims = {len(a) for v in self.degrees.values() for a in v}
        if len(dims) != 1:
            raise DimensionMismatch("exponents of mixed dimension")
        self.dim = dims.pop()

    @classmethod
    def toric(cls, P, k_max):
        """W_k = lattice points of kP, the full toric series."""
        return cls({k: pt.lattice_points(P, k) for k in range(1, k_max + 1)})

    def filtered(self, predicate):
        """Sub-series keeping exponents with predicate(k, alpha)."""
        return GradedMonomialSeries(
            {k: {a for a in v if predicate(k, a)} for k, v in self.degrees.items()})

    @property
    def max_degree(self):
        return max(self.degrees)

    def check_multiplicativity(self):
        """W_j + W_k inside W_{j+k} for all stored degree pairs."""
        for j in self.degrees:
            for k in self.degrees:
                if j + k not in self.degrees:
                    continue
                target = self.degrees[j + k]
                for a in self.degrees[j]:
                    for b in self.degrees[k]:
                        if tuple(x + y for x, y in zip(a, b)) not in target:
                            return False
        return True

    def to_json_dict(self):
        return {"degrees": {str(k): sorted(list(map(list, v)))
                            for k, v in sorted(self.degrees.items())}}

    @classmethod
    def from_json_dict(cls, d):
        return cls({int(k): [tuple(a) for a in v] for k, v in d["degrees"].items()})


@dataclass(frozen=True)
class OkounkovBody:
    """Per-degree normalized hulls of a monomial series and their limit."""

    hull_at: dict
    limit: pt.Polytope | None
    order: MonomialOrder

    def to_json_dict(self):
        d = {"hull_at": {str(k): P.to_json_dict(with_facets=False)
                         for k, P in sorted(self.hull_at.items())},
             "volumes": {str(k): rat_str(pt.relative_volume(P))
                         for k, P in sorted(self.hull_at.items())}}
        if self.limit is not None:
            d["limit"] = self.limit.to_json_dict(with_facets=False)
        return d


def okounkov_body(series, order=None, k_max=None):
    """Body of a graded monomial series under a monomial order.

    Every monomial of W_k is a section with valuation vector equal to its own
    exponent, so the degree-k hull is the hull of W_k / k, independent of the
    order.  The limit is recorded when all computed levels agree (the toric
    series stabilizes at every level).
    """
    if order is None:
        order = MonomialOrder("deglex")
    if k_max is None:
        k_max = series.max_degree
    hull_at = {}
    for k in sorted(series.degrees):
        if k > k_max:
            continue
        pts = [tuple(Fraction(a, k) for a in alpha) for alpha in series.degrees[k]]
        hull_at[k] = pt.Polytope.from_points(pts, series.dim)
    if not hull_at:
        raise EmptySupport("series empty below k_max")
    bodies = list(hull_at.values())
    limit = bodies[0] if all(b == bodies[0] for b in bodies) else None
    return OkounkovBody(hull_at, limit, order)


def infinitesimal_map(B):
    """Image under alpha -> (sum(alpha), alpha_1, ..., alpha_{n-1}).

    The map is linear and unimodular, so the image of a polytope is the hull
    of the images of its vertices.  It converts the deglex body at a point
    into the lex body on the blowup.
    """
    if B.is_empty:
        return B
    n = B.ambient_dim
    imgs = [(sum(v),) + tuple(v[:n - 1]) for v in B.vertices]
    return pt.Polytope.from_points(imgs, n)


@dataclass(frozen=True)
class VolumeIdentityVerdict:
    exact_equal: bool | None
    reference: Fraction
    per_k_gap: dict
    trend_nonincreasing: bool

    def to_json_dict(self):
        return {"exact_equal": self.exact_equal,
                "reference": rat_str(self.reference),
                "per_k_gap": {str(k): float(v) for k, v in self.per_k_gap.items()},
                "trend_nonincreasing": self.trend_nonincreasing}


def volume_identity_check(body, vol_L):
    """Compare n! times body volumes against a reference volume.

    Exact equality verdict when the body has stabilized; otherwise the
    per-degree gaps and whether they are non-increasing in k.
    """
    vol_L = Fraction(vol_L)
    gaps = {}
    n = next(iter(body.hull_at.values())).ambient_dim
    fact = math.factorial(n)
    for k, P in sorted(body.hull_at.items()):
        gaps[k] = abs(fact * pt.volume(P) - vol_L)
    exact = None
    if body.limit is not None:
        exact = fact * pt.volume(body.limit) == vol_L
    vals = [gaps[k] for k in sorted(gaps)]
    trend = all(b <= a for a, b in zip(vals, vals[1:]))
    return VolumeIdentityVerdict(exact, vol_L, gaps, trend)


def seshadri_from_body(B):
    """Largest scaled standard simplex inside a normalized body; exact."""
    return pt.simplex_inclusion(B)


class ChebyshevTransform:
    """Convex conjugate restricted to the interior of the slope polytope.

    Exact (LP) for max-affine inputs, closed-form entropy for the scaled
    Fubini-Study family, certified numeric maximization for log-sum-exp.
    """

    def __init__(self, kind, domain, fn, certificate=None):
        self.kind = kind
        self.domain = domain
        self._fn = fn
        self.certificate = certificate  # (lower, upper) enclosure for all y

    def __call__(self, y):
        return self._fn(tuple(y))


def chebyshev_transform(u):
    if isinstance(u, cf.MaxAffineFunction):
        conj = cf.legendre(u)
        return ChebyshevTransform("exact-lp", conj.domain, conj)
    if isinstance(u, cf.SmoothToricPotential) and u.family == "fs":
        lam = float(u.lam)
        dom = u.slope_polytope

        def entropy(y):
            q = [float(c) / lam for c in y]
            q.append(1.0 - sum(q))
            if any(c < 0 for c in q):
                return math.inf
            return lam * sum(c * math.log(c) for c in q if c > 0)

        return ChebyshevTransform("closed-form", dom, entropy)
    if isinstance(u, cf.SmoothToricPotential) and u.family == "lse":
        dom = u.slope_polytope
        width = math.log(u.lattice_count) / u.k

        def numeric(y):
            from scipy.optimize import minimize
            yf = np.array([float(c) for c in y])

            def obj(x):
                return float(u.value_many(x[None, :])[0]) - float(yf @ x)

            def grad(x):
                return u.grad_many(x[None, :])[0] - yf

            res = minimize(obj, np.zeros(len(yf)), jac=grad, method="BFGS",
                           options={"gtol": 1e-12, "maxiter": 500})
            return -float(res.fun)

        return ChebyshevTransform("numeric", dom, numeric, certificate=(-width, 0.0))
    raise IncomparableFamilies("no Chebyshev transform for this input")
