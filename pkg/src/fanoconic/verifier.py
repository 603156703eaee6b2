"""Pointwise verification of one instantiated conic bundle.

The divisor-level certificate says what classes the defining data must
have; this module actually draws the sections, builds the symmetric matrix

        [ s1   s2   l1 ]
    S = [ s2   s3   l2 ]      s_i in (2,-2m), l_i in (2,-m), sigma in (2,0),
        [ l1   l2   sig]

and interrogates the fibration F = z^T S z = 0 with exact arithmetic:
fiber ranks and degenerate types at sampled points, gradient audits in
honest affine charts, and squarefree/degree probes of det S along rational
lines.  All randomness flows through one seeded generator in a documented
order, so a report is a pure function of (m, seed, n_samples, flags).

The special shape of the default sections (s1 = sigma' y1, s2 = s3 =
sigma' y2, sigma = sigma'^2 with sigma' = y0) forces the boundary identity

    dF restricted to {y1 = y2 = z2 = 0}  =  sigma' (z0^2 dy1 + z1(2 z0 + z1) dy2),

which is checked symbolically, not numerically.  Perturbation mode adds
random sections vanishing on V to second order to the s-block and V-
vanishing corrections to sigma' and sigma; the identity survives because
the extra terms never contribute first-order terms along V.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

from fractions import Fraction

from .coxring import CoxGrading, cox_ring, random_section, y_indices
from .linalg import bareiss_rank, clear_denominators, det3, kernel_vector_3x3
from .picard import ConstructionParams, DivisorClassY
from .polynomial import (
    Poly,
    PolyRing,
    u_add,
    u_degree,
    u_is_squarefree,
    u_mul,
    u_trim,
)

Z_GRID = ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (1, -2, 0))

LINE_RESAMPLE_CAP = 25


@lru_cache(maxsize=None)
def _conic_ring(m: int) -> PolyRing:
    names = [f"x{i}" for i in range(3 * m + 1)] + ["y0", "y1", "y2", "z0", "z1", "z2"]
    return PolyRing(names)


def conic_ring(params: ConstructionParams) -> PolyRing:
    """Cox ring of Y extended by the fiber coordinates z0, z1, z2."""
    return _conic_ring(params.m)


@dataclass(frozen=True)
class CoxPointY:
    """A point of Y in Cox coordinates, exact rational entries."""

    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        if len(self.y) != 3:
            raise ValueError("y must have three coordinates")

    @property
    def coords(self) -> tuple:
        return self.x + self.y

    def is_admissible(self) -> bool:
        return any(c != 0 for c in self.x) and any(c != 0 for c in self.y)

    def on_V(self) -> bool:
        return self.y[1] == 0 and self.y[2] == 0


class FiberType(str, Enum):
    SMOOTH_CONIC = "SMOOTH_CONIC"
    LINE_PAIR = "LINE_PAIR"
    DOUBLE_LINE = "DOUBLE_LINE"
    WHOLE_PLANE = "WHOLE_PLANE"


_RANK_TO_TYPE = {
    3: FiberType.SMOOTH_CONIC,
    2: FiberType.LINE_PAIR,
    1: FiberType.DOUBLE_LINE,
    0: FiberType.WHOLE_PLANE,
}


@dataclass(frozen=True)
class FiberDiagnosis:
    rank: int
    fiber_type: FiberType
    node: tuple | None  # primitive integer kernel direction when rank is 2

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "type": self.fiber_type.value,
            "node": list(self.node) if self.node is not None else None,
        }


def diagnose_conic(rows) -> FiberDiagnosis:
    """Classify a numeric symmetric 3x3 matrix as a plane conic."""
    cleared = clear_denominators(rows)
    rank = bareiss_rank(cleared)
    node = kernel_vector_3x3(cleared) if rank == 2 else None
    return FiberDiagnosis(rank, _RANK_TO_TYPE[rank], node)


_SLOT_NAMES = ("s1", "s2", "s3", "lam1", "lam2", "sigma")


def _slot_degrees(params: ConstructionParams) -> dict:
    t, m = params.twist, params.m
    return {
        "s1": DivisorClassY(2, -t), "s2": DivisorClassY(2, -t),
        "s3": DivisorClassY(2, -t),
        "lam1": DivisorClassY(2, -m), "lam2": DivisorClassY(2, -m),
        "sigma": DivisorClassY(2, 0),
    }


@dataclass(frozen=True)
class ConicMatrix:
    """The six section entries plus the metadata that produced them.

    sigma_prime is kept so the boundary identity can be stated for the
    perturbed family too; hand-built matrices may pass None, which skips
    that check.  Entries are degree-validated at construction (the zero
    polynomial is allowed in any slot).
    """

    params: ConstructionParams
    s1: Poly
    s2: Poly
    s3: Poly
    lam1: Poly
    lam2: Poly
    sigma: Poly
    sigma_prime: Poly | None = None
    seed: int | None = None
    perturb: bool = False
    coeff_range: int | None = None

    def __post_init__(self):
        grading = CoxGrading(self.params)
        wants = _slot_degrees(self.params)
        for name in _SLOT_NAMES:
            deg = grading.poly_degree(getattr(self, name))
            if deg is not None and deg != wants[name]:
                raise ValueError(
                    f"entry {name} has degree {deg}, expected {wants[name]}"
                )

    def named_entries(self):
        return tuple((name, getattr(self, name)) for name in _SLOT_NAMES)

    def rows(self):
        return (
            (self.s1, self.s2, self.lam1),
            (self.s2, self.s3, self.lam2),
            (self.lam1, self.lam2, self.sigma),
        )

    def evaluate(self, point: CoxPointY):
        c = point.coords
        s1, s2, s3 = self.s1.eval(c), self.s2.eval(c), self.s3.eval(c)
        l1, l2, sg = self.lam1.eval(c), self.lam2.eval(c), self.sigma.eval(c)
        return [[s1, s2, l1], [s2, s3, l2], [l1, l2, sg]]

    @cached_property
    def quadratic_form(self) -> Poly:
        """F = z^T S z in the extended ring."""
        ring = conic_ring(self.params)
        nz = ring.n - 3
        z = [ring.var(nz + k) for k in range(3)]
        rows = self.rows()
        F = ring.zero()
        for i in range(3):
            for j in range(i, 3):
                mult = 1 if i == j else 2
                F = F + mult * rows[i][j].lift(ring) * z[i] * z[j]
        return F


def instantiate_sections(params: ConstructionParams, seed: int,
                         coeff_range: int = 100, perturb: bool = False) -> ConicMatrix:
    """Draw the section matrix for one instance, deterministically.

    Default mode is the special shape with lam1, lam2 the only random
    entries; perturb additionally mixes random higher-order terms into the
    s-block, sigma' and sigma.  The lam draws come first so both modes
    share them at equal seeds.
    """
    rng = random.Random(seed)
    drawn = _instantiate_from_rng(params, rng, coeff_range, perturb)
    return ConicMatrix(
        params, *drawn[:6], sigma_prime=drawn[6],
        seed=seed, perturb=perturb, coeff_range=coeff_range,
    )


def _instantiate_from_rng(params, rng, coeff_range, perturb):
    ring = cox_ring(params)
    iy0, iy1, iy2 = y_indices(params)
    y0, y1, y2 = ring.var(iy0), ring.var(iy1), ring.var(iy2)
    t, m = params.twist, params.m

    lam1 = random_section(DivisorClassY(2, -m), params, rng=rng, coeff_range=coeff_range)
    lam2 = random_section(DivisorClassY(2, -m), params, rng=rng, coeff_range=coeff_range)

    sigma_prime = y0
    r1 = r2 = w = ring.zero()
    if perturb:
        sigma_prime = y0 + random_section(
            DivisorClassY(1, 0), params, rng=rng, coeff_range=coeff_range, min_y_order=1
        )
        r1 = random_section(
            DivisorClassY(2, -t), params, rng=rng, coeff_range=coeff_range, min_y_order=2
        )
        r2 = random_section(
            DivisorClassY(2, -t), params, rng=rng, coeff_range=coeff_range, min_y_order=2
        )
        w = random_section(
            DivisorClassY(2, 0), params, rng=rng, coeff_range=coeff_range, min_y_order=1
        )

    s1 = sigma_prime * y1 + r1
    s2 = sigma_prime * y2 + r2
    s3 = s2
    sigma = sigma_prime * sigma_prime + w
    return (s1, s2, s3, lam1, lam2, sigma, sigma_prime)


def fiber_at(matrix: ConicMatrix, point: CoxPointY) -> FiberDiagnosis:
    """Exact rank diagnosis of the conic over one point.

    Invariant under the torus scalings of the point because rescaling acts
    on S by a diagonal congruence.
    """
    if not point.is_admissible():
        raise ValueError("point hits an irrelevant locus")
    return diagnose_conic(matrix.evaluate(point))


# -- chart gradients -------------------------------------------------------
#
# The smoothness audits work in the affine chart x_{j*} = 1, y0 = 1,
# z_{k*} = 1 (j* the largest |x| coordinate, k* the largest |z|).  Instead
# of rescaling the point into the chart and paying for Fraction arithmetic
# everywhere, everything is evaluated at the raw integer representative:
# for an entry of bidegree (2, b) and the chart scale nu = x_{j*}, the
# entry value and each of its partials at the normalized point equal the
# raw ones times nu^{-b} and a further per-component nonzero torus factor.
# The nu^{-b} weights (b is -2m, -m or 0, so these are integer powers of
# nu) must stay inside the sums below because they differ between the
# entry blocks; the per-component outer factors and the z-normalization
# scale are dropped, which changes no zero/nonzero verdict.


def _chart_frame(point: CoxPointY, z):
    if not point.is_admissible():
        raise ValueError("point hits an irrelevant locus")
    if point.y[0] == 0:
        raise ValueError("point lies outside the y0 chart")
    xs = point.x
    jx = max(range(len(xs)), key=lambda i: abs(xs[i]))
    if len(z) != 3:
        raise ValueError("z must have three coordinates")
    kz = max(range(3), key=lambda i: abs(z[i]))
    if z[kz] == 0:
        raise ValueError("zero fiber direction")
    return jx, kz


def _entry_evals(matrix: ConicMatrix, point: CoxPointY):
    coords = point.coords
    return {name: poly.eval_with_gradient(coords)
            for name, poly in matrix.named_entries()}


def _audit_gradient(matrix, point, z, evals=None):
    """Return (lies_on_fibration, gradient_nonzero) for the chart audit."""
    params = matrix.params
    jx, kz = _chart_frame(point, z)
    if evals is None:
        evals = _entry_evals(matrix, point)
    num = point.x[jx] ** params.m
    nut = num * num
    nu_w = {"s1": nut, "s2": nut, "s3": nut,
            "lam1": num, "lam2": num, "sigma": 1}
    z0, z1, z2 = z
    zw = {"s1": z0 * z0, "s2": 2 * z0 * z1, "s3": z1 * z1,
          "lam1": 2 * z0 * z2, "lam2": 2 * z1 * z2, "sigma": z2 * z2}
    weights = [(name, zw[name] * nu_w[name]) for name in _SLOT_NAMES
               if zw[name] != 0]

    value = sum(w * evals[name][0] for name, w in weights)

    ncox = params.n_x + 3
    iy0 = params.n_x
    base = [0] * ncox
    for name, w in weights:
        grad = evals[name][1]
        for v in range(ncox):
            g = grad[v]
            if g:
                base[v] += w * g
    val = {name: evals[name][0] for name in _SLOT_NAMES}
    zgrad = (
        nut * (val["s1"] * z0 + val["s2"] * z1) + num * val["lam1"] * z2,
        nut * (val["s2"] * z0 + val["s3"] * z1) + num * val["lam2"] * z2,
        num * (val["lam1"] * z0 + val["lam2"] * z1) + val["sigma"] * z2,
    )
    nonzero = any(base[v] for v in range(ncox) if v != jx and v != iy0) \
        or any(zgrad[k] for k in range(3) if k != kz)
    return value == 0, nonzero


def check_smooth_at_V_point(matrix: ConicMatrix, point: CoxPointY, z) -> bool:
    """Gradient-nonzero verdict for a point of the boundary surface W.

    The point must lie on V and z on the double line {z2 = 0}; such points
    automatically lie on the fibration, and the audit asks whether the
    total space is smooth there.
    """
    if not point.on_V():
        raise ValueError("point is not on V")
    if z[2] != 0:
        raise ValueError("z must lie on the double line z2 = 0")
    on_x, nonzero = _audit_gradient(matrix, point, z)
    if not on_x:
        raise ValueError("point does not lie on the fibration")
    return nonzero


def check_smooth_at_node(matrix: ConicMatrix, point: CoxPointY,
                         diagnosis: FiberDiagnosis | None = None) -> bool:
    """Gradient-nonzero verdict at the node of a rank-2 fiber.

    The kernel direction is recomputed in the chart frame (the torus
    rescaling twists the fiber trivialization by diag(nu^m, nu^m, 1), so a
    kernel computed in the raw frame would belong to a different basis).
    A diagnosis, if supplied, only gates on the fiber really having rank 2.
    """
    if diagnosis is not None and diagnosis.rank != 2:
        raise ValueError("node check needs a rank-2 fiber")
    params = matrix.params
    jx, _ = _chart_frame(point, (1, 1, 1))
    evals = _entry_evals(matrix, point)
    val = {name: evals[name][0] for name in _SLOT_NAMES}
    num = point.x[jx] ** params.m
    nut = num * num
    chart_rows = [
        [nut * val["s1"], nut * val["s2"], num * val["lam1"]],
        [nut * val["s2"], nut * val["s3"], num * val["lam2"]],
        [num * val["lam1"], num * val["lam2"], val["sigma"]],
    ]
    node = kernel_vector_3x3(clear_denominators(chart_rows))
    if node is None:
        raise ValueError("fiber does not have rank 2 at this point")
    on_x, nonzero = _audit_gradient(matrix, point, node, evals=evals)
    if not on_x:
        raise ValueError("node does not lie on the fibration")
    return nonzero


# -- the boundary identity, symbolically -----------------------------------


def boundary_identity_verdict(matrix: ConicMatrix) -> str:
    """Check dF|_W = sigma'(z0^2 dy1 + z1(2 z0 + z1) dy2) exactly.

    All partial derivatives of F are restricted to {y1 = y2 = z2 = 0} as
    polynomials and compared against the stated right-hand side, which is
    the chart identity in homogeneous form (each z-chart version follows
    by setting the corresponding z to 1).  Returns PASS, FAIL, or SKIPPED
    when the matrix does not carry a sigma'.
    """
    if matrix.sigma_prime is None:
        return "SKIPPED"
    params = matrix.params
    ring = conic_ring(params)
    iy0, iy1, iy2 = y_indices(params)
    iz0, iz1, iz2 = ring.n - 3, ring.n - 2, ring.n - 1
    F = matrix.quadratic_form
    wall = {iy1: 0, iy2: 0, iz2: 0}
    sp = matrix.sigma_prime.subs({iy1: 0, iy2: 0}).lift(ring)
    z0, z1 = ring.var(iz0), ring.var(iz1)
    expected = {
        iy1: sp * z0 * z0,
        iy2: sp * z1 * (2 * z0 + z1),
    }
    for v in range(ring.n):
        got = F.diff(v).subs(wall)
        want = expected.get(v, ring.zero())
        if got != want:
            return "FAIL"
    return "PASS"


# -- line probes ------------------------------------------------------------


@dataclass(frozen=True)
class LineProbe:
    degree: int              # degree in t of det S on the line, -1 if zero
    squarefree: bool | None  # None when the restriction vanishes identically
    identically_zero: bool

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "squarefree": self.squarefree,
            "identically_zero": self.identically_zero,
        }


def _line_degree_bound(poly: Poly, support) -> int | None:
    """Largest t-degree a term of poly can reach on a line moving along
    the given variable support; None for the zero polynomial."""
    best = None
    for exps in poly.terms:
        s = sum(exps[i] for i in support)
        if best is None or s > best:
            best = s
    return best


def _nodes(count: int) -> list:
    out = [0]
    k = 1
    while len(out) < count:
        out.append(k)
        if len(out) < count:
            out.append(-k)
        k += 1
    return out


def _interpolate_newton(ts, vals) -> list:
    """Exact ascending coefficients through the (t, value) pairs.

    Newton divided differences over Q; the samples come from an integer
    polynomial of degree < len(ts), so the coefficients must land back in
    the integers and the interpolant is that polynomial.
    """
    n = len(ts)
    dd = [Fraction(v) for v in vals]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - j])
    coeffs = [dd[0]]
    basis = [1]
    for k in range(1, n):
        basis = u_mul(basis, [-ts[k - 1], 1])
        if dd[k]:
            coeffs = u_add(coeffs, [dd[k] * c for c in basis])
    out = []
    for c in u_trim(coeffs):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise AssertionError("integer interpolation produced a fraction")
            c = int(c)
        out.append(c)
    return out


def discriminant_on_line(matrix: ConicMatrix, point, direction) -> LineProbe:
    """Restrict det S to the rational line point + t*direction.

    The line must not be contained in an irrelevant locus (its x-part and
    y-part must not both vanish identically).  The restriction is
    recovered exactly by sampling det S at integer parameters and Newton
    interpolation against an a-priori degree bound; the squarefree test is
    then gcd with the derivative over Q.
    """
    params = matrix.params
    nx = params.n_x
    point = tuple(point)
    direction = tuple(direction)
    if len(point) != nx + 3 or len(direction) != nx + 3:
        raise ValueError("line data has the wrong number of coordinates")
    if not any(point[:nx]) and not any(direction[:nx]):
        raise ValueError("line lies inside the locus x = 0")
    if not any(point[nx:]) and not any(direction[nx:]):
        raise ValueError("line lies inside the locus y = 0")

    support = tuple(i for i, d in enumerate(direction) if d != 0)
    bounds = {name: _line_degree_bound(poly, support)
              for name, poly in matrix.named_entries()}

    def product_bound(*names):
        total = 0
        for name in names:
            b = bounds[name]
            if b is None:
                return None
            total += b
        return total

    candidates = [
        product_bound("s1", "s3", "sigma"),
        product_bound("s2", "s2", "sigma"),
        product_bound("s2", "lam1", "lam2"),
        product_bound("s3", "lam1", "lam1"),
        product_bound("s1", "lam2", "lam2"),
    ]
    live = [c for c in candidates if c is not None]
    if not live:
        return LineProbe(-1, None, True)

    ts = _nodes(max(live) + 1)
    entries = matrix.named_entries()
    vals = []
    for t in ts:
        coords = tuple(p + t * d for p, d in zip(point, direction))
        e = {name: poly.eval(coords) for name, poly in entries}
        vals.append(det3([
            [e["s1"], e["s2"], e["lam1"]],
            [e["s2"], e["s3"], e["lam2"]],
            [e["lam1"], e["lam2"], e["sigma"]],
        ]))
    det = _interpolate_newton(ts, vals)
    deg = u_degree(det)
    if deg < 0:
        return LineProbe(-1, None, True)
    return LineProbe(deg, u_is_squarefree(det), False)


# -- sampling ---------------------------------------------------------------


def _draw_nonzero(rng, bound):
    v = rng.randint(1, 2 * bound)
    return v - bound - 1 if v <= bound else v - bound


def _sample_x(params, rng, bound):
    while True:
        xs = tuple(rng.randint(-bound, bound) for _ in range(params.n_x))
        if any(xs):
            return xs


def sample_v_point(params: ConstructionParams, rng: random.Random,
                   coeff_range: int = 100) -> CoxPointY:
    """A random point of V: random x, y = (y0, 0, 0) with y0 nonzero."""
    return CoxPointY(_sample_x(params, rng, coeff_range),
                     (_draw_nonzero(rng, coeff_range), 0, 0))


def sample_generic_point(params: ConstructionParams, rng: random.Random,
                         coeff_range: int = 100) -> CoxPointY:
    """A random point off V with y0 != 0 (both exceptional loci are thin,
    and the y0 chart is where the gradient audits live)."""
    xs = _sample_x(params, rng, coeff_range)
    y0 = _draw_nonzero(rng, coeff_range)
    while True:
        y1 = rng.randint(-coeff_range, coeff_range)
        y2 = rng.randint(-coeff_range, coeff_range)
        if y1 or y2:
            return CoxPointY(xs, (y0, y1, y2))


def _sample_chart_line(params, rng, bound):
    """A random line inside the chart x0 = 1, y0 = 1."""
    nx = params.n_x
    point = (1,) + tuple(rng.randint(-bound, bound) for _ in range(nx - 1)) \
        + (1, rng.randint(-bound, bound), rng.randint(-bound, bound))
    while True:
        direction = (0,) + tuple(rng.randint(-bound, bound) for _ in range(nx - 1)) \
            + (0, rng.randint(-bound, bound), rng.randint(-bound, bound))
        if any(direction):
            return point, direction


def _sample_fiber_line(params, rng, bound):
    """A random line inside one fiber of Y -> P^{3m}: x frozen, y a pencil."""
    nx = params.n_x
    xs = _sample_x(params, rng, bound)
    while True:
        u = tuple(rng.randint(-bound, bound) for _ in range(3))
        v = tuple(rng.randint(-bound, bound) for _ in range(3))
        if (u[0] * v[1] - u[1] * v[0], u[0] * v[2] - u[2] * v[0],
                u[1] * v[2] - u[2] * v[1]) != (0, 0, 0):
            return xs + u, (0,) * nx + v


# -- the instance report -----------------------------------------------------


@dataclass(frozen=True)
class InstanceReport:
    m: int
    seed: int
    n_samples: int
    coeff_range: int
    perturb: bool
    section_terms: dict
    v_fibers: dict
    generic_fibers: dict
    boundary_identity: str
    chart_lines: dict
    fiber_lines: dict
    failures: tuple
    passed: bool

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "seed": self.seed,
            "n_samples": self.n_samples,
            "coeff_range": self.coeff_range,
            "perturb": self.perturb,
            "section_terms": dict(self.section_terms),
            "v_fibers": dict(self.v_fibers),
            "generic_fibers": dict(self.generic_fibers),
            "boundary_identity": self.boundary_identity,
            "chart_lines": dict(self.chart_lines),
            "fiber_lines": dict(self.fiber_lines),
            "failures": [dict(f) for f in self.failures],
            "passed": self.passed,
        }


def run_instance(params: ConstructionParams, seed: int, n_samples: int,
                 coeff_range: int = 100, perturb: bool = False,
                 sections: ConicMatrix | None = None) -> InstanceReport:
    """Draw one instance and run the full sampling audit.

    Draw order (all from one generator seeded with seed): section matrix,
    V points, generic points, chart lines, fiber lines; resamples consume
    the same stream.  n_samples controls the point counts and the chart
    lines; fiber lines get max(1, n_samples // 5).  The sections argument
    is a test hook that skips the draw and audits a prebuilt matrix.

    Every deviation lands in failures with its witness; passed means no
    failures.  A generic sample landing on the discriminant is not a
    deviation as long as its node passes the smoothness audit.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be positive")
    rng = random.Random(seed)
    if sections is None:
        drawn = _instantiate_from_rng(params, rng, coeff_range, perturb)
        matrix = ConicMatrix(params, *drawn[:6], sigma_prime=drawn[6],
                             seed=seed, perturb=perturb, coeff_range=coeff_range)
    else:
        matrix = sections

    failures: list[dict] = []

    # fibers over V, with the z-grid gradient audit
    v_samples = []
    n_double = n_sigma = n_grid = 0
    for i in range(n_samples):
        p = sample_v_point(params, rng, coeff_range)
        evals = _entry_evals(matrix, p)
        rows = [
            [evals["s1"][0], evals["s2"][0], evals["lam1"][0]],
            [evals["s2"][0], evals["s3"][0], evals["lam2"][0]],
            [evals["lam1"][0], evals["lam2"][0], evals["sigma"][0]],
        ]
        diag = diagnose_conic(rows)
        ok_type = diag.fiber_type is FiberType.DOUBLE_LINE
        n_double += ok_type
        if not ok_type:
            failures.append({
                "check": "v_fiber_double_line", "index": i,
                "x": list(p.x), "y": list(p.y), "got": diag.fiber_type.value,
            })
        sigma_ok = evals["sigma"][0] != 0
        n_sigma += sigma_ok
        if not sigma_ok:
            failures.append({
                "check": "sigma_nonzero_on_V", "index": i,
                "x": list(p.x), "y": list(p.y),
            })
        grid_ok = True
        for z in Z_GRID:
            on_x, nonzero = _audit_gradient(matrix, p, z, evals=evals)
            if not on_x:
                raise AssertionError("V-grid point fell off the fibration")
            if not nonzero:
                grid_ok = False
                failures.append({
                    "check": "gradient_on_W", "index": i, "z": list(z),
                    "x": list(p.x), "y": list(p.y),
                })
        n_grid += grid_ok
        v_samples.append({
            "x": list(p.x), "y0": p.y[0], "fiber": diag.fiber_type.value,
            "sigma_nonzero": sigma_ok, "grid_ok": grid_ok,
        })

    # generic fibers
    g_samples = []
    n_smooth = n_pair = n_pair_smooth = 0
    for i in range(n_samples):
        p = sample_generic_point(params, rng, coeff_range)
        diag = fiber_at(matrix, p)
        rec = {"x": list(p.x), "y": list(p.y), "fiber": diag.fiber_type.value}
        if diag.fiber_type is FiberType.SMOOTH_CONIC:
            n_smooth += 1
        elif diag.fiber_type is FiberType.LINE_PAIR:
            # a generic sample can land on the discriminant; diagnose, do
            # not fail, unless the node is actually a singular point of X
            n_pair += 1
            node_ok = check_smooth_at_node(matrix, p, diag)
            n_pair_smooth += node_ok
            rec["node_smooth"] = node_ok
            if not node_ok:
                failures.append({
                    "check": "node_smoothness", "index": i,
                    "x": list(p.x), "y": list(p.y), "node": list(diag.node),
                })
        else:
            failures.append({
                "check": "generic_fiber_rank", "index": i,
                "x": list(p.x), "y": list(p.y), "got": diag.fiber_type.value,
            })
        g_samples.append(rec)

    verdict = boundary_identity_verdict(matrix)
    if verdict == "FAIL":
        failures.append({"check": "boundary_identity"})

    # chart lines: det S restricted to a general line stays squarefree
    c_samples = []
    n_sqfree = c_resampled = 0
    for i in range(n_samples):
        probe = None
        for _ in range(LINE_RESAMPLE_CAP):
            u, v = _sample_chart_line(params, rng, coeff_range)
            probe = discriminant_on_line(matrix, u, v)
            if not probe.identically_zero:
                break
            c_resampled += 1
        else:
            failures.append({"check": "chart_line_resample_exhausted", "index": i})
            c_samples.append({"degree": -1, "squarefree": None})
            continue
        n_sqfree += bool(probe.squarefree)
        if not probe.squarefree:
            failures.append({
                "check": "chart_line_squarefree", "index": i,
                "point": list(u), "direction": list(v), "degree": probe.degree,
            })
        c_samples.append({"degree": probe.degree, "squarefree": probe.squarefree})

    # fiber lines: the restriction of det S to a fiber is a sextic
    f_samples = []
    n_deg6 = f_resampled = 0
    n_fiber_lines = max(1, n_samples // 5)
    for i in range(n_fiber_lines):
        probe = None
        for _ in range(LINE_RESAMPLE_CAP):
            u, v = _sample_fiber_line(params, rng, coeff_range)
            probe = discriminant_on_line(matrix, u, v)
            if not probe.identically_zero:
                break
            f_resampled += 1
        else:
            failures.append({"check": "fiber_line_resample_exhausted", "index": i})
            f_samples.append({"degree": -1, "squarefree": None})
            continue
        ok = probe.degree == 6
        n_deg6 += ok
        if not ok:
            failures.append({
                "check": "fiber_line_degree", "index": i,
                "point": list(u), "direction": list(v), "degree": probe.degree,
            })
        f_samples.append({"degree": probe.degree, "squarefree": probe.squarefree})

    passed = not failures

    return InstanceReport(
        m=params.m,
        seed=seed,
        n_samples=n_samples,
        coeff_range=coeff_range,
        perturb=perturb,
        section_terms={name: len(poly) for name, poly in matrix.named_entries()},
        v_fibers={
            "count": n_samples, "double_line": n_double,
            "sigma_nonzero": n_sigma, "grid_ok": n_grid,
            "grid_points_per_sample": len(Z_GRID), "samples": v_samples,
        },
        generic_fibers={
            "count": n_samples, "smooth_conic": n_smooth,
            "line_pair": n_pair, "line_pair_smooth": n_pair_smooth,
            "samples": g_samples,
        },
        boundary_identity=verdict,
        chart_lines={
            "count": n_samples, "squarefree": n_sqfree,
            "resampled_zero": c_resampled, "samples": c_samples,
        },
        fiber_lines={
            "count": n_fiber_lines, "degree_six": n_deg6,
            "resampled_zero": f_resampled, "samples": f_samples,
        },
        failures=tuple(failures),
        passed=passed,
    )
