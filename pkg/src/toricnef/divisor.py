"""Torus-invariant divisors: nef tests, nef cones, triviality, polytopes.

A divisor is one rational coefficient per ray.  Nef-ness is decided two
independent ways: through the wall inequality system, and through per-cone
linear data; both are kept as production code paths because they guard each
other's sign conventions.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .fan import walls
from .lattice import dot, in_row_span, matvec, primitive, rank, smith_normal_form, solve, transpose
from .polyhedra import (
    HCone,
    Polyhedron,
    VCone,
    cone_is_trivial_modulo,
    dd_convert,
    strict_feasible,
    strict_point,
    vrep,
)


@dataclass(frozen=True)
class Divisor:
    """Coefficients d_i of sum(d_i * D_i), one per ray of the fan."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(x) for x in self.coeffs))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __add__(self, other):
        return Divisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, scalar):
        return Divisor(tuple(Fraction(scalar) * c for c in self.coeffs))


@dataclass(frozen=True)
class CartierData:
    """Per maximal cone, the linear functional agreeing with -d on its rays."""

    entries: tuple


def anticanonical(fan):
    return Divisor((1,) * len(fan.rays))


def principal_divisor(fan, u):
    """The divisor of the character u: coefficients <u, v_i>."""
    return Divisor(tuple(dot(u, v) for v in fan.rays))


def principal_rows(fan):
    """Spanning rows of the principal-divisor subspace (one per coordinate)."""
    return transpose(fan.rays)


def _check_length(fan, d):
    if len(d.coeffs) != len(fan.rays):
        raise ValueError(
            f"divisor has {len(d.coeffs)} coefficients, fan has {len(fan.rays)} rays"
        )


@lru_cache(maxsize=None)
def nef_system(fan):
    """The inequality system over coefficient space with one row per wall.

    A divisor is nef exactly when every row has nonnegative pairing with its
    coefficient vector.
    """
    return HCone(len(fan.rays), tuple(w.relation for w in walls(fan)))


def is_nef(fan, d):
    _check_length(fan, d)
    return all(dot(row, d.coeffs) >= 0 for row in nef_system(fan).rows)


def is_trivial_class(fan, d):
    """Whether d is the divisor of a character (linearly equivalent to 0)."""
    _check_length(fan, d)
    return in_row_span(principal_rows(fan), d.coeffs)


@lru_cache(maxsize=None)
def class_map(fan):
    """Integer matrix sending coefficient vectors to divisor-class coordinates.

    The rows are the last (#rays - dim) rows of the left Smith transform of
    the ray matrix; they vanish exactly on the principal subspace.  Any torsion
    in the class group would make these coordinates lossy, so it is rejected.
    """
    diag, u, _ = smith_normal_form(fan.rays)
    nonzero = sum(1 for x in diag if x != 0)
    if any(x not in (0, 1) for x in diag):
        raise ValueError("divisor class group has torsion; no free coordinates")
    return tuple(u[nonzero:])


def nef_cone(fan):
    """Extreme rays of the nef cone in divisor-class coordinates."""
    vc = dd_convert(nef_system(fan))
    principal = principal_rows(fan)
    span_rank = rank(principal, len(fan.rays))
    joint = list(vc.lineality) + list(principal)
    if len(vc.lineality) != span_rank or rank(joint, len(fan.rays)) != span_rank:
        raise RuntimeError("nef system lineality differs from the principal subspace")
    cm = class_map(fan)
    rays = sorted({primitive(matvec(cm, r)) for r in vc.rays})
    return VCone(len(cm), tuple(rays), ())


def divisor_class(fan, d):
    _check_length(fan, d)
    return matvec(class_map(fan), d.coeffs)


def has_no_nontrivial_nef(fan):
    """Whether the nef cone is {0} modulo linear equivalence."""
    return cone_is_trivial_modulo(nef_system(fan), principal_rows(fan))


def is_projective(fan):
    """Strict feasibility of the wall system == existence of an ample divisor."""
    return strict_feasible(nef_system(fan))


def ample_divisor(fan):
    """An integral divisor with strictly positive pairing on every wall row.

    Returns None when the fan is not projective.  On non-smooth fans the
    result is scaled so its per-cone linear data is integral.
    """
    point = strict_point(nef_system(fan))
    if point is None:
        return None
    d = Divisor(point)
    mult = cartier_multiple(fan, d)
    return mult * d if mult != 1 else d


def polytope(fan, d):
    """P_D = {u : <u, v_i> >= -d_i for all i}."""
    _check_length(fan, d)
    return Polyhedron(fan.dim, tuple((v, -c) for v, c in zip(fan.rays, d.coeffs)))


def support_min_check(fan, d):
    """Whether -d_i equals the minimum of <u, v_i> over P_D, for every i.

    Intended for nef d; requires P_D bounded.
    """
    verts, rec, lines = vrep(polytope(fan, d))
    if rec or lines:
        raise ValueError("P_D is unbounded")
    if not verts:
        return False
    for v, c in zip(fan.rays, d.coeffs):
        if min(dot(u, v) for u in verts) != -c:
            return False
    return True


def support_data(fan, d):
    """Per maximal cone, u_sigma with <u_sigma, v_i> = -d_i on the cone's rays.

    Exists uniquely (over the rationals) for every simplicial cone.
    """
    _check_length(fan, d)
    out = []
    for cone in fan.max_cones:
        rows = [fan.rays[i] for i in cone]
        rhs = [-d.coeffs[i] for i in cone]
        out.append(solve(rows, rhs))
    return tuple(out)


def cartier_data(fan, d):
    """Integral per-cone data of an integral divisor on a smooth fan."""
    if not d.is_integral():
        raise ValueError("Cartier data requires integral coefficients")
    entries = []
    for u in support_data(fan, d):
        if any(x.denominator != 1 for x in u):
            raise ValueError("divisor is not Cartier on this fan")
        entries.append(tuple(int(x) for x in u))
    return CartierData(tuple(entries))


def cartier_multiple(fan, d):
    """Smallest positive integer m such that m*d has integral per-cone data."""
    mult = 1
    for u in support_data(fan, d):
        for x in u:
            den = x.denominator
            mult = mult * den // gcd(mult, den)
    return mult


def is_nef_via_cartier(fan, d):
    """Nef test through per-cone linear data, independent of the wall route.

    The divisor is nef exactly when every cone's functional is a global
    under-estimate: <u_sigma, v_j> >= -d_j for every cone and every ray.
    """
    for u in support_data(fan, d):
        for v, c in zip(fan.rays, d.coeffs):
            if dot(u, v) < -c:
                return False
    return True


def parse_divisor(raw, fan):
    """Divisor from CLI/JSON forms: "-K", a list, or comma-separated tokens."""
    if isinstance(raw, str):
        if raw.strip() == "-K":
            return anticanonical(fan)
        tokens = [t.strip() for t in raw.split(",")]
    else:
        tokens = list(raw)
    coeffs = []
    for t in tokens:
        if isinstance(t, (bool, float)):
            raise ValueError(f"invalid divisor coefficient {t!r}: exact integers or p/q only")
        try:
            coeffs.append(Fraction(t))
        except (ValueError, ZeroDivisionError, TypeError):
            raise ValueError(f"invalid divisor coefficient {t!r}") from None
    d = Divisor(tuple(coeffs))
    _check_length(fan, d)
    return d


def divisor_to_json(d):
    return [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in d.coeffs]
