"""Exact rational cones and polyhedra via the double description method.

Cones are handled in two representations: HCone is an intersection of
half-spaces through the origin, VCone a set of extreme rays plus a lineality
basis.  dd_convert turns the former into the latter and everything else here
(strict feasibility, triviality, vertex enumeration) is built on top of that
single kernel.  All arithmetic is exact; output orders are deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .lattice import dot, kernel_basis, primitive, rank, solve


def _clean_rows(dim, rows):
    out = []
    for row in rows:
        row = tuple(row)
        if len(row) != dim:
            raise ValueError(f"inequality row {row} has length {len(row)}, expected {dim}")
        if all(x == 0 for x in row):
            continue
        out.append(primitive(row))
    return tuple(out)


@dataclass(frozen=True)
class HCone:
    """The cone {x : <a, x> >= 0 for every row a}.

    Rows are normalized to primitive integer vectors; zero rows are stripped.
    Duplicate rows are kept (they are harmless and callers may want one row
    per generating datum); dd_convert deduplicates internally.
    """

    dim: int
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", _clean_rows(self.dim, self.rows))


@dataclass(frozen=True)
class VCone:
    """Extreme rays plus lineality basis, all primitive integer vectors."""

    dim: int
    rays: tuple
    lineality: tuple

    def is_trivial(self):
        return not self.rays and not self.lineality


@dataclass(frozen=True)
class Polyhedron:
    """The set {u : <a, u> >= b for every pair (a, b)}."""

    dim: int
    inequalities: tuple

    def __post_init__(self):
        ineqs = []
        for normal, offset in self.inequalities:
            normal = tuple(Fraction(x) for x in normal)
            if len(normal) != self.dim:
                raise ValueError("inequality normal has wrong length")
            ineqs.append((normal, Fraction(offset)))
        object.__setattr__(self, "inequalities", tuple(ineqs))


def _project_mod(vec, lin):
    """Orthogonal projection of vec onto the complement of span(lin)."""
    if not lin:
        return tuple(vec)
    gram = [[dot(a, b) for b in lin] for a in lin]
    rhs = [dot(a, vec) for a in lin]
    coeffs = solve(gram, rhs)
    return tuple(Fraction(x) - sum(c * l[i] for c, l in zip(coeffs, lin)) for i, x in enumerate(vec))


def dd_convert(cone):
    """Convert an HCone to its VCone form.

    Rows are deduplicated and inserted in lexicographic order; ray adjacency
    is decided by the rank of the common active constraints.  Output rays are
    reduced modulo the lineality space, scaled to primitive integers, and
    sorted lexicographically; the lineality basis is the RREF kernel basis of
    the row matrix.
    """
    n = cone.dim
    rows = sorted(set(cone.rows))
    lin = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays = []
    processed = []
    for a in rows:
        pivot_idx = next((k for k, l in enumerate(lin) if dot(a, l) != 0), None)
        if pivot_idx is not None:
            p = lin.pop(pivot_idx)
            s = dot(a, p)
            if s < 0:
                p = tuple(-x for x in p)
                s = -s
            lin = [primitive(tuple(s * x - dot(a, l) * y for x, y in zip(l, p))) for l in lin]
            rays = [primitive(tuple(s * x - dot(a, r) * y for x, y in zip(r, p))) for r in rays]
            rays.append(p)
            processed.append(a)
            continue
        vals = [dot(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            processed.append(a)
            continue
        target_rank = n - len(lin) - 2
        keep = [r for r, v in zip(rays, vals) if v >= 0]
        pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
        neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
        new_rays = list(keep)
        for rp, vp in pos:
            for rm, vm in neg:
                active = [b for b in processed if dot(b, rp) == 0 and dot(b, rm) == 0]
                if rank(active, n) != target_rank:
                    continue
                combo = primitive(tuple(vp * x - vm * y for x, y in zip(rm, rp)))
                if combo not in new_rays:
                    new_rays.append(combo)
        rays = new_rays
        processed.append(a)
    lin_basis = kernel_basis(rows, n)
    out_rays = sorted({primitive(_project_mod(r, lin_basis)) for r in rays})
    return VCone(n, tuple(out_rays), tuple(lin_basis))


def cone_is_trivial_modulo(cone, lin_rows):
    """Whether the cone {x : Ax >= 0} equals the row span of lin_rows.

    Every row of lin_rows must already lie in the cone.
    """
    lin_rows = [tuple(r) for r in lin_rows]
    for row in lin_rows:
        if any(dot(a, row) < 0 for a in cone.rows):
            raise ValueError("claimed lineality not contained in cone")
    vc = dd_convert(cone)
    return not vc.rays and len(vc.lineality) == rank(lin_rows, cone.dim)


def _homogenize_strict(cone):
    rows = [tuple(a) + (-1,) for a in cone.rows]
    rows.append((0,) * cone.dim + (1,))
    return HCone(cone.dim + 1, tuple(rows))


def strict_feasible(cone):
    """Whether some x satisfies <a, x> > 0 for every row a.

    Decided by homogenizing with a slack coordinate t (rows become
    <a, x> - t >= 0, plus t >= 0) and looking for a generator with t > 0.
    """
    vc = dd_convert(_homogenize_strict(cone))
    return any(r[-1] > 0 for r in vc.rays)


def strict_point(cone):
    """An integer point with <a, x> > 0 for every row, or None."""
    vc = dd_convert(_homogenize_strict(cone))
    for r in vc.rays:
        if r[-1] > 0:
            return r[:-1]
    return None


def vrep(p):
    """(vertices, recession ray directions, line directions) of a polyhedron.

    Computed from the homogenization cone {(u, s) : <a, u> >= b s, s >= 0};
    vertices are the s > 0 generators rescaled to s = 1.
    """
    rows = [tuple(a) + (-b,) for a, b in p.inequalities]
    rows.append((0,) * p.dim + (1,))
    vc = dd_convert(HCone(p.dim + 1, tuple(rows)))
    verts = []
    rec = []
    for r in vc.rays:
        if r[-1] > 0:
            verts.append(tuple(Fraction(x, r[-1]) for x in r[:-1]))
        else:
            rec.append(r[:-1])
    lines = [l[:-1] for l in vc.lineality]
    assert all(l[-1] == 0 for l in vc.lineality)
    return sorted(verts), rec, lines


def vertices(p):
    """Exact vertex set of a pointed polyhedron, in lexicographic order.

    An empty polyhedron yields the empty list; a nonempty polyhedron that
    contains a line is rejected.
    """
    verts, _rec, lines = vrep(p)
    if not verts:
        return []
    if lines:
        raise ValueError("polyhedron contains a line")
    return verts


def is_bounded(p):
    verts, rec, lines = vrep(p)
    return not rec and not lines


def vcone_dual_rows(vc):
    """H-representation of a VCone: rows a with <a, x> >= 0 exactly on it."""
    rows = list(vc.rays)
    for l in vc.lineality:
        rows.append(l)
        rows.append(tuple(-x for x in l))
    dual = dd_convert(HCone(vc.dim, tuple(rows)))
    out = list(dual.rays)
    for l in dual.lineality:
        out.append(l)
        out.append(tuple(-x for x in l))
    return tuple(out)


def vcone_contains(vc, point):
    """Membership of a rational point in cone(rays) + span(lineality)."""
    return all(dot(a, point) >= 0 for a in vcone_dual_rows(vc))
