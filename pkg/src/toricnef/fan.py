"""Simplicial fans: validation, smoothness, completeness, walls, subdivision.

A Fan stores primitive ray generators and full-dimensional simplicial maximal
cones as sorted ray-index tuples.  Validation enforces the fan axioms,
including the exact pairwise cones-meet-in-a-common-face check.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .lattice import determinant, dot, invert, is_primitive, primitive, smith_normal_form, solve, transpose
from .polyhedra import HCone, dd_convert


class FanValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple
    max_cones: tuple
    name: str = field(default=None, compare=False)
    params: tuple = field(default=(), compare=False)


@dataclass(frozen=True)
class Wall:
    """An adjacent pair of maximal cones and its linear relation.

    relation has one coefficient per ray of the fan, is supported on
    shared + {left, right}, sums to zero against the rays, is scaled to
    coprime integers, and is strictly positive on both opposite rays.
    """

    shared: tuple
    left: int
    right: int
    relation: tuple


def validate(dim, rays, max_cones, name=None, params=()):
    """Check raw fan data against the fan axioms and build a Fan.

    Raises FanValidationError naming the offending ray or cone pair.
    """
    if not isinstance(dim, int) or dim < 1:
        raise FanValidationError(f"dim must be a positive integer, got {dim!r}")
    clean_rays = []
    for i, ray in enumerate(rays):
        ray = tuple(ray)
        if len(ray) != dim:
            raise FanValidationError(f"ray {i} has length {len(ray)}, expected {dim}")
        if any(not isinstance(x, int) or isinstance(x, bool) for x in ray):
            raise FanValidationError(f"ray {i} has non-integer entries: {ray}")
        if all(x == 0 for x in ray):
            raise FanValidationError(f"ray {i} is zero")
        if not is_primitive(ray):
            raise FanValidationError(f"ray {i} not primitive: {ray}")
        clean_rays.append(ray)
    for i, ray in enumerate(clean_rays):
        if ray in clean_rays[:i]:
            raise FanValidationError(f"duplicate ray {ray} at index {i}")
    clean_cones = []
    for cone in max_cones:
        cone = tuple(sorted(cone))
        if len(set(cone)) != len(cone):
            raise FanValidationError(f"cone {cone} repeats a ray index")
        if any(not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < len(clean_rays) for i in cone):
            raise FanValidationError(f"cone {cone} has a ray index out of range")
        if len(cone) != dim:
            raise FanValidationError(f"cone {cone} has {len(cone)} rays, expected {dim}")
        if determinant([clean_rays[i] for i in cone]) == 0:
            raise FanValidationError(f"cone {cone} is not full-dimensional")
        if cone in clean_cones:
            raise FanValidationError(f"duplicate maximal cone {cone}")
        clean_cones.append(cone)
    if not clean_cones:
        raise FanValidationError("fan has no maximal cones")
    used = {i for cone in clean_cones for i in cone}
    for i in range(len(clean_rays)):
        if i not in used:
            raise FanValidationError(f"ray {i} not contained in any maximal cone")

    hreps = [_simplicial_hrep(tuple(clean_rays[i] for i in cone)) for cone in clean_cones]
    for a in range(len(clean_cones)):
        for b in range(a + 1, len(clean_cones)):
            shared = sorted(set(clean_cones[a]) & set(clean_cones[b]))
            meet = dd_convert(HCone(dim, hreps[a] + hreps[b]))
            expected = sorted(clean_rays[i] for i in shared)
            if meet.lineality or list(meet.rays) != expected:
                raise FanValidationError(
                    f"cones {clean_cones[a]} and {clean_cones[b]} do not meet in a face"
                )
    return Fan(dim, tuple(clean_rays), tuple(clean_cones), name=name, params=tuple(params))


@lru_cache(maxsize=None)
def _simplicial_hrep(generators):
    """Inward normals of a full-dimensional simplicial cone, primitive ints."""
    inv = invert(transpose(generators))
    return tuple(primitive(row) for row in inv)


def cone_hrep(fan, cone):
    return _simplicial_hrep(tuple(fan.rays[i] for i in cone))


def barycentric(fan, cone, point):
    """Coordinates of point over the cone's generators (exact)."""
    g = [fan.rays[i] for i in cone]
    return solve(transpose(g), point)


def cone_contains(fan, cone, point):
    return all(x >= 0 for x in barycentric(fan, cone, point))


def is_smooth(fan):
    """Whether every maximal cone's generators form a lattice basis."""
    return all(abs(determinant([fan.rays[i] for i in cone])) == 1 for cone in fan.max_cones)


def _facet_incidences(fan):
    """Map facet (frozenset of ray indices) -> [(cone index, opposite ray index)]."""
    inc = {}
    for ci, cone in enumerate(fan.max_cones):
        for opp in cone:
            facet = frozenset(cone) - {opp}
            inc.setdefault(facet, []).append((ci, opp))
    return inc


# Deterministic stand-in for a generic point; extended for dimensions > 3.
_GENERIC_SEED = [1, 10**7 + 19, 10**13 + 37]


def _generic_point(dim):
    seq = list(_GENERIC_SEED)
    k = 0
    while len(seq) < dim:
        seq.append(10 ** (19 + 6 * k) + 61 + 6 * k)
        k += 1
    return primitive(seq[:dim])


def is_complete(fan):
    """Whether the support of the fan is all of R^n.

    Every facet must be shared by exactly two maximal cones, and a fixed
    generic point must lie in some cone (perturbed deterministically if it
    happens to land on a boundary hyperplane).
    """
    for members in _facet_incidences(fan).values():
        if len(members) != 2:
            return False
    point = _generic_point(fan.dim)
    for _ in range(64):
        on_boundary = False
        for cone in fan.max_cones:
            coords = barycentric(fan, cone, point)
            if all(x > 0 for x in coords):
                return True
            if all(x >= 0 for x in coords):
                on_boundary = True
        if not on_boundary:
            return False
        point = primitive(point[:-1] + (point[-1] + 1,))
    raise RuntimeError("could not find a generic membership point")


@lru_cache(maxsize=None)
def walls(fan):
    """All walls of a valid complete fan, with normalized relations.

    Ordered by (shared indices, opposite pair).  The relation is scaled so
    its entries are coprime integers with both opposite coefficients > 0.
    """
    out = []
    for facet, members in sorted(_facet_incidences(fan).items(), key=lambda kv: sorted(kv[0])):
        if len(members) != 2:
            raise ValueError("fan not complete: unpaired facet "
                             f"{tuple(sorted(facet))}")
        left, right = sorted(opp for _, opp in members)
        shared = tuple(sorted(facet))
        basis = shared + (left,)
        coords = solve(transpose([fan.rays[i] for i in basis]), fan.rays[right])
        rel = [Fraction(0)] * len(fan.rays)
        rel[right] = Fraction(1)
        for idx, lam in zip(basis, coords):
            rel[idx] = -lam
        rel = primitive(rel)
        if rel[right] < 0:
            rel = tuple(-x for x in rel)
        assert rel[left] > 0 and rel[right] > 0, "wall relation is not convex-oriented"
        assert all(dot(rel, col) == 0 for col in transpose(fan.rays))
        out.append(Wall(shared=shared, left=left, right=right, relation=rel))
    return tuple(out)


def star_subdivision(fan, w):
    """Refine the fan by inserting the ray through w.

    Every maximal cone containing w is replaced by the joins of w with its
    facets not containing w; all other cones are kept.
    """
    w = tuple(w)
    if len(w) != fan.dim:
        raise ValueError(f"subdivision point has length {len(w)}, expected {fan.dim}")
    if all(x == 0 for x in w):
        raise ValueError("cannot subdivide at the zero vector")
    if not is_primitive(w):
        raise ValueError(f"subdivision point {w} is not primitive")
    if w in fan.rays:
        raise ValueError(f"{w} is already a ray of the fan")
    new_idx = len(fan.rays)
    new_cones = []
    touched = False
    for cone in fan.max_cones:
        coords = barycentric(fan, cone, w)
        if all(x >= 0 for x in coords):
            touched = True
            for pos, lam in zip(cone, coords):
                if lam > 0:
                    new_cones.append(tuple(sorted(set(cone) - {pos} | {new_idx})))
        else:
            new_cones.append(cone)
    if not touched:
        raise ValueError(f"{w} is not in the support of the fan")
    return validate(fan.dim, fan.rays + (w,), new_cones, name=fan.name, params=fan.params)


def picard_rank(fan):
    """Rank of the line bundle group of a smooth complete fan.

    Returns #rays - dim, cross-checked against the cokernel rank of the
    character map computed by Smith normal form.
    """
    if not is_smooth(fan) or not is_complete(fan):
        raise ValueError("Picard rank formula requires smooth complete fan")
    expected = len(fan.rays) - fan.dim
    diag, _, _ = smith_normal_form(fan.rays)
    cokernel_rank = len(fan.rays) - sum(1 for d in diag if d != 0)
    if cokernel_rank != expected:
        raise RuntimeError("Picard rank cross-check failed")
    return expected


def canonical(fan):
    """The same fan with rays sorted lexicographically (for comparisons)."""
    order = sorted(range(len(fan.rays)), key=lambda i: fan.rays[i])
    relabel = {old: new for new, old in enumerate(order)}
    rays = tuple(fan.rays[i] for i in order)
    cones = tuple(sorted(tuple(sorted(relabel[i] for i in cone)) for cone in fan.max_cones))
    return Fan(fan.dim, rays, cones, name=fan.name, params=fan.params)


def equivalent(f, g):
    """Equality of fans up to ray reordering."""
    return canonical(f) == canonical(g)


def _require_exact_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{where} must be an exact integer, got {value!r}")
    return value


def fan_from_dict(obj):
    """Parse and validate the FanFile JSON object form."""
    if not isinstance(obj, dict):
        raise ValueError("fan file must be a JSON object")
    for key in ("dim", "rays", "max_cones"):
        if key not in obj:
            raise ValueError(f"fan file is missing required field '{key}'")
    dim = _require_exact_int(obj["dim"], "dim")
    rays = [[_require_exact_int(x, f"rays[{i}]") for x in ray] for i, ray in enumerate(obj["rays"])]
    cones = [
        [_require_exact_int(x, f"max_cones[{i}]") for x in cone]
        for i, cone in enumerate(obj["max_cones"])
    ]
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ValueError("name must be a string")
    params = obj.get("params", {})
    if not isinstance(params, dict):
        raise ValueError("params must be an object")
    param_items = tuple(sorted((k, _require_exact_int(v, f"params.{k}")) for k, v in params.items()))
    return validate(dim, rays, cones, name=name, params=param_items)


def fan_to_dict(fan):
    obj = {
        "dim": fan.dim,
        "rays": [list(r) for r in fan.rays],
        "max_cones": [list(c) for c in fan.max_cones],
    }
    if fan.name:
        obj["name"] = fan.name
    if fan.params:
        obj["params"] = dict(fan.params)
    return obj


def load_fan(path):
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh, parse_float=_reject_float)
    return fan_from_dict(obj)


def dump_fan(fan, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(fan_to_dict(fan), fh, indent=2)
        fh.write("\n")


def _reject_float(text):
    raise ValueError(f"fan files must contain exact integers only, got {text}")
