"""Named constructors for the catalog of fans, with expected properties.

Each entry builds a validated fan from fixed ray/cone tables (some taking
integer parameters), records the parameter ranges used by the verification
sweeps, and exposes the properties the entry is expected to satisfy in
machine-checkable form.
"""

from dataclasses import dataclass
from functools import cmp_to_key

from .fan import Fan, star_subdivision, validate
from .lattice import primitive

# Cones the nef-triviality argument protects: any complete fan containing all
# three of them (on the example1 rays) has trivial nef cone.
PROTECTED_CONES = ((0, 1, 3), (1, 2, 4), (0, 2, 5))


def _fan(dim, rays, cones, name, params=()):
    return validate(dim, rays, cones, name=name, params=tuple(sorted(params)))


def example1_sigma():
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, -1), (-1, 0, -1), (-2, -1, 0)]
    cones = [
        (0, 1, 2), (0, 1, 3), (1, 3, 4), (1, 2, 4),
        (2, 4, 5), (0, 2, 5), (0, 3, 5), (3, 4, 5),
    ]
    return _fan(3, rays, cones, "example1-sigma")


def example1():
    f = star_subdivision(example1_sigma(), (-1, -1, -1))
    f = star_subdivision(f, (-2, -1, -1))
    return Fan(f.dim, f.rays, f.max_cones, name="example1")


def example1_extended(k=0):
    """example1 after k more star subdivisions away from the protected cones.

    Each step subdivides the lexicographically first unprotected maximal cone
    at the primitive sum of its generators, raising the divisor class rank
    by one while keeping the three protected cones intact.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    f = example1()
    for _ in range(k):
        cone = min(c for c in sorted(f.max_cones) if c not in PROTECTED_CONES)
        w = primitive(tuple(sum(col) for col in zip(*(f.rays[i] for i in cone))))
        f = star_subdivision(f, w)
    return Fan(f.dim, f.rays, f.max_cones, name="example1-extended", params=(("k", k),))


def example2(a=2):
    rays = [
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, -a),
        (0, 0, -1), (-1, 1, -1), (-1, 0, -1), (-1, -1, 0),
    ]
    cones = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5),
        (0, 1, 5), (1, 2, 7), (2, 3, 7), (3, 4, 7),
        (4, 5, 6), (4, 6, 7), (5, 6, 7), (1, 5, 7),
    ]
    return _fan(3, rays, cones, "example2", (("a", a),))


def example3(a=2, b=1):
    rays = [
        (-1, b, 0), (0, -1, 0), (1, -1, 0), (-1, 0, -1),
        (0, 0, -1), (0, 1, 0), (0, 0, 1), (1, 0, a),
    ]
    cones = [
        (0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 5),
        (0, 3, 5), (0, 5, 6), (0, 1, 6), (1, 2, 6),
        (2, 4, 7), (4, 5, 7), (2, 6, 7), (5, 6, 7),
    ]
    return _fan(3, rays, cones, "example3", (("a", a), ("b", b)))


def lemma_a(a=0):
    rays = [
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, a),
        (0, 0, -1), (0, 1, -1), (-1, 2, -1),
    ]
    cones = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 6),
        (0, 1, 6), (1, 2, 6), (2, 3, 6), (3, 4, 6), (4, 5, 6),
    ]
    return _fan(3, rays, cones, "lemma-a", (("a", a),))


def lemma_b():
    rays = [
        (-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, 0, 1),
        (0, 1, 1), (1, 1, 1), (1, 1, 0),
    ]
    cones = [
        (0, 1, 2), (1, 2, 3), (1, 3, 4), (0, 1, 4), (3, 4, 5),
        (0, 2, 6), (2, 3, 6), (3, 5, 6), (4, 5, 6), (0, 4, 6),
    ]
    return _fan(3, rays, cones, "lemma-b")


def case_8_5pp():
    rays = [
        (0, 1, 0), (0, -1, -1), (1, 0, 0), (0, 0, 1),
        (-1, 0, -1), (-1, -2, -2), (-1, -1, -1), (-1, -1, 0),
    ]
    cones = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5),
        (0, 1, 5), (1, 2, 7), (2, 3, 7), (3, 4, 7),
        (4, 5, 6), (4, 6, 7), (5, 6, 7), (1, 5, 7),
    ]
    return _fan(3, rays, cones, "8-5pp")


def case_8_8():
    rays = [
        (0, 0, 1), (1, 0, 0), (0, -1, -1), (-1, -2, -1),
        (0, 1, 0), (0, 0, -1), (-1, -2, -2), (-1, -1, -2),
    ]
    cones = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4),
        (1, 4, 5), (2, 3, 6), (1, 2, 7), (2, 6, 7),
        (3, 6, 7), (3, 4, 7), (4, 5, 7), (1, 5, 7),
    ]
    return _fan(3, rays, cones, "8-8")


def case_8_11(a=0, b=0):
    rays = [
        (1, 0, 0), (0, -1, 0), (0, 0, 1), (1, 1, a),
        (0, 0, -1), (0, -1, -1), (-1, -2, -1), (0, 1, b),
    ]
    cones = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5),
        (0, 5, 6), (0, 1, 6), (1, 2, 6), (4, 5, 6),
        (2, 3, 7), (3, 4, 7), (4, 6, 7), (2, 6, 7),
    ]
    return _fan(3, rays, cones, "8-11", (("a", a), ("b", b)))


def case_8_13pp(a=0, b=0, c=0, d=0):
    rays = [
        (1, 1, b), (1, 0, 0), (0, -1, 0), (0, 0, -1),
        (-1, a, d), (0, 1, 0), (0, 0, 1), (-1, c, d + 1),
    ]
    cones = [
        (0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 5),
        (0, 3, 5), (0, 5, 6), (0, 1, 6), (1, 2, 6),
        (2, 4, 7), (4, 5, 7), (2, 6, 7), (5, 6, 7),
    ]
    return _fan(3, rays, cones, "8-13pp", (("a", a), ("b", b), ("c", c), ("d", d)))


def case_8_14p(a=0):
    rays = [
        (0, 0, -1), (1, 0, 0), (0, 1, 0), (-1, -1, a),
        (-1, -1, a + 1), (1, 0, 1), (0, 0, 1), (0, 1, 1),
    ]
    cones = [
        (0, 1, 2), (0, 2, 3), (0, 1, 3), (2, 3, 4),
        (3, 4, 5), (1, 3, 5), (4, 5, 6), (1, 2, 7),
        (2, 4, 7), (4, 6, 7), (5, 6, 7), (1, 5, 7),
    ]
    return _fan(3, rays, cones, "8-14p", (("a", a),))


def case_8_14pp(a=0, b=0):
    rays = [
        (-1, a, b), (0, 1, 0), (0, -1, -1), (0, 0, 1),
        (1, 0, 1), (1, 1, 0), (1, 0, 0), (1, -1, -1),
    ]
    cones = [
        (0, 1, 2), (0, 2, 3), (0, 1, 3), (2, 3, 4),
        (3, 4, 5), (1, 3, 5), (4, 5, 6), (1, 2, 7),
        (2, 4, 7), (4, 6, 7), (5, 6, 7), (1, 5, 7),
    ]
    return _fan(3, rays, cones, "8-14pp", (("a", a), ("b", b)))


def simplex_fan(rays, name=None):
    """Complete fan on n+1 positively spanning rays: all n-subsets are cones."""
    rays = [tuple(r) for r in rays]
    n = len(rays[0])
    cones = [tuple(j for j in range(n + 1) if j != i) for i in range(n + 1)]
    return validate(n, rays, cones, name=name)


def complete_fan_2d(rays, name=None):
    """Complete fan in the plane on the given rays, cones between angular neighbors."""
    rays = [tuple(r) for r in rays]

    def half(v):
        return 0 if (v[1], v[0]) > (0, 0) else 1

    def cmp(i, j):
        u, v = rays[i], rays[j]
        if half(u) != half(v):
            return half(u) - half(v)
        cross = u[0] * v[1] - u[1] * v[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    order = sorted(range(len(rays)), key=cmp_to_key(cmp))
    cones = [tuple(sorted((order[i], order[(i + 1) % len(order)]))) for i in range(len(order))]
    return validate(2, rays, cones, name=name)


def projective_space(n):
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append((-1,) * n)
    return simplex_fan(rays, name=f"p{n}")


def p1():
    return validate(1, [(1,), (-1,)], [(0,), (1,)], name="p1")


def p2():
    return projective_space(2)


def p3():
    return projective_space(3)


def p1122():
    # Same rays as the coarse fan under 8-8; weights (1, 1, 2, 2).
    return simplex_fan([(0, 0, 1), (1, 0, 0), (0, 1, 0), (-1, -2, -2)], name="p1122")


def p112_blowup():
    return complete_fan_2d([(1, 0), (0, 1), (1, 1), (-1, -2)], name="p112-blowup")


PROJ_XY = ((1, 0, 0), (0, 1, 0))
PROJ_X = ((1, 0, 0),)


@dataclass(frozen=True)
class PropertyRecord:
    """Machine-checkable expectations for one catalog entry."""

    smooth: bool = True
    complete: bool = True
    picard_rank: int = None
    nef_trivial: bool = None
    projective: bool = None
    nef_witness: tuple = None          # divisor coefficients: nef, nontrivial class
    refinement_rays: tuple = None      # ray indices of the coarser simplex fan
    wp_weights: tuple = None           # expected weights of that coarse fan
    projection: tuple = None           # matrix rows of a fan map
    projection_target: str = None      # catalog name of the map's target
    protected_cones: bool = False      # must contain PROTECTED_CONES


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: object
    param_names: tuple = ()
    sweep: tuple = ()                  # ((name, lo, hi), ...) verification grid
    summary: str = ""


ENTRIES = {
    e.name: e
    for e in [
        CatalogEntry("example1-sigma", example1_sigma,
                     summary="6-ray complete fan over a nonconvex polyhedron (singular)"),
        CatalogEntry("example1", example1,
                     summary="12-cone smooth threefold with trivial nef cone"),
        CatalogEntry("example1-extended", example1_extended, ("k",), (("k", 0, 3),),
                     summary="example1 plus k protected-cone-avoiding subdivisions"),
        CatalogEntry("example2", example2, ("a",), (("a", -5, 5),),
                     summary="one-parameter family, nef-trivial for a not in {0,-1}"),
        CatalogEntry("example3", example3, ("a", "b"), (("a", -3, 3), ("b", -3, 3)),
                     summary="two-parameter family, nef-trivial away from (+-1,+-1)"),
        CatalogEntry("lemma-a", lemma_a, ("a",), (("a", -3, 3),),
                     summary="projective rank-4 family"),
        CatalogEntry("lemma-b", lemma_b,
                     summary="nonprojective rank-4 fan with nef anticanonical class"),
        CatalogEntry("8-5pp", case_8_5pp,
                     summary="refines a simplex fan with weights (1,1,1,1)"),
        CatalogEntry("8-8", case_8_8,
                     summary="refines a simplex fan with weights (1,1,2,2)"),
        CatalogEntry("8-11", case_8_11, ("a", "b"), (("a", -2, 2), ("b", -2, 2)),
                     summary="projects to the plane fan on (1,0),(0,1),(1,1),(-1,-2)"),
        CatalogEntry("8-13pp", case_8_13pp, ("a", "b", "c", "d"),
                     (("a", -1, 1), ("b", -1, 1), ("c", -1, 1), ("d", -1, 1)),
                     summary="projects to the line fan"),
        CatalogEntry("8-14p", case_8_14p, ("a",), (("a", -2, 2),),
                     summary="projects to the plane fan of three rays"),
        CatalogEntry("8-14pp", case_8_14pp, ("a", "b"), (("a", -2, 2), ("b", -2, 2)),
                     summary="projects to the line fan"),
        CatalogEntry("p1", p1, summary="line fan"),
        CatalogEntry("p2", p2, summary="plane fan on three rays"),
        CatalogEntry("p3", p3, summary="simplex fan in rank 3, weights (1,1,1,1)"),
        CatalogEntry("p1122", p1122, summary="simplex fan with weights (1,1,2,2)"),
        CatalogEntry("p112-blowup", p112_blowup,
                     summary="plane fan on (1,0),(0,1),(1,1),(-1,-2)"),
    ]
}


def names():
    return sorted(ENTRIES)


def get(name, **params):
    """Build the named fan; parameters must match the entry's signature."""
    if name not in ENTRIES:
        raise ValueError(f"unknown catalog entry {name!r}")
    entry = ENTRIES[name]
    unknown = set(params) - set(entry.param_names)
    if unknown:
        raise ValueError(f"{name} does not take parameter(s) {sorted(unknown)}")
    for k, v in params.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"parameter {k} must be an integer, got {v!r}")
    return entry.builder(**params)


def admissible(name, **params):
    """Whether nef-triviality is claimed for these parameters."""
    if name not in ENTRIES:
        raise ValueError(f"unknown catalog entry {name!r}")
    if name in ("example1", "example1-sigma", "example1-extended"):
        return True
    if name == "example2":
        return params.get("a", None) not in (0, -1)
    if name == "example3":
        a, b = params.get("a"), params.get("b")
        return a not in (0, None) and b not in (0, None) and (abs(a), abs(b)) != (1, 1)
    return False


def expected_report(name, **params):
    """The expected property record for an entry at given parameters."""
    if name not in ENTRIES:
        raise ValueError(f"unknown catalog entry {name!r}")
    a = params.get("a")
    b = params.get("b")
    if name == "example1-sigma":
        return PropertyRecord(smooth=False, nef_trivial=True, projective=False,
                              protected_cones=True)
    if name == "example1":
        return PropertyRecord(picard_rank=5, nef_trivial=True, projective=False,
                              protected_cones=True)
    if name == "example1-extended":
        k = params.get("k", 0)
        return PropertyRecord(picard_rank=5 + k, nef_trivial=True, projective=False,
                              protected_cones=True)
    if name == "example2":
        if admissible(name, **params):
            return PropertyRecord(picard_rank=5, nef_trivial=True, projective=False)
        if a == -1:
            # the anticanonical divisor minus the two rays printed with it
            witness = (1, 1, 1, 0, 1, 1, 1, 0)
            return PropertyRecord(picard_rank=5, nef_trivial=False, nef_witness=witness)
        return PropertyRecord(picard_rank=5)
    if name == "example3":
        if admissible(name, **params):
            return PropertyRecord(picard_rank=5, nef_trivial=True, projective=False)
        if a in (1, -1) and b in (1, -1):
            return PropertyRecord(picard_rank=5, nef_trivial=False,
                                  nef_witness=(1,) * 8)
        return PropertyRecord(picard_rank=5)
    if name == "lemma-a":
        return PropertyRecord(picard_rank=4, projective=True, nef_trivial=False)
    if name == "lemma-b":
        return PropertyRecord(picard_rank=4, projective=False, nef_trivial=False,
                              nef_witness=(1,) * 7)
    if name == "8-5pp":
        return PropertyRecord(picard_rank=5, nef_trivial=False,
                              refinement_rays=(0, 2, 3, 6), wp_weights=(1, 1, 1, 1))
    if name == "8-8":
        return PropertyRecord(picard_rank=5, nef_trivial=False,
                              refinement_rays=(0, 1, 4, 6), wp_weights=(1, 1, 2, 2))
    if name == "8-11":
        return PropertyRecord(picard_rank=5, nef_trivial=False,
                              projection=PROJ_XY, projection_target="p112-blowup")
    if name == "8-13pp":
        return PropertyRecord(picard_rank=5, nef_trivial=False,
                              projection=PROJ_X, projection_target="p1")
    if name == "8-14p":
        return PropertyRecord(picard_rank=5, nef_trivial=False,
                              projection=PROJ_XY, projection_target="p2")
    if name == "8-14pp":
        return PropertyRecord(picard_rank=5, nef_trivial=False,
                              projection=PROJ_X, projection_target="p1")
    if name in ("p1", "p2", "p3"):
        return PropertyRecord(picard_rank=1, projective=True, nef_trivial=False)
    if name == "p1122":
        return PropertyRecord(smooth=False, projective=True, nef_trivial=False,
                              wp_weights=(1, 1, 2, 2))
    if name == "p112-blowup":
        return PropertyRecord(smooth=False, projective=True, nef_trivial=False)
    raise AssertionError(name)


def sweep_values(entry):
    """All parameter dicts of an entry's verification grid (empty dict if none)."""
    if not entry.sweep:
        return [{}]
    out = [{}]
    for pname, lo, hi in entry.sweep:
        out = [{**d, pname: v} for d in out for v in range(lo, hi + 1)]
    return out


def ci_instances():
    """Representative (name, params) pairs covering every entry."""
    picks = [
        ("example1-sigma", {}),
        ("example1", {}),
        ("example1-extended", {"k": 1}),
        ("example2", {"a": 3}),
        ("example2", {"a": -1}),
        ("example3", {"a": 2, "b": 1}),
        ("example3", {"a": 1, "b": 1}),
        ("example3", {"a": -2, "b": -3}),
        ("lemma-a", {"a": 1}),
        ("lemma-a", {"a": -2}),
        ("lemma-b", {}),
        ("8-5pp", {}),
        ("8-8", {}),
        ("8-11", {"a": 1, "b": -1}),
        ("8-13pp", {"a": 1, "b": 0, "c": -1, "d": 1}),
        ("8-14p", {"a": 2}),
        ("8-14pp", {"a": -1, "b": 2}),
        ("p1", {}),
        ("p2", {}),
        ("p3", {}),
        ("p1122", {}),
        ("p112-blowup", {}),
    ]
    return picks
