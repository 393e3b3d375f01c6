"""The full verification suite behind `toricnef report paper`.

Each check re-derives one block of the catalog's documented claims from
scratch (family sweeps, witness divisors, morphism checks, cross-route
property suites) and reports pass/fail with a detail line per failing
sub-check.
"""

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations

from . import catalog
from .divisor import (
    Divisor,
    ample_divisor,
    anticanonical,
    has_no_nontrivial_nef,
    is_nef,
    is_nef_via_cartier,
    is_projective,
    is_trivial_class,
    nef_cone,
    nef_system,
    principal_rows,
    support_min_check,
)
from .fan import equivalent, fan_from_dict, is_complete, is_smooth, picard_rank, star_subdivision
from .fanmap import fan_map, is_fan_map, is_refinement, pullback, weighted_projective_weights
from .lattice import dot, in_row_span, kernel_basis, primitive, rank
from .polyhedra import HCone, _project_mod, dd_convert


@dataclass
class CheckResult:
    ident: str
    title: str
    passed: bool = True
    details: list = field(default_factory=list)

    def expect(self, cond, message):
        if not cond:
            self.passed = False
            self.details.append(message)
        return cond


def _golden_delta():
    data = resources.files("toricnef").joinpath("data/example1_delta.json").read_text()
    return fan_from_dict(json.loads(data))


def _wall_row_present(fan, coeffs):
    return primitive(coeffs) in set(nef_system(fan).rows)


def check_example1_basic():
    r = CheckResult("1", "example1: smooth, complete, rank 5, trivial nef cone")
    f = catalog.get("example1")
    r.expect(is_smooth(f), "example1 is not smooth")
    r.expect(is_complete(f), "example1 is not complete")
    r.expect(picard_rank(f) == 5, "example1 rank != 5")
    r.expect(has_no_nontrivial_nef(f), "example1 has a nontrivial nef class")
    return r


def check_example1_construction():
    r = CheckResult("2", "example1: star subdivisions 8 -> 10 -> 12 cones match golden fan")
    sigma = catalog.get("example1-sigma")
    r.expect(len(sigma.max_cones) == 8, "starting fan does not have 8 cones")
    step1 = star_subdivision(sigma, (-1, -1, -1))
    r.expect(len(step1.max_cones) == 10, "first subdivision does not give 10 cones")
    step2 = star_subdivision(step1, (-2, -1, -1))
    r.expect(len(step2.max_cones) == 12, "second subdivision does not give 12 cones")
    golden = _golden_delta()
    r.expect(equivalent(step2, golden), "constructed fan differs from the golden file")
    r.expect(equivalent(catalog.get("example1"), golden), "catalog fan differs from the golden file")
    return r


EXAMPLE1_PRINTED = (
    ("d1+d5 >= d2+d4", (1, -1, 0, -1, 1, 0, 0, 0)),
    ("d2+d6 >= 2d3+2d5", (0, 1, -2, 0, -2, 1, 0, 0)),
    ("d3+d4 >= 2d1+d6", (-2, 0, 1, 1, 0, -1, 0, 0)),
)


def check_example1_inequalities():
    r = CheckResult("3", "example1: the three printed inequalities are wall rows")
    f = catalog.get("example1")
    r.expect(len(nef_system(f).rows) == 18, "example1 does not have 18 wall rows")
    for label, coeffs in EXAMPLE1_PRINTED:
        r.expect(_wall_row_present(f, coeffs), f"inequality {label} not among wall rows")
    return r


def _example2_printed(a):
    return (
        ("d1+d8 >= a*d3+d4", (1, 0, -a, -1, 0, 0, 0, 1)),
        ("2d4+d6 >= (2a+1)*d5+d8", (0, 0, 0, 2, -(2 * a + 1), 1, 0, -1)),
        ("d2+d5 >= d1+d6", (-1, 1, 0, 0, 1, -1, 0, 0)),
        ("d3+d6 >= 2d2+d8", (0, -2, 1, 0, 0, 1, 0, -1)),
        ("d2+d4 >= -a*d3", (0, 1, a, 1, 0, 0, 0, 0)),
        ("d1+d8 >= d4-a*d5", (1, 0, 0, -1, a, 0, 0, 1)),
    )


def check_example2_family():
    r = CheckResult("4", "example2: nef-trivial sweep, a=-1 witness, printed inequalities")
    for a in range(-5, 6):
        if a in (0, -1):
            continue
        f = catalog.get("example2", a=a)
        r.expect(has_no_nontrivial_nef(f), f"example2 a={a} has a nontrivial nef class")
    f = catalog.get("example2", a=-1)
    witness = Divisor((1, 1, 1, 0, 1, 1, 1, 0))
    r.expect(is_nef(f, witness), "a=-1 witness divisor is not nef")
    r.expect(not is_trivial_class(f, witness), "a=-1 witness divisor has trivial class")
    f3 = catalog.get("example2", a=3)
    for label, coeffs in _example2_printed(3):
        r.expect(_wall_row_present(f3, coeffs), f"inequality {label} not among wall rows (a=3)")
    return r


def _example3_printed(a, b):
    return (
        ("d3+d6 >= a*d5+d8", (0, 0, 1, 0, -a, 1, 0, -1)),
        ("d2+d8 >= d3+a*d7", (0, 1, -1, 0, 0, 0, -a, 1)),
        ("d1+d5 >= b*d6+d4", (1, 0, 0, -1, 1, -b, 0, 0)),
        ("d4+d7 >= d1+b*d2", (-1, -b, 0, 1, 0, 0, 1, 0)),
        ("d3+d6 >= -a*d7+d8", (0, 0, 1, 0, 0, 1, a, -1)),
        ("d4+d8 >= (1-a)*d5", (0, 0, 0, 1, a - 1, 0, 0, 1)),
        ("d4+d7 >= d1-b*d6", (-1, 0, 0, 1, 0, b, 1, 0)),
        ("d1+d3 >= (1-b)*d2", (1, b - 1, 1, 0, 0, 0, 0, 0)),
    )


def check_example3_family():
    r = CheckResult("5", "example3: nef-trivial sweep, (+-1,+-1) anticanonical, printed inequalities")
    for a in range(-3, 4):
        for b in range(-3, 4):
            if a == 0 or b == 0:
                continue
            f = catalog.get("example3", a=a, b=b)
            if (abs(a), abs(b)) == (1, 1):
                mk = anticanonical(f)
                r.expect(is_nef(f, mk), f"example3 ({a},{b}): -K is not nef")
                r.expect(not nef_cone(f).is_trivial(), f"example3 ({a},{b}): nef cone is zero")
            else:
                r.expect(has_no_nontrivial_nef(f),
                         f"example3 ({a},{b}) has a nontrivial nef class")
    for a, b in ((2, 2), (2, -2), (-2, 2), (-2, -2)):
        f = catalog.get("example3", a=a, b=b)
        for label, coeffs in _example3_printed(a, b):
            r.expect(_wall_row_present(f, coeffs),
                     f"inequality {label} not among wall rows (a={a}, b={b})")
    return r


def check_lemma_cases():
    r = CheckResult("6", "rank-4 cases: lemma-a projective, lemma-b nonprojective with nef -K")
    for a in range(-3, 4):
        f = catalog.get("lemma-a", a=a)
        r.expect(is_projective(f), f"lemma-a a={a} is not projective")
        r.expect(picard_rank(f) == 4, f"lemma-a a={a} rank != 4")
    f = catalog.get("lemma-b")
    r.expect(picard_rank(f) == 4, "lemma-b rank != 4")
    r.expect(not is_projective(f), "lemma-b is projective")
    mk = anticanonical(f)
    r.expect(is_nef(f, mk), "lemma-b: -K is not nef")
    r.expect(not is_trivial_class(f, mk), "lemma-b: -K has trivial class")
    return r


def _nef_nontrivial_pullback(r, src, matrix, target, label):
    """Check that pulling back an ample target divisor gives a nef nontrivial one."""
    amp = ample_divisor(target)
    if not r.expect(amp is not None, f"{label}: target has no ample divisor"):
        return None
    fm = fan_map(matrix, src, target)
    pb = pullback(fm, amp)
    r.expect(pb.is_integral(), f"{label}: pullback is not integral")
    r.expect(is_nef(src, pb), f"{label}: pullback is not nef")
    r.expect(not is_trivial_class(src, pb), f"{label}: pullback class is trivial")
    return pb


def _identity3():
    return ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def check_classification_cases():
    r = CheckResult("7", "classification cases: refinements and projections with nef pullbacks")
    f = catalog.get("8-5pp")
    target = catalog.simplex_fan([f.rays[i] for i in (0, 2, 3, 6)])
    r.expect(weighted_projective_weights(target.rays) == (1, 1, 1, 1),
             "8-5pp coarse fan weights are not (1,1,1,1)")
    r.expect(is_refinement(f, target), "8-5pp does not refine its coarse fan")
    _nef_nontrivial_pullback(r, f, _identity3(), target, "8-5pp")

    f = catalog.get("8-8")
    target = catalog.simplex_fan([f.rays[i] for i in (0, 1, 4, 6)])
    r.expect(weighted_projective_weights(target.rays) == (1, 1, 2, 2),
             "8-8 coarse fan weights are not (1,1,2,2)")
    r.expect(is_refinement(f, target), "8-8 does not refine its coarse fan")
    _nef_nontrivial_pullback(r, f, _identity3(), target, "8-8")

    blowup = catalog.get("p112-blowup")
    for a in range(-2, 3):
        for b in range(-2, 3):
            f = catalog.get("8-11", a=a, b=b)
            label = f"8-11 (a={a}, b={b})"
            if r.expect(is_fan_map(catalog.PROJ_XY, f, blowup),
                        f"{label}: (x,y)-projection is not a fan map"):
                _nef_nontrivial_pullback(r, f, catalog.PROJ_XY, blowup, label)

    line = catalog.get("p1")
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            for c in (-1, 0, 1):
                for d in (-1, 0, 1):
                    f = catalog.get("8-13pp", a=a, b=b, c=c, d=d)
                    label = f"8-13pp (a={a}, b={b}, c={c}, d={d})"
                    if r.expect(is_fan_map(catalog.PROJ_X, f, line),
                                f"{label}: x-projection is not a fan map"):
                        _nef_nontrivial_pullback(r, f, catalog.PROJ_X, line, label)

    plane = catalog.get("p2")
    for a in range(-2, 3):
        f = catalog.get("8-14p", a=a)
        label = f"8-14p (a={a})"
        if r.expect(is_fan_map(catalog.PROJ_XY, f, plane),
                    f"{label}: (x,y)-projection is not a fan map"):
            _nef_nontrivial_pullback(r, f, catalog.PROJ_XY, plane, label)

    for a in range(-2, 3):
        for b in range(-2, 3):
            f = catalog.get("8-14pp", a=a, b=b)
            label = f"8-14pp (a={a}, b={b})"
            if r.expect(is_fan_map(catalog.PROJ_X, f, line),
                        f"{label}: x-projection is not a fan map"):
                _nef_nontrivial_pullback(r, f, catalog.PROJ_X, line, label)
    return r


def check_picard_extension():
    r = CheckResult("8", "extended family: rank 5+k, protected cones kept, trivial nef cone")
    for k in (1, 2, 3):
        f = catalog.example1_extended(k)
        label = f"extended k={k}"
        r.expect(is_smooth(f), f"{label} is not smooth")
        r.expect(is_complete(f), f"{label} is not complete")
        r.expect(picard_rank(f) == 5 + k, f"{label} rank != {5 + k}")
        for cone in catalog.PROTECTED_CONES:
            r.expect(cone in f.max_cones, f"{label} lost protected cone {cone}")
        r.expect(has_no_nontrivial_nef(f), f"{label} has a nontrivial nef class")
    return r


def brute_force_extreme_rays(cone):
    """Independent extreme-ray enumeration for small cones.

    Solves every row subset of size < dim for its kernel, keeps the feasible
    directions whose active rows have the extreme-ray rank, and reduces them
    modulo the lineality space.  Never calls dd_convert.
    """
    n = cone.dim
    rows = sorted(set(cone.rows))
    lin_basis = kernel_basis(rows, n)
    lin_dim = len(lin_basis)
    target = n - lin_dim - 1
    found = set()
    for k in range(n):
        for sub in combinations(rows, k):
            ker = kernel_basis(sub, n)
            if len(ker) != lin_dim + 1:
                continue
            v = next((x for x in ker if not lin_basis or not in_row_span(lin_basis, x)), None)
            if v is None:
                continue
            for cand in (v, tuple(-x for x in v)):
                if any(dot(a, cand) < 0 for a in rows):
                    continue
                active = [a for a in rows if dot(a, cand) == 0]
                if rank(active, n) == target:
                    found.add(primitive(_project_mod(cand, lin_basis)))
    return sorted(found)


def _random_hcone(rng):
    dim = rng.randint(1, 4)
    nrows = rng.randint(1, 10)
    rows = []
    while len(rows) < nrows:
        row = tuple(rng.randint(-3, 3) for _ in range(dim))
        if any(row):
            rows.append(row)
    return HCone(dim, tuple(rows))


def check_property_suites():
    r = CheckResult("9", "property suites: dual nef routes, conversion oracle, annihilation")
    fans = [(name, params, catalog.get(name, **params)) for name, params in catalog.ci_instances()]

    rng = random.Random(90731)
    for name, params, f in fans:
        for trial in range(100):
            d = Divisor(tuple(rng.randint(-3, 3) for _ in f.rays))
            if is_nef(f, d) != is_nef_via_cartier(f, d):
                r.expect(False, f"nef routes disagree on {name} {params} at {d.coeffs}")
                break

    rng = random.Random(47111)
    for trial in range(200):
        cone = _random_hcone(rng)
        got = list(dd_convert(cone).rays)
        want = brute_force_extreme_rays(cone)
        if got != want:
            r.expect(False, f"conversion mismatch on trial {trial}: {cone.rows}")

    for name, params, f in fans:
        for row in nef_system(f).rows:
            for pr in principal_rows(f):
                if dot(row, pr) != 0:
                    r.expect(False, f"wall row {row} does not annihilate principal divisors ({name})")

    witnesses = [("example1 zero divisor", catalog.get("example1"), Divisor((0,) * 8))]
    f = catalog.get("example2", a=-1)
    witnesses.append(("example2 a=-1 witness", f, Divisor((1, 1, 1, 0, 1, 1, 1, 0))))
    for a, b in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        f = catalog.get("example3", a=a, b=b)
        witnesses.append((f"example3 ({a},{b}) -K", f, anticanonical(f)))
    f = catalog.get("lemma-b")
    witnesses.append(("lemma-b -K", f, anticanonical(f)))
    for name, rays, matrix, target in (
        ("8-5pp", (0, 2, 3, 6), _identity3(), None),
        ("8-8", (0, 1, 4, 6), _identity3(), None),
        ("8-11", None, catalog.PROJ_XY, "p112-blowup"),
        ("8-13pp", None, catalog.PROJ_X, "p1"),
        ("8-14p", None, catalog.PROJ_XY, "p2"),
        ("8-14pp", None, catalog.PROJ_X, "p1"),
    ):
        src = catalog.get(name)
        tgt = catalog.get(target) if target else catalog.simplex_fan([src.rays[i] for i in rays])
        pb = pullback(fan_map(matrix, src, tgt), ample_divisor(tgt))
        witnesses.append((f"{name} pullback", src, pb))
    for label, f, d in witnesses:
        if not r.expect(is_nef(f, d), f"witness {label} is not nef"):
            continue
        r.expect(support_min_check(f, d), f"support minima do not recover {label}")

    for name, params, f in fans:
        if has_no_nontrivial_nef(f):
            r.expect(not is_projective(f), f"{name} {params} is nef-trivial yet projective")
    return r


ALL_CHECKS = (
    check_example1_basic,
    check_example1_construction,
    check_example1_inequalities,
    check_example2_family,
    check_example3_family,
    check_lemma_cases,
    check_classification_cases,
    check_picard_extension,
    check_property_suites,
)


def run_all():
    return [fn() for fn in ALL_CHECKS]


def render_table(results):
    lines = []
    for res in results:
        status = "pass" if res.passed else "FAIL"
        lines.append(f"[{res.ident}] {status}  {res.title}")
        for detail in res.details:
            lines.append(f"      - {detail}")
    passed = sum(1 for res in results if res.passed)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines)
