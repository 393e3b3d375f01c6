"""Lattice maps between fans: compatibility, refinements, divisor pullback.

A map of fans is an integer matrix carrying every source cone into some
target cone; it induces a morphism of the associated varieties.  Pullback of
a divisor evaluates the target's per-cone linear data at the images of the
source rays.
"""

from dataclasses import dataclass

from .divisor import Divisor, support_data
from .fan import barycentric, cone_hrep, is_complete
from .lattice import dot, kernel_basis, matvec, smith_normal_form, transpose


@dataclass(frozen=True)
class FanMap:
    matrix: tuple
    source: object
    target: object


def _check_shape(matrix, src, dst):
    matrix = tuple(tuple(row) for row in matrix)
    if len(matrix) != dst.dim or any(len(row) != src.dim for row in matrix):
        raise ValueError(
            f"matrix must be {dst.dim}x{src.dim} for these fans, got "
            f"{len(matrix)}x{len(matrix[0]) if matrix else 0}"
        )
    return matrix


def _cone_containing(fan, point):
    for cone in fan.max_cones:
        if all(dot(h, point) >= 0 for h in cone_hrep(fan, cone)):
            return cone
    return None


def is_fan_map(matrix, src, dst):
    """Whether every source cone maps into some single target cone."""
    matrix = _check_shape(matrix, src, dst)
    for cone in src.max_cones:
        images = [matvec(matrix, src.rays[i]) for i in cone]
        ok = any(
            all(all(dot(h, img) >= 0 for h in cone_hrep(dst, tc)) for img in images)
            for tc in dst.max_cones
        )
        if not ok:
            return False
    return True


def fan_map(matrix, src, dst):
    """Construct a FanMap, insisting on cone-wise compatibility."""
    matrix = _check_shape(matrix, src, dst)
    if not is_fan_map(matrix, src, dst):
        raise ValueError("matrix is not a map of fans: some cone has no image cone")
    return FanMap(matrix, src, dst)


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def is_refinement(src, dst):
    """Whether src refines dst: same support, every src cone inside a dst cone.

    Decided by the identity being a map of fans plus, per target cone, the
    source cones inside it tiling it (facets paired internally or lying on
    the target cone's boundary, and the target's interior point covered).
    """
    if src.dim != dst.dim:
        raise ValueError("refinement requires equal ambient dimension")
    if not is_fan_map(identity_matrix(src.dim), src, dst):
        return False
    if is_complete(src) and is_complete(dst):
        return True
    for tcone in dst.max_cones:
        hrep = cone_hrep(dst, tcone)
        inside = [
            c for c in src.max_cones
            if all(all(dot(h, src.rays[i]) >= 0 for h in hrep) for i in c)
        ]
        if not inside:
            return False
        counts = {}
        for c in inside:
            for opp in c:
                facet = frozenset(c) - {opp}
                counts[facet] = counts.get(facet, 0) + 1
        for facet, count in counts.items():
            if count == 2:
                continue
            if count > 2:
                return False
            on_boundary = any(
                all(dot(h, src.rays[i]) == 0 for i in facet) for h in hrep
            )
            if not on_boundary:
                return False
        interior = tuple(sum(col) for col in zip(*(dst.rays[i] for i in tcone)))
        if not any(all(x >= 0 for x in barycentric(src, c, interior)) for c in inside):
            return False
    return True


def pullback(fm, d):
    """Pull a target divisor back along a map of fans.

    The coefficient at a source ray v is -psi(m v), where psi is the target
    divisor's support function; the result is rational whenever the divisor
    is not Cartier, and callers wanting integral output should first scale by
    divisor.cartier_multiple.
    """
    if len(d.coeffs) != len(fm.target.rays):
        raise ValueError("divisor does not live on the target fan")
    data = support_data(fm.target, d)
    coeffs = []
    for v in fm.source.rays:
        img = matvec(fm.matrix, v)
        cone = _cone_containing(fm.target, img)
        if cone is None:
            raise ValueError(f"image {img} of ray {v} lies outside the target fan")
        u = data[fm.target.max_cones.index(cone)]
        coeffs.append(-dot(u, img))
    return Divisor(tuple(coeffs))


def weighted_projective_weights(rays):
    """The positive relation weights of n+1 rays spanning rank n, sorted.

    The rays must positively span with any n of them independent; the unique
    relation sum(w_i * v_i) = 0 then has all weights nonzero of one sign, and
    the normalized coprime positive weights are returned in ascending order.
    """
    rays = [tuple(r) for r in rays]
    if not rays:
        raise ValueError("no rays given")
    n = len(rays[0])
    if len(rays) != n + 1:
        raise ValueError(f"expected {n + 1} rays in rank {n}, got {len(rays)}")
    basis = kernel_basis(transpose(rays), len(rays))
    if len(basis) != 1:
        raise ValueError("degenerate configuration: rays do not span uniquely")
    w = basis[0]
    if any(x == 0 for x in w):
        raise ValueError("degenerate configuration: some n rays are dependent")
    if all(x < 0 for x in w):
        w = tuple(-x for x in w)
    if any(x < 0 for x in w):
        raise ValueError("degenerate configuration: rays do not positively span")
    return tuple(sorted(w))


def image_lattice_index(matrix):
    """Index of the image lattice of an integer matrix; 0 when not finite."""
    matrix = [tuple(row) for row in matrix]
    diag, _, _ = smith_normal_form(matrix)
    if len(diag) < len(matrix) or any(x == 0 for x in diag):
        return 0
    prod = 1
    for x in diag[: len(matrix)]:
        prod *= x
    return prod
