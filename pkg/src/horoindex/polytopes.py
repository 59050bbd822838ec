"""Exact rational convex polytopes.

A Polytope stores its extreme vertices, a basis of the direction space of
its affine span, and a facet description valid in span coordinates.
Degenerate (lower-dimensional) polytopes are first class: every volume or
integral is taken relative to the affine span, normalized to a caller-chosen
lattice.

The hull is computed by an exact incremental (beneath-beyond) algorithm on
triangulated boundary facets; dimensions here are small enough that
asymptotics are irrelevant, and determinism matters more: points are always
processed in lexicographic order and triangulations fan out from the
lexicographically smallest vertex.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import factorial

from .errors import DomainError
from .lattices import AffineLattice
from .linalg import (clear_denominators, det, dot, nullspace, rref, solve,
                     vadd, vscale, vsub)
from .rationals import Q, ONE, ZERO, rat_ceil, rat_floor


@dataclass(frozen=True, eq=False)
class Polytope:
    vertices: tuple            # sorted tuple of ambient points (tuples of Q)
    span_basis: tuple          # rref basis of the direction space (rows)
    span_pivots: tuple         # pivot columns of span_basis
    facets: tuple              # ((integer normal, integer offset), ...) in span coords
    boundary_simplices: tuple = field(default=(), repr=False)
    # each entry: (vertex index tuple, normal in span coords, offset)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @property
    def dim(self) -> int:
        return len(self.span_basis)

    @property
    def base(self):
        return self.vertices[0]

    def span_coordinates(self, point):
        """Coordinates of point in the affine span, or None if outside it."""
        d = vsub(tuple(Q(x) for x in point), self.base)
        coords = tuple(d[p] for p in self.span_pivots)
        recon = [ZERO] * self.ambient_dim
        for c, row in zip(coords, self.span_basis):
            for i, x in enumerate(row):
                recon[i] += c * x
        if tuple(recon) != d:
            return None
        return coords

    def contains(self, point) -> bool:
        coords = self.span_coordinates(point)
        if coords is None:
            return False
        return all(dot(n, coords) <= b for n, b in self.facets)

    def translate(self, vec) -> "Polytope":
        vec = tuple(Q(x) for x in vec)
        return hull([vadd(v, vec) for v in self.vertices])

    def __add__(self, other) -> "Polytope":
        return minkowski_sum(self, other)

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)})"


def _as_points(points):
    pts = sorted({tuple(Q(x) for x in p) for p in points})
    if not pts:
        raise DomainError("hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DomainError("points of unequal dimension")
    return pts


def _plane_through(points, interior):
    """Oriented hyperplane through len(points)=k points of R^k; interior side is n.x < b."""
    q0 = points[0]
    rows = [vsub(p, q0) for p in points[1:]]
    kernel = nullspace(rows) if rows else nullspace([tuple([ZERO] * len(q0))])
    if len(kernel) != 1:
        raise DomainError("degenerate facet hyperplane")
    n = kernel[0]
    b = dot(n, q0)
    side = dot(n, interior)
    if side > b:
        n, b = tuple(-x for x in n), -b
    elif side == b:
        raise DomainError("interior point on facet hyperplane")
    return n, b


def _hull_core(coords):
    """Incremental hull of full-dimensional coords (dim k >= 2, affine rank k).

    Returns (extreme indices sorted, merged facets, simplicial facets), where
    simplicial facets are (index tuple, normal, offset).
    """
    k = len(coords[0])
    npts = len(coords)

    # initial simplex: greedy scan for k+1 affinely independent points
    simplex_idx = [0]
    basis_rows = []
    for i in range(1, npts):
        d = vsub(coords[i], coords[0])
        trial = basis_rows + [d]
        if len(rref(trial)[0]) > len(basis_rows):
            basis_rows.append(d)
            simplex_idx.append(i)
            if len(simplex_idx) == k + 1:
                break
    if len(simplex_idx) != k + 1:
        raise DomainError("point set is not full-dimensional in span coordinates")

    interior = tuple(sum((coords[i][j] for i in simplex_idx), ZERO) / (k + 1)
                     for j in range(k))

    facets = {}
    for omit in simplex_idx:
        verts = tuple(sorted(i for i in simplex_idx if i != omit))
        n, b = _plane_through([coords[i] for i in verts], interior)
        facets[verts] = (n, b)

    for idx in range(npts):
        if idx in simplex_idx:
            continue
        p = coords[idx]
        visible = [verts for verts, (n, b) in facets.items() if dot(n, p) > b]
        if not visible:
            continue
        ridge_count = Counter()
        for verts in visible:
            for v in verts:
                ridge_count[tuple(x for x in verts if x != v)] += 1
        for verts in visible:
            del facets[verts]
        for ridge, cnt in ridge_count.items():
            if cnt != 1:
                continue
            verts = tuple(sorted(ridge + (idx,)))
            n, b = _plane_through([coords[i] for i in verts], interior)
            facets[verts] = (n, b)

    # merge coplanar simplicial facets into true facets
    merged = {}
    for verts, (n, b) in facets.items():
        canon = clear_denominators(tuple(n) + (b,))
        merged.setdefault(canon, set()).update(verts)

    merged_facets = sorted((key[:-1], key[-1], tuple(sorted(vs)))
                           for key, vs in merged.items())

    # a boundary point is extreme iff its active facet normals span R^k
    extreme = []
    on_boundary = sorted({v for _, _, vs in merged_facets for v in vs})
    for v in on_boundary:
        normals = [n for n, b, vs in merged_facets if v in vs]
        if len(rref(normals)[0]) == k:
            extreme.append(v)

    simplices = sorted((verts, n, b) for verts, (n, b) in facets.items())
    return extreme, merged_facets, simplices


def hull(points) -> Polytope:
    """Convex hull with minimal vertex list and span-relative facet description."""
    pts = _as_points(points)
    base = pts[0]
    diffs = [vsub(p, base) for p in pts[1:]]
    span_basis, pivots = rref(diffs)
    k = len(span_basis)

    if k == 0:
        return Polytope(vertices=(base,), span_basis=(), span_pivots=(),
                        facets=(), boundary_simplices=())

    coords = [tuple(vsub(p, base)[piv] for piv in pivots) for p in pts]

    if k == 1:
        lo = min(range(len(pts)), key=lambda i: coords[i][0])
        hi = max(range(len(pts)), key=lambda i: coords[i][0])
        verts = tuple(sorted({pts[lo], pts[hi]}))
        cmin, cmax = coords[lo][0], coords[hi][0]
        nmax = clear_denominators((ONE, cmax))
        nmin = clear_denominators((-ONE, -cmin))
        facets = tuple(sorted([((nmax[0],), nmax[1]), ((nmin[0],), nmin[1])]))
        return Polytope(vertices=verts, span_basis=tuple(span_basis),
                        span_pivots=tuple(pivots), facets=facets,
                        boundary_simplices=((0,), (1,)))

    extreme, merged, simplices = _hull_core(coords)
    if len(extreme) < len(pts):
        pts = [pts[i] for i in extreme]
        coords = [coords[i] for i in extreme]
        extreme, merged, simplices = _hull_core(coords)

    facets = tuple((n, b) for n, b, _ in merged)
    return Polytope(vertices=tuple(pts), span_basis=tuple(span_basis),
                    span_pivots=tuple(pivots), facets=facets,
                    boundary_simplices=tuple((verts, n, b) for verts, n, b in simplices))


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    if p.ambient_dim != q.ambient_dim:
        raise DomainError("Minkowski sum of polytopes in different ambient spaces")
    return hull([vadd(v, w) for v in p.vertices for w in q.vertices])


def dilate(p: Polytope, k) -> Polytope:
    k = Q(k)
    if k < 0:
        raise DomainError("dilation factor must be nonnegative")
    if k == 0:
        return hull([(0,) * p.ambient_dim])
    return hull([vscale(k, v) for v in p.vertices])


def triangulation(p: Polytope):
    """Fan of simplices over the lexicographically smallest vertex.

    Returns a tuple of simplices, each a (dim+1)-tuple of ambient vertices.
    The decomposition is deterministic and covers p exactly.
    """
    k = p.dim
    if k == 0:
        return ((p.base,),)
    if k == 1:
        return (tuple(p.vertices),)
    apex = p.base
    apex_coords = p.span_coordinates(apex)
    out = []
    for verts, n, b in p.boundary_simplices:
        if dot(n, apex_coords) == b:
            continue
        out.append((apex,) + tuple(p.vertices[i] for i in verts))
    return tuple(out)


def _span_sublattice(p: Polytope, lattice: AffineLattice):
    for row in p.span_basis:
        if not lattice.direction_contains(row):
            raise DomainError("polytope span not contained in the lattice's direction space")
    sub = lattice.direction_sublattice(list(p.span_basis))
    if len(sub) != p.dim:
        raise DomainError("lattice does not have full rank on the polytope's span")
    return sub


def volume(p: Polytope, lattice: AffineLattice):
    """Volume of p in its affine span, normalized so a fundamental cell of
    (lattice direction) ∩ span has volume 1.

    A 0-dimensional polytope has volume 1 by convention; this is the base
    case that makes degree-0 polarization and fiber integration come out
    right.
    """
    k = p.dim
    if k == 0:
        return Q(1)
    sub = _span_sublattice(p, lattice)
    cols = [tuple(m[i] for m in sub) for i in range(p.ambient_dim)]
    total = ZERO
    for simplex in triangulation(p):
        rows = [solve(cols, vsub(v, simplex[0])) for v in simplex[1:]]
        total += abs(det(rows))
    return total / factorial(k)


def lattice_points(p: Polytope, lattice: AffineLattice):
    """All points of the affine lattice inside p.

    Every vertex of p must lie in the affine span of the lattice (all uses in
    this library satisfy that); enumeration is by bounding box in lattice
    coordinates plus exact membership tests.
    """
    vertex_coords = []
    for v in p.vertices:
        c = lattice.coordinates(v)
        if c is None:
            raise DomainError("polytope must lie in the affine span of the lattice")
        vertex_coords.append(c)
    if lattice.rank == 0:
        return [lattice.offset] if p.contains(lattice.offset) else []
    ranges = []
    for j in range(lattice.rank):
        vals = [c[j] for c in vertex_coords]
        ranges.append(range(rat_ceil(min(vals)), rat_floor(max(vals)) + 1))
    out = []
    for combo in itertools.product(*ranges):
        point = lattice.point_at(combo)
        if p.contains(point):
            out.append(point)
    return sorted(out)
