"""JSON wire formats.

Rationals travel as "p/q" strings (plain integers allowed on input); floats
are rejected everywhere.  Every emitted object re-parses to an equal value.
"""

from __future__ import annotations

from .errors import DomainError
from .lattices import AffineLattice
from .polynomials import Polynomial
from .polytopes import Polytope, hull
from .rationals import Q, format_rat
from .spaces import (GENERAL_MODE, QUOTIENT_MODE, HorosphericalSpace,
                     SupportSet)
from .weyl import ChamberFace, GroupDescriptor


def rat_from_json(value):
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError(f"rationals must be integers or 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        try:
            return Q(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad rational {value!r}: {exc}") from exc
    raise DomainError(f"bad rational {value!r}")


def rat_to_json(value):
    return format_rat(Q(value))


def vector_from_json(values):
    return tuple(rat_from_json(v) for v in values)


def vector_to_json(vec):
    return [rat_to_json(v) for v in vec]


def int_vector_from_json(values):
    out = []
    for v in values:
        q = rat_from_json(v)
        if q.denominator != 1:
            raise DomainError(f"expected an integer, got {v!r}")
        out.append(int(q.numerator))
    return tuple(out)


def polytope_from_json(obj) -> Polytope:
    if "vertices" not in obj:
        raise DomainError("polytope JSON needs a 'vertices' field")
    return hull([vector_from_json(v) for v in obj["vertices"]])


def polytope_to_json(p: Polytope) -> dict:
    return {"vertices": [vector_to_json(v) for v in p.vertices]}


def lattice_from_json(obj) -> AffineLattice:
    offset = vector_from_json(obj.get("offset", []))
    basis = tuple(int_vector_from_json(b) for b in obj.get("basis", []))
    dim = len(offset) if offset else (len(basis[0]) if basis else 0)
    if not offset:
        offset = (0,) * dim
    return AffineLattice(offset, basis, dim)


def lattice_to_json(lat: AffineLattice) -> dict:
    return {"offset": vector_to_json(lat.offset),
            "basis": [list(b) for b in lat.basis]}


def polynomial_from_json(obj) -> Polynomial:
    terms = obj.get("terms", [])
    if not terms:
        raise DomainError("polynomial JSON needs a nonempty 'terms' list")
    exps = {}
    nvars = None
    for t in terms:
        exp = int_vector_from_json(t["exp"])
        if nvars is None:
            nvars = len(exp)
        elif len(exp) != nvars:
            raise DomainError("inconsistent exponent lengths")
        exps[exp] = exps.get(exp, Q(0)) + rat_from_json(t["coef"])
    return Polynomial(exps, nvars)


def polynomial_to_json(poly: Polynomial) -> dict:
    return {"terms": [{"exp": list(e), "coef": rat_to_json(c)}
                      for e, c in sorted(poly.terms.items())]}


def finite_set_to_json(points) -> dict:
    return {"points": [vector_to_json(p) for p in sorted(points)]}


def group_from_json(obj) -> GroupDescriptor:
    return GroupDescriptor(tuple(obj.get("gl", [])), int(obj.get("torus", 0)))


def group_to_json(g: GroupDescriptor) -> dict:
    return {"gl": list(g.gl_factors), "torus": g.torus_rank}


def face_from_json(group: GroupDescriptor, obj) -> ChamberFace:
    blocks = obj.get("blocks")
    if blocks is None:
        return ChamberFace.full_chamber(group)
    return ChamberFace(group, tuple(tuple(int(s) for s in bs) for bs in blocks))


def face_to_json(face: ChamberFace) -> dict:
    return {"blocks": [list(bs) for bs in face.blocks]}


def problem_from_json(obj):
    """Parse {'group', 'face', 'lambda_H', 'mode', 'supports'} into a space
    and its support sets.  Support weights are full weight coordinates."""
    group = group_from_json(obj.get("group", {}))
    face = face_from_json(group, obj.get("face", {}))
    mode = obj.get("mode", QUOTIENT_MODE)
    if mode not in (QUOTIENT_MODE, GENERAL_MODE):
        raise DomainError(f"unknown mode {mode!r}")
    if "lambda_H" in obj:
        lam = lattice_from_json(obj["lambda_H"])
    else:
        lam = AffineLattice.standard(face.dim)
    space = HorosphericalSpace(face, lam, mode)
    supports = []
    for weights in obj.get("supports", []):
        supports.append(SupportSet.from_full_weights(
            space, [vector_from_json(w) for w in weights]))
    return space, supports
