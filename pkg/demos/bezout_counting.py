"""Counting solutions of polynomial systems with polytopes.

Two classical situations, both exact:

* the torus case, where the number of solutions of a generic system is
  n! times the mixed volume of the Newton polytopes, and
* a projective-space model built from GL(3), where the same machinery
  reproduces the Bezout number d1*d2*d3.
"""

from horoindex import (GENERAL_MODE, AffineLattice, ChamberFace,
                       GroupDescriptor, HorosphericalSpace, SupportSet,
                       index_report)


def torus_demo():
    print("== torus case ==")
    face = ChamberFace.full_chamber(GroupDescriptor((), torus_rank=2))
    space = HorosphericalSpace.quotient(face)
    for d1, d2 in [(1, 1), (2, 3), (3, 3)]:
        s1 = SupportSet(space, ((0, 0), (d1, 0), (0, d1)))
        s2 = SupportSet(space, ((0, 0), (d2, 0), (0, d2)))
        report = index_report(space, [s1, s2])
        print(f"  simplices {d1}S, {d2}S -> {report.index} (= {d1}*{d2})")
    square = SupportSet(space, ((0, 0), (1, 0), (0, 1), (1, 1)))
    print(f"  unit squares -> {index_report(space, [square, square]).index}")


def bezout_demo():
    print("== Bezout via GL(3) ==")
    face = ChamberFace(GroupDescriptor((3,)), ((1, 2),))
    lam = AffineLattice((0, 0), ((1, 0),))
    space = HorosphericalSpace(face, lam, GENERAL_MODE)
    for degs in [(1, 1, 1), (1, 2, 3), (3, 3, 3)]:
        supports = [SupportSet(space, tuple((k, 0) for k in range(d + 1)))
                    for d in degs]
        report = index_report(space, supports)
        print(f"  degrees {degs} -> {report.index}"
              f" (routes: integral {report.integral_route},"
              f" lift {report.lift_route})")


if __name__ == "__main__":
    torus_demo()
    bezout_demo()
