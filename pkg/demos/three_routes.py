"""Three independent routes to the same intersection index.

On the full GL(2) chamber (quotient mode) the index of a support system can
be computed as a mixed integral of the top Weyl term over the moment
polytopes, as a mixed volume of their Gelfand-Tsetlin lifts, and, for a
diagonal system, as the leading coefficient of the Hilbert function.  The
library computes all three and refuses to answer if they ever disagree.
"""

from horoindex import (ChamberFace, GroupDescriptor, HorosphericalSpace,
                       SupportSet, hilbert_function, index_report)


def main():
    space = HorosphericalSpace.quotient(
        ChamberFace.full_chamber(GroupDescriptor((2,))))
    support = SupportSet(space, ((0, 0), (1, 0), (1, 1)))

    print("Hilbert function of the support:")
    for k in range(5):
        print(f"  H({k}) = {hilbert_function(space, support, k)}")

    report = index_report(space, [support] * space.num_supports)
    print(f"index = {report.index}")
    print(f"  via mixed integral of the Weyl term: {report.integral_route}")
    print(f"  via mixed volume of the lifts:       {report.lift_route}")
    print(f"  via the Hilbert leading coefficient: {report.hilbert_route}")


if __name__ == "__main__":
    main()
