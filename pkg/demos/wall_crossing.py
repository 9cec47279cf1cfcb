"""Walkthrough: chambers and the wall-crossing jump in the simplest
parametrized model.

A class-n path on the circle winds n + 1/2 times, so a generic target
angle in the first half-circle is hit n+1 times (counted with sign)
and one in the second half only n times.  Moving the target across a
pole changes the count by exactly 1, whatever representative path is
used.
"""

from fractions import Fraction

from swcohom import (
    LatitudePath,
    make_path,
    signed_preimage_count,
    wall_crossing_jump,
)


def show(path, label):
    first = signed_preimage_count(path, Fraction(1, 2))
    second = signed_preimage_count(path, Fraction(3, 2))
    print(f"{label}: count at pi/2 = {first.signed_count} ({first.chamber}), "
          f"at 3pi/2 = {second.signed_count} ({second.chamber}), "
          f"jump = {wall_crossing_jump(path)}")


def main():
    print("Canonical monotone paths")
    print("------------------------")
    for n in (0, 1, 3, 7):
        show(make_path(n), f"class n={n}")
    print()

    print("The count only sees the chamber, not the angle")
    print("----------------------------------------------")
    path = make_path(3)
    for alpha in (Fraction(1, 7), Fraction(1, 2), Fraction(9, 10)):
        c = signed_preimage_count(path, alpha)
        print(f"  alpha = {alpha} pi: signed count {c.signed_count}")
    print()

    print("Representative independence")
    print("---------------------------")
    wiggly = LatitudePath([(0, 0), (Fraction(1, 4), Fraction(3, 4)),
                           (Fraction(1, 2), Fraction(1, 4)), (1, 1)])
    show(wiggly, "wiggly class n=0")
    print("the back-and-forth adds a +1 and a -1 crossing that cancel.")
    print()

    print("Orientation matters")
    print("-------------------")
    show(make_path(2).reversed(), "reversed class n=2")
    print("reversing the path flips every crossing sign, so the jump is -1.")


if __name__ == "__main__":
    main()
