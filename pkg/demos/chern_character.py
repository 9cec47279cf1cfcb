"""Walkthrough: the Chern character on projective space and why
denominators mean divisibility.

K(CP^(d-1)) = Z[xi]/(xi^d) maps to H*(CP^(d-1); Q) = Q[x]/(x^d) by
xi |-> 1 - exp(x).  A cohomology class n x^p lifts to K-theory exactly
when n log(1 - xi)^p has integer coefficients, so the denominators of
that series force divisibility on n.
"""

from swcohom import (
    KClass,
    chern_character,
    chern_character_inverse_monomial,
    minimal_integral_multiplier,
)


def main():
    d = 6
    print(f"Working in K(CP^{d - 1}) = Z[xi]/(xi^{d})")
    print()

    e = KClass(d, [0, 0, 1, 0, 0, 0])  # xi^2
    print(f"ch({e!r}) =")
    print(f"  {chern_character(e)!r}")
    print("the leading term is x^2; lower-order dust has denominators.")
    print()

    p = 2
    series = chern_character_inverse_monomial(1, p, d)
    print(f"ch^(-1)(x^{p}) = log(1 - xi)^{p} mod xi^{d}:")
    print(f"  coefficients {[str(c) for c in series.coefficients]}")
    n = minimal_integral_multiplier(p, d)
    print(f"smallest integer multiple landing in the image of K-theory: n = {n}")
    integral = chern_character_inverse_monomial(n, p, d)
    k_lift = KClass.from_series(integral)
    print(f"indeed {n} x^{p} lifts to {k_lift!r}")
    print()

    print("minimal multipliers n(p, d):")
    print(" p\\d " + "".join(f"{dd:6d}" for dd in range(4, 10)))
    for pp in range(1, 4):
        row = ""
        for dd in range(4, 10):
            row += f"{minimal_integral_multiplier(pp, dd):6d}"
        print(f"  {pp}  {row}")
    print()
    print("Each column is what the Hurewicz comparison can extract from")
    print("projective space alone; the divisibility bounds read off the")
    print("row p = d - 1 - k/2 truncated at kappa = k/2.")


if __name__ == "__main__":
    main()
