"""Walkthrough: which negative definite forms pass the characteristic-
vector test.

For the intersection form of a closed oriented smooth 4-manifold with
negative definite unimodular form, every characteristic vector c must
satisfy -c^2 >= rank.  The diagonal form -I_n passes on the nose; the
even form -E8 fails immediately because 0 is characteristic.
"""

from swcohom import (
    diagonal_witness,
    donaldson_admissible,
    donaldson_k,
    e8_gram,
    minus_identity,
    validate,
)


def main():
    print("Diagonal forms -I_n")
    print("-------------------")
    for n in (1, 2, 4, 8):
        v = donaldson_admissible(minus_identity(n))
        verdict = donaldson_k(-v.min_norm, n)
        print(f"rank {n}: min characteristic norm {v.min_norm}, "
              f"admissible={v.admissible}, k={verdict.k}")
    print("the minimizers are (+-1, ..., +-1), norm exactly the rank.")
    print()

    print("The even form -E8")
    print("-----------------")
    g = e8_gram()
    print(f"validation: {validate(g)}")
    v = donaldson_admissible(g)
    print(f"min characteristic norm {v.min_norm}, admissible={v.admissible}")
    print(f"witness: {list(v.witness.coords)}")
    print("0 is characteristic since the form is even, and -0 >= 8 fails;")
    print("a smooth closed 4-manifold cannot carry this intersection form.")
    print()

    print("Recognizing the diagonal form")
    print("-----------------------------")
    wit = diagonal_witness(minus_identity(3))
    print(f"-I_3 has an orthogonal frame of norm -1 vectors: "
          f"{[list(w.coords) for w in wit]}")
    print(f"-E8 has none (it is even): {diagonal_witness(g)}")


if __name__ == "__main__":
    main()
