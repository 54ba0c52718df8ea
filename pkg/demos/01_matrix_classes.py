"""Canonical classes of integer matrices.

Two square integer matrices are identified when they have the same
characteristic polynomial; the resulting classes form a free abelian group
generated by the irreducible monic factors.  ``class_of_matrix`` computes
the canonical decomposition, and the group operations act coefficientwise.

Run with:  python3 demos/01_matrix_classes.py
"""

from eqlef import class_of_matrix, uz_add, uz_eq, uz_neg
from eqlef.exact_algebra import (
    IntMatrix,
    IntPolynomial,
    char_poly,
    companion_matrix,
    factor_over_Q,
    inverse_unimodular,
)


def show(title, value):
    print(f"{title:<42} {value}")


def main():
    print("=== canonical classes of integer matrices ===\n")

    identity = IntMatrix.identity(2)
    rotation = IntMatrix.from_rows([[0, -1], [1, 0]])
    nilpotent = IntMatrix.from_rows([[0]])
    show("class of the 2x2 identity:", class_of_matrix(identity))
    show("class of a quarter rotation:", class_of_matrix(rotation))
    show("class of the 1x1 zero matrix:", class_of_matrix(nilpotent))

    print("\nThe class only sees the characteristic polynomial, so conjugating")
    print("by a unimodular matrix changes nothing:")
    m = IntMatrix.from_rows([[2, 1], [1, 3]])
    u = IntMatrix.from_rows([[1, 4], [0, 1]])
    conjugated = inverse_unimodular(u) @ m @ u
    show("  original:", class_of_matrix(m))
    show("  conjugated:", class_of_matrix(conjugated))
    assert uz_eq(class_of_matrix(m), class_of_matrix(conjugated))

    print("\nClasses add and negate formally:")
    total = uz_add(class_of_matrix(identity), uz_neg(class_of_matrix(rotation)))
    show("  [identity] - [rotation]:", total)

    print("\nA companion matrix recovers the factorization of its polynomial:")
    poly = IntPolynomial((-1, 0, 0, 0, 1))  # x^4 - 1
    companion = companion_matrix(poly)
    show("  polynomial:", poly)
    show("  characteristic polynomial:", char_poly(companion))
    content, factors = factor_over_Q(poly)
    show(
        "  irreducible factors:",
        " * ".join(f"({factor})^{mult}" if mult > 1 else f"({factor})" for factor, mult in factors),
    )
    show("  class of the companion matrix:", class_of_matrix(companion))


if __name__ == "__main__":
    main()
