"""Inducing a complex and its invariant along a subgroup embedding.

A self-map over a subgroup H of G can be pushed forward to a G-complex:
relabeling along an isomorphism, or inducing a free orbit when H is the
trivial group.  The pushed-forward decomposition invariant always matches
a fresh computation on the induced complex.

Run with:  python3 demos/05_induction.py
"""

from eqlef import induce, klein_williams, lefschetz_number, load_complex, reidemeister_trace
from eqlef.equivariant_groups import FiniteGroup

# a degree-2 self-map of the circle: one 0-cell, one 1-cell, f(t) = t^2
FREE_CIRCLE = {
    "format_version": 1,
    "group": {"builtin": "trivial"},
    "iso_classes": [
        {
            "subgroup_class": ["1"],
            "component": "circle",
            "pi1_rank": 1,
            "phi_pi": [[2]],
            "chain": [
                {"degree": 0, "rank": 1, "relative_mask": [False], "map": [[1]]},
                {
                    "degree": 1,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[[1, {"coeff": 1, "vector": [1]}]]],
                    "boundary": [[[{"coeff": 1, "vector": [1]}, -1]]],
                },
            ],
        }
    ],
}


def main():
    c = load_complex(FREE_CIRCLE)
    iso = c.classes[0]
    print("base complex: a degree-2 circle map over the trivial group")
    print("  Lefschetz number:  ", lefschetz_number(iso))
    print("  Reidemeister trace:", reidemeister_trace(iso))
    print("  ell:               ", klein_williams(c))

    z2 = FiniteGroup.builtin("Z2")
    induced, pushed = induce(c, z2, {"1": "1"})
    print("\ninduced along the trivial subgroup of Z2:")
    print("  the component becomes a free orbit of size",
          induced.classes[0].orbit_size)
    print("  pushed-forward ell:", pushed)
    print("  recomputed ell:    ", klein_williams(induced))
    assert pushed == klein_williams(induced)
    print("\nthe pushforward doubles each coefficient (the index of the subgroup)")


if __name__ == "__main__":
    main()
