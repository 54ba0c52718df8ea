"""Builtin example complexes, stored as plain JSON-style documents.

Each document follows the input format accepted by
:func:`eqlef.complex_model.load_complex`.  The three builtins exercise the
main situations the invariants distinguish:

* ``example1`` -- an order-2 symmetry with a pointwise-fixed circle and a
  freely permuted pair of 2-cells; the self-map is the identity on the
  fixed circle and swaps the free cells with a sign, so every numerical
  invariant vanishes while the universal class keeps a nonzero term.
* ``example2`` -- an order-2 symmetry on a 3-sphere-like complex with a
  fixed 2-sphere; the self-map has degree -1, two free fixed points, and a
  fixed-point-free restriction to the fixed sphere.
* ``example3`` -- the Klein four-group acting on a 2-sphere-like complex
  with two fixed circles crossing in two fixed poles; the self-map is the
  identity, so the per-class invariants reduce to relative Euler
  characteristics.
"""

__all__ = ["BUILTIN_COMPLEXES"]


EXAMPLE1 = {
    "format_version": 1,
    "group": {"builtin": "Z2"},
    "name": "example1",
    "description": (
        "Order-2 symmetry with a pointwise-fixed circle and one free orbit "
        "of 2-cells; the self-map fixes the circle and swaps the free cells "
        "with degree -1."
    ),
    "iso_classes": [
        {
            "subgroup_class": ["1"],
            "component": "sphere",
            "pi1_rank": 0,
            "phi_pi": [],
            "chain": [
                {
                    "degree": 0,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "g"], ["1", "g"]],
                    "map": [[1, 0], [0, 1]],
                },
                {
                    "degree": 1,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "g"], ["1", "g"]],
                    "map": [[1, 0], [0, 1]],
                    "boundary": [[-1, 1], [1, -1]],
                },
                {
                    "degree": 2,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[{"coeff": -1, "weyl_elem": "g"}]],
                    "boundary": [[0, 0]],
                },
            ],
        },
        {
            "subgroup_class": ["1", "g"],
            "component": "circle",
            "pi1_rank": 1,
            "phi_pi": [[1]],
            "chain": [
                {
                    "degree": 0,
                    "rank": 2,
                    "relative_mask": [False, False],
                    "map": [[1, 0], [0, 1]],
                },
                {
                    "degree": 1,
                    "rank": 2,
                    "relative_mask": [False, False],
                    "map": [[1, 0], [0, 1]],
                    "boundary": [
                        [-1, 1],
                        [{"coeff": 1, "vector": [1]}, -1],
                    ],
                },
            ],
        },
    ],
    "fixed_points": [
        {
            "subgroup_class": ["1"],
            "component": "sphere",
            "index": 0,
            "path": [],
        },
        {
            "subgroup_class": ["1", "g"],
            "component": "circle",
            "index": 0,
            "path": [0],
        },
    ],
}


EXAMPLE2 = {
    "format_version": 1,
    "group": {"builtin": "Z2"},
    "name": "example2",
    "description": (
        "Order-2 symmetry on a 3-sphere-like complex with a fixed 2-sphere; "
        "the self-map has degree -1, restricts without fixed points to the "
        "fixed sphere, and keeps one free orbit of two fixed points."
    ),
    "iso_classes": [
        {
            "subgroup_class": ["1"],
            "component": "S3",
            "pi1_rank": 0,
            "phi_pi": [],
            "chain": [
                {
                    "degree": 0,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "g"], ["1", "g"]],
                    "map": [[1, 0], [0, 1]],
                },
                {
                    "degree": 1,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "g"], ["1", "g"]],
                    "map": [[0, -1], [-1, 0]],
                    "boundary": [[-1, 1], [1, -1]],
                },
                {
                    "degree": 2,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "g"], ["1", "g"]],
                    "map": [[-1, 0], [0, -1]],
                    "boundary": [[1, 1], [-1, -1]],
                },
                {
                    "degree": 3,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[-1]],
                    "boundary": [[1, 1]],
                },
            ],
        },
        {
            "subgroup_class": ["1", "g"],
            "component": "S2",
            "pi1_rank": 0,
            "phi_pi": [],
            "chain": [
                {
                    "degree": 0,
                    "rank": 2,
                    "relative_mask": [False, False],
                    "map": [[1, 0], [0, 1]],
                },
                {
                    "degree": 1,
                    "rank": 2,
                    "relative_mask": [False, False],
                    "map": [[0, -1], [-1, 0]],
                    "boundary": [[-1, 1], [1, -1]],
                },
                {
                    "degree": 2,
                    "rank": 2,
                    "relative_mask": [False, False],
                    "map": [[-1, 0], [0, -1]],
                    "boundary": [[1, 1], [-1, -1]],
                },
            ],
        },
    ],
    "fixed_points": [
        {
            "subgroup_class": ["1"],
            "component": "S3",
            "orbit": "poles",
            "index": 1,
            "path": [],
        },
        {
            "subgroup_class": ["1"],
            "component": "S3",
            "orbit": "poles",
            "index": 1,
            "path": [],
        },
    ],
}


EXAMPLE3 = {
    "format_version": 1,
    "group": {"builtin": "Z2xZ2"},
    "name": "example3",
    "description": (
        "Klein four-group symmetry on a 2-sphere-like complex with two "
        "fixed circles meeting in two fully fixed poles; the self-map is "
        "the identity, so per-class invariants are relative Euler "
        "characteristics."
    ),
    "iso_classes": [
        {
            "subgroup_class": ["1"],
            "component": "sphere",
            "pi1_rank": 0,
            "phi_pi": [],
            "chain": [
                {
                    "degree": 0,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [
                        ["1", "g", "h", "gh"],
                        ["1", "g", "h", "gh"],
                    ],
                    "map": [[1, 0], [0, 1]],
                },
                {
                    "degree": 1,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "h"], ["1", "g"]],
                    "map": [[1, 0], [0, 1]],
                    "boundary": [[1, -1], [1, -1]],
                },
                {
                    "degree": 2,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[1]],
                    "boundary": [[-1, 1]],
                },
            ],
        },
        {
            "subgroup_class": ["1", "h"],
            "component": "circle-h",
            "pi1_rank": 1,
            "action": {"g": [[-1]]},
            "phi_pi": [[1]],
            "chain": [
                {
                    "degree": 0,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "g"], ["1", "g"]],
                    "map": [[1, 0], [0, 1]],
                },
                {
                    "degree": 1,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[1]],
                    "boundary": [[1, -1]],
                },
            ],
        },
        {
            "subgroup_class": ["1", "g"],
            "component": "circle-g",
            "pi1_rank": 1,
            "action": {"h": [[-1]]},
            "phi_pi": [[1]],
            "chain": [
                {
                    "degree": 0,
                    "rank": 2,
                    "relative_mask": [True, True],
                    "stabilizers": [["1", "h"], ["1", "h"]],
                    "map": [[1, 0], [0, 1]],
                },
                {
                    "degree": 1,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[1]],
                    "boundary": [[1, -1]],
                },
            ],
        },
        {
            "subgroup_class": ["1", "g", "h", "gh"],
            "component": "pole-a",
            "pi1_rank": 0,
            "phi_pi": [],
            "chain": [
                {
                    "degree": 0,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[1]],
                },
            ],
        },
        {
            "subgroup_class": ["1", "g", "h", "gh"],
            "component": "pole-b",
            "pi1_rank": 0,
            "phi_pi": [],
            "chain": [
                {
                    "degree": 0,
                    "rank": 1,
                    "relative_mask": [False],
                    "map": [[1]],
                },
            ],
        },
    ],
    "fixed_points": [
        {
            "subgroup_class": ["1"],
            "component": "sphere",
            "index": 2,
            "path": [],
        },
        {
            "subgroup_class": ["1", "h"],
            "component": "circle-h",
            "index": 0,
            "path": [0],
        },
        {
            "subgroup_class": ["1", "g"],
            "component": "circle-g",
            "index": 0,
            "path": [0],
        },
        {
            "subgroup_class": ["1", "g", "h", "gh"],
            "component": "pole-a",
            "index": 1,
            "path": [],
        },
        {
            "subgroup_class": ["1", "g", "h", "gh"],
            "component": "pole-b",
            "index": 1,
            "path": [],
        },
    ],
}


BUILTIN_COMPLEXES = {
    "example1": EXAMPLE1,
    "example2": EXAMPLE2,
    "example3": EXAMPLE3,
}
