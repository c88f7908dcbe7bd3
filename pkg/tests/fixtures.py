"""Hand-transcribed reference data used as the expected side of tests.

Everything here is written out literally and independently of the library
code so that a bug in a builder cannot silently agree with itself.  The
frozen regression constants at the bottom were computed once by the
brute-force oracles in _oracles.py and then pinned.
"""

from __future__ import annotations

# The vertex-minimal 7-vertex torus, by its facet sign classes relative to
# the ordered reference (v1, v2, v4): POSITIVE holds the facets whose
# ascending order agrees with the coherent orientation, NEGATIVE the rest.
TORUS7_POSITIVE = frozenset(
    {
        ("v1", "v2", "v4"),
        ("v2", "v3", "v5"),
        ("v1", "v5", "v6"),
        ("v2", "v6", "v7"),
        ("v1", "v3", "v7"),
        ("v4", "v5", "v7"),
        ("v3", "v4", "v6"),
    }
)
TORUS7_NEGATIVE = frozenset(
    {
        ("v2", "v4", "v5"),
        ("v3", "v5", "v6"),
        ("v1", "v2", "v6"),
        ("v2", "v3", "v7"),
        ("v1", "v5", "v7"),
        ("v4", "v6", "v7"),
        ("v1", "v3", "v4"),
    }
)
TORUS7_FACETS = tuple(sorted(TORUS7_POSITIVE | TORUS7_NEGATIVE))
TORUS7_REFERENCE = ("v1", "v2", "v4")

# Full automorphism group of the 7-vertex torus (order 42), transcribed as
# printed permutations of the labels 1..7; "Identity" is the identity map.
TORUS7_AUTOMORPHISM_CYCLES = (
    "Identity",
    "(2,3,5)(4,7,6)",
    "(2,4,3,7,5,6)",
    "(2,5,3)(4,6,7)",
    "(2,6,5,7,3,4)",
    "(2,7)(3,6)(4,5)",
    "(1,2)(3,7)(4,6)",
    "(1,2,3,4,5,6,7)",
    "(1,2,4)(3,6,5)",
    "(1,2,5,7,6,3)",
    "(1,2,6)(4,7,5)",
    "(1,2,7,4,3,5)",
    "(1,3,6,7,5,2)",
    "(1,3)(4,7)(5,6)",
    "(1,3,5,7,2,4,6)",
    "(1,3,7)(2,5,4)",
    "(1,3,2,6,4,5)",
    "(1,3,4)(2,7,6)",
    "(1,4,2)(3,5,6)",
    "(1,4,5,3,7,6)",
    "(1,4)(2,3)(5,7)",
    "(1,4,7,3,6,2,5)",
    "(1,4,3)(2,6,7)",
    "(1,4,6,5,2,7)",
    "(1,5,3,4,7,2)",
    "(1,5,7)(3,6,4)",
    "(1,5,4,6,2,3)",
    "(1,5)(2,4)(6,7)",
    "(1,5,2,6,3,7,4)",
    "(1,5,6)(2,7,3)",
    "(1,6,2)(4,5,7)",
    "(1,6,7,3,5,4)",
    "(1,6,5)(2,3,7)",
    "(1,6,3,2,4,7)",
    "(1,6)(2,5)(3,4)",
    "(1,6,4,2,7,5,3)",
    "(1,7,6,5,4,3,2)",
    "(1,7,5)(3,4,6)",
    "(1,7,4,2,3,6)",
    "(1,7,3)(2,4,5)",
    "(1,7,2,5,6,4)",
    "(1,7)(2,6)(3,5)",
)


def parse_numeric_cycles(text: str) -> dict[str, str]:
    """Turn "(1,2,4)(3,6,5)" over labels 1..7 into a v-label assignment."""
    perm = {i: i for i in range(1, 8)}
    if text != "Identity":
        for chunk in text[1:-1].split(")("):
            nums = [int(x) for x in chunk.split(",")]
            for a, b in zip(nums, nums[1:] + nums[:1]):
                perm[a] = b
    return {f"v{a}": f"v{b}" for a, b in perm.items()}


# Boundary of the 3-simplex: the smallest closed orientable surface.
TETRAHEDRON_FACETS = (
    ("v1", "v2", "v3"),
    ("v1", "v2", "v4"),
    ("v1", "v3", "v4"),
    ("v2", "v3", "v4"),
)

# The 6-vertex projective plane: a valid closed surface with no coherent
# orientation, used to exercise the non-orientable code paths.
RP2_6_FACETS = (
    ("v1", "v2", "v4"),
    ("v1", "v2", "v6"),
    ("v1", "v3", "v4"),
    ("v1", "v3", "v5"),
    ("v1", "v5", "v6"),
    ("v2", "v3", "v5"),
    ("v2", "v3", "v6"),
    ("v2", "v4", "v5"),
    ("v3", "v4", "v6"),
    ("v4", "v5", "v6"),
)

# Vertex-minimal genus-2 surface (10 vertices, 24 facets) together with
# the degree-1 vertex assignment onto the 7-vertex torus.
SIGMA2_10V_FACETS = (
    ("v1", "v2", "v3"),
    ("v1", "v2", "v4"),
    ("v1", "v3", "v5"),
    ("v1", "v4", "v6"),
    ("v1", "v5", "v7"),
    ("v1", "v6", "v8"),
    ("v1", "v7", "v8"),
    ("v2", "v3", "v6"),
    ("v2", "v4", "v8"),
    ("v2", "v5", "v6"),
    ("v2", "v5", "v9"),
    ("v2", "v7", "v8"),
    ("v2", "v7", "v10"),
    ("v2", "v9", "v10"),
    ("v3", "v5", "v10"),
    ("v3", "v6", "v8"),
    ("v3", "v8", "v9"),
    ("v3", "v9", "v10"),
    ("v4", "v6", "v10"),
    ("v4", "v7", "v9"),
    ("v4", "v7", "v10"),
    ("v4", "v8", "v9"),
    ("v5", "v6", "v10"),
    ("v5", "v7", "v9"),
)
SIGMA2_10V_REFERENCE = ("v1", "v2", "v3")
SIGMA2_10V_ASSIGNMENT = {
    "v1": "v1",
    "v2": "v2",
    "v3": "v4",
    "v4": "v6",
    "v5": "v3",
    "v6": "v5",
    "v7": "v7",
    "v8": "v7",
    "v9": "v7",
    "v10": "v6",
}

# Frozen regression constants, independently recomputed by tests that use
# _oracles.brute_force_simplicial_map_count.
TORUS7_SELF_MAP_COUNT = 27979  # simplicial self-maps of the 7-vertex torus
TETRA_SELF_MAP_COUNT = 256  # simplicial self-maps of the tetrahedron boundary
