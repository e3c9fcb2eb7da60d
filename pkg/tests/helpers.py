"""Shared goldens, sweep generators, and independent oracles for the tests."""

from itertools import product

from hypothesis import strategies as st

# Published worked-example tree: degrees (2,3,4), 33 vertices, labels in
# breadth-first order.
EXAMPLE_DEGREES = (2, 3, 4)
EXAMPLE_LEVEL_SIZES = (33, 16, 5, 1)
EXAMPLE_LABELS = (
    0, 32, 16,
    1, 6, 11, 17, 22, 27,
    31, 30, 29, 28, 26, 25, 24, 23, 21, 20, 19, 18,
    15, 14, 13, 12, 10, 9, 8, 7, 5, 4, 3, 2,
)

P7_DEGREES = (1, 1, 1, 1, 1, 1)
P7_LABELS = (0, 6, 1, 5, 2, 4, 3)


def vertex_count_by_products(degrees) -> int:
    """Independent vertex count: 1 + k_1 + k_1*k_2 + ... (sum of prefix products).

    Deliberately not the recurrence the package uses, so the two routes
    cross-check each other.
    """
    total = prefix = 1
    for k in degrees:
        prefix *= k
        total += prefix
    return total


def subtree_size_by_products(degrees, level: int) -> int:
    """Same expansion for the subtree hanging below one vertex of a level."""
    return vertex_count_by_products(degrees[level - 1:])


def sweep_degree_sequences(max_levels=6, max_degree=3, max_vertices=400):
    """Every daughter degree sequence with at most max_levels levels,
    entries in 1..max_degree, and at most max_vertices vertices."""
    out = [()]
    for width in range(1, max_levels):
        for combo in product(range(1, max_degree + 1), repeat=width):
            if vertex_count_by_products(combo) <= max_vertices:
                out.append(combo)
    return out


def degree_sequences_up_to(max_vertices):
    """Every daughter degree sequence (any length, any entries) whose tree
    has at most max_vertices vertices."""
    out = []

    def grow(seq, total, prefix):
        out.append(tuple(seq))
        k = 1
        while total + prefix * k <= max_vertices:
            seq.append(k)
            grow(seq, total + prefix * k, prefix * k)
            seq.pop()
            k += 1

    grow([], 1, 1)
    return out


small_degree_sequences = st.lists(
    st.integers(min_value=1, max_value=4), max_size=4
).map(tuple).filter(lambda d: vertex_count_by_products(d) <= 500)
