"""Rooted symmetric tree shapes described by their daughter degree sequence.

A rooted symmetric tree with q levels (root = level 1) is fully determined
by the sequence (k_1, ..., k_{q-1}) where k_i is the number of children of
every level-i vertex.  Vertices are named by the child indices along the
path from the root: the root is the empty sequence (), and (1, 2, 3) is the
level-4 vertex reached via child 1, then child 2, then child 3.

The derived quantity h_i is the number of vertices in the subtree hanging
from any single level-i vertex, so h_1 is the whole vertex count and the
deepest level always has h_q = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, DegreeSequenceError, InvalidVertexError

U64_MAX = 2**64 - 1

VertexId = tuple[int, ...]


def _check_degree(value: int, position: int) -> None:
    if value < 1:
        raise DegreeSequenceError(
            f"entry {position}: daughter degree must be >= 1, got {value}"
        )
    if value > U64_MAX:
        raise DegreeSequenceError(
            f"entry {position}: daughter degree {value} exceeds the 64-bit range"
        )


def parse_degree_sequence(text: str) -> tuple[int, ...]:
    """Parse a comma-separated daughter degree sequence.

    Whitespace around commas is tolerated.  Empty (or all-whitespace) text
    denotes the single-vertex tree.
    """
    if text.strip() == "":
        return ()
    degrees = []
    for position, token in enumerate(text.split(","), start=1):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise DegreeSequenceError(
                f"entry {position}: {token!r} is not an integer"
            ) from None
        _check_degree(value, position)
        degrees.append(value)
    return tuple(degrees)


@dataclass(frozen=True)
class TreeShape:
    """A daughter degree sequence plus its derived subtree sizes per level.

    ``level_sizes[i]`` is the vertex count of the subtree rooted at any
    vertex of level i + 1; the first entry is the whole tree.  Instances
    are immutable and safe for unrestricted concurrent use.
    """

    degrees: tuple[int, ...]
    level_sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.level_sizes) != len(self.degrees) + 1:
            raise ValueError("level_sizes must be one longer than degrees")
        if self.level_sizes[-1] != 1:
            raise ValueError("deepest level size must be 1")
        for i, k in enumerate(self.degrees):
            _check_degree(k, i + 1)
            if self.level_sizes[i] != k * self.level_sizes[i + 1] + 1:
                raise ValueError(
                    f"level size {i + 1} inconsistent with the degree sequence"
                )
        if self.level_sizes[0] > U64_MAX:
            raise CapacityError("vertex count exceeds the 64-bit range")

    @property
    def levels(self) -> int:
        return len(self.level_sizes)

    @property
    def vertex_count(self) -> int:
        return self.level_sizes[0]

    @property
    def edge_count(self) -> int:
        return self.level_sizes[0] - 1


def build_shape(degrees: Iterable[int]) -> TreeShape:
    """Build a TreeShape, deriving subtree sizes bottom-up.

    The deepest level has size 1 and each level above satisfies
    size = degree * size_below + 1.  Construction fails with
    CapacityError instead of silently exceeding 64 bits.
    """
    degrees = tuple(degrees)
    for position, k in enumerate(degrees, start=1):
        _check_degree(k, position)
    sizes = [1]
    for i in range(len(degrees) - 1, -1, -1):
        nxt = degrees[i] * sizes[-1] + 1
        if nxt > U64_MAX:
            raise CapacityError(
                f"subtree size at level {i + 1} exceeds the 64-bit range"
            )
        sizes.append(nxt)
    sizes.reverse()
    return TreeShape(degrees, tuple(sizes))


def validate_vertex(shape: TreeShape, vertex: VertexId) -> int:
    """Check a vertex against a shape and return its 1-based level."""
    if len(vertex) > len(shape.degrees):
        raise InvalidVertexError(
            f"sequence of length {len(vertex)} exceeds the {shape.levels}-level tree"
        )
    for position, (x, k) in enumerate(zip(vertex, shape.degrees), start=1):
        if not 0 <= x < k:
            raise InvalidVertexError(
                f"entry {position}: child index {x} outside [0, {k - 1}]",
                position=position,
            )
    return len(vertex) + 1


def parent(vertex: VertexId) -> VertexId:
    """Drop the final child index; the root has no parent."""
    if not vertex:
        raise InvalidVertexError("the root has no parent")
    return vertex[:-1]


def _iter_level(degrees: tuple[int, ...], level: int) -> Iterator[VertexId]:
    # Mixed-radix odometer over (k_1, ..., k_{level-1}) in lexicographic
    # order; state is one digit list, never a materialised level.
    width = level - 1
    digits = [0] * width
    while True:
        yield tuple(digits)
        for j in reversed(range(width)):
            digits[j] += 1
            if digits[j] < degrees[j]:
                break
            digits[j] = 0
        else:
            return


def enumerate_vertices(shape: TreeShape) -> Iterator[VertexId]:
    """Yield every vertex in breadth-first order.

    Level by level, and within a level in lexicographic order of the
    child-index sequences.  This is the canonical order for all outputs.
    """
    for level in range(1, shape.levels + 1):
        yield from _iter_level(shape.degrees, level)


def format_vertex(vertex: VertexId) -> str:
    """Render a vertex as "(x1,x2,...)"; the root prints as "()"."""
    return "(" + ",".join(str(x) for x in vertex) + ")"


def parse_vertex(text: str) -> VertexId:
    """Parse the "(x1,x2,...)" vertex notation produced by format_vertex."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise InvalidVertexError(f"{text!r} is not a parenthesised sequence")
    inner = stripped[1:-1].strip()
    if not inner:
        return ()
    entries = []
    for position, token in enumerate(inner.split(","), start=1):
        try:
            value = int(token.strip())
        except ValueError:
            raise InvalidVertexError(
                f"entry {position}: {token.strip()!r} is not an integer",
                position=position,
            ) from None
        if value < 0:
            raise InvalidVertexError(
                f"entry {position}: child index must be >= 0", position=position
            )
        entries.append(value)
    return tuple(entries)
