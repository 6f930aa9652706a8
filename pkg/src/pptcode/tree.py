"""The ternary tree of all primitive triples rooted at (3, 4, 5).

Children are produced two independent ways: by the three unimodular matrices
acting on (a, b, c), and by rearranging the Gopala-Hemachandra quadruple.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from fractions import Fraction

from .triples import GhQuad, Ppt, StPair, ValidationError

__all__ = [
    "ROOT",
    "ROOT_QUAD",
    "T1",
    "T2",
    "T3",
    "MATRICES",
    "DEFAULT_DEPTH_BOUND",
    "determinant",
    "matrix_children",
    "successor_a_values",
    "gh_children",
    "node_at",
    "generation",
    "iter_depth_first",
    "iter_until_hypotenuse",
    "middle_child_h_sequence",
    "middle_child_ratio",
]

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

T1: Matrix = ((-1, 2, 2), (-2, 1, 2), (-2, 2, 3))
T2: Matrix = ((1, 2, 2), (2, 1, 2), (2, 2, 3))
T3: Matrix = ((1, -2, 2), (2, -1, 2), (2, -2, 3))
MATRICES: dict[str, Matrix] = {"L": T1, "M": T2, "R": T3}

ROOT = Ppt(3, 4, 5)
ROOT_QUAD = GhQuad(1, 1, 2, 3)
DEFAULT_DEPTH_BOUND = 64


def determinant(m: Matrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


for _name, _m in MATRICES.items():
    if determinant(_m) not in (1, -1):
        raise AssertionError(f"matrix {_name} is not unimodular")


def _apply(m: Matrix, x: Ppt) -> Ppt:
    a, b, c = x.a, x.b, x.c
    return Ppt(*(r[0] * a + r[1] * b + r[2] * c for r in m))


def matrix_children(x: Ppt) -> tuple[Ppt, Ppt, Ppt]:
    """Return (T1 x, T2 x, T3 x)."""
    return _apply(T1, x), _apply(T2, x), _apply(T3, x)


def successor_a_values(p: StPair) -> tuple[int, int, int]:
    s, t = p.s, p.t
    return s * (2 * s - t), s * (2 * s + t), t * (s + 2 * t)


def gh_children(q: GhQuad) -> tuple[GhQuad, GhQuad, GhQuad]:
    """Left, middle and right children in quadruple form.

    They correspond one-to-one with the T1, T2, T3 matrix children.
    """
    if not q.is_primitive:
        raise ValidationError(f"non-primitive quadruple {q.astuple()}")
    g, e, f, h = q.g, q.e, q.f, q.h
    return (
        GhQuad(h, e, h + e, h + 2 * e),
        GhQuad(h, f, h + f, h + 2 * f),
        GhQuad(g, g + e, 2 * g + e, 3 * g + 2 * e),
    )


def _check_depth(depth: int, bound: int) -> None:
    if depth > bound:
        raise ValidationError(f"depth {depth} exceeds the depth bound {bound}")


def node_at(path: Sequence[str] | str, *, depth_bound: int = DEFAULT_DEPTH_BOUND) -> Ppt:
    """Follow a path of 'L'/'M'/'R' steps down from the root."""
    _check_depth(len(path), depth_bound)
    node = ROOT
    for step in path:
        try:
            node = _apply(MATRICES[step], node)
        except KeyError:
            raise ValidationError(f"unknown tree step {step!r}; expected L, M or R") from None
    return node


def generation(k: int, *, depth_bound: int = DEFAULT_DEPTH_BOUND) -> list[Ppt]:
    """All 3**(k-1) nodes of generation k, in L < M < R path order."""
    if k < 1:
        raise ValidationError(f"generation index must be >= 1, got {k}")
    _check_depth(k - 1, depth_bound)
    level = [ROOT]
    for _ in range(k - 1):
        level = [child for node in level for child in matrix_children(node)]
    return level


def iter_depth_first(
    max_depth: int, *, depth_bound: int = DEFAULT_DEPTH_BOUND
) -> Iterator[tuple[str, Ppt]]:
    """Lazily yield (path, node) pairs pre-order down to ``max_depth`` steps.

    Memory stays proportional to the depth, not the width, of the tree.
    """
    _check_depth(max_depth, depth_bound)
    stack: list[tuple[str, Ppt]] = [("", ROOT)]
    while stack:
        path, node = stack.pop()
        yield path, node
        if len(path) < max_depth:
            kids = matrix_children(node)
            for label, child in reversed(list(zip("LMR", kids))):
                stack.append((path + label, child))


def iter_until_hypotenuse(max_c: int) -> Iterator[Ppt]:
    """Every tree node with c <= max_c.

    Each child has a larger hypotenuse than its parent, so pruning at
    ``max_c`` loses nothing.
    """
    if ROOT.c > max_c:
        return
    stack = [ROOT]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(child for child in matrix_children(node) if child.c <= max_c)


def middle_child_h_sequence(length: int) -> list[int]:
    """The h column along the all-middle chain starting at (1, 1, 2, 3)."""
    q = ROOT_QUAD
    out = []
    for _ in range(length):
        out.append(q.h)
        q = gh_children(q)[1]
    return out


def middle_child_ratio(depth: int) -> Fraction:
    """h(depth) / h(depth - 1) along the middle chain; tends to 1 + sqrt(2)."""
    if depth < 2:
        raise ValidationError(f"depth must be >= 2, got {depth}")
    hs = middle_child_h_sequence(depth)
    return Fraction(hs[-1], hs[-2])
