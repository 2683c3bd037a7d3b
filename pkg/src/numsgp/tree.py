"""Genus-tree enumeration of all numerical semigroups.

The tree is rooted at the semigroup of all nonnegative integers; the
children of S are the semigroups S minus {a} for each minimal generator
a > F(S).  Every numerical semigroup of genus g appears exactly once at
depth g, so a depth-first walk bounded by genus visits each semigroup up to
that genus once, keeping only the current frontier in memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .core import Semigroup, _naturals, _remove_generator
from .errors import BoundTooLarge

#: Deepest supported enumeration; a pure depth guard, not a memory limit.
MAX_GENUS = 45


@dataclass(frozen=True)
class TreeNode:
    semigroup: Semigroup
    removable_generators: tuple[int, ...]


def root() -> TreeNode:
    n = _naturals()
    return TreeNode(n, n.min_generators)


def _node(s: Semigroup) -> TreeNode:
    f = s.frobenius
    return TreeNode(s, tuple(a for a in s.min_generators if a > f))


def children(node: TreeNode) -> list[TreeNode]:
    """One child per removable generator, ascending in the removed value."""
    s = node.semigroup
    return [_node(_remove_generator(s, a)) for a in node.removable_generators]


def walk(max_genus: int, start: Semigroup | None = None) -> Iterator[Semigroup]:
    """Depth-first generator over all semigroups of genus <= max_genus.

    With a start semigroup, walks only that subtree (start included).  The
    visit order is deterministic; memory use is bounded by the tree depth
    times the branching factor.
    """
    if max_genus < 0:
        return
    stack = [start if start is not None else _naturals()]
    pop = stack.pop
    push = stack.append
    while stack:
        s = pop()
        yield s
        if s.genus < max_genus:
            f = s.frobenius
            for a in s.min_generators:
                if a > f:
                    push(_remove_generator(s, a))


def enumerate_up_to(max_genus: int,
                    visitor: Callable[[Semigroup], None] | None = None) -> int:
    """Visit every semigroup of genus <= max_genus once; return the count."""
    if max_genus > MAX_GENUS:
        raise BoundTooLarge("genus bound %d exceeds the supported depth %d"
                            % (max_genus, MAX_GENUS))
    count = 0
    if visitor is None:
        for _ in walk(max_genus):
            count += 1
    else:
        for s in walk(max_genus):
            visitor(s)
            count += 1
    return count
