"""Plane rooted forests, their signed labelings, and linear extensions.

Vertices are indexed 1..n in depth-first preorder (a root before its
subtree, subtrees left to right, trees left to right), so the subtree
of vertex v occupies the contiguous index range [v, v + hook(v) - 1].
As a poset the roots sit at the top: u < v means u lies strictly inside
the subtree of v, so leaves are the minimal elements.

A labeling is represented by its value vector: a tuple whose entry at
position v-1 is the (signed) label of vertex v.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

MODES = ("ordinary", "signed", "even-signed")


class ForestParseError(ValueError):
    """Malformed forest encoding; carries the offending byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Forest:
    """A plane forest on n vertices in preorder indexing.

    ``parent[v]`` is the parent of vertex v, with 0 marking a root;
    ``children[v]`` lists the children of v in planar order, and
    ``children[0]`` lists the roots.  Index 0 of ``parent`` is unused.
    """

    n: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.parent) != n + 1 or len(self.children) != n + 1:
            raise ValueError("parent/children arrays must have length n + 1")
        order = []
        stack = list(reversed(self.children[0]))
        while stack:
            v = stack.pop()
            if not 1 <= v <= n:
                raise ValueError(f"child index {v} out of range")
            order.append(v)
            for c in self.children[v]:
                if not 1 <= c <= n or self.parent[c] != v:
                    raise ValueError("parent and children arrays disagree")
            stack.extend(reversed(self.children[v]))
        for r in self.children[0]:
            if self.parent[r] != 0:
                raise ValueError("roots must have parent marker 0")
        if order != list(range(1, n + 1)):
            raise ValueError("vertices are not numbered in depth-first preorder")

    @property
    def roots(self) -> tuple[int, ...]:
        return self.children[0]

    def is_root(self, v: int) -> bool:
        return self.parent[v] == 0

    def render(self) -> str:
        """Balanced-paren encoding; inverse of parse_forest."""
        out = []
        stack = [(v, False) for v in reversed(self.children[0])]
        while stack:
            v, closing = stack.pop()
            if closing:
                out.append(")")
                continue
            out.append("(")
            stack.append((v, True))
            stack.extend((c, False) for c in reversed(self.children[v]))
        return "".join(out)

    def __str__(self) -> str:
        return self.render()


def parse_forest(text: str) -> Forest:
    """Parse a balanced-parenthesis forest encoding.

    A tree is "(" followed by the encodings of its children followed by
    ")"; a forest is a concatenation of trees.  The empty string is the
    empty forest.
    """
    parent = [0]
    children: list[list[int]] = [[]]
    stack = [0]
    for offset, ch in enumerate(text):
        if ch == "(":
            v = len(parent)
            parent.append(stack[-1])
            children[stack[-1]].append(v)
            children.append([])
            stack.append(v)
        elif ch == ")":
            if len(stack) == 1:
                raise ForestParseError("unmatched ')'", offset)
            stack.pop()
        else:
            raise ForestParseError(f"unexpected character {ch!r}", offset)
    if len(stack) > 1:
        raise ForestParseError("unclosed '('", len(text))
    return Forest(n=len(parent) - 1, parent=tuple(parent),
                  children=tuple(tuple(c) for c in children))


def render_forest(forest: Forest) -> str:
    return forest.render()


def forest_from_parents(parents: Sequence[int]) -> Forest:
    """Build a forest from a parent array (0 marks a root).

    Entry i (0-based) is the parent of vertex i+1 in the caller's
    numbering.  Children keep increasing original order and trees are
    ordered by their root's original index; the result is re-indexed to
    the preorder-canonical form.
    """
    n = len(parents)
    kids: list[list[int]] = [[] for _ in range(n + 1)]
    for v, p in enumerate(parents, start=1):
        if not isinstance(p, int) or not 0 <= p <= n:
            raise ValueError(f"parent entry {p!r} for vertex {v} is out of range")
        if p == v:
            raise ValueError(f"vertex {v} cannot be its own parent")
        kids[p].append(v)
    order = []
    stack = list(reversed(kids[0]))
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(kids[v]))
    if len(order) != n:
        raise ValueError("parent array contains a cycle")
    new_index = {old: new for new, old in enumerate(order, start=1)}
    parent = [0] * (n + 1)
    children: list[tuple[int, ...]] = [()] * (n + 1)
    children[0] = tuple(new_index[r] for r in kids[0])
    for old in range(1, n + 1):
        new = new_index[old]
        p = parents[old - 1]
        parent[new] = new_index[p] if p else 0
        children[new] = tuple(new_index[c] for c in kids[old])
    return Forest(n=n, parent=tuple(parent), children=tuple(children))


def parse_forest_input(text: str) -> Forest:
    """Accept either the paren encoding or a parent array like "[0,1,1,0]"."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad parent array: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError("parent array must be a list of integers")
        return forest_from_parents(data)
    return parse_forest(stripped)


def chain_forest(n: int) -> Forest:
    """The linear tree on n vertices (vertex 1 the root, n the deepest leaf)."""
    return parse_forest("(" * n + ")" * n)


@lru_cache(maxsize=None)
def hook_lengths(forest: Forest) -> tuple[int, ...]:
    """Subtree sizes indexed by vertex (index 0 unused and set to 0)."""
    h = [1] * (forest.n + 1)
    h[0] = 0
    for v in range(forest.n, 0, -1):
        h[v] = 1 + sum(h[c] for c in forest.children[v])
    return tuple(h)


def is_strict_ancestor(forest: Forest, a: int, b: int) -> bool:
    """True iff b lies in the proper subtree of a."""
    n = forest.n
    if not (1 <= a <= n and 1 <= b <= n):
        raise IndexError(f"vertex index out of range 1..{n}")
    return a < b < a + hook_lengths(forest)[a]


@lru_cache(maxsize=None)
def comparable_pairs(forest: Forest) -> tuple[tuple[int, int], ...]:
    """All (ancestor, descendant) pairs of the forest order."""
    h = hook_lengths(forest)
    return tuple((a, b)
                 for a in range(1, forest.n + 1)
                 for b in range(a + 1, a + h[a]))


def _balanced_strings(n: int) -> Iterator[str]:
    # '(' < ')' in ASCII, so trying '(' first yields lexicographic order
    buf: list[str] = []

    def rec(opens_left: int, unclosed: int) -> Iterator[str]:
        if not opens_left and not unclosed:
            yield "".join(buf)
            return
        if opens_left:
            buf.append("(")
            yield from rec(opens_left - 1, unclosed + 1)
            buf.pop()
        if unclosed:
            buf.append(")")
            yield from rec(opens_left, unclosed - 1)
            buf.pop()

    yield from rec(n, 0)


def enumerate_forests(n: int) -> Iterator[Forest]:
    """Every plane forest on n vertices once, by lexicographic paren string."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    for s in _balanced_strings(n):
        yield parse_forest(s)


def _signed_vectors(n: int) -> Iterator[tuple[int, ...]]:
    # lexicographic: at each position try -n < ... < -1 < 1 < ... < n
    used = [False] * (n + 1)
    values: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(values) == n:
            yield tuple(values)
            return
        avail = [k for k in range(1, n + 1) if not used[k]]
        for v in [-k for k in reversed(avail)] + avail:
            used[abs(v)] = True
            values.append(v)
            yield from rec()
            values.pop()
            used[abs(v)] = False

    yield from rec()


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown sign mode {mode!r}; expected one of {MODES}")


def enumerate_labelings(forest: Forest, mode: str = "signed") -> Iterator[tuple[int, ...]]:
    """Label vectors of the forest in lexicographic order.

    Counts are n! (ordinary), 2^n n! (signed) and 2^(n-1) n!
    (even-signed, n >= 1).
    """
    _check_mode(mode)
    n = forest.n
    if mode == "ordinary":
        yield from itertools.permutations(range(1, n + 1))
        return
    even_only = mode == "even-signed"
    for vec in _signed_vectors(n):
        if even_only and sum(1 for v in vec if v < 0) % 2:
            continue
        yield vec


def labeling_count(n: int, mode: str) -> int:
    """Closed count of the labeling stream for a forest of size n."""
    _check_mode(mode)
    if mode == "ordinary":
        return math.factorial(n)
    if mode == "signed":
        return 2 ** n * math.factorial(n)
    return 2 ** (n - 1) * math.factorial(n) if n else 1


def validate_labeling(forest: Forest, values: Sequence[int], mode: Optional[str] = None) -> tuple[int, ...]:
    """Check that values is a signed labeling of the forest; returns it as a tuple."""
    values = tuple(values)
    n = forest.n
    if len(values) != n:
        raise ValueError(f"labeling has {len(values)} values but the forest has {n} vertices")
    if any(not isinstance(v, int) or v == 0 for v in values):
        raise ValueError("labels must be nonzero integers")
    if sorted(abs(v) for v in values) != list(range(1, n + 1)):
        raise ValueError("absolute labels must be exactly 1..n with no repeats")
    if mode is not None:
        _check_mode(mode)
        negatives = sum(1 for v in values if v < 0)
        if mode == "ordinary" and negatives:
            raise ValueError("ordinary labelings have no negative labels")
        if mode == "even-signed" and negatives % 2:
            raise ValueError("even-signed labelings need an even number of negative labels")
    return values


def parse_labeling(text: str) -> tuple[int, ...]:
    """Parse a comma-separated label vector such as "-1,2"."""
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        return tuple(int(part) for part in stripped.split(","))
    except ValueError:
        raise ValueError(f"bad labeling {text!r}: expected comma-separated integers") from None


def linear_extensions(forest: Forest, values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Label words of all linear extensions, in lexicographic word order.

    A vertex may appear only after its entire subtree, so the words read
    the labels from the leaves upward; for a chain there is exactly one
    word, the labels bottom-up.
    """
    n = forest.n
    values = tuple(values)
    pending = [len(forest.children[v]) for v in range(n + 1)]
    avail = [v for v in range(1, n + 1) if pending[v] == 0]
    word: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for v in sorted(avail, key=lambda u: values[u - 1]):
            avail.remove(v)
            p = forest.parent[v]
            pending[p] -= 1
            parent_ready = p != 0 and pending[p] == 0
            if parent_ready:
                avail.append(p)
            word.append(values[v - 1])
            yield from rec()
            word.pop()
            if parent_ready:
                avail.remove(p)
            pending[p] += 1
            avail.append(v)

    yield from rec()


def postorder(forest: Forest) -> list[int]:
    """Vertices with every child before its parent, trees left to right."""
    out: list[int] = []
    stack = [(v, False) for v in reversed(forest.children[0])]
    while stack:
        v, done = stack.pop()
        if done:
            out.append(v)
            continue
        stack.append((v, True))
        stack.extend((c, False) for c in reversed(forest.children[v]))
    return out


def decreasing_labeling(forest: Forest) -> tuple[int, ...]:
    """Canonical ordinary labeling that decreases from roots toward leaves.

    Value k goes to the k-th vertex in postorder, so every vertex gets a
    larger label than everything in its subtree.
    """
    w = [0] * forest.n
    for value, v in enumerate(postorder(forest), start=1):
        w[v - 1] = value
    return tuple(w)


def remove_root(forest: Forest) -> Forest:
    """Delete the root of a one-tree forest; its children become the roots."""
    if len(forest.roots) != 1:
        raise ValueError("remove_root needs a forest consisting of a single tree")
    n = forest.n
    parent = [0] * n
    children: list[tuple[int, ...]] = [()] * n
    children[0] = tuple(c - 1 for c in forest.children[1])
    for v in range(2, n + 1):
        p = forest.parent[v]
        parent[v - 1] = 0 if p == 1 else p - 1
        children[v - 1] = tuple(c - 1 for c in forest.children[v])
    return Forest(n=n - 1, parent=tuple(parent), children=tuple(children))
