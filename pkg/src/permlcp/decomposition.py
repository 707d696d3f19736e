"""Common intervals, strong intervals, and decorated decomposition trees.

A common interval is a block of consecutive positions whose values form an
integer interval; the strong ones (those overlapping no other common
interval) nest into a tree.  Internal nodes are typed linear (children's
value ranges monotone, signed + or -) or prime (labeled by the simple
permutation ordering the children by value).  Expanding a linear node of
arity k into a left comb of k-1 binary nodes of the same sign yields the
binary tree shape the dynamic programs walk.

Construction here is deliberately simple: an O(n^2) sweep for common
intervals and pairwise overlap filtering for strong ones, which is ample at
the sizes this library targets.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import reduce
from typing import Iterator

from .algebra import concat_minus, concat_plus, concat_rho
from .perms import Pattern, Permutation, normalize


class NotSeparableError(ValueError):
    """A separable-only operation was given a permutation with prime structure."""


@dataclass(frozen=True, slots=True)
class IntervalSpan:
    """Inclusive 1-based position interval [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"invalid span [{self.lo}, {self.hi}]")

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    def contains(self, other: "IntervalSpan") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "IntervalSpan") -> bool:
        """Proper overlap: both differences and the intersection non-empty."""
        return (self.lo < other.lo <= self.hi < other.hi) or (
            other.lo < self.lo <= other.hi < self.hi
        )

    def __str__(self) -> str:
        return f"{self.lo}-{self.hi}"


@dataclass(frozen=True, eq=False, slots=True)
class DecompNode:
    """One node of a decomposition tree, decorated with its span and value range.

    kind is "leaf", "linear" or "prime"; linear nodes carry a sign, prime
    nodes a simple-permutation label whose arity equals the child count.
    Nodes compare by identity (trees can be large and are never deduplicated);
    use :func:`tree_to_dict` for structural comparison.
    """

    kind: str
    span: IntervalSpan
    value_range: tuple[int, int]
    children: tuple["DecompNode", ...] = ()
    sign: str | None = None
    label: Pattern | None = None

    @property
    def arity(self) -> int:
        return len(self.children)

    @property
    def is_leaf(self) -> bool:
        return self.kind == "leaf"

    @property
    def leaf_value(self) -> int:
        if self.kind != "leaf":
            raise ValueError("leaf_value on internal node")
        return self.value_range[0]

    def walk(self) -> Iterator["DecompNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True, eq=False, slots=True)
class DecompTree:
    """A decomposition tree over a permutation of size ``source_size``.

    ``expanded`` records whether linear nodes have been binarized.
    """

    root: DecompNode
    source_size: int
    expanded: bool

    def walk(self) -> Iterator[DecompNode]:
        return self.root.walk()


def common_intervals(sigma: Permutation) -> frozenset[IntervalSpan]:
    """All spans whose values form an integer interval (includes singletons and [1, n])."""
    vals = sigma.values
    n = len(vals)
    spans = []
    for lo in range(n):
        mn = mx = vals[lo]
        for hi in range(lo, n):
            v = vals[hi]
            if v < mn:
                mn = v
            elif v > mx:
                mx = v
            if mx - mn == hi - lo:
                spans.append(IntervalSpan(lo + 1, hi + 1))
    return frozenset(spans)


def strong_intervals(sigma: Permutation) -> frozenset[IntervalSpan]:
    """The common intervals that overlap no other common interval."""
    spans = sorted(common_intervals(sigma), key=lambda s: (s.lo, -s.hi))
    return frozenset(
        s for s in spans if not any(s.overlaps(t) for t in spans)
    )


def _classify(children: tuple[DecompNode, ...], span: IntervalSpan) -> DecompNode:
    """Build the internal node over ``children``, typing and labeling it."""
    lo = min(c.value_range[0] for c in children)
    hi = max(c.value_range[1] for c in children)
    increasing = all(
        children[t + 1].value_range[0] == children[t].value_range[1] + 1
        for t in range(len(children) - 1)
    )
    if increasing:
        return DecompNode("linear", span, (lo, hi), children, sign="+")
    decreasing = all(
        children[t + 1].value_range[1] == children[t].value_range[0] - 1
        for t in range(len(children) - 1)
    )
    if decreasing:
        return DecompNode("linear", span, (lo, hi), children, sign="-")
    label = normalize(tuple(c.value_range[0] for c in children))
    return DecompNode("prime", span, (lo, hi), children, label=label)


def decomposition_tree(sigma: Permutation) -> DecompTree:
    """The labeled (non-expanded) decomposition tree of ``sigma``.

    The inclusion order of the strong intervals gives the shape; each
    internal node is then typed and labeled from its children's value ranges.
    """
    vals = sigma.values
    spans = sorted(strong_intervals(sigma), key=lambda s: (s.lo, -s.hi))

    # Nest the (laminar) strong intervals with a stack sweep.
    root_entry: tuple[IntervalSpan, list] = (spans[0], [])
    stack = [root_entry]
    for span in spans[1:]:
        while not stack[-1][0].contains(span):
            stack.pop()
        entry: tuple[IntervalSpan, list] = (span, [])
        stack[-1][1].append(entry)
        stack.append(entry)

    def build(entry: tuple[IntervalSpan, list]) -> DecompNode:
        span, child_entries = entry
        if not child_entries:
            v = vals[span.lo - 1]
            return DecompNode("leaf", span, (v, v))
        return _classify(tuple(build(c) for c in child_entries), span)

    return DecompTree(build(root_entry), len(vals), expanded=False)


def expand_tree(tree: DecompTree) -> DecompTree:
    """Binarize every linear node into a left comb of same-sign binary nodes."""
    if tree.expanded:
        raise ValueError("tree is already expanded")

    def expand(node: DecompNode) -> DecompNode:
        if node.is_leaf:
            return node
        children = tuple(expand(c) for c in node.children)
        if node.kind == "prime":
            return replace(node, children=children)
        acc = children[0]
        for child in children[1:]:
            acc = DecompNode(
                "linear",
                IntervalSpan(acc.span.lo, child.span.hi),
                (
                    min(acc.value_range[0], child.value_range[0]),
                    max(acc.value_range[1], child.value_range[1]),
                ),
                (acc, child),
                sign=node.sign,
            )
        return acc

    return DecompTree(expand(tree.root), tree.source_size, expanded=True)


def is_separable(sigma: Permutation) -> bool:
    """True iff the decomposition tree of ``sigma`` has no prime node."""
    return all(node.kind != "prime" for node in decomposition_tree(sigma).walk())


def separating_tree(sigma: Permutation) -> DecompTree:
    """A binary separating tree of a separable permutation (left-comb expansion)."""
    tree = decomposition_tree(sigma)
    if any(node.kind == "prime" for node in tree.walk()):
        raise NotSeparableError(f"{sigma} is not separable")
    return expand_tree(tree)


def max_prime_arity(tree: DecompTree) -> int:
    """Largest arity over prime nodes; 0 when the tree has none."""
    return max((n.arity for n in tree.walk() if n.kind == "prime"), default=0)


def _node_pattern(node: DecompNode) -> Pattern:
    if node.is_leaf:
        return Pattern((1,))
    if node.kind == "linear":
        parts = [_node_pattern(c) for c in node.children]
        if len(parts) < 2:
            raise ValueError("malformed tree: linear node with fewer than 2 children")
        if node.sign == "+":
            return reduce(concat_plus, parts)
        if node.sign == "-":
            return reduce(concat_minus, parts)
        raise ValueError(f"malformed tree: linear node with sign {node.sign!r}")
    if node.label is None:
        raise ValueError("malformed tree: prime node without label")
    return concat_rho(node.label, [_node_pattern(c) for c in node.children])


def tree_to_permutation(tree: DecompTree) -> Permutation:
    """Rebuild the permutation from structure and labels alone (decoration ignored)."""
    return Permutation(_node_pattern(tree.root).values)


def tree_from_nested(spec) -> DecompTree:
    """Build a decorated tree from a nested description over leaf values.

    ``spec`` is an int (a leaf value), ``('+', c1, c2, ...)`` or
    ``('-', c1, c2, ...)`` for signed linear nodes, or
    ``((r1, ..., rd), c1, ..., cd)`` for a prime node labeled by the
    permutation ``r``.  Leaf positions run left to right; the leaves must
    spell out a permutation of {1..n}.  Useful for constructing alternative
    separating trees, which are not unique.
    """
    next_pos = 0

    def build(s) -> DecompNode:
        nonlocal next_pos
        if isinstance(s, int):
            next_pos += 1
            return DecompNode("leaf", IntervalSpan(next_pos, next_pos), (s, s))
        head, children_spec = s[0], s[1:]
        if len(children_spec) < 2:
            raise ValueError("internal node needs at least 2 children")
        children = tuple(build(c) for c in children_spec)
        span = IntervalSpan(children[0].span.lo, children[-1].span.hi)
        lo = min(c.value_range[0] for c in children)
        hi = max(c.value_range[1] for c in children)
        if hi - lo + 1 != sum(c.value_range[1] - c.value_range[0] + 1 for c in children):
            raise ValueError(f"children of node over {span} do not tile a value interval")
        if head in ("+", "-"):
            want = 1 if head == "+" else -1
            for left, right in zip(children, children[1:]):
                gap = right.value_range[0] - left.value_range[1]
                if (head == "+" and gap != 1) or (
                    head == "-" and left.value_range[0] - right.value_range[1] != 1
                ):
                    raise ValueError(
                        f"children value ranges are not {'increasing' if want == 1 else 'decreasing'}"
                    )
            return DecompNode("linear", span, (lo, hi), children, sign=head)
        label = Pattern(tuple(head))
        if len(label) != len(children):
            raise ValueError("prime label arity does not match child count")
        if normalize(tuple(c.value_range[0] for c in children)).values != label.values:
            raise ValueError("prime label does not match the children's value order")
        return DecompNode("prime", span, (lo, hi), children, label=label)

    root = build(spec)
    leaves = tuple(n.leaf_value for n in root.walk() if n.is_leaf)
    Permutation(leaves)  # validates the leaf decoration
    expanded = all(
        n.kind != "linear" or n.arity == 2 for n in root.walk()
    )
    return DecompTree(root, len(leaves), expanded=expanded)


def tree_to_dict(tree: DecompTree) -> dict:
    """JSON-ready dict: recursive {kind, sign?, label?, span, value_range, children}."""

    def node_dict(node: DecompNode) -> dict:
        d: dict = {
            "kind": node.kind,
            "span": [node.span.lo, node.span.hi],
            "value_range": list(node.value_range),
        }
        if node.kind == "linear":
            d["sign"] = node.sign
        elif node.kind == "prime":
            d["label"] = list(node.label.values)
        d["children"] = [node_dict(c) for c in node.children]
        return d

    return {
        "size": tree.source_size,
        "expanded": tree.expanded,
        "root": node_dict(tree.root),
    }


def tree_to_dot(tree: DecompTree) -> str:
    """Graphviz DOT rendering; node ids follow preorder for stable diffs."""
    lines = ["digraph decomposition_tree {"]
    count = 0

    def visit(node: DecompNode) -> str:
        nonlocal count
        name = f"n{count}"
        count += 1
        if node.is_leaf:
            lines.append(f'  {name} [shape=none, label="{node.leaf_value}"];')
        elif node.kind == "linear":
            lines.append(f'  {name} [shape=box, label="{node.sign}"];')
        else:
            text = " ".join(map(str, node.label.values))
            lines.append(f'  {name} [shape=box, label="{text}"];')
        for child in node.children:
            lines.append(f"  {name} -> {visit(child)};")
        return name

    visit(tree.root)
    lines.append("}")
    return "\n".join(lines)


def tree_to_text(tree: DecompTree) -> str:
    """Indented outline with decorations, one node per line."""
    out: list[str] = []

    def visit(node: DecompNode, depth: int) -> None:
        pad = "  " * depth
        if node.is_leaf:
            out.append(f"{pad}{node.leaf_value} (pos {node.span.lo})")
        else:
            vlo, vhi = node.value_range
            deco = f"(pos {node.span}, val {vlo}-{vhi})"
            if node.kind == "linear":
                out.append(f"{pad}{node.sign} {deco}")
            else:
                out.append(f"{pad}P {' '.join(map(str, node.label.values))} {deco}")
        for child in node.children:
            visit(child, depth + 1)

    visit(tree.root, 0)
    return "\n".join(out)
