"""Online (Ukkonen) suffix tree over an append-only text.

No terminal sentinel is ever appended: the tree is the implicit suffix tree,
so suffixes that are proper prefixes of other suffixes have no leaf. Edge
labels are position intervals into the shared text.
"""
from __future__ import annotations

from dataclasses import dataclass

from .text import Text, to_letters


class Node:
    __slots__ = ("id", "start", "end", "children", "slink", "parent", "depth")

    def __init__(self, id_: int, start: int, end: int | None, parent: "Node | None", depth: int | None):
        self.id = id_
        self.start = start           # edge label = text[start:end], end None = open
        self.end = end
        self.children: dict[int, Node] = {}
        self.slink: Node | None = None
        self.parent = parent
        self.depth = depth           # string depth; None for leaves (grows with text)

    def is_leaf(self) -> bool:
        return self.end is None


@dataclass
class TreeSnapshot:
    """Immutable array view of a suffix tree, indexed by node id.

    ``first_occ[v]`` is the 0-based start of the first occurrence of
    locus(v) in the text, so locus(v) == text[first_occ[v] : first_occ[v] +
    depth[v]].
    """

    text: bytes
    depth: list[int]
    parent: list[int]
    children: list[list[tuple[int, int]]]  # per node: (first symbol, child id), symbol-sorted
    first_occ: list[int]

    @property
    def size(self) -> int:
        return len(self.depth)

    def locus(self, v: int) -> bytes:
        f = self.first_occ[v]
        return self.text[f : f + self.depth[v]]


class SuffixTree:
    """Suffix tree of the text appended so far, built online."""

    def __init__(self, sigma: int):
        if sigma < 1:
            raise ValueError("sigma must be >= 1")
        self.sigma = sigma
        self.text = bytearray()
        root = Node(0, 0, 0, None, 0)
        self._nodes: list[Node] = [root]
        self.root = root
        self._active_node = root
        self._active_edge = 0
        self._active_len = 0
        self._remainder = 0

    def __len__(self) -> int:
        return len(self.text)

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    def nodes(self) -> list[Node]:
        return list(self._nodes)

    def node(self, node_id: int) -> Node:
        try:
            return self._nodes[node_id]
        except IndexError:
            raise KeyError(f"unknown node id {node_id}") from None

    def _new_node(self, start: int, end: int | None, parent: Node | None, depth: int | None) -> Node:
        node = Node(len(self._nodes), start, end, parent, depth)
        self._nodes.append(node)
        return node

    def append(self, c: int) -> None:
        """Add one symbol; the tree then represents all suffixes of text+c."""
        if not 1 <= c <= self.sigma:
            raise ValueError(f"symbol {c} out of range [1..{self.sigma}]")
        text = self.text
        text.append(c)
        pos = len(text) - 1
        self._remainder += 1
        last_internal: Node | None = None
        root = self.root
        while self._remainder:
            if self._active_len == 0:
                self._active_edge = pos
            a_sym = text[self._active_edge]
            node = self._active_node
            child = node.children.get(a_sym)
            if child is None:
                leaf = self._new_node(pos, None, node, None)
                node.children[a_sym] = leaf
                if last_internal is not None:
                    last_internal.slink = node
                    last_internal = None
            else:
                edge_len = (child.end if child.end is not None else len(text)) - child.start
                if self._active_len >= edge_len:
                    self._active_edge += edge_len
                    self._active_len -= edge_len
                    self._active_node = child
                    continue
                if text[child.start + self._active_len] == c:
                    self._active_len += 1
                    if last_internal is not None:
                        last_internal.slink = node
                    break
                split = self._new_node(
                    child.start,
                    child.start + self._active_len,
                    node,
                    (node.depth or 0) + self._active_len,
                )
                node.children[a_sym] = split
                leaf = self._new_node(pos, None, split, None)
                split.children[c] = leaf
                child.start += self._active_len
                child.parent = split
                split.children[text[child.start]] = child
                if last_internal is not None:
                    last_internal.slink = split
                last_internal = split
            self._remainder -= 1
            if self._active_node is root and self._active_len > 0:
                self._active_len -= 1
                self._active_edge = pos - self._remainder + 1
            elif self._active_node is not root:
                self._active_node = self._active_node.slink or root

    def extend(self, chunk) -> None:
        for c in chunk:
            self.append(c)

    def string_depth(self, node: Node) -> int:
        if node.depth is not None:
            return node.depth
        return (node.parent.depth or 0) + len(self.text) - node.start

    def contains(self, q) -> bool:
        """Substring membership by edge traversal."""
        if isinstance(q, Text):
            q = q.symbols
        text = self.text
        node = self.root
        i = 0
        m = len(q)
        while i < m:
            child = node.children.get(q[i])
            if child is None:
                return False
            end = child.end if child.end is not None else len(text)
            j = child.start
            while j < end and i < m:
                if text[j] != q[i]:
                    return False
                i += 1
                j += 1
            node = child
        return True

    def leaf_suffix_starts(self) -> list[int]:
        """Start positions of suffixes that have an explicit leaf."""
        n = len(self.text)
        return sorted(
            n - self.string_depth(v) for v in self._nodes if v.is_leaf()
        )

    def first_occurrence(self, node: Node) -> int:
        """0-based start of the first occurrence of locus(node)."""
        if node is self.root:
            return 0
        n = len(self.text)
        best = n
        stack = [node]
        while stack:
            v = stack.pop()
            if v.is_leaf():
                start = n - self.string_depth(v)
                if start < best:
                    best = start
            else:
                stack.extend(v.children.values())
        # an internal node always has leaves below it in an implicit tree
        return best

    def locus_interval(self, node_id: int) -> tuple[int, int]:
        """1-based inclusive interval [i, j] such that text[i..j] spells
        locus(node), using the first occurrence; the root yields (1, 0)."""
        node = self.node(node_id)
        d = self.string_depth(node)
        if d == 0:
            return (1, 0)
        f = self.first_occurrence(node)
        return (f + 1, f + d)

    def locus(self, node_id: int) -> bytes:
        i, j = self.locus_interval(node_id)
        return bytes(self.text[i - 1 : j])

    def snapshot(self) -> TreeSnapshot:
        """Freeze the current tree into arrays indexed by node id."""
        m = len(self._nodes)
        n = len(self.text)
        depth = [0] * m
        parent = [-1] * m
        children: list[list[tuple[int, int]]] = [[] for _ in range(m)]
        first = [n] * m
        text = self.text
        order: list[Node] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            vid = v.id
            if v.is_leaf():
                d = depth[parent[vid]] + n - v.start if vid else 0
                depth[vid] = d
                first[vid] = n - d
            else:
                depth[vid] = v.depth or 0
                kids = sorted(v.children.items())
                children[vid] = [(sym, ch.id) for sym, ch in kids]
                for _, ch in kids:
                    parent[ch.id] = vid
                stack.extend(ch for _, ch in reversed(kids))
        for v in reversed(order):
            vid = v.id
            p = parent[vid]
            if p >= 0 and first[vid] < first[p]:
                first[p] = first[vid]
        if m == 1:
            first[0] = 0
        return TreeSnapshot(bytes(text), depth, parent, children, first)

    def dump(self) -> str:
        """Indented text rendering: node id, interval, spelled label."""
        lines: list[str] = []
        snap = self.snapshot()

        def walk(vid: int, indent: int) -> None:
            i = snap.first_occ[vid] + 1
            j = snap.first_occ[vid] + snap.depth[vid]
            label = to_letters(snap.locus(vid)) if self.sigma <= 26 else repr(bytes(snap.locus(vid)))
            lines.append(f"{'  ' * indent}#{vid} [{i},{j}] {label}")
            for _, ch in snap.children[vid]:
                walk(ch, indent + 1)

        walk(0, 0)
        return "\n".join(lines)
