"""Centroid decomposition of a tree, giving a logarithmic-height search tree.

A centroid of an m-node component splits it, upon removal, into components
of size at most m/2 (Jordan). Decomposing recursively yields a tree over the
same nodes whose height is O(log m); root-to-node paths in the original tree
can then be binary-searched by walking the decomposition.
"""
from __future__ import annotations

from dataclasses import dataclass

from .suffix_tree import SuffixTree, TreeSnapshot


@dataclass
class CentroidTree:
    """Decomposition over node ids of the decomposed tree.

    The first child of a centroid u is the component containing u's parent
    in the original tree (when that component is nonempty); the remaining
    children follow u's original children in order.
    """

    root: int
    parent: list[int]          # centroid-tree parent per node, -1 at the root
    children: list[list[int]]  # centroid-tree children per node
    depth: list[int]           # centroid-tree depth per node
    height: int
    balanced: bool             # every split produced components of size <= m/2

    @property
    def size(self) -> int:
        return len(self.parent)

    def component_of(self, u: int, v: int) -> int | None:
        """The centroid-child of u whose component contains v.

        None when v == u or v lies outside u's component (i.e. u is not a
        strict ancestor of v in the decomposition).
        """
        if not 0 <= u < self.size or not 0 <= v < self.size:
            raise KeyError(f"unknown node in ({u}, {v})")
        if u == v:
            return None
        du = self.depth[u]
        depth = self.depth
        parent = self.parent
        cur = v
        while depth[cur] > du:
            prev = cur
            cur = parent[cur]
            if cur == u:
                return prev
        return None


def decompose_adjacency(adjacency: list[list[int]]) -> CentroidTree:
    """Centroid-decompose a tree given as neighbor lists (parent first, then
    children, in the order components should be attached). When a component
    has two centroids, the one with the smaller node id wins."""
    m = len(adjacency)
    if m == 0:
        raise ValueError("cannot decompose an empty tree")
    removed = bytearray(m)
    par = [0] * m   # scratch, oriented from the current component entry
    size = [0] * m  # scratch, valid for the current component only
    parent_ct = [-1] * m
    children_ct: list[list[int]] = [[] for _ in range(m)]
    depth_ct = [0] * m
    balanced = True
    height = 0

    def max_comp(u: int, msize: int) -> int:
        # largest component left by removing u, under the current orientation
        worst = msize - size[u]
        pu = par[u]
        for w in adjacency[u]:
            if w != pu and not removed[w] and size[w] > worst:
                worst = size[w]
        return worst

    # each task decomposes the component containing `entry`, hanging its
    # centroid under `ct_parent`
    tasks: list[tuple[int, int]] = [(0, -1)]
    while tasks:
        entry, ct_parent = tasks.pop()
        comp = [entry]
        par[entry] = -1
        i = 0
        while i < len(comp):
            v = comp[i]
            i += 1
            pv = par[v]
            for w in adjacency[v]:
                if w != pv and not removed[w]:
                    par[w] = v
                    comp.append(w)
        msize = len(comp)
        for v in comp:
            size[v] = 1
        for v in reversed(comp):
            p = par[v]
            if p != -1:
                size[p] += size[v]
        half = msize // 2
        # walk toward the heavy subtree until every component is <= half
        v = entry
        while True:
            nxt = None
            pv = par[v]
            for w in adjacency[v]:
                if w != pv and not removed[w] and size[w] > half:
                    nxt = w
                    break
            if nxt is None:
                break
            v = nxt
        # a tree has at most two centroids and they are adjacent: prefer the
        # smaller node id
        c = v
        for w in adjacency[v]:
            if not removed[w] and w < c and max_comp(w, msize) <= half:
                c = w
        if max_comp(c, msize) > half:
            balanced = False
        removed[c] = 1
        parent_ct[c] = ct_parent
        d = 0 if ct_parent == -1 else depth_ct[ct_parent] + 1
        depth_ct[c] = d
        if d + 1 > height:
            height = d + 1
        if ct_parent != -1:
            children_ct[ct_parent].append(c)
        # neighbor components are attached in adjacency order; pushed in
        # reverse so they are processed (and appended) in that order
        live = [w for w in adjacency[c] if not removed[w]]
        for w in reversed(live):
            tasks.append((w, c))

    roots = [v for v in range(m) if parent_ct[v] == -1]
    assert len(roots) == 1
    return CentroidTree(roots[0], parent_ct, children_ct, depth_ct, height, balanced)


def snapshot_adjacency(snap: TreeSnapshot) -> list[list[int]]:
    """Parent-first neighbor lists (children in symbol order) for a snapshot."""
    adj: list[list[int]] = []
    for v in range(snap.size):
        nbrs: list[int] = []
        if snap.parent[v] != -1:
            nbrs.append(snap.parent[v])
        nbrs.extend(ch for _, ch in snap.children[v])
        adj.append(nbrs)
    return adj


def decompose_snapshot(snap: TreeSnapshot) -> CentroidTree:
    return decompose_adjacency(snapshot_adjacency(snap))


def centroid_decompose(tree: SuffixTree) -> CentroidTree:
    """Decomposition of a suffix tree's node set, indexed by node id."""
    return decompose_snapshot(tree.snapshot())
