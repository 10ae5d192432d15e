from __future__ import annotations

from collections.abc import Hashable, Iterable


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.order = list(items)
        self.parent = {x: x for x in self.order}
        self.size = {x: 1 for x in self.order}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def groups(self) -> list[list]:
        """Parts in order of first appearance, members in insertion order."""
        parts: dict = {}
        for x in self.order:
            parts.setdefault(self.find(x), []).append(x)
        return list(parts.values())

    def __len__(self) -> int:
        return sum(1 for x in self.order if self.parent[x] == x)
