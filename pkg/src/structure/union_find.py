"""Union-find over the points 0..n-1, used for orbits and block refinement."""

from typing import FrozenSet, Iterable, List, Sequence


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; returns False if they were already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def classes(self) -> List[FrozenSet[int]]:
        """The classes, sorted by smallest member."""
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted((frozenset(members) for members in groups.values()), key=min)

    def class_of(self, x: int) -> FrozenSet[int]:
        root = self.find(x)
        return frozenset(y for y in range(len(self.parent)) if self.find(y) == root)


def find_orbits(n: int, generators: Iterable[Sequence[int]]) -> List[FrozenSet[int]]:
    """Orbits of the group generated by image tuples acting on 0..n-1."""
    uf = UnionFind(n)
    for images in generators:
        for x in range(n):
            uf.union(x, images[x])
    return uf.classes()
