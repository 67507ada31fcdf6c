"""Union-find over vertices 0..n-1, rebuilt per edge subset."""


class UnionFind:
    __slots__ = ("parent", "size")

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self):
        """Blocks as ascending vertex tuples, ordered by smallest vertex."""
        blocks = {}
        for v in range(len(self.parent)):
            blocks.setdefault(self.find(v), []).append(v)
        return [tuple(b) for b in blocks.values()]


def component_sizes(n, edges):
    uf = UnionFind(n)
    for u, v in edges:
        uf.union(u, v)
    return [uf.size[r] for r in range(n) if uf.find(r) == r]


def components(n, edges):
    uf = UnionFind(n)
    for u, v in edges:
        uf.union(u, v)
    return uf.groups()
