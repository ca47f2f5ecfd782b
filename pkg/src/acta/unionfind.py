class UnionFind:
    """Disjoint sets over ``range(n)`` with path compression and union by size."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        """Merge the sets of x and y; return False if they were already one set."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def labels(self):
        """Dense block ids, numbered by the least element of each block."""
        ids = {}
        out = []
        for x in range(len(self.parent)):
            out.append(ids.setdefault(self.find(x), len(ids)))
        return tuple(out)
