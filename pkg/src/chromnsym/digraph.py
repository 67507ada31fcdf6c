"""Directed graphs, total degrees, component tuples and the composition alpha(S).

Vertices are 0..n-1 and their natural order is the labeling. An arc subset
S is given either as a collection of arcs or, internally, as a bitmask over
the sorted arc list `Digraph.arcs`.
"""

import json
import random
from itertools import product

from .combinatorics import Composition
from .errors import InputError
from .sym import UndirectedGraph
from .unionfind import UnionFind


class Digraph:
    """Loopless digraph without duplicate or anti-parallel arcs."""

    __slots__ = ("n", "arcs", "_index", "_net")

    def __init__(self, n, arcs=()):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        seen = set()
        for a in arcs:
            try:
                u, v = a
            except (TypeError, ValueError):
                raise InputError(f"arc must be a pair, got {a!r}") from None
            if isinstance(u, bool) or isinstance(v, bool) or not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"arc endpoints must be integers, got {a!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc {(u, v)} has endpoint outside [0, {n})")
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            if (u, v) in seen:
                raise InputError(f"duplicate arc {(u, v)}")
            if (v, u) in seen:
                raise InputError(f"anti-parallel arcs {(v, u)} and {(u, v)} are not allowed")
            seen.add((u, v))
        self.n = n
        self.arcs = tuple(sorted(seen))
        self._index = {a: i for i, a in enumerate(self.arcs)}
        net = [0] * n
        for u, v in self.arcs:
            net[u] += 1
            net[v] -= 1
        self._net = tuple(net)

    def __eq__(self, other):
        return isinstance(other, Digraph) and (self.n, self.arcs) == (other.n, other.arcs)

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph({self.n}, {list(self.arcs)})"

    def outdegree(self, v):
        return sum(1 for a, _ in self.arcs if a == v)

    def indegree(self, v):
        return sum(1 for _, b in self.arcs if b == v)

    @property
    def net_degrees(self):
        """outdegree minus indegree, per vertex."""
        return self._net

    def mask_of(self, s):
        """Bitmask over `self.arcs` for the arc collection `s`."""
        mask = 0
        for a in s:
            try:
                i = self._index[tuple(a)]
            except (KeyError, TypeError):
                raise InputError(f"{a!r} is not an arc of the digraph") from None
            mask |= 1 << i
        return mask

    def arcs_of(self, mask):
        return [a for i, a in enumerate(self.arcs) if (mask >> i) & 1]

    def subset_from_indices(self, indices):
        out = []
        for i in indices:
            if not 0 <= i < len(self.arcs):
                raise InputError(f"arc index {i} out of range [0, {len(self.arcs)})")
            out.append(self.arcs[i])
        return out

    # serialization

    def to_json(self):
        return {"n": self.n, "arcs": [list(a) for a in self.arcs]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "n" not in data:
            raise InputError("digraph JSON must be an object with keys 'n' and 'arcs'")
        arcs = data.get("arcs", [])
        if not isinstance(arcs, list):
            raise InputError("'arcs' must be a list of [u, v] pairs")
        return cls(data["n"], [tuple(a) if isinstance(a, list) else a for a in arcs])

    @classmethod
    def from_text(cls, text, n=None):
        """Parse `u v` lines; `# comments` allowed. An `n <count>` line fixes the vertex count."""
        arcs = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if fields[0] == "n" and len(fields) == 2:
                n = _parse_int(fields[1], lineno)
                continue
            if len(fields) != 2:
                raise InputError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
            arcs.append((_parse_int(fields[0], lineno), _parse_int(fields[1], lineno)))
        if n is None:
            n = 1 + max((max(a) for a in arcs), default=-1)
        return cls(n, arcs)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}: malformed JSON: {exc}") from None
            return cls.from_json(data)
        return cls.from_text(text)


def _parse_int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"line {lineno}: {tok!r} is not an integer") from None


def underlying_graph(d: Digraph) -> UndirectedGraph:
    return UndirectedGraph(d.n, d.arcs)


def total_degree(d: Digraph, w) -> int:
    """Sum of outdegrees minus sum of indegrees over the vertices in `w`."""
    net = d.net_degrees
    total = 0
    for v in set(w):
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < d.n:
            raise InputError(f"vertex {v!r} out of range [0, {d.n})")
        total += net[v]
    return total


def _blocks(d, mask):
    uf = UnionFind(d.n)
    for i, (u, v) in enumerate(d.arcs):
        if (mask >> i) & 1:
            uf.union(u, v)
    return uf.groups()


def component_tuple(d: Digraph, s) -> tuple:
    """Components of (V, S') by size descending, ties by reverse-lex vertex word."""
    blocks = _blocks(d, d.mask_of(s))
    return tuple(sorted(blocks, key=lambda b: (len(b), b), reverse=True))


def _alpha_mask(n, arcs, net, mask):
    uf = UnionFind(n)
    for i, (u, v) in enumerate(arcs):
        if (mask >> i) & 1:
            uf.union(u, v)
    keyed = []
    for b in uf.groups():
        keyed.append((sum(net[v] for v in b), len(b), b))
    keyed.sort(reverse=True)
    return tuple(k[1] for k in keyed)


def alpha(d: Digraph, s) -> Composition:
    """Component sizes listed by total degree, then size, then vertex word, all descending."""
    return _alpha_mask(d.n, d.arcs, d.net_degrees, d.mask_of(s))


def alpha_of_mask(d: Digraph, mask) -> Composition:
    return _alpha_mask(d.n, d.arcs, d.net_degrees, mask)


def _check_permutation(sigma, n):
    sigma = list(sigma)
    if sorted(sigma) != list(range(n)) or any(isinstance(x, bool) for x in sigma):
        raise InputError(f"{sigma} is not a permutation of 0..{n - 1}")
    return sigma


def relabel(d: Digraph, sigma) -> Digraph:
    """Rename vertex v to sigma[v]."""
    sigma = _check_permutation(sigma, d.n)
    return Digraph(d.n, [(sigma[u], sigma[v]) for u, v in d.arcs])


def relabel_arcs(s, sigma):
    return [(sigma[u], sigma[v]) for u, v in s]


def inverse_permutation(sigma):
    inv = [0] * len(sigma)
    for i, x in enumerate(sigma):
        inv[x] = i
    return inv


def orientations(g: UndirectedGraph):
    """All 2^|E| digraphs whose underlying graph is `g`."""
    for flips in product((False, True), repeat=len(g.edges)):
        yield Digraph(g.n, [(v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips)])


def random_digraph(n, m, seed=None, rng=None) -> Digraph:
    """`m` arcs drawn uniformly without replacement from ordered pairs.

    Pairs are visited in a seeded shuffle of all ordered pairs (u, v) with
    u != v; a pair whose reverse was already taken is skipped.
    """
    if n < 0 or m < 0:
        raise InputError("vertex and arc counts must be nonnegative")
    if m > n * (n - 1) // 2:
        raise InputError(f"at most {n * (n - 1) // 2} arcs fit on {n} vertices, asked for {m}")
    rng = rng or random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    rng.shuffle(pairs)
    chosen = set()
    for u, v in pairs:
        if len(chosen) == m:
            break
        if (v, u) not in chosen:
            chosen.add((u, v))
    return Digraph(n, chosen)
