"""Commutative symmetric functions and Stanley's chromatic symmetric function.

Elements of Sym live in the power-sum basis `p` (with minimal support for
the complete homogeneous basis `h`). Stanley's subset expansion is checked
against a brute-force proper-coloring oracle in finitely many variables.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod

from . import config
from .combinatorics import as_partition, partitions_of
from .errors import InputError
from .linear import LinearCombination, accumulate_terms
from .parallel import chunked_sum
from .unionfind import component_sizes


class SymElement(LinearCombination):
    BASES = ("p", "h")
    TEXT_NAMES = {"p": "p", "h": "h"}
    LATEX_NAMES = {"p": "p", "h": "h"}
    __slots__ = ()

    @classmethod
    def _check_index(cls, k):
        return as_partition(k)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        self._same_basis(other, "multiply")
        return SymElement._from_clean(
            self.basis,
            accumulate_terms(
                (_merge(a, b), x * y)
                for a, x in self._terms.items()
                for b, y in other._terms.items()
            ),
        )


def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


def p(*parts):
    return SymElement("p", {tuple(parts): 1})


def z_factor(lam):
    """Size of the centralizer of a permutation of cycle type `lam`."""
    return prod(k**m * factorial(m) for k, m in Counter(lam).items())


@lru_cache(maxsize=None)
def _h_n_in_p(n):
    return {lam: Fraction(1, z_factor(lam)) for lam in partitions_of(n)}


@lru_cache(maxsize=None)
def _p_n_in_h(n):
    # Newton: p_n = n h_n - sum_{i=1}^{n-1} p_i h_{n-i}
    terms = {(n,): Fraction(n)}
    for i in range(1, n):
        for lam, c in _p_n_in_h(i).items():
            k = _merge(lam, (n - i,))
            terms[k] = terms.get(k, 0) - c
    return {k: v for k, v in terms.items() if v}


def _expand_multiplicative(e, generator_table, target):
    out = {}
    for lam, c in e._terms.items():
        acc = {(): Fraction(1)}
        for part in lam:
            g = generator_table(part)
            acc = accumulate_terms(
                (_merge(a, b), x * y) for a, x in acc.items() for b, y in g.items()
            )
        for k, v in acc.items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return SymElement._from_clean(target, out)


def _check_degree(e):
    limit = config.cap("degree")
    for lam in e._terms:
        if sum(lam) > limit:
            raise InputError(f"degree {sum(lam)} exceeds degree cap {limit}")


def h_to_p(e: SymElement) -> SymElement:
    """Re-express an h-basis element in the power-sum basis."""
    if e.basis != "h":
        raise InputError(f"h_to_p expects an h-basis element, got basis {e.basis}")
    _check_degree(e)
    return _expand_multiplicative(e, _h_n_in_p, "p")


def p_to_h(e: SymElement) -> SymElement:
    if e.basis != "p":
        raise InputError(f"p_to_h expects a p-basis element, got basis {e.basis}")
    _check_degree(e)
    return _expand_multiplicative(e, _p_n_in_h, "h")


class UndirectedGraph:
    """Simple graph on vertices 0..n-1; edges are stored as pairs (u, v), u < v."""

    __slots__ = ("n", "edges")

    def __init__(self, n, edges=()):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        seen = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"edge must be a pair, got {e!r}")
            if not (isinstance(u, int) and isinstance(v, int)) or not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e!r} has endpoint outside [0, {n})")
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
        self.n = n
        self.edges = tuple(sorted(seen))

    def __eq__(self, other):
        return isinstance(other, UndirectedGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"UndirectedGraph({self.n}, {list(self.edges)})"

    def is_connected(self):
        return self.n <= 1 or len(component_sizes(self.n, self.edges)) == 1

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "n" not in data:
            raise InputError("graph JSON must be an object with keys 'n' and 'edges'")
        return cls(data["n"], [tuple(e) for e in data.get("edges", [])])


def cycle_graph(n):
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def path_graph(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def all_graphs(n):
    """Every simple graph on vertex set 0..n-1 (labeled, no isomorphism reduction)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield UndirectedGraph(n, [e for i, e in enumerate(pairs) if (mask >> i) & 1])


def lambda_of_subset(g: UndirectedGraph, s) -> tuple:
    """Component sizes of the spanning subgraph (V, s), weakly decreasing."""
    s = [(min(u, v), max(u, v)) for u, v in s]
    edge_set = set(g.edges)
    for e in s:
        if e not in edge_set:
            raise InputError(f"edge {e} is not an edge of the graph")
    return tuple(sorted(component_sizes(g.n, s), reverse=True))


def _stanley_chunk(n, edges, lo, hi):
    out = Counter()
    for mask in range(lo, hi):
        chosen = [e for i, e in enumerate(edges) if (mask >> i) & 1]
        lam = tuple(sorted(component_sizes(n, chosen), reverse=True))
        out[lam] += -1 if len(chosen) & 1 else 1
    return out


def stanley_power_sum(g: UndirectedGraph, jobs=1) -> SymElement:
    """X_G = sum over edge subsets S of (-1)^|S| p_lambda(S)."""
    limit = config.cap("edges")
    if len(g.edges) > limit:
        raise InputError(f"{len(g.edges)} edges exceeds edge cap {limit}")
    total = chunked_sum(_stanley_chunk, (g.n, g.edges), 1 << len(g.edges), jobs)
    return SymElement("p", total)


class MultivariatePolynomial:
    """Polynomial in x1..xm with exact coefficients, keyed by exponent vectors."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for k, c in (terms or {}).items():
            k = tuple(k)
            if len(k) != nvars:
                raise InputError(f"exponent vector {k} has wrong length for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[k] = clean.get(k, 0) + c
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    def __eq__(self, other):
        return (
            isinstance(other, MultivariatePolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return MultivariatePolynomial(self.nvars, terms)

    def __mul__(self, other):
        terms = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(i + j for i, j in zip(a, b))
                terms[k] = terms.get(k, 0) + x * y
        return MultivariatePolynomial(self.nvars, terms)

    def evaluate(self, values):
        if len(values) != self.nvars:
            raise InputError(f"expected {self.nvars} values, got {len(values)}")
        return sum(
            (c * prod(Fraction(v) ** e for v, e in zip(values, k)) for k, c in self.terms.items()),
            Fraction(0),
        )

    def ordered_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), [-e for e in kv[0]]))

    def to_text(self):
        if not self.terms:
            return "0"
        pieces = []
        for i, (k, c) in enumerate(self.ordered_terms()):
            factors = [
                f"x{j + 1}" if e == 1 else f"x{j + 1}^{e}" for j, e in enumerate(k) if e
            ]
            mag = abs(c)
            body = "*".join(([] if mag == 1 and factors else [str(mag)]) + factors)
            if i == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"MultivariatePolynomial({self.nvars}, {self.to_text()!r})"


def coloring_oracle(g: UndirectedGraph, m: int) -> MultivariatePolynomial:
    """Sum over proper colorings kappa: V -> {1..m} of prod x_kappa(v)."""
    if m < 1:
        raise InputError(f"number of colors must be positive, got {m}")
    budget = config.cap("colorings")
    if m**g.n > budget:
        raise InputError(f"{m}^{g.n} colorings exceeds budget {budget}")
    nbrs = [[] for _ in range(g.n)]
    for u, v in g.edges:
        # only earlier neighbours need checking when colouring in vertex order
        nbrs[max(u, v)].append(min(u, v))
    counts = Counter()
    colors = [0] * g.n
    exps = [0] * m

    def place(v):
        if v == g.n:
            counts[tuple(exps)] += 1
            return
        for c in range(m):
            if any(colors[w] == c for w in nbrs[v]):
                continue
            colors[v] = c
            exps[c] += 1
            place(v + 1)
            exps[c] -= 1

    place(0)
    return MultivariatePolynomial(m, counts)


def proper_coloring_count(g: UndirectedGraph, m: int) -> int:
    """Number of proper m-colorings by direct enumeration of all m^n maps."""
    return sum(
        all(k[u] != k[v] for u, v in g.edges) for k in product(range(m), repeat=g.n)
    )


def _power_sum_poly(k, m):
    return MultivariatePolynomial(
        m, {tuple(k if j == i else 0 for j in range(m)): 1 for i in range(m)}
    )


def evaluate_p_truncated(e: SymElement, m: int) -> MultivariatePolynomial:
    """Substitute p_k -> x1^k + ... + xm^k and expand."""
    if e.basis != "p":
        raise InputError(f"evaluate_p_truncated expects a p-basis element, got {e.basis}")
    if m < 1:
        raise InputError(f"number of variables must be positive, got {m}")
    cache = {}
    total = MultivariatePolynomial(m)
    for lam, c in e.items():
        poly = MultivariatePolynomial.constant(m, c)
        for part in lam:
            if part not in cache:
                cache[part] = _power_sum_poly(part, m)
            poly = poly * cache[part]
        total = total + poly
    return total
