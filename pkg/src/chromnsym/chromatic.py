"""The chromatic noncommutative symmetric function X_D and what is built on it.

    X_D = sum over arc subsets S of (-1)^|S| Psi_alpha(S)

Also here: the projection check chi(X_D) == X_G, the inwardly directed
star family with its closed form, and rewriting of Psi-elements as
noncommutative polynomials in X_{D_1}, X_{D_2}, ... for a family of
connected digraphs with |V(D_i)| = i.
"""

import json
import os
import threading
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from . import config
from .combinatorics import as_composition
from .digraph import Digraph, _alpha_mask, orientations, underlying_graph
from .errors import InputError, IntegrityError
from .linear import LinearCombination, accumulate_terms
from .nsym import NSymElement, chi
from .parallel import chunked_sum
from .sym import SymElement, all_graphs, coloring_oracle, evaluate_p_truncated, stanley_power_sum


def _xd_chunk(n, arcs, net, lo, hi):
    out = Counter()
    for mask in range(lo, hi):
        out[_alpha_mask(n, arcs, net, mask)] += -1 if bin(mask).count("1") & 1 else 1
    return out


def chromatic_nsym(d: Digraph, jobs=1) -> NSymElement:
    """Psi-expansion of X_D by summing over all 2^|E(D)| arc subsets."""
    limit = config.cap("edges")
    if len(d.arcs) > limit:
        raise InputError(f"{len(d.arcs)} arcs exceeds edge cap {limit}")
    total = chunked_sum(_xd_chunk, (d.n, d.arcs, d.net_degrees), 1 << len(d.arcs), jobs)
    return NSymElement("Psi", total)


@dataclass
class ProjectionReport:
    digraph: Digraph
    lifted: SymElement  # chi(X_D)
    stanley: SymElement  # X_G from the edge-subset expansion
    equal: bool
    oracle_colors: Optional[int] = None
    oracle_equal: Optional[bool] = None

    @property
    def ok(self):
        return self.equal and self.oracle_equal is not False

    def to_json(self):
        out = {
            "digraph": self.digraph.to_json(),
            "chi_XD": self.lifted.to_json(),
            "XG": self.stanley.to_json(),
            "equal": self.equal,
        }
        if self.oracle_colors is not None:
            out["oracle_colors"] = self.oracle_colors
            out["oracle_equal"] = self.oracle_equal
        return out


def verify_projection(d: Digraph, jobs=1, oracle_colors=None) -> ProjectionReport:
    """Compare chi(X_D) with X_G; optionally also check against proper colorings.

    With `oracle_colors=m` the p-expansion is evaluated in m variables and
    compared with the brute-force coloring polynomial of the underlying graph.
    """
    g = underlying_graph(d)
    lifted = chi(chromatic_nsym(d, jobs))
    stanley = stanley_power_sum(g, jobs)
    report = ProjectionReport(d, lifted, stanley, lifted == stanley)
    if oracle_colors is not None:
        report.oracle_colors = oracle_colors
        report.oracle_equal = evaluate_p_truncated(lifted, oracle_colors) == coloring_oracle(
            g, oracle_colors
        )
    return report


def _projection_ok(d):
    return verify_projection(d).equal


def projection_sweep(digraphs, jobs=1):
    """Digraphs (from the iterable) for which the projection identity fails."""
    digraphs = list(digraphs)
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_projection_ok, digraphs, chunksize=16))
    else:
        results = [_projection_ok(d) for d in digraphs]
    return [d for d, ok in zip(digraphs, results) if not ok]


def connected_orientations(max_n):
    """Every orientation of every connected simple graph on 1..max_n labeled vertices."""
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            if g.is_connected():
                yield from orientations(g)


def inward_star(n: int) -> Digraph:
    """Star on n vertices with every arc pointing into vertex 0."""
    if n < 1:
        raise InputError(f"inward_star needs n >= 1, got {n}")
    return Digraph(n, [(i, 0) for i in range(1, n)])


def directed_path(n: int) -> Digraph:
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def star_closed_form(n: int) -> NSymElement:
    """sum_{i=0}^{n} (-1)^i C(n, i) Psi_(1^(n-i), i+1), the expansion for inward_star(n+1)."""
    if n < 0:
        raise InputError(f"star_closed_form needs n >= 0, got {n}")
    limit = config.cap("degree")
    if n + 1 > limit:
        raise InputError(f"degree {n + 1} exceeds degree cap {limit}")
    return NSymElement(
        "Psi", {(1,) * (n - i) + (i + 1,): (-1) ** i * comb(n, i) for i in range(n + 1)}
    )


class GeneratorPolynomial(LinearCombination):
    """Noncommutative polynomial in g1, g2, ...; words are tuples of generator indices."""

    BASES = ("g",)
    __slots__ = ()

    def __init__(self, terms=None, basis="g"):
        super().__init__(basis, terms)

    @classmethod
    def _check_index(cls, k):
        return as_composition(k)

    @classmethod
    def word(cls, *indices):
        return cls({indices: 1})

    @classmethod
    def unit(cls):
        return cls({(): 1})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, GeneratorPolynomial):
            return NotImplemented
        return GeneratorPolynomial._from_clean(
            "g",
            accumulate_terms(
                (a + b, x * y) for a, x in self._terms.items() for b, y in other._terms.items()
            ),
        )

    def max_generator(self):
        return max((max(w) for w in self._terms if w), default=0)

    def to_text(self):
        if not self._terms:
            return "0"
        out = []
        for w, c in self.items():
            sign = "-" if c < 0 else "+"
            body = "*".join(f"g{i}" for i in w)
            out.append(f"{sign}{abs(c)}*{body}" if w else f"{sign}{abs(c)}")
        return " ".join(out)

    def to_json(self):
        return [
            {"word": list(w), "num": c.numerator, "den": c.denominator} for w, c in self.items()
        ]

    def to_latex(self):
        if not self._terms:
            return "0"
        out = []
        for i, (w, c) in enumerate(self.items()):
            sign = "-" if c < 0 else ("" if i == 0 else "+")
            a = abs(c)
            if a.denominator != 1:
                mag = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            else:
                mag = "" if a == 1 and w else str(a.numerator)
            body = mag + " ".join(f"\\mathbf{{X}}_{{D_{{{j}}}}}" for j in w)
            out.append(f"{sign}{body}" if i == 0 else f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"GeneratorPolynomial({self.to_text()!r})"


class GeneratorFamily:
    """Digraphs D_1, ..., D_k with |V(D_i)| = i and connected underlying graphs.

    Holds the memo tables used when rewriting Psi-elements in terms of the
    X_{D_i}; they are filled under a lock so one family may be shared.
    """

    def __init__(self, digraphs):
        digraphs = list(digraphs)
        for i, d in enumerate(digraphs, 1):
            if not isinstance(d, Digraph):
                raise InputError(f"family member {i} is not a Digraph")
            if d.n != i:
                raise InputError(f"family member D{i} has {d.n} vertices, expected {i}")
            if not underlying_graph(d).is_connected():
                raise InputError(f"family member D{i} has a disconnected underlying graph")
        self.digraphs = tuple(digraphs)
        self._expansions = {}
        self._psi_rewrites = {}
        self._lock = threading.RLock()

    def __len__(self):
        return len(self.digraphs)

    def __getitem__(self, i):
        """D_i, 1-based."""
        return self.digraphs[i - 1]

    @classmethod
    def load_dir(cls, path):
        """Read D1.json, D2.json, ... from `path`, stopping at the first gap."""
        if not os.path.isdir(path):
            raise InputError(f"family directory {path!r} does not exist")
        digraphs = []
        i = 1
        while True:
            f = os.path.join(path, f"D{i}.json")
            if not os.path.exists(f):
                break
            digraphs.append(Digraph.load(f))
            i += 1
        if not digraphs:
            raise InputError(f"no D1.json found in {path!r}")
        return cls(digraphs)

    def dump_dir(self, path):
        os.makedirs(path, exist_ok=True)
        for i, d in enumerate(self.digraphs, 1):
            with open(os.path.join(path, f"D{i}.json"), "w") as fh:
                json.dump(d.to_json(), fh)

    def expansion(self, i):
        """X_{D_i} in the Psi basis (cached)."""
        with self._lock:
            if i not in self._expansions:
                self._expansions[i] = chromatic_nsym(self[i])
            return self._expansions[i]

    def leading_coefficient(self, i):
        return self.expansion(i).coefficient((i,))

    def psi_generator(self, j):
        """Psi_(j) as a generator polynomial, solved from X_{D_j} and lower rewrites."""
        with self._lock:
            if j in self._psi_rewrites:
                return self._psi_rewrites[j]
            if not 1 <= j <= len(self):
                raise InputError(f"Psi_({j}) needs D{j}, but the family has {len(self)} members")
            x = self.expansion(j)
            lead = x.coefficient((j,))
            if not lead:
                raise IntegrityError(f"coefficient of Psi_({j}) in X_D{j} is zero")
            acc = GeneratorPolynomial.word(j)
            for a, c in x.items():
                if a != (j,):
                    acc = acc.combine(-c, self.psi_word(a))
            result = acc.scale(1 / Fraction(lead))
            self._psi_rewrites[j] = result
            return result

    def psi_word(self, a):
        """Psi_a = prod Psi_(a_i), each factor rewritten."""
        out = GeneratorPolynomial.unit()
        for part in a:
            out = out * self.psi_generator(part)
        return out


def _as_family(fam):
    return fam if isinstance(fam, GeneratorFamily) else GeneratorFamily(fam)


def rewrite_in_generators(fam, target: NSymElement) -> GeneratorPolynomial:
    """A noncommutative polynomial P in g_1..g_k with P(X_{D_1}, ..., X_{D_k}) = target."""
    fam = _as_family(fam)
    if not isinstance(target, NSymElement) or target.basis != "Psi":
        raise InputError("rewrite_in_generators expects a Psi-basis element")
    limit = config.cap("degree")
    for a in target.support():
        if sum(a) > limit:
            raise InputError(f"degree {sum(a)} exceeds degree cap {limit}")
        if a and max(a) > len(fam):
            raise InputError(
                f"Psi{list(a)} has a part {max(a)} larger than the family size {len(fam)}"
            )
    out = GeneratorPolynomial()
    for a, c in target.items():
        out = out.combine(c, fam.psi_word(a))
    return out


def substitute_generators(fam, p: GeneratorPolynomial) -> NSymElement:
    """Evaluate `p` at g_i = X_{D_i}, expanded in the Psi basis."""
    fam = _as_family(fam)
    k = p.max_generator()
    if k > len(fam):
        raise InputError(f"generator g{k} used but the family has {len(fam)} members")
    out = {}
    for w, c in p.items():
        acc = {(): Fraction(1)}
        for i in w:
            x = fam.expansion(i)._terms
            acc = accumulate_terms((a + b, s * t) for a, s in acc.items() for b, t in x.items())
        for a, v in acc.items():
            out[a] = out.get(a, 0) + c * v
    return NSymElement("Psi", out)
