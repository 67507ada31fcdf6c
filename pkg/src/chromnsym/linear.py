"""Sparse exact linear combinations shared by the NSym and Sym element types."""

from fractions import Fraction
from numbers import Rational

from .combinatorics import canonical_key
from .errors import InputError


def as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool):
        raise InputError(f"coefficient must be rational, got {c!r}")
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise InputError(f"coefficient must be rational, got {c!r}")


def accumulate_terms(pairs):
    """Sum (index, coefficient) pairs into a dict without zero entries."""
    out = {}
    for k, c in pairs:
        if not c:
            continue
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            del out[k]
    return out


class LinearCombination:
    """Immutable map index -> nonzero Fraction, tagged with a basis name.

    Subclasses set `BASES` (allowed tags) and `TEXT_NAMES`/`LATEX_NAMES`
    for rendering, and `_check_index` for index validation.
    """

    BASES = ()
    TEXT_NAMES = {}
    LATEX_NAMES = {}

    __slots__ = ("basis", "_terms", "_hash")

    def __init__(self, basis, terms=None):
        if basis not in self.BASES:
            raise InputError(f"unknown basis {basis!r} for {type(self).__name__}")
        self.basis = basis
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        clean = {}
        for k, c in items:
            k = self._check_index(k)
            c = as_fraction(c)
            if c:
                c = clean.get(k, 0) + c
                if c:
                    clean[k] = c
                else:
                    clean.pop(k, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _check_index(cls, k):
        return tuple(k)

    @classmethod
    def _from_clean(cls, basis, terms):
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, basis):
        return cls._from_clean(basis, {})

    @classmethod
    def monomial(cls, basis, index, coeff=1):
        return cls(basis, {index: coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """(index, coefficient) pairs in canonical order."""
        return [(k, self._terms[k]) for k in sorted(self._terms, key=canonical_key)]

    def coefficient(self, index):
        return self._terms.get(tuple(index), Fraction(0))

    def support(self):
        return sorted(self._terms, key=canonical_key)

    def degrees(self):
        return {sum(k) for k in self._terms}

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinearCombination):
            return (
                type(self) is type(other)
                and self.basis == other.basis
                and self._terms == other._terms
            )
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.basis, frozenset(self._terms.items())))
        return self._hash

    def _same_basis(self, other, op):
        if not isinstance(other, type(self)):
            raise InputError(f"cannot {op} {type(self).__name__} and {type(other).__name__}")
        if other.basis != self.basis:
            raise InputError(f"cannot {op} elements in bases {self.basis} and {other.basis}")

    def combine(self, c, other):
        """self + c*other."""
        self._same_basis(other, "combine")
        c = as_fraction(c)
        terms = dict(self._terms)
        if c:
            for k, v in other._terms.items():
                s = terms.get(k, 0) + c * v
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
        return self._from_clean(self.basis, terms)

    def __add__(self, other):
        return self.combine(1, other)

    def __sub__(self, other):
        return self.combine(-1, other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return self.zero(self.basis)
        return self._from_clean(self.basis, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    # rendering

    def to_text(self):
        if not self._terms:
            return "0"
        name = self.TEXT_NAMES[self.basis]
        out = []
        for k, c in self.items():
            sign = "-" if c < 0 else "+"
            out.append(f"{sign}{abs(c)}*{name}[{','.join(map(str, k))}]")
        return " ".join(out)

    def to_json(self):
        return [
            {"index": list(k), "num": c.numerator, "den": c.denominator}
            for k, c in self.items()
        ]

    @classmethod
    def from_json(cls, basis, data):
        try:
            return cls(basis, {tuple(t["index"]): Fraction(t["num"], t["den"]) for t in data})
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise InputError(f"malformed term list: {exc}") from None

    def to_latex(self):
        if not self._terms:
            return "0"
        name = self.LATEX_NAMES[self.basis]
        out = []
        for i, (k, c) in enumerate(self.items()):
            sign = "-" if c < 0 else ("" if i == 0 else "+")
            a = abs(c)
            if a.denominator != 1:
                mag = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            elif a != 1 or not k:
                mag = str(a.numerator)
            else:
                mag = ""
            if not k:
                body = mag
            else:
                sep = "," if any(x >= 10 for x in k) else ""
                body = f"{mag}{name}_{{{sep.join(map(str, k))}}}"
            out.append(f"{sign}{body}" if i == 0 else f"{sign} {body}")
        return " ".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.basis!r}, {self.to_text()!r})"
