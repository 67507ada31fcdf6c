"""Noncommutative symmetric functions in the H, R and Psi bases.

Products concatenate indices in the multiplicative bases H and Psi. The
ribbon basis is related to H by Moebius inversion over the refinement
order, Psi_n is an alternating sum of hook ribbons, and H_n in Psi is
recovered by a triangular solve against that expansion.
"""

from fractions import Fraction
from functools import lru_cache

from . import config
from .combinatorics import as_composition, coarsenings, sort_to_partition
from .errors import InputError, IntegrityError
from .linear import LinearCombination, accumulate_terms
from .sym import SymElement, h_to_p

BASES = ("H", "R", "Psi")

# accepted spellings for user-facing basis tags
BASIS_ALIASES = {
    "h": "H", "H": "H",
    "r": "R", "R": "R", "ribbon": "R",
    "psi": "Psi", "Psi": "Psi", "PSI": "Psi",
}


def basis_tag(name):
    try:
        return BASIS_ALIASES[name]
    except KeyError:
        raise InputError(f"unknown NSym basis {name!r}; expected one of H, R, Psi") from None


class NSymElement(LinearCombination):
    BASES = BASES
    TEXT_NAMES = {"H": "H", "R": "R", "Psi": "Psi"}
    LATEX_NAMES = {"H": "H", "R": "R", "Psi": "\\Psi"}
    __slots__ = ()

    @classmethod
    def _check_index(cls, k):
        return as_composition(k)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if isinstance(other, NSymElement):
            return multiply(self, other)
        return NotImplemented


def H(*parts):
    return NSymElement("H", {parts: 1})


def R(*parts):
    return NSymElement("R", {parts: 1})


def Psi(*parts):
    return NSymElement("Psi", {parts: 1})


def one(basis="Psi"):
    return NSymElement(basis, {(): 1})


def combine(a: NSymElement, c, b: NSymElement) -> NSymElement:
    """a + c*b in a common basis."""
    return a.combine(c, b)


def _concat_product(a_terms, b_terms):
    return accumulate_terms(
        (x + y, s * t) for x, s in a_terms.items() for y, t in b_terms.items()
    )


def multiply(a: NSymElement, b: NSymElement) -> NSymElement:
    """Product in NSym; H and Psi multiply by index concatenation."""
    if not isinstance(a, NSymElement) or not isinstance(b, NSymElement):
        raise InputError("multiply expects two NSym elements")
    if a.basis != b.basis:
        raise InputError(f"cannot multiply elements in bases {a.basis} and {b.basis}")
    if a.basis == "R":
        return convert(multiply(convert(a, "H"), convert(b, "H")), "R")
    return NSymElement._from_clean(a.basis, _concat_product(a._terms, b._terms))


def _ribbon_to_h(alpha):
    la = len(alpha)
    return {beta: (-1) ** (la - len(beta)) for beta in coarsenings(alpha)}


def _h_to_ribbon(alpha):
    return {beta: 1 for beta in coarsenings(alpha)}


@lru_cache(maxsize=None)
def _psi_n_in_h(n):
    terms = {}
    for i in range(n):
        hook = (1,) * i + (n - i,)
        sign = (-1) ** i
        for beta, c in _ribbon_to_h(hook).items():
            terms[beta] = terms.get(beta, 0) + sign * c
    return {k: Fraction(v) for k, v in terms.items() if v}


def psi_generator_in_h(n: int) -> NSymElement:
    """H-expansion of Psi_n via its hook-ribbon sum."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"psi_generator_in_h: n must be a positive integer, got {n!r}")
    return NSymElement._from_clean("H", dict(_psi_n_in_h(n)))


@lru_cache(maxsize=None)
def _h_n_in_psi(n):
    # Psi_n = lead*H_n + (terms whose parts are all < n); solve for H_n.
    psi_n = _psi_n_in_h(n)
    lead = psi_n.get((n,), 0)
    if not lead:
        raise IntegrityError(f"coefficient of H_({n}) in Psi_{n} vanished")
    rest = {(n,): Fraction(1)}
    for beta, c in psi_n.items():
        if beta == (n,):
            continue
        for k, v in _product_in(beta, _h_n_in_psi).items():
            rest[k] = rest.get(k, 0) - c * v
    return {k: v / lead for k, v in rest.items() if v}


def _product_in(alpha, generator_table):
    acc = {(): Fraction(1)}
    for part in alpha:
        acc = _concat_product(acc, generator_table(part))
    return acc


# direct formula tables (index -> terms in target basis)
_DIRECT = {
    ("R", "H"): _ribbon_to_h,
    ("H", "R"): _h_to_ribbon,
    ("Psi", "H"): lambda a: _product_in(a, _psi_n_in_h),
    ("H", "Psi"): lambda a: _product_in(a, _h_n_in_psi),
}

_SOLVED = {("H", "Psi")}


def _check_cap(e, solve):
    limit = config.cap("solve_degree" if solve else "degree")
    for alpha in e._terms:
        if sum(alpha) > limit:
            kind = "solve degree" if solve else "degree"
            raise InputError(f"degree {sum(alpha)} exceeds {kind} cap {limit}")


def _convert_step(e, target):
    table = _DIRECT[(e.basis, target)]
    _check_cap(e, (e.basis, target) in _SOLVED)
    out = {}
    for alpha, c in e._terms.items():
        for k, v in table(alpha).items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return NSymElement._from_clean(target, out)


def convert(e: NSymElement, target: str) -> NSymElement:
    """Express `e` in the basis `target` (one of H, R, Psi)."""
    target = basis_tag(target)
    if e.basis == target:
        return e
    if (e.basis, target) in _DIRECT:
        return _convert_step(e, target)
    # R <-> Psi goes through H
    return _convert_step(_convert_step(e, "H"), target)


def chi(e: NSymElement) -> SymElement:
    """Commutative image in Sym, expressed in the power-sum basis."""
    if e.basis == "Psi":
        return SymElement(
            "p", accumulate_terms((sort_to_partition(a), c) for a, c in e._terms.items())
        )
    if e.basis == "R":
        e = convert(e, "H")
    hs = SymElement("h", accumulate_terms((sort_to_partition(a), c) for a, c in e._terms.items()))
    return h_to_p(hs)


def is_homogeneous(e, degree=None):
    degs = e.degrees()
    if degree is not None:
        return degs <= {degree}
    return len(degs) <= 1
