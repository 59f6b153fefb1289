"""Exact sparse Laurent-polynomial arithmetic over the integers.

A Laurent polynomial in ``nvars`` variables is a dictionary mapping exponent
vectors (tuples of ``nvars`` signed ints) to nonzero integer coefficients.
The zero polynomial is the empty dictionary.  Coefficients are Python ints,
so there is no overflow and no floating point anywhere.

Canonical text form: terms sorted by descending lexicographic order of their
exponent vectors, e.g. ``x1*x3 + 2*x2 + 1``.  ``to_text`` and ``parse``
round-trip bit-exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, InexactDivisionError, PoleError

ExponentVector = tuple[int, ...]


def default_names(nvars: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(nvars))


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[ExponentVector, int], nvars: int):
        clean: dict[ExponentVector, int] = {}
        for exps, coeff in terms.items():
            if len(exps) != nvars:
                raise DimensionMismatchError(
                    f"exponent vector {exps} has length {len(exps)}, expected {nvars}"
                )
            if coeff:
                clean[tuple(exps)] = coeff
        self._terms = clean
        self.nvars = nvars
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> LaurentPolynomial:
        return cls({}, nvars)

    @classmethod
    def constant(cls, value: int, nvars: int) -> LaurentPolynomial:
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def one(cls, nvars: int) -> LaurentPolynomial:
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, slot: int, nvars: int) -> LaurentPolynomial:
        if not 0 <= slot < nvars:
            raise DimensionMismatchError(f"variable slot {slot} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[slot] = 1
        return cls({tuple(exps): 1}, nvars)

    @classmethod
    def monomial(cls, coeff: int, exps: Sequence[int]) -> LaurentPolynomial:
        return cls({tuple(exps): coeff}, len(exps))

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def terms(self) -> list[tuple[ExponentVector, int]]:
        """Terms in canonical (descending lexicographic) order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, reverse=True)]

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.terms()]

    def min_exponents(self) -> ExponentVector:
        """Componentwise minimum exponent over all terms (zero polynomial -> all 0)."""
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_text()!r}, nvars={self.nvars})"

    # -- ring operations ----------------------------------------------------

    def _check_same_ring(self, other: LaurentPolynomial) -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"operands have {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        self._check_same_ring(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = out.get(exps, 0) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        return LaurentPolynomial(out, self.nvars)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        self._check_same_ring(other)
        out: dict[ExponentVector, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                new = out.get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return LaurentPolynomial(out, self.nvars)

    def __pow__(self, power: int) -> LaurentPolynomial:
        if power < 0:
            return self.monomial_inverse() ** (-power)
        result = LaurentPolynomial.one(self.nvars)
        base = self
        k = power
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomial_inverse(self) -> LaurentPolynomial:
        """Inverse of a one-term polynomial with unit coefficient."""
        if len(self._terms) != 1:
            raise InexactDivisionError("only monomials are invertible")
        (exps, coeff), = self._terms.items()
        if coeff not in (1, -1):
            raise InexactDivisionError(f"monomial coefficient {coeff} is not a unit")
        return LaurentPolynomial({tuple(-e for e in exps): coeff}, self.nvars)

    def div_exact(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """Exact quotient self / divisor; raises InexactDivisionError otherwise."""
        self._check_same_ring(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPolynomial.zero(self.nvars)
        if len(divisor._terms) == 1:
            (qe, qc), = divisor._terms.items()
            out: dict[ExponentVector, int] = {}
            for e, c in self._terms.items():
                if c % qc:
                    raise InexactDivisionError(f"coefficient {c} not divisible by {qc}")
                out[tuple(a - b for a, b in zip(e, qe))] = c // qc
            return LaurentPolynomial(out, self.nvars)
        return self._div_exact_general(divisor)

    def _div_exact_general(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        # Shift both operands to ordinary polynomials (minimum exponent 0 per
        # variable), then divide by the lexicographic leading term of the
        # divisor.  For an exact division the leading term of the remainder is
        # divisible at every step; anything else is reported as inexact.
        sp = self.min_exponents()
        sq = divisor.min_exponents()
        rem = {tuple(a - b for a, b in zip(e, sp)): c for e, c in self._terms.items()}
        quo_shift = tuple(a - b for a, b in zip(sp, sq))
        div = {tuple(a - b for a, b in zip(e, sq)): c for e, c in divisor._terms.items()}
        lead_q = max(div)
        coeff_q = div[lead_q]
        quotient: dict[ExponentVector, int] = {}
        while rem:
            lead_r = max(rem)
            diff = tuple(a - b for a, b in zip(lead_r, lead_q))
            coeff_r = rem[lead_r]
            if any(d < 0 for d in diff) or coeff_r % coeff_q:
                raise InexactDivisionError("division left a nonzero remainder")
            c = coeff_r // coeff_q
            quotient[diff] = c
            for e, qc in div.items():
                key = tuple(d + x for d, x in zip(diff, e))
                new = rem.get(key, 0) - c * qc
                if new:
                    rem[key] = new
                else:
                    rem.pop(key, None)
        return LaurentPolynomial(
            {tuple(e + s for e, s in zip(exps, quo_shift)): c for exps, c in quotient.items()},
            self.nvars,
        )

    # -- substitution --------------------------------------------------------

    def substitute(
        self,
        assignment: Mapping[int, LaurentPolynomial],
        nvars: int | None = None,
    ) -> LaurentPolynomial:
        """Simultaneous substitution of polynomials for variable slots.

        Unassigned slots map to the same slot of the target ring.  Negative
        powers of an assigned value require that value to be an invertible
        monomial; substituting zero into a negative power raises PoleError.
        """
        if assignment:
            sizes = {v.nvars for v in assignment.values()}
            if len(sizes) != 1:
                raise DimensionMismatchError(f"assigned values live in different rings: {sizes}")
            target = sizes.pop()
        else:
            target = self.nvars
        if nvars is not None:
            if assignment and nvars != target:
                raise DimensionMismatchError(
                    f"assigned values have {target} variables, expected {nvars}"
                )
            target = nvars

        result = LaurentPolynomial.zero(target)
        for exps, coeff in self._terms.items():
            acc = LaurentPolynomial.constant(coeff, target)
            for slot, power in enumerate(exps):
                if power == 0:
                    continue
                value = assignment.get(slot)
                if value is None:
                    if slot >= target:
                        raise DimensionMismatchError(
                            f"unassigned slot {slot} does not exist in a {target}-variable ring"
                        )
                    acc = acc * LaurentPolynomial.variable(slot, target) ** power
                elif power > 0:
                    acc = acc * value**power
                else:
                    if value.is_zero:
                        raise PoleError(f"zero substituted into negative power of slot {slot}")
                    if not value.is_monomial:
                        raise PoleError(
                            f"negative power of slot {slot} needs a monomial value; "
                            "clear denominators first"
                        )
                    acc = acc * value.monomial_inverse() ** (-power)
            result = result + acc
        return result

    # -- numerator/denominator splitting -------------------------------------

    def split(self) -> MonomialFactorization:
        """Split into a monomial-free numerator and a denominator exponent vector.

        ``denominator[i]`` is the negated minimum exponent of variable ``i``;
        initial variables therefore split with a ``-1`` entry.
        """
        if self.is_zero:
            raise ValueError("cannot split the zero polynomial")
        mins = self.min_exponents()
        numerator = LaurentPolynomial(
            {tuple(e - m for e, m in zip(exps, mins)): c for exps, c in self._terms.items()},
            self.nvars,
        )
        return MonomialFactorization(numerator, tuple(-m for m in mins))

    # -- text form -------------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = tuple(names) if names is not None else default_names(self.nvars)
        rendered: list[tuple[str, str]] = []
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e != 0
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = str(magnitude) + "*" + "*".join(factors)
            rendered.append(("-" if coeff < 0 else "+", body))
        sign, body = rendered[0]
        pieces = [body if sign == "+" else "-" + body]
        for sign, body in rendered[1:]:
            pieces.append(f" {sign} {body}")
        return "".join(pieces)

    @classmethod
    def parse(
        cls,
        text: str,
        nvars: int,
        names: Sequence[str] | None = None,
    ) -> LaurentPolynomial:
        """Parse the canonical text form back into a polynomial."""
        names = tuple(names) if names is not None else default_names(nvars)
        slot_of = {name: i for i, name in enumerate(names)}
        stripped = text.strip()
        if stripped in ("", "0"):
            return cls.zero(nvars)
        terms: dict[ExponentVector, int] = {}
        for sign, chunk in _split_terms(stripped):
            coeff = sign
            exps = [0] * nvars
            for factor in chunk.split("*"):
                factor = factor.strip()
                if re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z]\w*)(?:\^(-?\d+))?", factor)
                if m is None or m.group(1) not in slot_of:
                    raise ValueError(f"cannot parse factor {factor!r}")
                exps[slot_of[m.group(1)]] += int(m.group(2) or 1)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms, nvars)


def _split_terms(text: str) -> Iterable[tuple[int, str]]:
    # A +/- separates terms unless it directly follows '^' (an exponent sign).
    chunks: list[tuple[int, str]] = []
    sign = 1
    current: list[str] = []
    prev = ""
    for ch in text:
        if ch in "+-" and prev != "^":
            if current and "".join(current).strip():
                chunks.append((sign, "".join(current).strip()))
            sign = 1 if ch == "+" else -1
            current = []
        else:
            current.append(ch)
        if not ch.isspace():
            prev = ch
    if current and "".join(current).strip():
        chunks.append((sign, "".join(current).strip()))
    return chunks


@dataclass(frozen=True)
class MonomialFactorization:
    """A polynomial written as numerator / (product of variable powers)."""

    numerator: LaurentPolynomial
    denominator: ExponentVector

    def recombine(self) -> LaurentPolynomial:
        shift = LaurentPolynomial.monomial(1, tuple(-d for d in self.denominator))
        return self.numerator * shift

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = tuple(names) if names is not None else default_names(self.numerator.nvars)
        numerator = self.numerator.to_text(names)
        factors = [
            name if d == 1 else f"{name}^{d}"
            for name, d in zip(names, self.denominator)
            if d != 0
        ]
        if not factors:
            return numerator
        if len(self.numerator) > 1:
            numerator = f"({numerator})"
        return f"{numerator} / " + "*".join(factors)
