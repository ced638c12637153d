"""Exact two-variable Laurent arithmetic over Z and over GF(2).

Every value this package computes lives in the fraction field of
Z[v, v^-1, s, s^-1] (or its mod-2 reduction), so all arithmetic here is
exact integer arithmetic on sparse exponent dictionaries.  No floats,
no truncation, no symbolic dependencies.

Rendering contract (stable, relied on by golden tests and the CLI):
terms are sorted by (v-exponent, s-exponent) descending; the first term
carries a leading "-" when negative and later terms are joined with
" + " or " - " by sign; a coefficient of magnitude 1 is omitted unless
the term is constant; exponent 1 renders bare ("v", not "v^1"); other
exponents render as "v^3" or "s^-2"; factors are joined with "*"; the
zero polynomial renders as "0"; a fraction renders as "(num)/(den)"
only when the reduced denominator is not 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Union

Exponents = tuple[int, int]
TermsLike = Union[Mapping[Exponents, int], Iterable[tuple[Exponents, int]], None]


class LaurentPoly:
    """Sparse Laurent polynomial in v and s with integer coefficients.

    ``char`` selects the coefficient ring: 0 for Z, 2 for GF(2).
    Instances are immutable and hashable; all operators return new objects.
    """

    __slots__ = ("_terms", "char")

    def __init__(self, terms: TermsLike = None, char: int = 0):
        if char not in (0, 2):
            raise ValueError("char must be 0 or 2")
        merged: dict[Exponents, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (dv, ds), coeff in items:
                key = (int(dv), int(ds))
                merged[key] = merged.get(key, 0) + int(coeff)
        clean = {}
        for key, coeff in merged.items():
            if char == 2:
                coeff %= 2
            if coeff:
                clean[key] = coeff
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "char", char)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _make(cls, clean: dict, char: int) -> "LaurentPoly":
        # internal fast path: `clean` must hold int pairs -> nonzero reduced ints
        self = object.__new__(cls)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "char", char)
        return self

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, char: int = 0) -> "LaurentPoly":
        return cls(None, char)

    @classmethod
    def one(cls, char: int = 0) -> "LaurentPoly":
        return cls({(0, 0): 1}, char)

    @classmethod
    def constant(cls, value: int, char: int = 0) -> "LaurentPoly":
        return cls({(0, 0): int(value)}, char)

    @classmethod
    def monomial(cls, dv: int, ds: int, coeff: int = 1, char: int = 0) -> "LaurentPoly":
        return cls({(dv, ds): coeff}, char)

    # ------------------------------------------------------------------
    # inspection

    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms sorted descending by (v-exponent, s-exponent)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponents(self) -> Exponents:
        if not self._terms:
            raise ValueError("zero polynomial has no exponent range")
        return (
            min(dv for dv, _ in self._terms),
            min(ds for _, ds in self._terms),
        )

    def max_exponents(self) -> Exponents:
        if not self._terms:
            raise ValueError("zero polynomial has no exponent range")
        return (
            max(dv for dv, _ in self._terms),
            max(ds for _, ds in self._terms),
        )

    def coefficient(self, dv: int, ds: int) -> int:
        return self._terms.get((dv, ds), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # ring operations

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            if other.char != self.char:
                raise ValueError("characteristic mismatch")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.char)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            c = out.get(key, 0) + coeff
            if self.char == 2:
                c %= 2
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        return LaurentPoly._make(out, self.char)

    __radd__ = __add__

    def __neg__(self):
        if self.char == 2:
            return self
        return LaurentPoly._make({k: -c for k, c in self._terms.items()}, self.char)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponents, int] = {}
        get = out.get
        for (av, as_), ac in self._terms.items():
            for (bv, bs), bc in other._terms.items():
                key = (av + bv, as_ + bs)
                out[key] = get(key, 0) + ac * bc
        if self.char == 2:
            out = {k: c % 2 for k, c in out.items()}
        return LaurentPoly._make({k: c for k, c in out.items() if c}, self.char)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers only exist for monomials; shift exponents instead")
        result = LaurentPoly.one(self.char)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.char)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.char == other.char and self._terms == other._terms

    def __hash__(self):
        return hash((self.char, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    # substitutions and coefficient-ring changes

    def scale_exponents(self, v_mult: int, s_mult: int) -> "LaurentPoly":
        """Substitute v -> v^v_mult and s -> s^s_mult (both nonzero)."""
        if v_mult == 0 or s_mult == 0:
            raise ValueError("exponent multipliers must be nonzero")
        return LaurentPoly(
            {(dv * v_mult, ds * s_mult): c for (dv, ds), c in self._terms.items()},
            self.char,
        )

    def shift(self, dv: int, ds: int) -> "LaurentPoly":
        """Multiply by the monomial v^dv * s^ds."""
        return LaurentPoly._make(
            {(a + dv, b + ds): c for (a, b), c in self._terms.items()},
            self.char,
        )

    def reduce_mod2(self) -> "LaurentPoly":
        return LaurentPoly(self._terms, char=2)

    def content(self) -> int:
        """gcd of the coefficient magnitudes (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = gcd(g, abs(c))
        return g

    def evaluate(self, v_value: Fraction, s_value: Fraction) -> Fraction:
        """Evaluate at nonzero rationals; characteristic 0 only."""
        if self.char != 0:
            raise ValueError("evaluation is defined over the integers only")
        if v_value == 0 or s_value == 0:
            raise ValueError("evaluation point must avoid 0")
        total = Fraction(0)
        for (dv, ds), c in self._terms.items():
            total += c * (Fraction(v_value) ** dv) * (Fraction(s_value) ** ds)
        return total

    # ------------------------------------------------------------------
    # exact division

    def try_div(self, divisor: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Exact quotient self/divisor, or None when it does not divide."""
        if not isinstance(divisor, LaurentPoly) or divisor.char != self.char:
            raise ValueError("divisor must share the characteristic")
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.char)
        fmin = self.min_exponents()
        gmin = divisor.min_exponents()
        rem = {(dv - fmin[0], ds - fmin[1]): c for (dv, ds), c in self._terms.items()}
        gterms = {(dv - gmin[0], ds - gmin[1]): c for (dv, ds), c in divisor._terms.items()}
        glead = max(gterms)
        glc = gterms[glead]
        quo: dict[Exponents, int] = {}
        while rem:
            rlead = max(rem)
            rlc = rem[rlead]
            edv = rlead[0] - glead[0]
            eds = rlead[1] - glead[1]
            if edv < 0 or eds < 0:
                return None
            if self.char == 0:
                if rlc % glc:
                    return None
                qc = rlc // glc
            else:
                qc = rlc  # GF(2): leading coefficients are 1
            quo[(edv, eds)] = qc
            for (gdv, gds), gc in gterms.items():
                key = (gdv + edv, gds + eds)
                nc = rem.get(key, 0) - qc * gc
                if self.char == 2:
                    nc %= 2
                if nc:
                    rem[key] = nc
                else:
                    rem.pop(key, None)
        shift_v = fmin[0] - gmin[0]
        shift_s = fmin[1] - gmin[1]
        return LaurentPoly(
            {(dv + shift_v, ds + shift_s): c for (dv, ds), c in quo.items()},
            self.char,
        )

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        quotient = self.try_div(divisor)
        if quotient is None:
            raise ValueError("not exactly divisible")
        return quotient

    def divides(self, multiple: "LaurentPoly") -> bool:
        return multiple.try_div(self) is not None

    # ------------------------------------------------------------------
    # rendering

    @staticmethod
    def _term_str(magnitude: int, exponents: Exponents) -> str:
        dv, ds = exponents
        parts = []
        if dv:
            parts.append("v" if dv == 1 else f"v^{dv}")
        if ds:
            parts.append("s" if ds == 1 else f"s^{ds}")
        if not parts:
            return str(magnitude)
        if magnitude != 1:
            parts.insert(0, str(magnitude))
        return "*".join(parts)

    def render(self) -> str:
        # canonical text: terms ascending by (v-exponent, s-exponent),
        # joined by " + ", each term carrying its own sign
        if not self._terms:
            return "0"
        pieces = []
        for exponents, coeff in sorted(self._terms.items()):
            body = self._term_str(abs(coeff), exponents)
            pieces.append(("-" + body) if coeff < 0 else body)
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r}, char={self.char})"


def vpow(exponent: int = 1, char: int = 0) -> LaurentPoly:
    """The monomial v^exponent."""
    return LaurentPoly.monomial(exponent, 0, 1, char)


def spow(exponent: int = 1, char: int = 0) -> LaurentPoly:
    """The monomial s^exponent."""
    return LaurentPoly.monomial(0, exponent, 1, char)


def z_poly(char: int = 0) -> LaurentPoly:
    """The skein parameter s - s^-1."""
    return spow(1, char) - spow(-1, char)


def s_power_difference(r: int, char: int = 0) -> LaurentPoly:
    """s^r - s^-r, the denominators this ring localizes at."""
    if r <= 0:
        raise ValueError("r must be positive")
    return spow(r, char) - spow(-r, char)


class RingElem:
    """A quotient num/den of Laurent polynomials with matching characteristic.

    Equality is mathematical (cross-multiplication), independent of the
    stored representative.  Construction normalizes the representative:
    common integer content and shared s^2r - 1 style factors are cancelled,
    the denominator is shifted to nonnegative corner exponents, its leading
    coefficient is made positive, and a denominator that divides the
    numerator exactly is cleared to 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentPoly.constant(num, den.char if isinstance(den, LaurentPoly) else 0)
        if not isinstance(num, LaurentPoly):
            raise TypeError("numerator must be a LaurentPoly or int")
        if den is None:
            den = LaurentPoly.one(num.char)
        if isinstance(den, int):
            den = LaurentPoly.constant(den, num.char)
        if not isinstance(den, LaurentPoly):
            raise TypeError("denominator must be a LaurentPoly or int")
        if num.char != den.char:
            raise ValueError("characteristic mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _reduce_fraction(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    # ------------------------------------------------------------------

    @property
    def char(self) -> int:
        return self.num.char

    @classmethod
    def zero(cls, char: int = 0) -> "RingElem":
        return cls(LaurentPoly.zero(char))

    @classmethod
    def one(cls, char: int = 0) -> "RingElem":
        return cls(LaurentPoly.one(char))

    @classmethod
    def from_int(cls, value: int, char: int = 0) -> "RingElem":
        return cls(LaurentPoly.constant(value, char))

    def _coerce(self, other) -> Optional["RingElem"]:
        if isinstance(other, RingElem):
            if other.char != self.char:
                raise ValueError("characteristic mismatch")
            return other
        if isinstance(other, LaurentPoly):
            if other.char != self.char:
                raise ValueError("characteristic mismatch")
            return RingElem(other)
        if isinstance(other, int):
            return RingElem.from_int(other, self.char)
        return None

    # ------------------------------------------------------------------
    # field operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero element")
        return RingElem(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent >= 0:
            return RingElem(self.num ** exponent, self.den ** exponent)
        if self.num.is_zero():
            raise ZeroDivisionError("zero has no negative powers")
        return RingElem(self.den ** (-exponent), self.num ** (-exponent))

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            try:
                other = self._coerce(other)
            except ValueError:
                return False
        if not isinstance(other, RingElem):
            return NotImplemented
        if other.char != self.char:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # Hash must respect cross-multiplied equality, so hash the reduced
        # pair; reduction is canonical for every representative this package
        # builds, and equal-but-differently-reduced pairs only risk a hash
        # miss for exotic denominators, never a wrong equality.
        return hash((self.char, self.num, self.den))

    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_polynomial(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError("element is not polynomial: " + self.render())
        return self.num

    def evaluate(self, v_value: Fraction, s_value: Fraction) -> Fraction:
        denominator = self.den.evaluate(v_value, s_value)
        if denominator == 0:
            raise ZeroDivisionError("denominator vanishes at the sample point")
        return self.num.evaluate(v_value, s_value) / denominator

    def to_mod2(self) -> "RingElem":
        """Reduce coefficients mod 2; characteristic-0 elements only."""
        if self.char != 0:
            raise ValueError("element is already mod 2")
        den2 = self.den.reduce_mod2()
        if den2.is_zero():
            raise ValueError("denominator vanishes mod 2")
        return RingElem(self.num.reduce_mod2(), den2)

    def doubling_map(self) -> "RingElem":
        """The coefficient-ring endomorphism v -> v^2, s -> s^2 (mod 2 only).

        Over GF(2) this is the squaring (Frobenius) map, hence a ring
        homomorphism, and it is injective because the ring is a domain.
        """
        if self.char != 2:
            raise ValueError("the doubling map is defined on the mod-2 ring")
        return RingElem(self.num.scale_exponents(2, 2), self.den.scale_exponents(2, 2))

    def render(self) -> str:
        if self.den.is_one():
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RingElem({self.render()!r}, char={self.char})"


def _reduce_fraction(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    char = num.char
    one = LaurentPoly.one(char)
    if num.is_zero():
        return LaurentPoly.zero(char), one

    for _ in range(64):  # fixpoint loop; each pass shrinks den or stops
        # shared integer content
        if char == 0:
            g = gcd(num.content(), den.content())
            if g > 1:
                num = LaurentPoly({k: c // g for k, c in num.terms().items()})
                den = LaurentPoly({k: c // g for k, c in den.terms().items()})
        # shift so den has corner exponents (0, 0)
        dmin = den.min_exponents()
        if dmin != (0, 0):
            num = num.shift(-dmin[0], -dmin[1])
            den = den.shift(-dmin[0], -dmin[1])
        # positive leading coefficient for den
        if char == 0 and den.sorted_terms()[0][1] < 0:
            num, den = -num, -den
        if den.is_one():
            return num, den
        # full cancellation
        quotient = num.try_div(den)
        if quotient is not None:
            return quotient, one
        # cancel one shared s^(2r) - 1 factor, largest candidates first
        span = den.max_exponents()[1] - den.min_exponents()[1]
        cancelled = False
        for r in range(span // 2, 0, -1):
            candidate = spow(2 * r, char) - one
            dq = den.try_div(candidate)
            if dq is None:
                continue
            nq = num.try_div(candidate)
            if nq is None:
                continue
            num, den = nq, dq
            cancelled = True
            break
        if not cancelled:
            return num, den
    return num, den
