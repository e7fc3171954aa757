"""Sparse univariate polynomials with exact integer coefficients.

Coefficients are plain Python ints, so binomial-sized values never lose
precision; equality between a brute-force count and a closed-form value is
therefore an honest exact comparison.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class IntPolynomial:
    """Immutable polynomial stored as {exponent: coefficient}.

    Zero coefficients are never stored; the zero polynomial is the empty
    map. Exponents are non-negative integers.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        cleaned: dict[int, int] = {}
        if coeffs:
            for exp, coeff in coeffs.items():
                self._check_exponent(exp)
                if coeff:
                    cleaned[exp] = int(coeff)
        self._coeffs = cleaned

    @staticmethod
    def _check_exponent(exp) -> None:
        if not isinstance(exp, int) or isinstance(exp, bool) or exp < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exp!r}")

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> "IntPolynomial":
        """Build from (exponent, coefficient) pairs, merging duplicates."""
        acc: dict[int, int] = {}
        for exp, coeff in terms:
            cls._check_exponent(exp)
            acc[exp] = acc.get(exp, 0) + int(coeff)
        return cls(acc)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPolynomial":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls({0: value})

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self.terms())

    @staticmethod
    def _coerce(value) -> "IntPolynomial":
        if isinstance(value, IntPolynomial):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return IntPolynomial.constant(value)
        raise TypeError(f"cannot treat {value!r} as a polynomial")

    def __add__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        acc = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            acc[exp] = acc.get(exp, 0) + coeff
        return IntPolynomial(acc)

    __radd__ = __add__

    def __mul__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exp = e1 + e2
                acc[exp] = acc.get(exp, 0) + c1 * c2
        return IntPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "IntPolynomial":
        if power < 0:
            raise ValueError("negative powers are not supported")
        result = IntPolynomial.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def evaluate(self, value: int) -> int:
        """Exact evaluation at an integer point (sparse Horner)."""
        acc = 0
        prev_exp = None
        for exp, coeff in sorted(self._coeffs.items(), reverse=True):
            if prev_exp is None:
                acc = coeff
            else:
                acc = acc * value ** (prev_exp - exp) + coeff
            prev_exp = exp
        if prev_exp is None:
            return 0
        return acc * value**prev_exp

    def derivative_at_one(self) -> int:
        return sum(exp * coeff for exp, coeff in self._coeffs.items())

    def __str__(self) -> str:
        """Canonical form: ascending exponents joined by " + ".

        A coefficient of exactly 1 is omitted on x-terms, exponent 1 drops
        the caret, so e.g. "1 + 5*x + x^2".
        """
        if not self._coeffs:
            return "0"
        parts = []
        for exp, coeff in self.terms():
            if exp == 0:
                parts.append(str(coeff))
                continue
            var = "x" if exp == 1 else f"x^{exp}"
            parts.append(var if coeff == 1 else f"{coeff}*{var}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Inverse of str() for canonical strings."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for part in text.split(" + "):
            part = part.strip()
            if "x" not in part:
                terms.append((0, int(part)))
                continue
            head, _, tail = part.partition("x")
            if head == "":
                coeff = 1
            elif head.endswith("*"):
                coeff = int(head[:-1])
            else:
                raise ValueError(f"malformed term {part!r}")
            exp = 1 if tail == "" else int(tail.removeprefix("^"))
            terms.append((exp, coeff))
        return cls.from_terms(terms)

    def to_json_terms(self) -> list[list]:
        """[[exponent, "coefficient"], ...] ascending, coefficients as
        decimal strings so arbitrary precision survives any JSON reader."""
        return [[exp, str(coeff)] for exp, coeff in self.terms()]

    @classmethod
    def from_json_terms(cls, data: Iterable) -> "IntPolynomial":
        return cls.from_terms((int(exp), int(coeff)) for exp, coeff in data)


def integer_roots(poly: IntPolynomial) -> tuple[int, ...]:
    """All integer roots of a nonzero polynomial, ascending.

    Scans the Cauchy bound interval; exact because evaluation is exact.
    """
    if not poly:
        raise ValueError("the zero polynomial vanishes everywhere")
    terms = poly.terms()
    lead = abs(terms[-1][1])
    bound = 1 + max(abs(c) for _, c in terms) // lead
    return tuple(r for r in range(-bound, bound + 1) if poly.evaluate(r) == 0)
