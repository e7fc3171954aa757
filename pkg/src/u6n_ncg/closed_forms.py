"""Closed-form predictions for the non-commuting graph of U(6n).

Every function here is a pure formula in n. Nothing touches the group or
graph machinery, so the exhaustive side and this side can only agree by
actually agreeing.

The two eccentricity-based polynomials are exceptional: their formulas
presuppose that every vertex has eccentricity 2, which fails at n = 1
where three parts of the graph are singletons adjacent to everything.
They are therefore returned as Prediction values flagged n_ge_2 instead
of bare polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .groups import U6nElement
from .polynomials import IntPolynomial

VALIDITY_FULL = "full"
VALIDITY_N_GE_2 = "n_ge_2"

_X = IntPolynomial.monomial(1)


@dataclass(frozen=True)
class Prediction:
    """A named closed-form value for a given n, with its validity range."""

    name: str
    n: int
    value: object
    validity: str = VALIDITY_FULL

    def applies(self) -> bool:
        return self.validity == VALIDITY_FULL or self.n >= 2


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def _check_class(omega_class: int) -> None:
    if omega_class not in (1, 2, 3, 4):
        raise ValueError(f"omega class must be 1..4, got {omega_class!r}")


def cf_degree(omega_class: int, n: int) -> int:
    """4n on the three odd-power classes, 3n on the even*b class."""
    _check_class(omega_class)
    _check_n(n)
    return 4 * n if omega_class in (1, 2, 3) else 3 * n


def cf_edge_count(n: int) -> int:
    _check_n(n)
    return 9 * n * n


def cf_alpha(n: int) -> int:
    _check_n(n)
    return 2 * n


def cf_tau(n: int) -> int:
    _check_n(n)
    return 3 * n


def cf_chi_omega(n: int) -> int:
    _check_n(n)
    return 4


def cf_partition_sizes(n: int) -> tuple[int, ...]:
    """Multipartite class sizes as a sorted multiset."""
    _check_n(n)
    return tuple(sorted((n, n, n, 2 * n)))


def cf_metric_dimension(n: int) -> int:
    _check_n(n)
    return 3 if n == 1 else 5 * n - 4


def cf_resolving_polynomial(n: int) -> IntPolynomial:
    """Expanded product form; the coefficients are never hard-coded."""
    _check_n(n)
    if n == 1:
        return IntPolynomial.monomial(3) * (_X + 2) * (_X + 3)
    return IntPolynomial.monomial(5 * n - 4) * (_X + n) ** 3 * (_X + 2 * n)


def cf_resolving_sequence(n: int) -> tuple[int, ...]:
    """The counting identities behind the resolving polynomial, stated
    directly so they can be checked independently of the product form."""
    _check_n(n)
    if n == 1:
        return (6, 5, 1)
    return (2 * n**4, 7 * n**3, 9 * n**2, 5 * n, 1)


def cf_resolving_roots(n: int) -> frozenset[int]:
    _check_n(n)
    if n == 1:
        return frozenset({0, -2, -3})
    return frozenset({0, -n, -2 * n})


def cf_detour_polynomial(n: int) -> IntPolynomial:
    _check_n(n)
    return IntPolynomial.monomial(5 * n - 1, 5 * n * (5 * n - 1) // 2)


def cf_detour_index(n: int) -> int:
    _check_n(n)
    return 5 * n * (5 * n - 1) ** 2 // 2


def cf_total_eccentricity_polynomial(n: int) -> Prediction:
    _check_n(n)
    return Prediction(
        name="total_eccentricity_polynomial",
        n=n,
        value=IntPolynomial.monomial(2, 5 * n),
        validity=VALIDITY_N_GE_2,
    )


def cf_eccentric_connectivity_polynomial(n: int) -> Prediction:
    _check_n(n)
    return Prediction(
        name="eccentric_connectivity_polynomial",
        n=n,
        value=IntPolynomial.monomial(2, 18 * n * n),
        validity=VALIDITY_N_GE_2,
    )


def cf_independence_polynomial(n: int) -> IntPolynomial:
    """1 + sum_{k<=n} (C(2n,k) + 3C(n,k)) x^k + sum_{n<k<=2n} C(2n,k) x^k."""
    _check_n(n)
    terms = [(0, 1)]
    for k in range(1, n + 1):
        terms.append((k, comb(2 * n, k) + 3 * comb(n, k)))
    for k in range(n + 1, 2 * n + 1):
        terms.append((k, comb(2 * n, k)))
    return IntPolynomial.from_terms(terms)


def cf_vertex_cover_polynomial(n: int) -> IntPolynomial:
    """The independence counts mirrored onto cover sizes 5n - k."""
    _check_n(n)
    top = 5 * n
    terms = [(top, 1)]
    for k in range(1, n + 1):
        terms.append((top - k, comb(2 * n, k) + 3 * comb(n, k)))
    for k in range(n + 1, 2 * n + 1):
        terms.append((top - k, comb(2 * n, k)))
    return IntPolynomial.from_terms(terms)


def _class_of(element: U6nElement) -> int | None:
    parity = element.a_exp % 2
    if parity == 1:
        return {0: 1, 1: 2, 2: 3}[element.b_exp]
    return 4 if element.b_exp in (1, 2) else None


def cf_centralizer(omega_class: int, representative: U6nElement, n: int) -> frozenset[int]:
    """Predicted centralizer of a class representative, as element indices.

    Class 1: all powers of a. Classes 2 and 3: even powers of a together
    with odd*b (resp. odd*b^2). Class 4: all even powers of a times any
    power of b. Sizes 2n, 2n, 2n, 3n.
    """
    _check_class(omega_class)
    _check_n(n)
    if representative.a_exp >= 2 * n:
        raise ValueError(
            f"representative a exponent {representative.a_exp} out of range for n={n}"
        )
    if _class_of(representative) != omega_class:
        raise ValueError(
            f"element {representative.label()!r} is not in omega class {omega_class}"
        )
    odd = range(1, 2 * n, 2)
    even = range(0, 2 * n, 2)
    if omega_class == 1:
        members = {3 * i for i in range(2 * n)}
    elif omega_class == 2:
        members = {3 * i for i in even} | {3 * i + 1 for i in odd}
    elif omega_class == 3:
        members = {3 * i for i in even} | {3 * i + 2 for i in odd}
    else:
        members = {3 * i + k for i in even for k in (0, 1, 2)}
    return frozenset(members)
