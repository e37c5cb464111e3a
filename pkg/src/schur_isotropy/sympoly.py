"""Sparse exact-coefficient polynomials in k variables, and Schur-basis expansion."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import DegreeGuard, NotHomogeneous, NotSymmetric
from .partitions import Partition

DEFAULT_TERM_CAP = 5_000_000


class SymPoly:
    """Polynomial stored as a map from exponent vectors to integer coefficients.

    Exponent vectors are dense tuples of length ``nvars``; zero coefficients
    are never stored.  Instances are treated as immutable values.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, nvars: int, value: int = 1) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: value} if value else {})

    def degree(self) -> int:
        """Largest total degree of any term; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_symmetric(self) -> bool:
        """Invariance under every adjacent variable swap (these generate all swaps)."""
        for i in range(self.nvars - 1):
            for expo, coeff in self.terms.items():
                swapped = (
                    expo[:i] + (expo[i + 1], expo[i]) + expo[i + 2 :]
                )
                if self.terms.get(swapped, 0) != coeff:
                    return False
        return True

    def evaluate_at_ones(self) -> int:
        """Value at (1, ..., 1), i.e. the sum of all coefficients."""
        return sum(self.terms.values())

    def mul_linear(
        self, coeffs: Sequence[int], max_terms: int | None = None
    ) -> "SymPoly":
        """Multiply by the linear form sum(coeffs[i] * x_i)."""
        if len(coeffs) != self.nvars:
            raise ValueError(f"expected {self.nvars} coefficients, got {len(coeffs)}")
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        for expo, c in self.terms.items():
            for i, a in enumerate(coeffs):
                if not a:
                    continue
                bumped = expo[:i] + (expo[i] + 1,) + expo[i + 1 :]
                value = get(bumped, 0) + c * a
                if value:
                    out[bumped] = value
                else:
                    del out[bumped]
        if max_terms is not None and len(out) > max_terms:
            degree = sum(next(iter(out)))
            raise DegreeGuard(
                f"{len(out)} terms at degree {degree} exceeds the cap {max_terms}"
            )
        return SymPoly(self.nvars, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"SymPoly(nvars={self.nvars}, terms={len(self.terms)})"


def product_of_linear_forms(
    weights: Iterable[Sequence[int]],
    nvars: int,
    max_terms: int | None = DEFAULT_TERM_CAP,
) -> SymPoly:
    """Exact product of the linear forms sum(w[i] * x_i), one per weight.

    The empty product is the constant 1.  The result is homogeneous of
    degree equal to the number of forms.
    """
    poly = SymPoly.constant(nvars, 1)
    for weight in weights:
        poly = poly.mul_linear(weight, max_terms)
    return poly


def schur_expand(
    poly: SymPoly, max_terms: int | None = DEFAULT_TERM_CAP
) -> dict[Partition, int]:
    """Coefficients of a symmetric homogeneous polynomial in the Schur basis.

    Multiplies by the Vandermonde product of (x_i - x_j) over i < j and reads
    the coefficient of the strictly decreasing exponent vector mu + staircase
    for each shape mu; those monomials occur once per alternant, so the read
    is exact.  Shapes come back in increasing lexicographic order.
    """
    if not poly.is_symmetric():
        raise NotSymmetric("polynomial is not invariant under variable swaps")
    if not poly.is_homogeneous():
        raise NotHomogeneous("polynomial mixes total degrees")
    k = poly.nvars
    alternating = poly
    for i in range(k):
        for j in range(i + 1, k):
            coeffs = [0] * k
            coeffs[i] = 1
            coeffs[j] = -1
            alternating = alternating.mul_linear(coeffs, max_terms)
    expansion: dict[Partition, int] = {}
    for expo, coeff in alternating.terms.items():
        if all(expo[t] > expo[t + 1] for t in range(k - 1)):
            mu = Partition(expo[t] - (k - 1 - t) for t in range(k))
            expansion[mu] = coeff
    return dict(sorted(expansion.items()))


def expansion_to_json(expansion: Mapping[Partition, int]) -> list[dict]:
    """Serialize an expansion as [{"mu": [...], "coeff": "<decimal>"}] in lex order."""
    return [
        {"mu": list(mu), "coeff": str(coeff)}
        for mu, coeff in sorted(expansion.items())
    ]
