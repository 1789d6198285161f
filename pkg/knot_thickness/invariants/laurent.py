from typing import Dict, Iterator, Mapping, Tuple, Union

import sympy


T = sympy.Symbol("t")

Number = Union[int, "LaurentPolynomial"]


class LaurentPolynomial:
    """Integer Laurent polynomial in t, stored as exponent -> nonzero coefficient."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Mapping[int, int] = None) -> None:
        cleaned: Dict[int, int] = {}
        for exponent, coefficient in (coefficients or {}).items():
            if coefficient:
                cleaned[int(exponent)] = int(coefficient)
        self._coefficients = dict(sorted(cleaned.items()))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def from_sympy(cls, expression) -> "LaurentPolynomial":
        """Convert a polynomial in `T`."""
        poly = sympy.Poly(sympy.expand(expression), T)
        return cls({monom[0]: int(coefficient) for monom, coefficient in poly.terms()})

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def min_degree(self) -> int:
        return min(self._coefficients) if self._coefficients else 0

    @property
    def max_degree(self) -> int:
        return max(self._coefficients) if self._coefficients else 0

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._coefficients.items())

    def _coerce(self, other: Number) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other})
        return NotImplemented  # type: ignore

    def __add__(self, other: Number) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        total = dict(self._coefficients)
        for exponent, coefficient in other:
            total[exponent] = total.get(exponent, 0) + coefficient
        return LaurentPolynomial(total)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({exponent: -coefficient for exponent, coefficient in self})

    def __sub__(self, other: Number) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other: Number) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        product: Dict[int, int] = {}
        for e1, c1 in self:
            for e2, c2 in other:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(product)

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "LaurentPolynomial":
        """Multiply by t**exponent."""
        return LaurentPolynomial({e + exponent: c for e, c in self})

    def evaluate(self, value: int) -> Union[int, sympy.Rational]:
        total = sympy.Integer(0)
        for exponent, coefficient in self:
            total += coefficient * sympy.Integer(value) ** exponent
        return int(total) if total.is_integer else total

    def is_symmetric(self) -> bool:
        return all(self._coefficients.get(-exponent) == coefficient for exponent, coefficient in self)

    def normalized(self) -> "LaurentPolynomial":
        """Shift so the exponents are centred on 0, then fix the sign so p(1) > 0.

        When p(1) = 0 the lowest coefficient is made positive instead.
        """
        if self.is_zero():
            return self
        centred = self.shift(-((self.min_degree + self.max_degree) // 2))
        at_one = sum(coefficient for _, coefficient in centred)
        if at_one < 0 or (at_one == 0 and centred._coefficients[centred.min_degree] < 0):
            centred = -centred
        return centred

    def to_json(self) -> Dict[str, int]:
        return {str(exponent): coefficient for exponent, coefficient in self}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(tuple(self._coefficients.items()))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for exponent, coefficient in self:
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if coefficient > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"
