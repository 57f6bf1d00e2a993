"""Dense exact-integer polynomials in one variable (n or q).

All arithmetic is exact; evaluation accepts ints or Fractions.  Division is
only provided in the exact/long form needed for divisibility checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...] = ()  # low degree first, no trailing zeros
    var: str = "n"

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def _check_var(self, other: "Polynomial") -> None:
        if self.coeffs and other.coeffs and self.var != other.var:
            raise ValueError(f"mixed variables {self.var!r} and {other.var!r}")

    def _var_with(self, other: "Polynomial") -> str:
        return self.var if self.coeffs or not other.coeffs else other.var

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial((other,), self.var)
        self._check_var(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)),
            self._var_with(other),
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial((other,), self.var)
        return self + (-other)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coeffs), self.var)
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return Polynomial((), self._var_with(other))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out), self._var_with(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Polynomial((1,), self.var)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def divmod_exact(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division with exact rational arithmetic; the quotient and
        remainder are returned only when they have integer coefficients."""
        self._check_var(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        quot = [Fraction(0)] * max(len(self.coeffs) - len(divisor.coeffs) + 1, 1)
        lead = Fraction(divisor.coeffs[-1])
        d = divisor.degree
        while len(rem) - 1 >= d and any(rem):
            top = len(rem) - 1
            if rem[top] == 0:
                rem.pop()
                continue
            factor = rem[top] / lead
            quot[top - d] = factor
            for j, c in enumerate(divisor.coeffs):
                rem[top - d + j] -= factor * c
            rem.pop()
        for part in (quot, rem):
            for c in part:
                if c.denominator != 1:
                    raise ValueError("division is not exact over the integers")
        return (
            Polynomial(tuple(int(c) for c in quot), self.var),
            Polynomial(tuple(int(c) for c in rem), self.var),
        )

    def divisible_by(self, divisor: "Polynomial") -> bool:
        try:
            _, rem = self.divmod_exact(divisor)
        except ValueError:
            return False
        return rem.is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coefficient(power)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = self.var if power == 1 else f"{self.var}^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {"variable": self.var, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(tuple(int(c) for c in data["coeffs"]), data["variable"])


def falling_factorial(shift: int, length: int, var: str = "n") -> Polynomial:
    """The polynomial (x + shift)(x + shift - 1)...(x + shift - length + 1)."""
    result = Polynomial((1,), var)
    for j in range(length):
        result = result * Polynomial((shift - j, 1), var)
    return result
