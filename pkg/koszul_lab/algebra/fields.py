"""
Coefficient fields.

Three exact fields are supported, each as a small immutable field object whose
methods act on plain element values:

- RationalField: elements are fractions.Fraction
- CyclotomicField: Q(ω) with ω² = −1 − ω, elements are CycloNumber(a, b) = a + bω
- PrimeField: F_p, elements are ints in [0, p)

Keeping elements as plain values (rather than wrapping every F_p element in an
object) keeps the sparse elimination loops cheap; the field object carries the
arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union
import re

from sympy import isprime

from ..errors import FieldError, ParseError


Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse "3", "-2/5" or "7/1" into a Fraction."""
    match = _RATIONAL_RE.match(text.replace("−", "-"))
    if not match:
        raise ParseError(f"not a rational number: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def render_rational(value: Fraction) -> str:
    """Render as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class CycloNumber:
    """a + bω in Q(ω), ω a primitive cube root of unity (ω² = −1 − ω)."""
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'a', Fraction(self.a))
        object.__setattr__(self, 'b', Fraction(self.b))

    def __add__(self, other: 'CycloNumber') -> 'CycloNumber':
        other = _as_cyclo(other)
        return CycloNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: 'CycloNumber') -> 'CycloNumber':
        other = _as_cyclo(other)
        return CycloNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: 'CycloNumber') -> 'CycloNumber':
        return _as_cyclo(other) - self

    def __neg__(self) -> 'CycloNumber':
        return CycloNumber(-self.a, -self.b)

    def __mul__(self, other: 'CycloNumber') -> 'CycloNumber':
        other = _as_cyclo(other)
        # (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², and ω² = −1 − ω
        ac = self.a * other.a
        bd = self.b * other.b
        return CycloNumber(ac - bd, self.a * other.b + self.b * other.a - bd)

    __rmul__ = __mul__

    def conjugate(self) -> 'CycloNumber':
        """Image under ω ↦ ω² = −1 − ω."""
        return CycloNumber(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """a² − ab + b², the product with the conjugate."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> 'CycloNumber':
        n = self.norm()
        if n == 0:
            raise FieldError("division by zero in Q(ω)")
        c = self.conjugate()
        return CycloNumber(c.a / n, c.b / n)

    def __truediv__(self, other: 'CycloNumber') -> 'CycloNumber':
        return self * _as_cyclo(other).inverse()

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __complex__(self) -> complex:
        omega = complex(-0.5, 3 ** 0.5 / 2)
        return float(self.a) + float(self.b) * omega

    def __str__(self) -> str:
        if not self.b:
            return render_rational(self.a)
        b = render_rational(self.b)
        if not self.a:
            return f"({b}*w)"
        sign = "-" if self.b < 0 else "+"
        return f"({render_rational(self.a)}{sign}{render_rational(abs(self.b))}*w)"


def _as_cyclo(value: Any) -> CycloNumber:
    if isinstance(value, CycloNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return CycloNumber(Fraction(value), Fraction(0))
    raise FieldError(f"cannot treat {value!r} as an element of Q(ω)")


OMEGA = CycloNumber(0, 1)


class Field:
    """Interface shared by the coefficient fields."""

    name: str = "field"

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def coerce(self, value: Any) -> Any:
        """Bring an int, Fraction or native element into the field."""
        raise NotImplementedError

    def add(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def sub(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def mul(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def neg(self, x: Any) -> Any:
        raise NotImplementedError

    def inv(self, x: Any) -> Any:
        raise NotImplementedError

    def div(self, x: Any, y: Any) -> Any:
        return self.mul(x, self.inv(y))

    def is_zero(self, x: Any) -> bool:
        return not x

    def render(self, x: Any) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def descriptor(self) -> str:
        """Name that field_from_name() understands."""
        return self.name


@dataclass(frozen=True)
class RationalField(Field):
    """The field Q; elements are Fractions."""
    name: str = "rational"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, CycloNumber):
            if value.b:
                raise FieldError(f"{value} is not rational")
            return value.a
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise FieldError(f"cannot coerce {value!r} into Q")

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise FieldError("division by zero in Q")
        return 1 / Fraction(x)

    def render(self, x) -> str:
        return render_rational(x)

    def parse(self, text: str) -> Fraction:
        return parse_rational(text)


@dataclass(frozen=True)
class CyclotomicField(Field):
    """Q(ω) with ω² + ω + 1 = 0."""
    name: str = "cyclotomic"

    def zero(self) -> CycloNumber:
        return CycloNumber()

    def one(self) -> CycloNumber:
        return CycloNumber(1, 0)

    def omega(self) -> CycloNumber:
        return OMEGA

    def coerce(self, value: Any) -> CycloNumber:
        return _as_cyclo(value)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        return x.inverse()

    def render(self, x) -> str:
        return str(x)

    def parse(self, text: str) -> CycloNumber:
        """Parse "3/2", "w", "-w", "(1/2+3*w)", "(1-2w)"."""
        body = text.strip().replace("−", "-").replace(" ", "")
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if not body:
            raise ParseError("empty coefficient")
        result = CycloNumber()
        for sign, term in re.findall(r"([+-]?)([^+-]+)", body):
            negative = sign == "-"
            if term.endswith("w") or term.endswith("ω"):
                coeff_text = term[:-1].rstrip("*") or "1"
                value = CycloNumber(0, parse_rational(coeff_text))
            else:
                value = CycloNumber(parse_rational(term), 0)
            result = result - value if negative else result + value
        return result


@dataclass(frozen=True)
class PrimeField(Field):
    """F_p; elements are ints in [0, p)."""
    p: int = 2147483647
    name: str = "prime"

    def __post_init__(self):
        if not isprime(self.p):
            raise FieldError(f"not a prime modulus: {self.p}")

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def coerce(self, value: Any) -> int:
        if isinstance(value, CycloNumber):
            if not value.b:
                return self.coerce(value.a)
            return self.add(self.coerce(value.a),
                            self.mul(self.coerce(value.b), self.cube_root_of_unity()))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise FieldError(f"cannot coerce {value!r} into F_{self.p}")

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return x * y % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise FieldError(f"division by zero in F_{self.p}")
        return pow(x, -1, self.p)

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def render(self, x) -> str:
        return str(x)

    def parse(self, text: str) -> int:
        return self.coerce(parse_rational(text))

    def descriptor(self) -> str:
        return f"prime:{self.p}"

    def cube_root_of_unity(self) -> int:
        """A fixed primitive cube root of unity (the image of ω); needs p ≡ 1 (mod 3)."""
        return _cube_root_of_unity(self.p)


@lru_cache(maxsize=None)
def _cube_root_of_unity(p: int) -> int:
    if p % 3 != 1:
        raise FieldError(f"F_{p} has no primitive cube root of unity (p mod 3 = {p % 3})")
    exponent = (p - 1) // 3
    for g in range(2, p):
        root = pow(g, exponent, p)
        if root != 1:
            return root
    raise FieldError(f"no cube root of unity found in F_{p}")


QQ = RationalField()
QQ_OMEGA = CyclotomicField()


def field_from_name(name: str, default_prime: int = 2147483647) -> Field:
    """
    Look up a field by CLI name.

    Args:
        name: "rational" (or "Q"), "cyclotomic" (or "Q(w)"), "prime" or "prime:<p>"
        default_prime: Modulus used for a bare "prime"

    Returns:
        The field object
    """
    key = name.strip().lower()
    if key in ("rational", "q", "qq"):
        return QQ
    if key in ("cyclotomic", "q(w)", "q(omega)", "qq_omega"):
        return QQ_OMEGA
    if key == "prime":
        return PrimeField(default_prime)
    if key.startswith("prime:"):
        try:
            return PrimeField(int(key.split(":", 1)[1]))
        except ValueError:
            raise ParseError(f"bad prime in field name {name!r}") from None
        except FieldError as e:
            raise ParseError(f"bad prime in field name {name!r}: {e}") from None
    raise ParseError(f"unknown field {name!r} (expected rational, cyclotomic or prime[:p])")


def embed(value: Any, target: Field) -> Any:
    """Map a rational or cyclotomic value into target (Q ⊂ Q(ω) → F_p)."""
    return target.coerce(value)
