"""Exact arithmetic: sparse multivariate Laurent polynomials and prime fields.

Exponents are stored as integers scaled per variable: a variable with
``scale=2`` stores ``2 * e`` for the mathematical exponent ``e`` (so half
integers are representable), ``scale=6`` allows sixths, and ``scale=1`` is an
ordinary integer-stepped variable such as ``q``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]

DEFAULT_PRIME = 2_147_483_647


class VariableMismatch(ValueError):
    """Two polynomials live over different variable lists."""


class NotRepresentable(ValueError):
    """A substitution produced an exponent or root that is not exact."""


@dataclass(frozen=True)
class Ring:
    """Ordered variable names together with their exponent scales."""

    vars: tuple[str, ...]
    scales: tuple[int, ...]

    def __post_init__(self):
        if len(self.vars) != len(self.scales):
            raise ValueError("vars and scales must have equal length")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        if any(s < 1 for s in self.scales):
            raise ValueError("scales must be positive")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in {self.vars}") from None

    def zero(self) -> LaurentPoly:
        return LaurentPoly(self, {})

    def one(self) -> LaurentPoly:
        return self.const(1)

    def const(self, c: int) -> LaurentPoly:
        return LaurentPoly(self, {(0,) * self.nvars: c})

    def stored(self, **exps: Number) -> tuple[int, ...]:
        """Convert mathematical exponents (keyword per variable) to storage."""
        out = [0] * self.nvars
        for name, e in exps.items():
            i = self.index(name)
            s = Fraction(e) * self.scales[i]
            if s.denominator != 1:
                raise NotRepresentable(
                    f"exponent {e} of {name} not representable with scale {self.scales[i]}"
                )
            out[i] = int(s)
        return tuple(out)

    def mono(self, coeff: int = 1, **exps: Number) -> LaurentPoly:
        """``coeff * prod(var**exp)`` with mathematical exponents."""
        return LaurentPoly(self, {self.stored(**exps): coeff})

    def gen(self, name: str) -> LaurentPoly:
        return self.mono(**{name: 1})


Q = Ring(("q",), (1,))
QZ = Ring(("q", "z"), (1, 2))
QZZ = Ring(("q", "z1", "z2"), (1, 2, 2))
QZZ6 = Ring(("q", "z1", "z2"), (1, 6, 6))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    ``terms`` maps stored exponent tuples to nonzero ints.  Iteration order
    (``items()``) is lexicographic on exponent tuples.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], int]):
        self.ring = ring
        n = ring.nvars
        clean = {}
        for e, c in terms.items():
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for {ring.vars}")
            if c:
                clean[tuple(int(x) for x in e)] = int(c)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- basic protocol -------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.ring.vars

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            zero = (0,) * self.ring.nvars
            return self._terms == {zero: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self._terms.items())))
        return self._hash

    def coeff(self, **exps: Number) -> int:
        return self._terms.get(self.ring.stored(**exps), 0)

    def _check(self, other: LaurentPoly):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise VariableMismatch(f"{self.ring} vs {other.ring}")

    def _lift(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return self.ring.const(other)
        return other

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.ring, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            ((e, c),) = self._terms.items() if self.is_monomial() else ((None, 0),)
            if abs(c) != 1:
                raise ValueError("negative powers only of unit monomials")
            return LaurentPoly(self.ring, {tuple(x * n for x in e): c ** (-n)})
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, **exps: Number) -> LaurentPoly:
        """Multiply by the monomial with the given mathematical exponents."""
        d = self.ring.stored(**exps)
        return LaurentPoly(
            self.ring, {tuple(a + b for a, b in zip(e, d)): c for e, c in self._terms.items()}
        )

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- structure ------------------------------------------------------
    def normalize(self) -> LaurentPoly:
        return LaurentPoly(self.ring, self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def min_coefficient(self) -> int:
        return min(self._terms.values(), default=0)

    def degree(self, name: str) -> Fraction:
        i = self.ring.index(name)
        s = self.ring.scales[i]
        return Fraction(max(e[i] for e in self._terms), s) if self._terms else Fraction(0)

    def extend(self, ring: Ring) -> LaurentPoly:
        """Embed into a ring containing all of this ring's variables."""
        idx = []
        for v, s in zip(self.ring.vars, self.ring.scales):
            j = ring.index(v)
            if ring.scales[j] % s:
                raise NotRepresentable(f"scale of {v} cannot shrink from {s} to {ring.scales[j]}")
            idx.append((j, ring.scales[j] // s))
        out = {}
        for e, c in self._terms.items():
            new = [0] * ring.nvars
            for (j, f), x in zip(idx, e):
                new[j] = x * f
            out[tuple(new)] = c
        return LaurentPoly(ring, out)

    def specialize(self, bindings: Mapping[str, Union[Number, LaurentPoly]]):
        return poly_specialize(self, bindings)

    # -- presentation ---------------------------------------------------
    def __repr__(self):
        return f"LaurentPoly({self.ring.vars}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: _display_key(t[0])):
            factors = []
            for name, s, x in zip(self.ring.vars, self.ring.scales, e):
                if x == 0:
                    continue
                f = Fraction(x, s)
                if f == 1:
                    factors.append(name)
                elif f.denominator == 1:
                    factors.append(f"{name}^{f.numerator}")
                else:
                    factors.append(f"{name}^({f})")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json_obj(self) -> dict:
        obj = {
            "vars": list(self.ring.vars),
            "halfstep": [s == 2 for s in self.ring.scales],
            "terms": [{"e": list(e), "c": str(c)} for e, c in self._terms.items()],
        }
        if any(s not in (1, 2) for s in self.ring.scales):
            obj["scale"] = list(self.ring.scales)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> LaurentPoly:
        if "scale" in obj:
            scales = tuple(int(s) for s in obj["scale"])
        else:
            scales = tuple(2 if h else 1 for h in obj["halfstep"])
        ring = Ring(tuple(obj["vars"]), scales)
        terms: dict[tuple[int, ...], int] = {}
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["e"])
            terms[e] = terms.get(e, 0) + int(t["c"])
        return cls(ring, terms)

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_json_obj(json.loads(text))


def _display_key(e):
    return tuple(-x for x in e)


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_sum(polys: Iterable[LaurentPoly], ring: Ring) -> LaurentPoly:
    out: dict[tuple[int, ...], int] = {}
    for p in polys:
        if p.ring != ring:
            raise VariableMismatch(f"{p.ring} vs {ring}")
        for e, c in p.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(ring, out)


def exact_root(x: Fraction, n: int) -> Fraction:
    """The real ``n``-th root of a rational, if it is rational."""
    x = Fraction(x)
    if n == 1:
        return x
    if x < 0:
        if n % 2 == 0:
            raise NotRepresentable(f"even root of negative {x}")
        return -exact_root(-x, n)
    num = _int_root(x.numerator, n)
    den = _int_root(x.denominator, n)
    return Fraction(num, den)


def _int_root(a: int, n: int) -> int:
    if a < 2:
        return a
    r = 1 << -(-a.bit_length() // n)  # upper bound
    while True:
        nxt = ((n - 1) * r + a // r ** (n - 1)) // n
        if nxt >= r:
            break
        r = nxt
    if r**n != a:
        raise NotRepresentable(f"{a} is not a perfect {n}-th power")
    return r


def _rational_power(x: Fraction, num: int, den: int) -> Fraction:
    g = math.gcd(num, den)
    num, den = num // g, den // g
    if x == 0:
        if num < 0:
            raise ZeroDivisionError("zero to a negative power")
        return Fraction(0) if num else Fraction(1)
    return exact_root(Fraction(x), den) ** num


def poly_specialize(a: LaurentPoly, bindings: Mapping[str, Union[Number, LaurentPoly]]):
    """Substitute numbers or polynomials for some variables of ``a``.

    Returns a ``Fraction`` when every variable is bound to a number, else a
    ``LaurentPoly`` over the unbound variables followed by any variables
    introduced by polynomial bindings.  Fractional powers of a binding are
    allowed only when the result is exact.
    """
    ring = a.ring
    for name in bindings:
        ring.index(name)
    if not bindings:
        return a
    keep = [i for i, v in enumerate(ring.vars) if v not in bindings]
    vars_out = [ring.vars[i] for i in keep]
    scales_out = [ring.scales[i] for i in keep]
    for v in bindings.values():
        if isinstance(v, LaurentPoly):
            for name, s in zip(v.ring.vars, v.ring.scales):
                if name in vars_out:
                    j = vars_out.index(name)
                    if scales_out[j] != s:
                        raise VariableMismatch(f"scale conflict for {name}")
                else:
                    vars_out.append(name)
                    scales_out.append(s)
    scalar_result = not vars_out
    target = Ring(tuple(vars_out), tuple(scales_out)) if vars_out else None

    lifted = {k: (v.extend(target) if isinstance(v, LaurentPoly) else Fraction(v)) for k, v in bindings.items()}
    total_num = Fraction(0)
    total_poly: dict[tuple[int, ...], Fraction] = {}
    for e, c in a.items():
        coeff = Fraction(c)
        polyfac = None
        for i, name in enumerate(ring.vars):
            if name not in lifted:
                continue
            val = lifted[name]
            s = ring.scales[i]
            if isinstance(val, Fraction):
                coeff *= _rational_power(val, e[i], s)
            else:
                factor = _poly_power(val, e[i], s)
                polyfac = factor if polyfac is None else polyfac * factor
        if scalar_result:
            total_num += coeff
            continue
        base = [0] * target.nvars
        for j, i in enumerate(keep):
            base[j] = e[i]
        base_t = tuple(base)
        if polyfac is None:
            total_poly[base_t] = total_poly.get(base_t, 0) + coeff
        else:
            for fe, fc in polyfac.items():
                key = tuple(x + y for x, y in zip(base_t, fe))
                total_poly[key] = total_poly.get(key, 0) + coeff * fc
    if scalar_result:
        return total_num
    for k, v in total_poly.items():
        if v.denominator != 1:
            raise NotRepresentable(f"non-integer coefficient {v} after substitution")
    return LaurentPoly(target, {k: int(v) for k, v in total_poly.items()})


def _poly_power(p: LaurentPoly, num: int, den: int) -> LaurentPoly:
    if num % den == 0:
        k = num // den
        if k >= 0:
            return p**k
        if p.is_monomial():
            return _mono_power(p, Fraction(k))
        raise NotRepresentable("negative power of a non-monomial")
    if not p.is_monomial():
        raise NotRepresentable("fractional power of a non-monomial")
    return _mono_power(p, Fraction(num, den))


def _mono_power(p: LaurentPoly, r: Fraction) -> LaurentPoly:
    ((e, c),) = p.items()
    new_e = []
    for x in e:
        y = x * r
        if y.denominator != 1:
            raise NotRepresentable(f"exponent {x}*{r} not representable")
        new_e.append(int(y))
    cc = _rational_power(Fraction(c), r.numerator, r.denominator)
    if cc.denominator != 1:
        raise NotRepresentable(f"coefficient {cc} not integral")
    return LaurentPoly(p.ring, {tuple(new_e): int(cc)})


@dataclass(frozen=True)
class ModInt:
    """Element of the prime field Z/pZ."""

    value: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, o) -> int:
        if isinstance(o, ModInt):
            if o.p != self.p:
                raise ValueError("moduli differ")
            return o.value
        return int(o) % self.p

    def __add__(self, o):
        return ModInt(self.value + self._other(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return ModInt(self.value - self._other(o), self.p)

    def __rsub__(self, o):
        return ModInt(self._other(o) - self.value, self.p)

    def __mul__(self, o):
        return ModInt(self.value * self._other(o), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def inverse(self) -> ModInt:
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return ModInt(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, o):
        return self * ModInt(self._other(o), self.p).inverse()

    def __pow__(self, n: int):
        return ModInt(pow(self.value, n, self.p), self.p)

    def __int__(self):
        return self.value


def check_prime(p: int) -> int:
    """Validate a field modulus: prime and above 2**30."""
    from sympy import isprime

    if p <= 2**30 or not isprime(p):
        raise ValueError(f"modulus {p} must be a prime > 2^30")
    if p >= 2**31:
        raise ValueError(f"modulus {p} must be below 2^31 for int64 kernels")
    return p
