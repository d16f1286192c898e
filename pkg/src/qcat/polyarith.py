"""
Exact sparse Laurent polynomials in four positional variables, and truncated
power series in ``z`` whose coefficients are such polynomials.

Exponent vectors always have four slots.  A :class:`Context` only names the
slots (``q, t, x`` or ``a, b, t``); arithmetic never looks at it.

>>> q, t, x = QTX.gens()
>>> (t**2 + q*t).render(QTX)
't^2 + q*t'
>>> (q**-1 * t) * (q * t) == t**2
True
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "ExpVec", "Context", "QTX", "ABT", "MultiPoly", "PolySeries",
    "poly_add", "poly_mul", "poly_subst", "poly_coeff",
    "poly_is_symmetric_in", "poly_is_unimodal", "poly_is_log_concave",
    "series_add", "series_mul", "series_derivative",
]

ExpVec = tuple[int, int, int, int]
ARITY = 4
_ZERO_EXP: ExpVec = (0, 0, 0, 0)


@dataclass(frozen=True)
class Context:
    """Names for the four exponent slots; ``None`` marks an unused slot."""
    name: str
    names: tuple[str | None, str | None, str | None, str | None]

    def slot(self, var: str | int) -> int:
        if isinstance(var, int):
            if not 0 <= var < ARITY:
                raise ValueError(f"slot index out of range: {var}")
            return var
        try:
            return self.names.index(var)
        except ValueError:
            raise ValueError(f"context {self.name!r} has no variable {var!r}") from None

    def var(self, name: str) -> MultiPoly:
        exp = [0] * ARITY
        exp[self.slot(name)] = 1
        return MultiPoly({tuple(exp): 1})

    def gens(self) -> tuple[MultiPoly, ...]:
        return tuple(self.var(n) for n in self.names if n is not None)


QTX = Context("qtx", ("q", "t", "x", None))
ABT = Context("abt", ("a", "b", "t", None))


class MultiPoly:
    """
    Immutable sparse polynomial with integer coefficients and signed exponents.

    Stored as a mapping from exponent vector to a nonzero ``int``.  Python ints
    are unbounded, so coefficients never overflow.
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[ExpVec, int] = {}
        if terms:
            for exp, coef in terms.items():
                if len(exp) != ARITY:
                    raise ValueError(f"exponent vector must have {ARITY} slots: {exp!r}")
                if coef:
                    key = tuple(int(e) for e in exp)
                    clean[key] = clean.get(key, 0) + int(coef)
            clean = {k: v for k, v in clean.items() if v}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[ExpVec, int]) -> MultiPoly:
        # caller guarantees canonical form (tuple keys, no zero values)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> MultiPoly:
        return cls._raw({_ZERO_EXP: int(c)} if c else {})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> MultiPoly:
        return cls({tuple(exp): coef})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[ExpVec, int], ...]:
        """Terms in canonical (lexicographic exponent) order."""
        return tuple(sorted(self._terms.items()))

    def items(self) -> Iterator[tuple[ExpVec, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_const(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(_ZERO_EXP, 0)

    def degree_range(self, slot: int) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        degs = [e[slot] for e in self._terms]
        return min(degs), max(degs)

    def uses_only(self, slot: int) -> bool:
        return all(e[i] == 0 for e in self._terms for i in range(ARITY) if i != slot)

    def univariate_coeffs(self, slot: int) -> tuple[int, list[int]]:
        """Return ``(r, [a_r, ..., a_s])`` for a polynomial in one slot only."""
        if not self.uses_only(slot):
            raise ValueError(f"polynomial involves slots other than {slot}")
        r, s = self.degree_range(slot)
        coeffs = [0] * (s - r + 1)
        for e, c in self._terms.items():
            coeffs[e[slot] - r] = c
        return r, coeffs

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MultiPoly._raw({})
            return MultiPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[ExpVec, int] = {}
        get = out.get
        b_items = list(b.items())
        for (a0, a1, a2, a3), ca in a.items():
            for (b0, b1, b2, b3), cb in b_items:
                k = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only exist for monomials")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit monomial")
            return MultiPoly._raw({tuple(k * x for x in e): c ** (-k)})
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, d: int) -> MultiPoly:
        """Divide every coefficient by ``d``; a remainder raises ``ArithmeticError``."""
        out = {}
        for e, c in self._terms.items():
            qt, rem = divmod(c, d)
            if rem:
                raise ArithmeticError(f"coefficient {c} at {e} not divisible by {d}")
            out[e] = qt
        return MultiPoly._raw(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- structural operations ---------------------------------------------

    def subst(self, rules: Mapping[int, MultiPoly | int]) -> MultiPoly:
        """
        Simultaneous monomial substitution.

        Each rule maps a slot to ``0`` or to ``c * monomial`` with ``c`` in
        ``{1, -1}``.  Negative exponents are allowed in the images; a negative
        exponent on a slot sent to ``0`` is a division by zero.

        >>> q, t, x = QTX.gens()
        >>> (1 + q*t).subst({1: q*t}).render(QTX)
        '1 + q^2*t'
        """
        compiled: list[tuple[int, int, ExpVec | None]] = []
        for slot, image in rules.items():
            if isinstance(image, int):
                image = MultiPoly.const(image)
            if image.is_zero():
                compiled.append((slot, 0, None))
                continue
            if len(image._terms) != 1:
                raise ValueError("substitution image must be a monomial")
            ((e, c),) = image._terms.items()
            if c not in (1, -1):
                raise ValueError("substitution coefficient must be 0, 1 or -1")
            compiled.append((slot, c, e))
        out: dict[ExpVec, int] = {}
        for exp, coef in self._terms.items():
            new = list(exp)
            for slot, c, img in compiled:
                k = exp[slot]
                new[slot] -= k
                if c == 0:
                    if k < 0:
                        raise ZeroDivisionError(f"slot {slot} has exponent {k} and is sent to 0")
                    if k > 0:
                        coef = 0
                        break
                    continue
                if c == -1 and k % 2:
                    coef = -coef
                for i in range(ARITY):
                    new[i] += k * img[i]
            if coef:
                key = tuple(new)
                out[key] = out.get(key, 0) + coef
        return MultiPoly._raw({k: v for k, v in out.items() if v})

    def coeff(self, slot: int, k: int) -> MultiPoly:
        """Coefficient of ``var**k`` as a polynomial in the remaining slots."""
        out = {}
        for e, c in self._terms.items():
            if e[slot] == k:
                key = list(e)
                key[slot] = 0
                out[tuple(key)] = c
        return MultiPoly._raw(out)

    def evaluate(self, values: Sequence[int]) -> int:
        """Integer value with slot ``i`` set to ``values[i]`` (a unit if the exponent is negative)."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                if k < 0:
                    if v not in (1, -1):
                        raise ValueError("negative exponent needs a unit value")
                    k = -k
                term *= v ** k
            total += term
        return total

    # -- symmetry and shape of coefficient sequences -------------------------

    def is_symmetric_in(self, slot: int) -> bool:
        if not self._terms:
            raise ValueError("symmetry is undefined for the zero polynomial")
        r, s = self.degree_range(slot)
        return all(self.coeff(slot, i) == self.coeff(slot, r + s - i) for i in range(r, s + 1))

    def is_unimodal(self, slot: int) -> bool:
        if not self._terms:
            return True
        _, a = self.univariate_coeffs(slot)
        i = 0
        while i + 1 < len(a) and a[i] <= a[i + 1]:
            i += 1
        return all(a[j] >= a[j + 1] for j in range(i, len(a) - 1))

    def is_log_concave(self, slot: int) -> bool:
        if not self._terms:
            return True
        _, a = self.univariate_coeffs(slot)
        if any(c < 0 for c in a):
            raise ValueError("log-concavity needs nonnegative coefficients")
        return all(a[i] * a[i] >= a[i - 1] * a[i + 1] for i in range(1, len(a) - 1))

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        return [{"exp": list(e), "coef": str(c)} for e, c in self.terms]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> MultiPoly:
        terms: dict[ExpVec, int] = {}
        for item in obj:
            e = tuple(int(v) for v in item["exp"])
            if e in terms:
                raise ValueError(f"duplicate exponent vector {e}")
            terms[e] = int(item["coef"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> MultiPoly:
        return cls.from_json_obj(json.loads(text))

    def render_key(self, ctx: Context):
        """Sort key for text rendering: ``t`` descending, other slots ascending."""
        lead = ctx.names.index("t") if "t" in ctx.names else None

        def key(item):
            e = item[0]
            rest = tuple(e[i] for i in range(ARITY) if i != lead)
            return ((-e[lead],) if lead is not None else ()) + rest
        return key

    def render(self, ctx: Context = QTX) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), key=self.render_key(ctx)):
            factors = []
            for i, k in enumerate(e):
                if not k:
                    continue
                name = ctx.names[i] or f"v{i}"
                factors.append(name if k == 1 else f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"MultiPoly({self.render(QTX)!r})"


# function-style aliases for the ring operations
def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_subst(p: MultiPoly, rules: Mapping[int, MultiPoly | int]) -> MultiPoly:
    return p.subst(rules)


def poly_coeff(p: MultiPoly, slot: int, k: int) -> MultiPoly:
    return p.coeff(slot, k)


def poly_is_symmetric_in(p: MultiPoly, slot: int) -> bool:
    return p.is_symmetric_in(slot)


def poly_is_unimodal(p: MultiPoly, slot: int) -> bool:
    return p.is_unimodal(slot)


def poly_is_log_concave(p: MultiPoly, slot: int) -> bool:
    return p.is_log_concave(slot)


_ZERO = MultiPoly.const(0)
_ONE = MultiPoly.const(1)


class PolySeries:
    """
    Power series in ``z`` truncated after ``z**order``.

    Binary operations demand equal orders.  Nothing above ``order`` is ever
    stored or read, so a result at order N agrees with the first N+1
    coefficients of the same computation done at any larger order.
    """
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[MultiPoly | int], order: int | None = None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in coeffs[: order + 1]]
        cs.extend([_ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> PolySeries:
        return cls([_ONE], order)

    @classmethod
    def z(cls, order: int) -> PolySeries:
        return cls([_ZERO, _ONE], order)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def _check(self, other: PolySeries):
        if not isinstance(other, PolySeries):
            raise TypeError(f"expected PolySeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return PolySeries([self.coeffs[0] + other, *self.coeffs[1:]], self.order)
        self._check(other)
        return PolySeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return PolySeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return PolySeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        f, g = self.coeffs, other.coeffs
        out = []
        for n in range(self.order + 1):
            acc = _ZERO
            for i in range(n + 1):
                if f[i]._terms and g[n - i]._terms:
                    acc = acc + f[i] * g[n - i]
            out.append(acc)
        return PolySeries(out, self.order)

    __rmul__ = __mul__

    def reciprocal(self) -> PolySeries:
        c0 = self.coeffs[0]
        if c0 != 1 and c0 != -1:
            raise ZeroDivisionError("series reciprocal needs constant term 1 or -1")
        u = c0.constant_term()
        g = [c0]
        f = self.coeffs
        for n in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, n + 1):
                if f[i]._terms and g[n - i]._terms:
                    acc = acc + f[i] * g[n - i]
            g.append(acc * (-u))
        return PolySeries(g, self.order)

    def __truediv__(self, other):
        if isinstance(other, int) and other in (1, -1):
            return self * other
        return self * other.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        result = PolySeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int = 1) -> PolySeries:
        """Multiply by ``z**k``; the order grows by ``k`` since no coefficient is lost."""
        return PolySeries([_ZERO] * k + list(self.coeffs), self.order + k)

    def truncate(self, order: int) -> PolySeries:
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return PolySeries(self.coeffs[: order + 1], order)

    def derivative(self) -> PolySeries:
        if self.order == 0:
            raise ValueError("derivative of an order-0 series is undefined")
        return PolySeries([self.coeffs[n] * n for n in range(1, self.order + 1)], self.order - 1)

    def scale_z(self, m: MultiPoly | int) -> PolySeries:
        """Substitute ``z -> m*z``."""
        if isinstance(m, int):
            m = MultiPoly.const(m)
        out, power = [], _ONE
        for c in self.coeffs:
            out.append(c * power)
            power = power * m
        return PolySeries(out, self.order)

    def map_coeffs(self, fn) -> PolySeries:
        return PolySeries([fn(c) for c in self.coeffs], self.order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return None

    def __repr__(self):
        return f"PolySeries(order={self.order}, coeffs={[c.render(QTX) for c in self.coeffs]})"


def series_add(f: PolySeries, g: PolySeries) -> PolySeries:
    f._check(g)
    return f + g


def series_mul(f: PolySeries, g: PolySeries) -> PolySeries:
    f._check(g)
    return f * g


def series_derivative(f: PolySeries) -> PolySeries:
    return f.derivative()
