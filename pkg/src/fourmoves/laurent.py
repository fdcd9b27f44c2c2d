"""Exact polynomial arithmetic: one-variable Laurent polynomials, the
multivariate localized ring of the quartic skein module, and cyclotomic
integers Z[zeta] with zeta^m = -1.

No floating point anywhere; all coefficients are Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass


# ---------------------------------------------------------------------------
# One-variable Laurent polynomials (variable conventionally "A")
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients.

    Stored as {exponent: coefficient} with no zero coefficients.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var="A"):
        self.var = var
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    self.coeffs[e] = c

    @classmethod
    def zero(cls, var="A"):
        return cls({}, var)

    @classmethod
    def one(cls, var="A"):
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, coeff, exp, var="A"):
        return cls({exp: coeff}, var)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly({}, self.var)
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()}, self.var)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self.coeffs.items()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit coefficient")
            return LaurentPoly({e * n: c if n % 2 == 0 else c}, self.var) if c == 1 \
                else LaurentPoly({e * n: 1 if n % 2 == 0 else -1}, self.var)
        out = LaurentPoly.one(self.var)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, d):
        """Multiply by var**d."""
        return LaurentPoly({e + d: c for e, c in self.coeffs.items()}, self.var)

    def evaluate(self, value):
        """Evaluate at an element of any ring supporting +, *, ** (int exponents)."""
        total = None
        for e, c in sorted(self.coeffs.items()):
            term = (value ** e) * c
            total = term if total is None else total + term
        if total is None:
            return 0
        return total

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"{c}*{self.var}^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({self})"

    def str_half_exponents(self, var="t"):
        """Render with exponents halved (for polynomials in t^(1/2) stored
        in half-integer units)."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            elif e % 2 == 0:
                parts.append(f"{c}*{var}^{e // 2}")
            else:
                parts.append(f"{c}*{var}^({e}/2)")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Cyclotomic integers Z[zeta] with zeta^m = -1  (zeta a primitive 2m-th root)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycloInt:
    """Element of Z[zeta] where zeta is a primitive 2m-th root of unity,
    written on the basis zeta^0 .. zeta^(m-1) with the reduction zeta^m = -1.

    m = 4 realizes Z[zeta_8] (used for Jones values at t = i and for the
    Kauffman-polynomial twist check); m = 8 realizes Z[zeta_16] (used for
    bracket evaluation at A^-1 = e^(i pi/8)).
    """

    m: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.m:
            raise ValueError(f"need {self.m} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, m):
        return cls(m, (0,) * m)

    @classmethod
    def one(cls, m):
        return cls(m, (1,) + (0,) * (m - 1))

    @classmethod
    def from_int(cls, m, n):
        return cls(m, (n,) + (0,) * (m - 1))

    @classmethod
    def zeta_power(cls, m, k):
        """zeta^k with sign folding zeta^m = -1."""
        k = k % (2 * m)
        sign = 1
        if k >= m:
            k -= m
            sign = -1
        coeffs = [0] * m
        coeffs[k] = sign
        return cls(m, tuple(coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        return CycloInt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def _coerce(self, other):
        if isinstance(other, int):
            return CycloInt.from_int(self.m, other)
        if isinstance(other, CycloInt):
            if other.m != self.m:
                raise ValueError("mixed cyclotomic orders")
            return other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.m, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        m = self.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k = i + j
                if k >= m:
                    out[k - m] -= a * b
                else:
                    out[k] += a * b
        return CycloInt(m, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            inv = self.unit_inverse()
            return inv ** (-n)
        out = CycloInt.one(self.m)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def unit_inverse(self):
        """Inverse of +-zeta^k monomial units (all we ever invert)."""
        nz = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if len(nz) != 1 or nz[0][1] not in (1, -1):
            raise ValueError(f"not a monomial unit: {self}")
        i, c = nz[0]
        inv = CycloInt.zeta_power(self.m, -i)
        return inv * c

    def conjugate(self):
        """Complex conjugation: zeta -> zeta^(2m-1)."""
        m = self.m
        out = CycloInt.zero(m)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + CycloInt.zeta_power(m, -i) * c
        return out

    def norm_squared(self):
        """self * conjugate(self), an element fixed by conjugation."""
        return self * self.conjugate()

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"CycloInt(m={self.m}, {self})"


def sqrt2_zeta8():
    """sqrt(2) = zeta_8 + zeta_8^-1 as an element of Z[zeta_8] (m = 4)."""
    return CycloInt.zeta_power(4, 1) + CycloInt.zeta_power(4, -1)


# ---------------------------------------------------------------------------
# Multivariate Laurent ring of the quartic skein module
# ---------------------------------------------------------------------------

SKEIN_VARS = ("x0", "x1", "x2", "x3", "x4", "xinf", "a")
_INVERTIBLE = {0: True, 1: False, 2: False, 3: False, 4: True, 5: False, 6: True}


class MultiLaurent:
    """Element of Z[x0^+-1, x1, x2, x3, x4^+-1, xinf, a^+-1].

    Sparse map from exponent 7-tuples (order x0,x1,x2,x3,x4,xinf,a) to
    nonzero integer coefficients.  Negative exponents are permitted only on
    x0, x4 and a (the localized variables).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self._check(mono)
                    self.terms[tuple(mono)] = c

    @staticmethod
    def _check(mono):
        for i, e in enumerate(mono):
            if e < 0 and not _INVERTIBLE[i]:
                raise ValueError(
                    f"negative exponent on non-invertible variable {SKEIN_VARS[i]}")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0,) * 7: 1})

    @classmethod
    def var(cls, name, power=1):
        i = SKEIN_VARS.index(name)
        mono = [0] * 7
        mono[i] = power
        return cls({tuple(mono): 1})

    @classmethod
    def from_int(cls, n):
        return cls({(0,) * 7: n}) if n else cls()

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.from_int(other)
        return isinstance(other, MultiLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.from_int(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        r = MultiLaurent()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MultiLaurent()
        r.terms = {mono: -c for mono, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MultiLaurent()
            r = MultiLaurent()
            r.terms = {mono: c * other for mono, c in self.terms.items()}
            return r
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(mono, 0) + c1 * c2
                if v:
                    out[mono] = v
                else:
                    out.pop(mono, None)
        for mono in out:
            self._check(mono)
        r = MultiLaurent()
        r.terms = out
        return r

    __rmul__ = __mul__

    def inverse_monomial(self):
        """Inverse, defined only for +-1 times a monomial in invertible vars."""
        if len(self.terms) != 1:
            raise ValueError("division by a non-monomial")
        ((mono, c),) = self.terms.items()
        if c not in (1, -1):
            raise ValueError("division by a non-unit coefficient")
        inv = tuple(-e for e in mono)
        self._check(inv)
        return MultiLaurent({inv: c})

    def __truediv__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.from_int(other)
        return self * other.inverse_monomial()

    def substitute(self, values):
        """Evaluate at a dict var-name -> int (ints only; used for the
        4-move specialization x0 = 1, x4 = -1, a = 1, rest 0).

        Returns a plain int.  Negative exponents require the substituted
        value to be +-1.
        """
        total = 0
        for mono, c in self.terms.items():
            term = c
            for i, e in enumerate(mono):
                if e == 0:
                    continue
                v = values[SKEIN_VARS[i]]
                if e < 0:
                    if v not in (1, -1):
                        raise ZeroDivisionError(
                            f"cannot invert {SKEIN_VARS[i]} = {v}")
                    term *= v ** (-e)
                else:
                    term *= v ** e
            total += term
        return total

    @staticmethod
    def _mono_str(mono):
        parts = []
        for i, e in enumerate(mono):
            if e == 0:
                continue
            name = SKEIN_VARS[i]
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            ms = self._mono_str(mono)
            if not ms:
                parts.append(str(c))
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append(f"-{ms}")
            else:
                parts.append(f"{c}*{ms}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiLaurent({self})"

    def to_json(self):
        return [[list(mono), c] for mono, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data):
        return cls({tuple(mono): c for mono, c in data})
