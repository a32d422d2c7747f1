# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled rational scalar for the exact linear-algebra inner loops.

Drop-in replacement for fractions.Fraction within this package: exact,
arbitrary precision (numerator and denominator stay Python ints), always
normalized with a positive denominator.  The compiled class skips the
generic-number protocol layers that dominate Fraction's cost in tight row
reductions; the pure fallback is selected automatically when the extension
is absent (or CENDLAB_PURE is set).
"""

import sys

from math import gcd as _gcd

cdef object _HASH_MODULUS = sys.hash_info.modulus
cdef object _HASH_INF = sys.hash_info.inf


cdef inline tuple _coerce(object obj):
    if type(obj) is Rat:
        return (<Rat>obj).num, (<Rat>obj).den
    if isinstance(obj, int):
        return obj, 1
    return None


cdef Rat _make(object num, object den):
    cdef Rat out = Rat.__new__(Rat)
    out.num = num
    out.den = den
    return out


cdef Rat _normalized(object num, object den):
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if den < 0:
        num = -num
        den = -den
    g = _gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return _make(num, den)


cdef class Rat:
    cdef readonly object num
    cdef readonly object den

    def __init__(self, num=0, den=1):
        if type(num) is Rat and den == 1:
            self.num = (<Rat>num).num
            self.den = (<Rat>num).den
            return
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError(f"Rat needs integers, got {num!r}/{den!r}")
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = _gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        self.num = num
        self.den = den

    @property
    def numerator(self):
        return self.num

    @property
    def denominator(self):
        return self.den

    def __add__(x, y):
        a = _coerce(x)
        b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        an, ad = a
        bn, bd = b
        if ad == 1 and bd == 1:
            return _make(an + bn, 1)
        return _normalized(an * bd + bn * ad, ad * bd)

    def __sub__(x, y):
        a = _coerce(x)
        b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        an, ad = a
        bn, bd = b
        if ad == 1 and bd == 1:
            return _make(an - bn, 1)
        return _normalized(an * bd - bn * ad, ad * bd)

    def __mul__(x, y):
        a = _coerce(x)
        b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        an, ad = a
        bn, bd = b
        if an == 0 or bn == 0:
            return _make(0, 1)
        if ad == 1 and bd == 1:
            return _make(an * bn, 1)
        return _normalized(an * bn, ad * bd)

    def __truediv__(x, y):
        a = _coerce(x)
        b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        an, ad = a
        bn, bd = b
        if bn == 0:
            raise ZeroDivisionError("division by zero")
        return _normalized(an * bd, ad * bn)

    def __radd__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        bn, bd = b
        return _normalized(bn * self.den + self.num * bd, bd * self.den)

    def __rsub__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        bn, bd = b
        return _normalized(bn * self.den - self.num * bd, bd * self.den)

    def __rmul__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        bn, bd = b
        if bn == 0 or self.num == 0:
            return _make(0, 1)
        return _normalized(bn * self.num, bd * self.den)

    def __rtruediv__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        bn, bd = b
        if self.num == 0:
            raise ZeroDivisionError("division by zero")
        return _normalized(bn * self.den, bd * self.num)

    def __neg__(self):
        return _make(-self.num, self.den)

    def __pos__(self):
        return self

    def __abs__(self):
        return _make(-self.num, self.den) if self.num < 0 else self

    def __bool__(self):
        return self.num != 0

    def __richcmp__(x, y, int op):
        a = _coerce(x)
        b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        an, ad = a
        bn, bd = b
        if op == 2:  # ==
            return an == bn and ad == bd
        if op == 3:  # !=
            return an != bn or ad != bd
        lhs = an * bd
        rhs = bn * ad
        if op == 0:
            return lhs < rhs
        if op == 1:
            return lhs <= rhs
        if op == 4:
            return lhs > rhs
        return lhs >= rhs

    def __hash__(self):
        # same algorithm as the standard library rational hash, so values
        # equal to ints or Fractions hash identically
        try:
            dinv = pow(self.den, -1, _HASH_MODULUS)
        except ValueError:
            hash_ = _HASH_INF
        else:
            hash_ = hash(hash(abs(self.num)) * dinv)
        result = hash_ if self.num >= 0 else -hash_
        return -2 if result == -1 else result

    def __int__(self):
        if self.num >= 0:
            return self.num // self.den
        return -((-self.num) // self.den)

    def __repr__(self):
        if self.den == 1:
            return f"Rat({self.num})"
        return f"Rat({self.num}, {self.den})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __reduce__(self):
        return (Rat, (self.num, self.den))


# lets Fraction's reflected operators and comparisons accept Rat values
import numbers as _numbers

_numbers.Rational.register(Rat)
