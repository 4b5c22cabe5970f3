"""Real quadratic fields Q(sqrt(m)): conductor, fundamental unit, class numbers.

Everything is exact: units come from the continued-fraction expansion of
(D mod 2 + sqrt(D))/2 over the maximal order, class numbers from cycles of
reduced indefinite binary quadratic forms, and the squareness test runs
entirely over rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt

from eideal.ntheory import is_squarefree


def rational_sqrt(f: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None."""
    if f < 0:
        return None
    rn = isqrt(f.numerator)
    rd = isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


class QuadField:
    """Q(sqrt(m)) for squarefree m > 1; discriminant precomputed."""

    def __init__(self, m: int):
        if m <= 1 or not is_squarefree(m):
            raise ValueError("radicand must be squarefree and > 1, got %d" % m)
        self.m = m
        self.discriminant = m if m % 4 == 1 else 4 * m

    def __repr__(self):
        return "QuadField(%d)" % self.m

    def __eq__(self, other):
        return isinstance(other, QuadField) and self.m == other.m

    def __hash__(self):
        return hash(("QuadField", self.m))

    def element(self, x, y=0) -> "QuadElem":
        return QuadElem(self, Fraction(x), Fraction(y))

    @cached_property
    def conductor(self) -> int:
        return conductor_quad(self)

    @cached_property
    def unit_data(self):
        return fundamental_unit(self)

    @cached_property
    def h_plus(self) -> int:
        return narrow_class_number(self.discriminant)

    @cached_property
    def h(self) -> int:
        return class_number_quad(self)


class QuadElem:
    """x + y*sqrt(m) with exact rational coordinates."""

    __slots__ = ("field", "x", "y")

    def __init__(self, field: QuadField, x, y=0):
        self.field = field
        self.x = Fraction(x)
        self.y = Fraction(y)

    def __repr__(self):
        return "QuadElem(%s, %s + %s*sqrt(%d))" % (self.field.m, self.x, self.y, self.field.m)

    def _check(self, other):
        if self.field.m != other.field.m:
            raise ValueError("mixed fields: sqrt(%d) vs sqrt(%d)" % (self.field.m, other.field.m))

    def __eq__(self, other):
        if not isinstance(other, QuadElem):
            return self.y == 0 and self.x == other
        return self.field.m == other.field.m and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.field.m, self.x, self.y))

    def __add__(self, other):
        if not isinstance(other, QuadElem):
            return QuadElem(self.field, self.x + other, self.y)
        self._check(other)
        return QuadElem(self.field, self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadElem) else -Fraction(other))

    def __neg__(self):
        return QuadElem(self.field, -self.x, -self.y)

    def __mul__(self, other):
        if not isinstance(other, QuadElem):
            return QuadElem(self.field, self.x * other, self.y * other)
        self._check(other)
        m = self.field.m
        return QuadElem(
            self.field,
            self.x * other.x + m * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuadElem):
            self._check(other)
            n = other.norm()
            if n == 0:
                raise ZeroDivisionError("division by zero element")
            num = self * other.conjugate()
            return QuadElem(self.field, num.x / n, num.y / n)
        return QuadElem(self.field, self.x / other, self.y / other)

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.field, self.x, -self.y)

    def norm(self) -> Fraction:
        return self.x * self.x - self.field.m * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def sign(self) -> int:
        """Sign of the real number x + y*sqrt(m), computed exactly."""
        x, y = self.x, self.y
        if y == 0:
            return (x > 0) - (x < 0)
        if x == 0:
            return 1 if y > 0 else -1
        if x > 0 and y > 0:
            return 1
        if x < 0 and y < 0:
            return -1
        # mixed signs: compare x^2 against m*y^2
        lead = x * x - self.field.m * y * y
        s = (lead > 0) - (lead < 0)
        return s if x > 0 else -s

    def __gt__(self, other):
        diff = self - (other if isinstance(other, QuadElem) else QuadElem(self.field, other))
        return diff.sign() > 0

    def __lt__(self, other):
        diff = self - (other if isinstance(other, QuadElem) else QuadElem(self.field, other))
        return diff.sign() < 0


def conductor_quad(F: QuadField) -> int:
    """m when m == 1 mod 4, else 4m."""
    return F.m if F.m % 4 == 1 else 4 * F.m


def _principal_cycle(D):
    """Yield (P, Q, a, q_i, q_im1) along the continued fraction of (b0+sqrt(D))/2.

    Stops after one full period of the principal cycle.
    """
    s = isqrt(D)
    b0 = s if (s - D) % 2 == 0 else s - 1
    P, Q = b0, 2
    q_prev, q_cur = 1, 0  # q_{-2}, q_{-1}
    while True:
        a = (P + s) // Q
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        P = a * Q - P
        Q = (D - P * P) // Q
        yield P, Q, a, q_cur, q_prev
        if (P, Q) == (b0, 2):
            return


def _unit_candidates(D):
    """Convergent elements (X, Y) with value (X + Y*sqrt(D))/2 along the cycle.

    The last one is the fundamental unit; earlier ones are the only smaller
    candidates the expansion produces.
    """
    s = isqrt(D)
    b0 = s if (s - D) % 2 == 0 else s - 1
    out = []
    for _, _, _, q_cur, q_prev in _principal_cycle(D):
        out.append((q_cur * b0 + 2 * q_prev, q_cur))
    return out


def fundamental_unit(F: QuadField) -> tuple[QuadElem, int]:
    """The least unit > 1 of the maximal order of F and its norm.

    Period length ell of the principal cycle gives the norm (-1)**ell.
    """
    D = F.discriminant
    candidates = _unit_candidates(D)
    X, Y = candidates[-1]
    if D % 2 == 0:
        eps = QuadElem(F, Fraction(X, 2), Fraction(Y))  # sqrt(D) = 2 sqrt(m)
    else:
        eps = QuadElem(F, Fraction(X, 2), Fraction(Y, 2))
    norm = eps.norm()
    if norm not in (1, -1):
        raise AssertionError("continued fraction produced a non-unit for D=%d" % D)
    expected = -1 if len(candidates) % 2 else 1
    if norm != expected:
        raise AssertionError("period parity disagrees with unit norm at D=%d" % D)
    return eps, int(norm)


def is_fundamental_discriminant(D: int) -> bool:
    if D <= 1:
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def _is_form_discriminant(D: int) -> bool:
    # fundamental discriminants plus 4m for squarefree m = 1 mod 4 (the
    # discriminant of the order Z[sqrt(m)]); the cycle count is exact there too
    if is_fundamental_discriminant(D):
        return True
    return D > 1 and D % 4 == 0 and D // 4 % 4 == 1 and is_squarefree(D // 4)


def _reduced_forms(D):
    """All reduced primitive indefinite forms (a, b, c) of discriminant D.

    Imprimitive forms only arise for the 4m order discriminants; the gcd
    filter keeps the count equal to the class number in that case too.
    """
    s = isqrt(D)
    forms = []
    b = 2 - (D % 2)
    while b <= s:
        N = (D - b * b) // 4
        a1 = 1
        while a1 * a1 <= N:
            if N % a1 == 0:
                for d in {a1, N // a1}:
                    # window: sqrt(D) - b < 2d < sqrt(D) + b
                    if (2 * d + b) * (2 * d + b) > D and (2 * d - b) * (2 * d - b) < D:
                        c = N // d
                        if gcd(gcd(d, b), c) == 1:
                            forms.append((d, b, -c))
                            forms.append((-d, b, c))
            a1 += 1
        b += 2
    return forms


def _rho(form, D, s):
    """One reduction step; permutes the set of reduced forms."""
    _, b, c = form
    ca = abs(c)
    r0 = (-b) % (2 * ca)
    r = r0 + ((s - r0) // (2 * ca)) * (2 * ca)
    return (c, r, (r * r - D) // (4 * c))


def narrow_class_number(D: int) -> int:
    """h+ as the number of cycles of reduced forms under the reduction step."""
    if not _is_form_discriminant(D):
        raise ValueError("%d is not a positive fundamental (or 4m order) discriminant" % D)
    s = isqrt(D)
    forms = _reduced_forms(D)
    form_set = set(forms)
    seen = set()
    cycles = 0
    for f in forms:
        if f in seen:
            continue
        cycles += 1
        g = f
        while True:
            seen.add(g)
            g = _rho(g, D, s)
            if g not in form_set:
                raise AssertionError("reduction left the reduced set at D=%d: %r" % (D, g))
            if g == f:
                break
    return cycles


def class_number_quad(F: QuadField) -> int:
    """Wide class number: h+ when the fundamental unit has norm -1, else h+/2."""
    hp = F.h_plus
    _, norm = F.unit_data
    if norm == -1:
        return hp
    if hp % 2:
        raise AssertionError("h+ odd with unit norm +1 at m=%d" % F.m)
    return hp // 2


def _canonical_root(r: QuadElem) -> QuadElem:
    if r.x != 0:
        return r if r.x > 0 else -r
    return r if r.y > 0 else -r


def quad_is_square(e: QuadElem) -> QuadElem | None:
    """A root r with r*r == e in Q(sqrt(m)), or None.

    The root, when it exists, has rational coordinates; the returned one has
    positive first nonzero coordinate.  Entirely rational arithmetic: the
    norm must be a rational square n^2, and then (x +- n)/2 must be one.
    """
    if e.is_zero():
        raise ValueError("squareness test expects a nonzero element")
    F = e.field
    m = F.m
    if e.y == 0:
        u = rational_sqrt(e.x)
        if u is not None:
            return _canonical_root(QuadElem(F, u))
        v = rational_sqrt(e.x / m)
        if v is not None:
            return _canonical_root(QuadElem(F, 0, v))
        return None
    n = rational_sqrt(e.norm())
    if n is None:
        return None
    for nn in (n, -n):
        u = rational_sqrt((e.x + nn) / 2)
        if u is not None and u != 0:
            v = e.y / (2 * u)
            root = QuadElem(F, u, v)
            if root * root == e:
                return _canonical_root(root)
    return None
