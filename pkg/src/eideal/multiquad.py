"""Multiquadratic fields Q(sqrt(m1), ..., sqrt(mn)).

Conductors come from the lcm rule over quadratic subfields, ramification
indices from the local components of the quadratic characters (F2-linear
algebra on prime-discriminant coordinates, so no quartic ideal arithmetic),
class numbers of real biquadratic fields from the unit-index formula
4*h = Q*h1*h2*h3, and prime splitting from Legendre-symbol patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from eideal.ntheory import factorize, is_squarefree, jacobi, squarefree_part
from eideal.quadratic import QuadElem, QuadField, conductor_quad, quad_is_square


class MultiquadField:
    """Q(sqrt(m)) for a set of multiplicatively independent squarefree m > 1.

    The empty set is allowed and denotes Q itself (degree 1).
    """

    def __init__(self, radicands):
        gens = tuple(sorted(set(int(m) for m in radicands)))
        for m in gens:
            if m <= 1 or not is_squarefree(m):
                raise ValueError("radicand must be squarefree and > 1, got %d" % m)
        subfields = set()
        for m in gens:
            new = {m} | {squarefree_part(m * t) for t in subfields}
            subfields |= new
        if 1 in subfields or len(subfields) != (1 << len(gens)) - 1:
            raise ValueError("radicands %r are multiplicatively dependent" % (gens,))
        self.radicands = gens
        self.subfield_radicands = tuple(sorted(subfields))
        self.degree = 1 << len(gens)

    def __repr__(self):
        return "MultiquadField(%r)" % (self.radicands,)

    def __eq__(self, other):
        return (
            isinstance(other, MultiquadField)
            and self.subfield_radicands == other.subfield_radicands
        )

    def __hash__(self):
        return hash(("MultiquadField", self.subfield_radicands))

    @cached_property
    def conductor(self) -> int:
        return conductor_multiquad(self)


def subfield_radicands(a: int, b: int) -> tuple[int, int, int]:
    """The three quadratic subfield radicands of Q(sqrt(a), sqrt(b))."""
    if a == b:
        raise ValueError("radicands must be distinct, got %d twice" % a)
    for m in (a, b):
        if m <= 1 or not is_squarefree(m):
            raise ValueError("radicand must be squarefree and > 1, got %d" % m)
    g = gcd(a, b)
    return (a, b, a * b // (g * g))


class BiquadField(MultiquadField):
    """A real biquadratic field with its ordered subfield triple (m1, m2, m3)."""

    def __init__(self, a: int, b: int):
        m1, m2 = sorted((a, b))
        m1, m2, m3 = subfield_radicands(m1, m2)
        super().__init__((m1, m2))
        self.triple = (m1, m2, m3)

    def __repr__(self):
        return "BiquadField(%d, %d)" % (self.radicands[0], self.radicands[1])

    @cached_property
    def quad_subfields(self) -> tuple[QuadField, QuadField, QuadField]:
        return tuple(QuadField(m) for m in self.triple)

    @cached_property
    def _family(self):
        return _detect_family(self.triple)

    @property
    def family(self) -> str:
        return self._family[0]

    @property
    def family_primes(self):
        """(q, k, r) or (2, p, q) when the field matches a known family."""
        return self._family[1]

    @cached_property
    def unit_index(self) -> int:
        return unit_index(self)

    @cached_property
    def h(self) -> int:
        return class_number_biquad(self)

    @cached_property
    def hilbert(self) -> MultiquadField:
        return hilbert_class_field(self)

    def element(self, c0, c1=0, c2=0, c3=0) -> "QuartElem":
        return QuartElem(self, (c0, c1, c2, c3))

    def lift_quad(self, e: QuadElem) -> "QuartElem":
        """Embed an element of one of the three quadratic subfields."""
        m = e.field.m
        if m not in self.triple:
            raise ValueError("sqrt(%d) is not a subfield coordinate of %r" % (m, self))
        coords = [e.x, 0, 0, 0]
        coords[1 + self.triple.index(m)] = e.y
        return QuartElem(self, coords)


def _detect_family(triple):
    facs = {m: sorted(factorize(m)) for m in triple}
    by_count = sorted(triple, key=lambda m: len(facs[m]))
    a, b, c = by_count
    if (len(facs[a]), len(facs[b]), len(facs[c])) != (1, 2, 3):
        return ("other", None)
    q = a
    k, r = facs[b]
    if set(facs[c]) != {q, k, r} or k % 4 != 1 or r % 4 != 1:
        return ("other", None)
    if q == 2:
        return ("sqrt2", (2, k, r))
    if q % 4 == 3:
        return ("q3", (q, k, r))
    return ("hsu", (q, k, r))


def conductor_multiquad(M: MultiquadField) -> int:
    """lcm of the conductors of all quadratic subfields (1 for Q)."""
    f = 1
    for m in M.subfield_radicands:
        f = lcm(f, m if m % 4 == 1 else 4 * m)
    return f


def _local_component(m: int, p: int):
    """Component at p of the quadratic character of Q(sqrt(m)), as an F2 vector.

    Odd p: one coordinate (chi_{p*} present or not).  p = 2: coordinates on
    (chi_{-4}, chi_8); m = 2 mod 8 gives chi_8, m = 6 mod 8 gives chi_{-8}.
    """
    if p == 2:
        if m % 4 == 1:
            return (0, 0)
        if m % 4 == 3:
            return (1, 0)
        return (0, 1) if (m // 2) % 4 == 1 else (1, 1)
    return (1,) if m % p == 0 else (0,)


def ramification_index(p: int, M: MultiquadField) -> int:
    """e(p in M): order of the group generated by the local character data."""
    span = {(0,) * (2 if p == 2 else 1)}
    for m in M.subfield_radicands:
        v = _local_component(m, p)
        if v not in span:
            span |= {tuple(a ^ b for a, b in zip(v, w)) for w in span}
    return len(span)


def _char_value(m: int, p: int) -> int:
    # value at an unramified prime p of the character of Q(sqrt(m))
    if p == 2:
        return 1 if m % 8 == 1 else -1
    return jacobi(m, p)


@dataclass(frozen=True)
class SplitData:
    """Decomposition data e, f, g of a rational prime in a multiquadratic field."""

    p: int
    field: MultiquadField
    pattern: tuple
    e: int
    f: int
    g: int


def splitting_data(p: int, M: MultiquadField) -> SplitData:
    """Legendre pattern over the subfield radicands plus (e, f, g).

    Pattern entries are 0 at ramified components.  The residue degree comes
    from the character values at the unramified components: 2 as soon as one
    is -1, else 1.  This is valid for every p, ramified or not.
    """
    e = ramification_index(p, M)
    pattern = []
    f = 1
    for m in M.subfield_radicands:
        if (p == 2 and m % 4 != 1) or (p != 2 and m % p == 0):
            pattern.append(0)
            continue
        v = _char_value(m, p)
        pattern.append(v)
        if v == -1:
            f = 2
    return SplitData(p, M, tuple(pattern), e, f, M.degree // (e * f))


def verify_unramified(H: MultiquadField, K: MultiquadField):
    """Check e(p in H) == e(p in K) at every prime dividing the conductor of H.

    Returns (all_equal, report); report rows carry both indices per prime.
    """
    if not set(K.subfield_radicands) <= set(H.subfield_radicands):
        raise ValueError("%r is not a subfield of %r" % (K, H))
    report = []
    ok = True
    for p in sorted(factorize(conductor_multiquad(H))):
        e_upper = ramification_index(p, H)
        e_lower = ramification_index(p, K)
        same = e_upper == e_lower
        ok = ok and same
        report.append({"prime": p, "e_upper": e_upper, "e_lower": e_lower, "unramified": same})
    return ok, report


class QuartElem:
    """Element of a biquadratic field on the basis (1, sqrt m1, sqrt m2, sqrt m3)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: BiquadField, coords):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)
        if len(self.coords) != 4:
            raise ValueError("expected 4 coordinates")

    def __repr__(self):
        return "QuartElem(%r, %s)" % (self.field.triple, list(self.coords))

    def __eq__(self, other):
        if not isinstance(other, QuartElem):
            c = self.coords
            return c[1] == c[2] == c[3] == 0 and c[0] == other
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.subfield_radicands, self.coords))

    def __add__(self, other):
        return QuartElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QuartElem(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if not isinstance(other, QuartElem):
            return QuartElem(self.field, tuple(c * other for c in self.coords))
        if self.field != other.field:
            raise ValueError("mixed biquadratic fields")
        m1, m2, m3 = self.field.triple
        g = gcd(m1, m2)
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        return QuartElem(
            self.field,
            (
                a0 * b0 + m1 * a1 * b1 + m2 * a2 * b2 + m3 * a3 * b3,
                a0 * b1 + a1 * b0 + (m2 // g) * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 + (m1 // g) * (a1 * b3 + a3 * b1),
                a0 * b3 + a3 * b0 + g * (a1 * b2 + a2 * b1),
            ),
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def conjugates(self):
        """The four Galois images, as coordinate sign flips."""
        c0, c1, c2, c3 = self.coords
        yield self
        yield QuartElem(self.field, (c0, c1, -c2, -c3))
        yield QuartElem(self.field, (c0, -c1, c2, -c3))
        yield QuartElem(self.field, (c0, -c1, -c2, c3))


def _canonical_quart(r: QuartElem) -> QuartElem:
    for c in r.coords:
        if c > 0:
            return r
        if c < 0:
            return -r
    return r


def quart_is_square(e: QuartElem) -> QuartElem | None:
    """A root in the biquadratic field, or None; exact tower descent.

    Write K = F1(sqrt m2) over F1 = Q(sqrt m1) and e = y + z*sqrt(m2).  A root
    exists iff the relative norm y^2 - z^2*m2 is a square n in F1 and one of
    (y +- n)/2 is a square u^2 in F1 with companion v = z/(2u).
    """
    if e.is_zero():
        raise ValueError("squareness test expects a nonzero element")
    K = e.field
    m1, m2, _ = K.triple
    g = gcd(m1, m2)
    F1 = QuadField(m1)
    c0, c1, c2, c3 = e.coords
    y = QuadElem(F1, c0, c1)
    z = QuadElem(F1, c2, c3 / g)
    if z.is_zero():
        u = quad_is_square(y)
        if u is not None:
            return _canonical_quart(QuartElem(K, (u.x, u.y, 0, 0)))
        v = quad_is_square(y / m2)
        if v is not None:
            return _canonical_quart(QuartElem(K, (0, 0, v.x, v.y * g)))
        return None
    rel_norm = y * y - (z * z) * m2  # nonzero: e != 0 in a field
    n = quad_is_square(rel_norm)
    if n is None:
        return None
    for nn in (n, -n):
        u_sq = (y + nn) / 2
        if u_sq.is_zero():
            continue
        u = quad_is_square(u_sq)
        if u is None or u.is_zero():
            continue
        v = z / (2 * u)
        root = QuartElem(K, (u.x, u.y, v.x, v.y * g))
        if root * root == e:
            return _canonical_quart(root)
    return None


def unit_index(K: BiquadField) -> int:
    """Kubota index Q = [E_K : <-1, eps1, eps2, eps3>], a power of 2 up to 8.

    Counts exponent vectors v in {0,1}^3 for which +-eps^v is a square in K;
    both signs must be tried since squares are totally positive.
    """
    lifted = [K.lift_quad(F.unit_data[0]) for F in K.quad_subfields]
    count = 0
    for mask in range(8):
        prod = QuartElem(K, (1, 0, 0, 0))
        for i in range(3):
            if mask >> i & 1:
                prod = prod * lifted[i]
        if quart_is_square(prod) is not None or quart_is_square(-prod) is not None:
            count += 1
    if count not in (1, 2, 4, 8):
        raise AssertionError("unit index %d is not a power of 2 at %r" % (count, K))
    return count


def class_number_biquad(K: BiquadField) -> int:
    """Class number via 4*h = Q * h1 * h2 * h3."""
    numerator = K.unit_index
    for F in K.quad_subfields:
        numerator *= F.h
    if numerator % 4:
        raise ArithmeticError(
            "unit index and subfield class numbers are inconsistent at %r" % K
        )
    return numerator // 4


def hilbert_class_field(K: BiquadField) -> MultiquadField:
    """The degree-8 class field for h = 2 fields in the recognized families.

    Splits the composite radicand into its prime factors; refuses shapes the
    construction does not cover rather than guessing.
    """
    if K.family not in ("q3", "sqrt2", "hsu"):
        raise ValueError("family not covered: %r" % (K,))
    h = K.h
    if h != 2:
        raise ValueError("class number not 2 (h=%d) for %r" % (h, K))
    return MultiquadField(K.family_primes)


def is_nonprincipal_split_prime(p: int, K: BiquadField) -> bool:
    """For p splitting completely in K: do the primes above p generate Cl_K?

    True iff p does not split completely in the class field, i.e. the primes
    above it sit in the non-principal class of the order-2 class group.
    """
    sd = splitting_data(p, K)
    if sd.e != 1 or sd.f != 1:
        raise ValueError("%d is not completely split in %r" % (p, K))
    sd_h = splitting_data(p, K.hilbert)
    return not (sd_h.e == 1 and sd_h.f == 1)
