from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from eideal.ntheory import (
    ResidueClass,
    crt_solve,
    egcd,
    factorize,
    is_prime,
    is_squarefree,
    jacobi,
    multiplicative_order,
    primes_in_ap,
    primes_up_to,
    sqrt_mod,
    squarefree_part,
)


def legendre_reference(a, n):
    # independent oracle: Euler criterion over the factorization of n
    result = 1
    for p, e in factorize(n).items():
        if a % p == 0:
            s = 0
        else:
            s = 1 if pow(a % p, (p - 1) // 2, p) == 1 else -1
        result *= s**e
    return result


class TestJacobi:
    def test_examples(self):
        assert jacobi(7, 13) == -1
        assert jacobi(2, 7) == 1
        assert jacobi(13, 13) == 0

    def test_rejects_even_or_nonpositive_modulus(self):
        with pytest.raises(ValueError):
            jacobi(3, 10)
        with pytest.raises(ValueError):
            jacobi(3, -7)
        with pytest.raises(ValueError):
            jacobi(3, 0)

    def test_negative_entries(self):
        assert jacobi(-1, 7) == jacobi(6, 7)
        assert jacobi(-10, 21) == jacobi(11, 21)

    @given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4),
           st.integers(1, 10**4).map(lambda n: 2 * n - 1))
    def test_multiplicative(self, a, b, n):
        assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)

    @given(st.integers(-10**6, 10**6), st.integers(1, 3000).map(lambda n: 2 * n - 1))
    def test_matches_euler_criterion(self, a, n):
        assert jacobi(a, n) == legendre_reference(a, n)

    def test_quadratic_reciprocity(self):
        odd_primes = [p for p in primes_up_to(199) if p > 2]
        for p in odd_primes:
            for q in odd_primes:
                if p == q:
                    continue
                lhs = jacobi(p, q) * jacobi(q, p)
                assert lhs == (-1) ** ((p - 1) // 2 * ((q - 1) // 2))


class TestCrt:
    def test_examples(self):
        assert crt_solve([ResidueClass(2, 3), ResidueClass(3, 5),
                          ResidueClass(7, 13), ResidueClass(3, 4)]) == ResidueClass(683, 780)
        assert crt_solve([ResidueClass(3, 5), ResidueClass(3, 17),
                          ResidueClass(7, 8)]) == ResidueClass(343, 680)

    def test_inconsistent_pair_reported(self):
        with pytest.raises(ValueError, match="0 mod 2.*1 mod 2"):
            crt_solve([ResidueClass(0, 2), ResidueClass(1, 2)])

    def test_inconsistency_through_shared_factor(self):
        with pytest.raises(ValueError, match="inconsistent"):
            crt_solve([ResidueClass(1, 4), ResidueClass(2, 6)])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            crt_solve([])

    @given(st.lists(st.tuples(st.integers(0, 10**4), st.integers(1, 300)),
                    min_size=1, max_size=5))
    def test_solution_satisfies_all_congruences(self, pairs):
        classes = [ResidueClass(r, m) for r, m in pairs]
        try:
            sol = crt_solve(classes)
        except ValueError:
            # must be a genuine pairwise conflict
            found = False
            from math import gcd
            for i, a in enumerate(classes):
                for b in classes[i + 1:]:
                    if (a.residue - b.residue) % gcd(a.modulus, b.modulus):
                        found = True
            assert found
            return
        from math import lcm
        want = 1
        for c in classes:
            assert sol.residue % c.modulus == c.residue
            want = lcm(want, c.modulus)
        assert sol.modulus == want
        assert 0 <= sol.residue < sol.modulus


class TestIsPrime:
    def test_examples(self):
        assert is_prime(683)
        assert not is_prime(341)
        assert not is_prime(1)
        assert not is_prime(0)
        assert is_prime(2)

    def test_matches_sieve(self):
        primes = set(primes_up_to(3000))
        for n in range(3000):
            assert is_prime(n) == (n in primes)

    def test_large_strong_pseudoprimes(self):
        assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
        assert is_prime(10**9 + 7)
        assert is_prime(2**61 - 1)
        assert not is_prime(2**67 - 1)  # 193707721 * 761838257287

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            is_prime(-5)


class TestPrimesInAp:
    def test_examples(self):
        assert primes_in_ap(ResidueClass(683, 780), 4000) == [683, 2243, 3023, 3803]
        assert primes_in_ap(ResidueClass(1, 2), 10) == [3, 5, 7]

    def test_rejects_shared_factor(self):
        with pytest.raises(ValueError):
            primes_in_ap(ResidueClass(2, 4), 100)

    @pytest.mark.parametrize("residue,modulus,bound", [(1, 4, 500), (3, 4, 500), (5, 6, 300), (7, 120, 5000)])
    def test_equals_sieve_filter(self, residue, modulus, bound):
        expected = [p for p in primes_up_to(bound) if p % modulus == residue]
        got = primes_in_ap(ResidueClass(residue, modulus), bound)
        assert got == expected
        assert all(is_prime(p) for p in got)


class TestMultiplicativeOrder:
    def test_examples(self):
        assert multiplicative_order(2, 7) == 3
        assert multiplicative_order(17, 37) == 36
        assert multiplicative_order(1, 11) == 1

    def test_rejects_divisible(self):
        with pytest.raises(ValueError):
            multiplicative_order(14, 7)

    @given(st.integers(2, 500))
    def test_order_divides_group_order(self, a):
        p = 997
        t = multiplicative_order(a, p)
        assert (p - 1) % t == 0
        assert pow(a, t, p) == 1
        for q in factorize(t):
            assert pow(a, t // q, p) != 1


def test_egcd_and_squarefree_helpers():
    g, x, y = egcd(240, 46)
    assert g == 2 and 240 * x + 46 * y == 2
    assert is_squarefree(65) and not is_squarefree(18)
    assert squarefree_part(325) == 13
    assert squarefree_part(70) == 70


def test_sqrt_mod():
    assert sqrt_mod(3, 37) == 15
    assert sqrt_mod(28, 37) == 18
    for p in (13, 17, 41, 97, 193):
        for a in range(1, p):
            if jacobi(a, p) == 1:
                r = sqrt_mod(a, p)
                assert r * r % p == a
                assert r <= p - r
    with pytest.raises(ValueError):
        sqrt_mod(5, 13)
