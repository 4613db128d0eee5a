import math
import random

import pytest

from znec.errors import NonInvertible, NotPrimePower, NotPrimitive
from znec.modring import (
    Modulus,
    RingElement,
    _introot,
    _perfect_power,
    crt_combine,
    crt_ints,
    factorize,
    inverse,
    is_prime,
    is_primitive,
    minor_ideal_profile,
    primitive_combination,
    primitivity_gcd,
    strong_rank,
    vp,
    vp_int,
)
from oracles import crt_pairs

rng = random.Random(0xC0FFEE)


def _sieve_primes(limit):
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit) if flags[i]]


def test_is_prime_matches_sieve_below_20000():
    primes = set(_sieve_primes(20000))
    for n in range(20000):
        assert is_prime(n) == (n in primes), n


def test_is_prime_large_values():
    assert is_prime(730750818665451459112596905638433048232067471723)
    assert not is_prime(730750818665451459112596905638433048232067471723 ** 2)
    assert is_prime(2**127 - 1)
    assert not is_prime(2**128 - 1)


def test_introot():
    for n in (0, 1, 7, 26, 27, 28, 10**18, 10**18 + 1):
        for k in (1, 2, 3, 5, 7):
            r = _introot(n, k)
            assert r**k <= n < (r + 1) ** k, (n, k, r)


def test_perfect_power_detection():
    assert _perfect_power(49) == (7, 2)
    assert _perfect_power(3**7) == (3, 7)
    assert _perfect_power(6**4) == (36, 2)
    assert _perfect_power(91) is None
    p = 730750818665451459112596905638433048232067471723
    assert _perfect_power(p * p) == (p, 2)


def test_factorize_known():
    assert factorize(187187) == ((7, 1), (11, 2), (13, 1), (17, 1))
    assert factorize(659902243) == ((7, 1), (11, 1), (13, 2), (17, 1), (19, 1), (157, 1))
    assert factorize(2) == ((2, 1),)
    with pytest.raises(ValueError):
        factorize(1)


def test_factorize_random_roundtrip():
    for _ in range(200):
        n = rng.randrange(2, 10**9)
        fact = factorize(n)
        assert math.prod(p**e for p, e in fact) == n
        assert all(is_prime(p) for p, _ in fact)
        assert list(fact) == sorted(fact)


def test_factorize_big_prime_square_is_fast():
    # rho would never find this factor; the perfect-power path must
    p = 2**89 - 1
    assert factorize(p * p * p) == ((p, 3),)


def test_modulus_validation():
    m = Modulus(45)
    assert m.factorization == ((3, 2), (5, 1))
    assert Modulus(45, ((3, 2), (5, 1))) == m
    with pytest.raises(ValueError):
        Modulus(45, ((3, 1), (5, 1)))
    with pytest.raises(ValueError):
        Modulus(0)
    assert Modulus.prime_power(7, 3).n == 343
    assert Modulus(13).is_prime()
    assert not Modulus(45).is_prime()
    assert Modulus(45).components() == ((3, 2, 9), (5, 1, 5))
    with pytest.raises(NotPrimePower):
        Modulus(45).as_prime_power()
    assert Modulus.prime_power(5, 2).as_prime_power() == (5, 2)


@pytest.mark.parametrize("n", [7, 25, 35, 187187])
def test_ring_element_arithmetic_matches_ints(n):
    m = Modulus(n)
    for _ in range(100):
        a, b = rng.randrange(n), rng.randrange(n)
        x, y = m.element(a), m.element(b)
        assert (x + y).value == (a + b) % n
        assert (x - y).value == (a - b) % n
        assert (x * y).value == a * b % n
        assert (-x).value == -a % n
        assert (x + b).value == (a + b) % n
        assert (b - x).value == (b - a) % n
        assert (x**3).value == pow(a, 3, n)
        assert int(x) == a
        if math.gcd(b, n) == 1:
            assert ((x / y) * y).value == a


def test_ring_element_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Modulus(5).element(1) + Modulus(7).element(1)


def test_inverse_error_carries_gcd():
    with pytest.raises(NonInvertible) as info:
        inverse(Modulus(45).element(6))
    assert "3" in str(info.value)
    assert inverse(Modulus(45).element(7)).value == pow(7, -1, 45)


def test_vp():
    assert vp(Modulus.prime_power(5, 3).element(75), 5) == 2
    assert vp(Modulus.prime_power(5, 3).element(0), 5) == 3  # vp(0) capped at e
    assert vp_int(50, 5, 4) == 2
    assert vp_int(0, 7, 6) == 6
    with pytest.raises(NotPrimePower):
        vp(Modulus(45).element(3), 3)


def test_crt_matches_oracle():
    for _ in range(50):
        moduli = rng.sample([5, 7, 9, 11, 13, 16, 17], k=rng.randrange(2, 5))
        pairs = [(rng.randrange(m), m) for m in moduli]
        assert crt_ints(pairs) == crt_pairs(pairs)
    with pytest.raises(ValueError):
        crt_ints([(1, 6), (2, 15)])


def test_crt_combine_accepts_elements_and_pairs():
    assert crt_combine([(1, 2), (2, 3)]).value == 5
    x = crt_combine([Modulus(5).element(3), (4, Modulus(7))])
    assert x.modulus.n == 35 and x.value % 5 == 3 and x.value % 7 == 4


def test_primitivity():
    m = Modulus(35)
    assert is_primitive((5, 7), m)
    assert not is_primitive((5, 15), m)
    assert primitivity_gcd((5, 15), m) == 5
    assert primitivity_gcd((0, 0), m) == 35


def _brute_minor_rank(rows, n):
    import itertools

    k, m = len(rows), len(rows[0])

    def det(sub):
        size = len(sub)
        if size == 1:
            return sub[0][0] % n
        total = 0
        for perm in itertools.permutations(range(size)):
            sign = 1
            seen = list(perm)
            for i in range(size):
                for j in range(i + 1, size):
                    if seen[i] > seen[j]:
                        sign = -sign
            term = sign
            for i in range(size):
                term *= sub[i][perm[i]]
            total += term
        return total % n

    best = 0
    for t in range(1, min(k, m) + 1):
        for ridx in itertools.combinations(range(k), t):
            for cidx in itertools.combinations(range(m), t):
                if det([[rows[i][j] for j in cidx] for i in ridx]) != 0:
                    best = t
    return best


@pytest.mark.parametrize("n", [6, 12, 35])
def test_strong_rank_matches_brute_force(n):
    m = Modulus(n)
    assert strong_rank([[2, 0], [0, 3]], Modulus(6)) == 1
    for _ in range(25):
        rows = [[rng.randrange(n) for _ in range(3)] for _ in range(3)]
        assert strong_rank(rows, m) == _brute_minor_rank(rows, n)


def test_minor_ideal_profile_shape():
    prof = minor_ideal_profile([[1, 2, 3], [4, 5, 6]], Modulus(7))
    assert (prof.rows, prof.cols) == (2, 3)
    assert len(prof.order(1)) == 6
    assert len(prof.order(2)) == 3


@pytest.mark.parametrize("n", [5, 12, 35, 245])
def test_primitive_combination(n):
    m = Modulus(n)
    for _ in range(40):
        rows = [[rng.randrange(n) for _ in range(3)] for _ in range(3)]
        flat = [v for row in rows for v in row]
        if primitivity_gcd(flat, m) != 1:
            with pytest.raises(NotPrimitive):
                primitive_combination(rows, m)
            continue
        # the matrix may still have a zero column pattern mod some p
        # making no combination primitive; detect by direct check per prime
        degenerate = any(
            all(v % p == 0 for row in rows for v in row) for p in m.primes()
        )
        assert not degenerate
        betas = primitive_combination(rows, m)
        combo = [
            sum(b.value * rows[r][j] for j, b in enumerate(betas)) % n
            for r in range(3)
        ]
        assert is_primitive(combo, m), (rows, combo)


def test_primitive_combination_rejects_common_divisor():
    with pytest.raises(NotPrimitive):
        primitive_combination([[5, 10], [15, 20]], Modulus(35))
