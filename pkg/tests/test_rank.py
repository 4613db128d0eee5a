import pytest

from znec.errors import NoCurveOfOrderP, SearchBudgetExceeded
from znec.rank import (
    CHI_ABSENT,
    CHI_ASSUMED,
    CHI_WITNESSED,
    _curve_of_order_p,
    chi_candidates,
    chi_p,
    construct_max_rank_curve,
    hasse_primes,
    rank_bound,
)

from oracles import count_fp, field_group_invariants

HASSE = {
    5: (2, 3, 5, 7),
    7: (3, 5, 7, 11, 13),
    11: (7, 11, 13, 17),
    13: (7, 11, 13, 17, 19),
    101: (83, 89, 97, 101, 103, 107, 109, 113),
}

CHI = {
    5: (2, (31, 0, 11)),
    7: (2, (43, 0, 3)),
    11: (0, None),
    13: (2, (157, 0, 15)),
}

CONSTRUCTIONS = {
    5: (4278, 3452, 5425, 5, 7, (2, 3)),
    7: (54782, 200856, 1506505, 7, 8, (3,)),
    11: (167707, 21664, 187187, 5, 5, ()),
    13: (63707931, 239467091, 659902243, 8, 8, ()),
}


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


@pytest.mark.parametrize("p,expected", sorted(HASSE.items()))
def test_hasse_primes_frozen(p, expected):
    assert hasse_primes(p) == expected


def test_hasse_primes_against_sieve():
    primes = _sieve(1300)
    for p in (5, 7, 11, 13, 101, 997, 1009):
        window = tuple(q for q in primes if (q - p - 1) ** 2 <= 4 * p)
        assert hasse_primes(p) == window
    with pytest.raises(ValueError):
        hasse_primes(15)


def test_chi_candidates_at_most_one():
    # 3 divides exactly one of p^2 - p + 1, p^2 + p + 1 when p > 3
    for p in _sieve(10_000):
        if p <= 3:
            continue
        divisible = [(p * p - p + 1) % 3 == 0, (p * p + p + 1) % 3 == 0]
        assert divisible.count(True) == 1
        cands = chi_candidates(p)
        assert len(cands) <= 1
        for q in cands:
            assert q % p == 1  # full p-torsion needs p | q - 1


@pytest.mark.parametrize("p", sorted(CHI))
def test_chi_fixtures(p):
    assert chi_p(p) == CHI[p]


@pytest.mark.parametrize("p", [5, 7, 13])
def test_chi_witness_is_lex_smallest_with_full_torsion(p):
    chi, (q, a, b) = CHI[p]
    assert count_fp(a, b, q) == p * p
    assert field_group_invariants(a, b, q) == (p, p)
    for aa in range(a + 1):
        for bb in range(q if aa < a else b):
            if (4 * aa**3 + 27 * bb**2) % q == 0:
                continue
            earlier = count_fp(aa, bb, q) == p * p and field_group_invariants(aa, bb, q) == (p, p)
            assert not earlier, (aa, bb)


def test_chi_validation_and_budget():
    with pytest.raises(ValueError):
        chi_p(3)
    with pytest.raises(ValueError):
        chi_p(9)
    with pytest.raises(SearchBudgetExceeded):
        chi_p(13, budget=100)


@pytest.mark.parametrize("p", sorted(CHI))
def test_rank_bound_reports(p):
    report = rank_bound(p)
    chi, witness = CHI[p]
    assert report.hasse_primes == HASSE[p]
    assert report.h_p == len(HASSE[p])
    assert report.chi_p == chi
    assert report.bound == len(HASSE[p]) + chi + 1
    assert report.chi_witness == witness
    assert report.chi_status == (CHI_WITNESSED if chi else CHI_ABSENT)


def test_rank_bound_budget_fallback():
    report = rank_bound(13, budget=10)
    assert (report.chi_p, report.chi_witness, report.chi_status) == (2, None, CHI_ASSUMED)
    assert report.bound == 8  # still valid, just not witnessed


def test_rank_bound_as_json():
    j = rank_bound(13).as_json()
    assert j["p"] == "13"
    assert j["hasse_primes"] == ["7", "11", "13", "17", "19"]
    assert j["chi_witness"] == {"q": "157", "a": "0", "b": "15"}
    assert (j["h_p"], j["chi_p"], j["bound"], j["chi_status"]) == (5, 2, 8, "witnessed")
    assert rank_bound(11).as_json()["chi_witness"] is None


@pytest.mark.parametrize("p", sorted(CONSTRUCTIONS))
def test_construct_max_rank_curve(p):
    a, b, n, rank, bound, skipped = CONSTRUCTIONS[p]
    built = construct_max_rank_curve(p)
    assert (built.a, built.b, built.n) == (a, b, n)
    assert (built.rank, built.bound, built.skipped) == (rank, bound, skipped)
    assert built.sharp == (rank == bound)
    assert built.structure.factors == (p,) * rank  # a p-group, all factors p
    for modulus, a_i, b_i, role in built.pieces:
        assert a % modulus == a_i and b % modulus == b_i
        assert str(modulus if modulus != p * p else p) in role


def test_construct_sharp_only_when_no_small_hasse_primes():
    # q in {2, 3} cannot divide N, so their Hasse-window slots are lost
    assert construct_max_rank_curve(11).sharp
    assert construct_max_rank_curve(13).sharp
    assert not construct_max_rank_curve(5).sharp
    assert not construct_max_rank_curve(7).sharp


def test_construct_pieces_roles():
    built = construct_max_rank_curve(13)
    roles = [role for _, _, _, role in built.pieces]
    assert roles == [
        "order-13 curve over F_7",
        "order-13 curve over F_11",
        "order-13 curve over F_17",
        "order-13 curve over F_19",
        "anomalous split mod 13^2",
        "full 13-torsion over F_157",
    ]
    j = built.as_json()
    assert j["n"] == "659902243" and j["sharp"] is True
    assert len(j["pieces"]) == 6


def test_curve_of_order_p_outside_hasse():
    # 23 points over F_7 violates Hasse, and no search should start
    with pytest.raises(NoCurveOfOrderP):
        _curve_of_order_p(7, 23, budget=10**9)
    a, b = _curve_of_order_p(7, 5, budget=10**9)
    assert count_fp(a, b, 7) == 5
    for aa in range(a + 1):
        for bb in range(7 if aa < a else b):
            if (4 * aa**3 + 27 * bb**2) % 7 != 0:
                assert count_fp(aa, bb, 7) != 5
