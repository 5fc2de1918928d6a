"""Ring construction, validation, element arithmetic, special elements."""

from __future__ import annotations

import pytest

from ringlab.errors import (
    BadModulus,
    ForeignElement,
    NonMonic,
    NotARing,
    NotMaximal,
    ParseError,
)
from ringlab.rings import (
    build,
    find_isomorphism,
    special_elements,
    total_quotient_ring,
)
from ringlab.specs import LocalizeAt, PolyQuot, Product, Quotient, TableSpec, Zmod


def test_zmod_basics():
    r = build(Zmod(12))
    assert r.order == 12
    assert r.zero == 0 and r.one == 1
    for k in range(12):
        assert r.add(k, 0).index == k  # identity
    assert r.mul(4, 9).index == 0  # 36 = 0 mod 12
    assert r.pow(2, 2).index == 4
    assert r.sub(3, 7).index == 8
    assert r.neg(5).index == 7


def test_polyquot_dual_numbers():
    r = build(PolyQuot(2, (0, 0, 1)))  # GF(2)[x]/(x^2)
    assert r.order == 4
    x = 2  # index of x: coefficients little-endian, x = (0, 1)
    one_plus_x = 3
    assert r.mul(x, x).index == 0
    assert r.mul(x, one_plus_x).index == x  # x + x^2 = x


def test_polyquot_field():
    # x^2 + x + 1 is irreducible over GF(2): the quotient is a field
    r = build(PolyQuot(2, (1, 1, 1)))
    assert r.order == 4
    units = special_elements(r, "units")
    assert units == frozenset({1, 2, 3})


def test_product_order_and_identity():
    r = build(Product((Zmod(4), Zmod(3))))
    assert r.order == 12
    assert r.mul(r.one, 7).index == 7


def test_crt_isomorphism():
    # Z/(mn) and Z/m x Z/n are isomorphic for coprime m, n <= 8
    import math

    for m in range(2, 9):
        for n in range(m + 1, 9):
            if math.gcd(m, n) != 1:
                continue
            whole = build(Zmod(m * n))
            split = build(Product((Zmod(m), Zmod(n))))
            phi = find_isomorphism(whole, split)
            assert phi is not None, (m, n)
            # spot-check the map is a ring homomorphism
            for a in range(whole.order):
                for b in range(whole.order):
                    assert phi[whole.add_rows[a][b]] == split.add_rows[phi[a]][phi[b]]
                    assert phi[whole.mul_rows[a][b]] == split.mul_rows[phi[a]][phi[b]]


def test_non_isomorphic_rings_rejected():
    assert find_isomorphism(build(Zmod(4)), build(Product((Zmod(2), Zmod(2))))) is None


def test_special_elements_against_raw_modular_scan():
    r = build(Zmod(12))
    # independent oracle: raw % arithmetic
    idem = {a for a in range(12) if (a * a) % 12 == a}
    units = {a for a in range(12) if any(a * b % 12 == 1 for b in range(12))}
    nilp = {a for a in range(12) if any(pow(a, k, 12) == 0 for k in range(1, 13))}
    zdiv = {
        a
        for a in range(1, 12)
        if any(a * b % 12 == 0 for b in range(1, 12))
    }
    assert special_elements(r, "idempotents") == frozenset(idem) == {0, 1, 4, 9}
    assert special_elements(r, "units") == frozenset(units) == {1, 5, 7, 11}
    assert special_elements(r, "nilpotents") == frozenset(nilp) == {0, 6}
    assert special_elements(r, "zero_divisors") == frozenset(zdiv)


def test_special_elements_polyquot():
    r = build(PolyQuot(2, (0, 0, 1)))
    assert special_elements(r, "nilpotents") == {0, 2}  # 0 and x


def test_power_cycle_periodicity():
    for spec in (Zmod(12), Zmod(8), PolyQuot(3, (0, 0, 1))):
        r = build(spec)
        for a in range(r.order):
            seq = r.power_sequence(a)
            nxt = r.mul_rows[seq[-1]][a]  # first repeated power
            start = seq.index(nxt)  # 0-based: a^(start+1) == a^(len+1)
            period = len(seq) - start
            for k in range(start + 1, len(seq) + 1):
                assert r.pow_index(a, k + period) == r.pow_index(a, k)


def test_foreign_element_rejected():
    r1 = build(Zmod(6))
    r2 = build(Zmod(6))
    with pytest.raises(ForeignElement):
        r1.add(r1.element(2), r2.element(3))


def test_element_operators():
    r = build(Zmod(10))
    a, b = r.element(7), r.element(5)
    assert (a + b).index == 2
    assert (a - b).index == 2
    assert (a * b).index == 5
    assert (-a).index == 3
    assert (a**2).index == 9


def test_bad_specs_rejected():
    with pytest.raises(BadModulus):
        build(Zmod(1))
    with pytest.raises(BadModulus):
        build(PolyQuot(4, (0, 1)))
    with pytest.raises(NonMonic):
        build(PolyQuot(2, (1, 2)))  # 2x .. degree collapses mod 2
    with pytest.raises(NonMonic):
        build(PolyQuot(3, (1,)))  # constant modulus


def test_quotient_by_unit_ideal_is_zero_ring():
    with pytest.raises(NotARing):
        build(Quotient(Zmod(4), (1,)))


def test_quotient_ring_structure():
    r = build(Quotient(Zmod(12), (4,)))  # Z/12 over (4) = {0,4,8}
    assert r.order == 4
    assert find_isomorphism(r, build(Zmod(4))) is not None


def test_localize_at_maximal():
    loc = build(LocalizeAt(Zmod(12), (2,)))
    assert loc.order == 4
    assert find_isomorphism(loc, build(Zmod(4))) is not None
    loc3 = build(LocalizeAt(Zmod(12), (3,)))
    assert find_isomorphism(loc3, build(Zmod(3))) is not None


def test_localize_rejects_non_maximal():
    with pytest.raises(NotMaximal):
        build(LocalizeAt(Zmod(12), (4,)))
    with pytest.raises(NotMaximal):
        build(LocalizeAt(Zmod(12), (6,)))


def test_localization_is_local():
    for n in (12, 16, 18, 24):
        r = build(Zmod(n))
        for p in (2, 3, 5):
            if n % p:
                continue
            loc = build(LocalizeAt(Zmod(n), (p,)))
            assert loc.local_maximal_mask() is not None


def test_table_format_roundtrip(tmp_path):
    src = build(Zmod(6))
    path = tmp_path / "z6.tbl"
    lines = ["6"]
    lines += [" ".join(map(str, row)) for row in src.add_rows]
    lines += [" ".join(map(str, row)) for row in src.mul_rows]
    path.write_text("\n".join(lines) + "\n")
    r = build(TableSpec(str(path)))
    assert r.order == 6
    assert find_isomorphism(r, src) is not None


def test_table_format_rejects_broken_axioms(tmp_path):
    src = build(Zmod(4))
    rows = [list(row) for row in src.add_rows]
    rows[2][3] = 0  # break commutativity/associativity
    path = tmp_path / "bad.tbl"
    lines = ["4"]
    lines += [" ".join(map(str, row)) for row in rows]
    lines += [" ".join(map(str, row)) for row in src.mul_rows]
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(NotARing):
        build(TableSpec(str(path)))


def test_table_format_rejects_malformed_file(tmp_path):
    path = tmp_path / "short.tbl"
    path.write_text("3\n0 1 2\n")
    with pytest.raises(ParseError):
        build(TableSpec(str(path)))


def test_total_quotient_ring_is_identity():
    for spec in (Zmod(12), Zmod(6), PolyQuot(2, (0, 0, 1))):
        r = build(spec)
        assert total_quotient_ring(r) is r


def test_ring_axiom_validation_catches_bad_mul():
    r = build(Zmod(4))
    mul = r.mul_table.copy()
    mul[2, 3] = 1
    mul[3, 2] = 1
    from ringlab.rings import FiniteRing

    with pytest.raises(NotARing):
        FiniteRing(r.add_table, mul, one=1, spec=Zmod(4))
