import pytest

from rdyck import (
    CountTable,
    PathClass,
    Polynomial,
    RationalParam,
    RationalSeries,
    check_sum_identity,
    class_gf,
    compositions_gf,
    count_enumeration,
    count_recurrence,
    part_size,
    quasi_gf,
    rational_gf,
    rational_gf_unreduced,
    restricted_gf,
    series_coeffs,
)

Q_SAMPLE = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 5)]


class TestPolynomial:
    def test_normalization(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
        assert Polynomial([0, 0]).coeffs == ()
        assert not Polynomial()
        assert Polynomial().degree() == -1

    def test_from_terms(self):
        p = Polynomial.from_terms({0: 1, 3: -2})
        assert p.coeffs == (1, 0, 0, -2)
        assert Polynomial.from_terms({}) == Polynomial()

    def test_arithmetic(self):
        a = Polynomial([1, 1])
        b = Polynomial([1, -1])
        assert (a + b).coeffs == (2,)
        assert (a - b).coeffs == (0, 2)
        assert (a * b).coeffs == (1, 0, -1)
        assert a * Polynomial() == Polynomial()

    def test_getitem_out_of_range(self):
        assert Polynomial([1, 2])[5] == 0

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            Polynomial.from_terms({-1: 1})


class TestSeriesTypes:
    def test_denominator_constant_must_be_one(self):
        with pytest.raises(ValueError):
            RationalSeries(Polynomial([1]), Polynomial([0, 1]))
        with pytest.raises(ValueError):
            RationalSeries(Polynomial([1]), Polynomial([2]))

    def test_count_table_line(self):
        assert CountTable((1, 1, 2), "recurrence").as_line() == "1,1,2"

    def test_count_table_rejects_negative(self):
        with pytest.raises(ValueError):
            CountTable((1, -1), "series")

    def test_count_table_rejects_unknown_source(self):
        with pytest.raises(ValueError):
            CountTable((1,), "guess")


class TestClosedForms:
    def test_reference_case(self):
        gf = rational_gf(RationalParam(1, 1))
        assert gf.numerator == Polynomial([1, 0, -2])
        assert gf.denominator == Polynomial([1, -1, -2, 1])

    @pytest.mark.parametrize("s", [2, 3, 5])
    def test_single_peak_cap_numerator(self, s):
        gf = rational_gf(RationalParam(1, s))
        expected = Polynomial.from_terms({0: 1, 1 + s: -2})
        assert gf.numerator == expected

    def test_three_quarters_denominator(self):
        gf = rational_gf(RationalParam(3, 4))
        assert gf.denominator == Polynomial([1, -1, 0, -1, 0, -1, 0, -2, 1])

    def test_unreduced_form_agrees(self):
        for r, s in Q_SAMPLE:
            q = RationalParam(r, s)
            reduced = rational_gf(q)
            raw = rational_gf_unreduced(q)
            assert reduced.numerator * raw.denominator == raw.numerator * reduced.denominator

    def test_restricted_forms(self):
        gf = restricted_gf(RationalParam(1, 1))
        assert gf.numerator == Polynomial([1, 0, -1])
        assert gf.denominator == Polynomial([1, -1, -1])
        gf = restricted_gf(RationalParam(2, 3))
        assert gf.numerator == Polynomial([1, 0, 0, -1, 0, -1])
        assert gf.denominator == Polynomial([1, -1, 0, -1, 0, -1])
        gf = restricted_gf(RationalParam(3, 4))
        assert gf.denominator == Polynomial([1, -1, 0, -1, 0, -1, 0, -1])

    def test_quasi_forms(self):
        gf = quasi_gf(RationalParam(1, 1))
        assert gf.numerator == Polynomial([1])
        assert gf.denominator == Polynomial([1, -1, -1])
        gf = quasi_gf(RationalParam(1, 2))
        assert gf.numerator == Polynomial([1, 0, 1])
        assert gf.denominator == Polynomial([1, -1, 0, -1])

    def test_quasi_numerator_constant_term(self):
        for r, s in Q_SAMPLE:
            assert quasi_gf(RationalParam(r, s)).numerator[0] == 1

    def test_quasi_shares_restricted_denominator(self):
        for r, s in Q_SAMPLE:
            q = RationalParam(r, s)
            assert quasi_gf(q).denominator == restricted_gf(q).denominator

    def test_compositions_forms(self):
        assert compositions_gf(RationalParam(1, 1)).denominator == Polynomial([1, -1, -1])
        assert compositions_gf(RationalParam(2, 3)).denominator == Polynomial([1, -1, 0, -1, 0, -1])
        assert compositions_gf(RationalParam(3, 4)).denominator == Polynomial(
            [1, -1, 0, -1, 0, -1, 0, -1]
        )


class TestSeriesCoeffs:
    def test_reference_sequence(self):
        table = series_coeffs(rational_gf(RationalParam(1, 1)), 8)
        assert table.values == (1, 1, 1, 2, 3, 6, 10, 19, 33)
        assert table.source == "series"

    def test_geometric(self):
        geometric = RationalSeries(Polynomial([1]), Polynomial([1, -1]))
        assert series_coeffs(geometric, 4).values == (1, 1, 1, 1, 1)

    def test_quasi_reference(self):
        assert series_coeffs(quasi_gf(RationalParam(1, 1)), 5).values == (1, 1, 2, 3, 5, 8)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            series_coeffs(rational_gf(RationalParam(1, 1)), -1)


class TestRecurrence:
    def test_table_counts(self):
        table = count_recurrence(RationalParam(3, 4), PathClass.RATIONAL, 6)
        assert table.values[1:] == (1, 1, 1, 2, 3, 5)

    def test_reference_counts(self):
        table = count_recurrence(RationalParam(1, 1), PathClass.RATIONAL, 8)
        assert table.values == (1, 1, 1, 2, 3, 6, 10, 19, 33)

    def test_quasi_counts(self):
        table = count_recurrence(RationalParam(1, 1), PathClass.QUASI, 5)
        assert table.values == (1, 1, 2, 3, 5, 8)

    def test_arch_term_is_needed(self):
        # without the +1 for 2 <= n <= r+s the semilength-2 count drops to 1,
        # but both UDUD and UUDD are quasi members at r = s = 1
        q = RationalParam(1, 1)
        exponents = [part_size(q, p) for p in range(1, q.r + 1)]
        naive = [1]
        for n in range(1, 6):
            naive.append(naive[n - 1] + sum(naive[n - e] for e in exponents if n - e >= 1))
        assert naive[2] == 1
        assert count_enumeration(q, PathClass.QUASI, 2)[2] == 2
        assert count_recurrence(q, PathClass.QUASI, 2)[2] == 2

    def test_triple_agreement(self):
        for r, s in Q_SAMPLE:
            q = RationalParam(r, s)
            for cls in PathClass:
                enum = count_enumeration(q, cls, 10)
                rec = count_recurrence(q, cls, 10)
                ser = series_coeffs(class_gf(q, cls), 10)
                assert enum.values == rec.values == ser.values
                assert (enum.source, rec.source, ser.source) == (
                    "enumeration",
                    "recurrence",
                    "series",
                )


class TestIdentities:
    @pytest.mark.parametrize("r,s,order", [(1, 1, 20), (3, 4, 40), (2, 3, 40)])
    def test_sum_identity_examples(self, r, s, order):
        assert check_sum_identity(RationalParam(r, s), order)

    def test_sum_identity_sample(self):
        for r, s in Q_SAMPLE:
            assert check_sum_identity(RationalParam(r, s), 40)

    def test_sum_identity_rejects_zero_order(self):
        with pytest.raises(ValueError):
            check_sum_identity(RationalParam(1, 1), 0)

    def test_compositions_shift(self):
        # restricted_gf minus its constant term is x times compositions_gf
        for r, s in Q_SAMPLE:
            q = RationalParam(r, s)
            restricted = series_coeffs(restricted_gf(q), 30).values
            comps = series_coeffs(compositions_gf(q), 29).values
            assert restricted[0] == 1
            assert restricted[1:] == comps
