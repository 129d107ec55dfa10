#include "treeshift/ca_seq.hpp"

#include "../support/builders.hpp"

#include <doctest.h>

#include <random>

using namespace treeshift;

namespace {

// independent binomial-sum evaluation via GMP binomials
Rational alt_sum_oracle(const std::vector<Rational>& a, std::uint64_t m, std::uint64_t n) {
    Rational sum = 0;
    for (std::uint64_t j = 0; j <= n; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, j);
        Rational term = Rational(binom) * a[m + j];
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

CASeq random_ca(std::mt19937& rng, bool allow_zero_atom = true) {
    CASeq seq;
    seq.a0 = testing::random_rational(rng, 1, 6, 3);
    seq.measure = testing::random_measure(rng, 4, allow_zero_atom);
    return seq;
}

} // namespace

TEST_CASE("sequence values") {
    CASeq linear{1, AtomicMeasure::dirac(1, 1)};
    CHECK(seq_value(linear, 0) == 1);
    CHECK(seq_value(linear, 5) == 6);

    CASeq constant{1, AtomicMeasure{}};
    CHECK(seq_value(constant, 17) == 1);

    CASeq alpha_line{1, AtomicMeasure::dirac(1, Rational(2, 5))};
    CHECK(seq_value(alpha_line, 3) == Rational(11, 5));

    // zero atom contributes only from n = 1 on
    CASeq with_zero{2, AtomicMeasure::dirac(0, Rational(1, 2))};
    CHECK(seq_value(with_zero, 0) == 2);
    CHECK(seq_value(with_zero, 1) == Rational(5, 2));
    CHECK(seq_value(with_zero, 9) == Rational(5, 2));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        CASeq seq = random_ca(rng);
        auto prefix = seq_prefix(seq, 12);
        for (std::uint64_t n = 0; n < 12; ++n)
            CHECK(prefix[n] == seq_value(seq, n));
    }
}

TEST_CASE("difference tables") {
    std::vector<Rational> affine{1, 2, 3, 4};
    DiffTable t1(affine, 2);
    CHECK(t1.at(0, 2) == 0);
    CHECK(t1.at(0, 1) == -1);

    std::vector<Rational> ones{1, 1, 1};
    DiffTable t2(ones, 2);
    CHECK(t2.at(0, 1) == 0);
    CHECK(t2.at(0, 2) == 0);

    // a_n = 2 - 2^-n
    std::vector<Rational> geo{1, Rational(3, 2), Rational(7, 4), Rational(15, 8)};
    CHECK(DiffTable(geo, 2).at(0, 2) == Rational(-1, 4));

    CHECK_THROWS_AS(DiffTable(affine, 4), StructuralError);

    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        CASeq seq = random_ca(rng);
        auto prefix = seq_prefix(seq, 10);
        DiffTable table(prefix, 9);
        for (std::uint64_t n = 0; n <= 9; ++n)
            for (std::uint64_t m = 0; m + n <= 9; ++m) {
                CHECK(table.at(m, n) == alt_sum_oracle(prefix, m, n));
                CHECK(table.at(m, n) == alternating_sum(prefix, m, n));
            }
    }
}

TEST_CASE("complete alternation of prefixes") {
    // affine sequences are completely alternating
    std::vector<Rational> affine{1, 2, 3, 4, 5, 6, 7};
    CHECK(is_ca_prefix(affine, 6).ok());

    std::vector<Rational> ones{1, 1, 1, 1};
    ClassVerdict constant = is_ca_prefix(ones, 3);
    CHECK(constant.ok());

    // convex growth breaks at the second difference
    std::vector<Rational> squares{1, 2, 5, 10};
    ClassVerdict fail = is_ca_prefix(squares, 3);
    CHECK(fail.status == Status::fails);
    CHECK(fail.witness->m == 0);
    CHECK(fail.witness->n == 2);
    CHECK(fail.witness->value == 2);

    std::vector<Rational> powers{1, 2, 4, 8};
    ClassVerdict fail2 = is_ca_prefix(powers, 3);
    CHECK(fail2.status == Status::fails);
    CHECK(fail2.witness->n == 2);
    CHECK(fail2.witness->value == 1);
}

TEST_CASE("generated sequences are completely alternating") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        CASeq seq = random_ca(rng);
        auto prefix = seq_prefix(seq, 12);
        CHECK(is_ca_prefix(prefix, 11).ok());
        // first differences recover the moments exactly
        DiffTable table(prefix, 11);
        for (std::uint64_t m = 0; m + 1 <= 11; ++m)
            CHECK(-table.at(m, 1) ==
                  measure_moment(seq.measure, static_cast<std::int64_t>(m)).value());
        // dropping the head keeps the property
        std::vector<Rational> tail(prefix.begin() + 1, prefix.end());
        CHECK(is_ca_prefix(tail, 10).ok());
        // A(m, n) is monotone in m and ratios are monotone down
        for (std::uint64_t n = 0; n <= 5; ++n)
            for (std::uint64_t m = 0; m + n + 1 <= 11; ++m)
                CHECK(table.at(m, n) <= table.at(m + 1, n));
        for (std::uint64_t n = 0; n + 2 < 12; ++n)
            CHECK(prefix[n + 1] * prefix[n + 1] >= prefix[n] * prefix[n + 2]);
    }
}

TEST_CASE("convex cone of prefixes") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto p1 = seq_prefix(random_ca(rng), 10);
        auto p2 = seq_prefix(random_ca(rng), 10);
        Rational c1 = testing::random_rational(rng, 0, 4, 3);
        Rational c2 = testing::random_rational(rng, 0, 4, 3);
        std::vector<Rational> combo(10);
        for (std::size_t i = 0; i < 10; ++i)
            combo[i] = c1 * p1[i] + c2 * p2[i];
        CHECK(is_ca_prefix(combo, 9).ok());
    }
}

TEST_CASE("backward extension of sequences") {
    // enough slack: a_0 = 3 with the unit linear measure, two steps back
    CASeq seq{3, AtomicMeasure::dirac(1, 1)};
    auto ext = ca_extend(seq, 2);
    REQUIRE(ext.has_value());
    CHECK(ext->prefix == std::vector<Rational>{1, 2});
    CHECK(ext->extended.a0 == 1);
    CHECK(ext->extended.measure == AtomicMeasure::dirac(1, 1)); // zero remainder dropped
    for (std::uint64_t n = 0; n <= 12; ++n)
        CHECK(seq_value(ext->extended, n + 2) == seq_value(seq, n));

    // the linear sequence starting at 1 has no room at all
    CHECK(!ca_extend(CASeq{1, AtomicMeasure::dirac(1, 1)}, 1).has_value());

    // isometric sequence extends trivially for any k
    auto iso = ca_extend(CASeq{1, AtomicMeasure{}}, 5);
    REQUIRE(iso.has_value());
    CHECK(iso->extended.measure.is_zero());
    for (const auto& v : iso->prefix)
        CHECK(v == 1);

    // an atom at zero blocks every extension
    CHECK(!ca_extend(CASeq{10, AtomicMeasure::dirac(0, Rational(1, 9))}, 1).has_value());

    // strict-remainder case keeps a zero atom
    CASeq slack{4, AtomicMeasure::dirac(Rational(1, 2), Rational(1, 4))};
    // obstruction for k=1: (1/4) * 2 = 1/2 <= 3
    auto e2 = ca_extend(slack, 1);
    REQUIRE(e2.has_value());
    CHECK(e2->extended.measure.mass_at(0) == 4 - 1 - Rational(1, 2));
}

TEST_CASE("extension round trip on random sequences") {
    std::mt19937 rng(29);
    int successes = 0, refusals = 0;
    for (int trial = 0; trial < 120; ++trial) {
        CASeq seq = random_ca(rng);
        for (std::uint64_t k = 1; k <= 4; ++k) {
            auto ext = ca_extend(seq, k);
            Moment obstruction = inverse_power_sum(seq.measure, k);
            bool expected =
                !seq.measure.has_atom_at_zero() && obstruction <= Rational(seq.a0 - 1);
            CHECK(ext.has_value() == expected);
            if (!ext) {
                ++refusals;
                continue;
            }
            ++successes;
            CHECK(ext->prefix[0] == 1);
            for (std::uint64_t n = 0; n <= 10; ++n)
                CHECK(seq_value(ext->extended, n + k) == seq_value(seq, n));
            CHECK(is_ca_prefix(seq_prefix(ext->extended, 12), 11).ok());
        }
    }
    CHECK(successes > 0);
    CHECK(refusals > 0);
}
