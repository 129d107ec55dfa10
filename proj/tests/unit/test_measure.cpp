#include "treeshift/measure.hpp"

#include "../support/builders.hpp"

#include <doctest.h>

#include <random>

using namespace treeshift;

TEST_CASE("atom normalization") {
    AtomicMeasure m = AtomicMeasure::from_atoms(
        {{Rational(1, 2), 1}, {Rational(1, 2), 2}, {Rational(1, 4), 0}});
    CHECK(m.atoms().size() == 1);
    CHECK(m.mass_at(Rational(1, 2)) == 3);
    CHECK(m.total_mass() == 3);
    CHECK_THROWS_AS(AtomicMeasure::from_atoms({{Rational(3, 2), 1}}), StructuralError);
    CHECK_THROWS_AS(AtomicMeasure::from_atoms({{Rational(1, 2), -1}}), StructuralError);
}

TEST_CASE("moments") {
    CHECK(measure_moment(AtomicMeasure::dirac(1, Rational(2, 5)), -3).value() == Rational(2, 5));
    CHECK(measure_moment(AtomicMeasure::dirac(Rational(1, 2), 1), -2).value() == 4);
    CHECK(measure_moment(AtomicMeasure::dirac(0, 1), -1).is_infinite());
    // the 0^0 = 1 convention puts the zero atom into the zeroth moment
    CHECK(measure_moment(AtomicMeasure::dirac(0, Rational(3)), 0).value() == 3);
    CHECK(measure_moment(AtomicMeasure::dirac(0, Rational(3)), 2).value() == 0);
    CHECK(measure_moment(AtomicMeasure{}, -5).value() == 0);

    CHECK(inverse_power_sum(AtomicMeasure::dirac(1, Rational(2, 5)), 3).value() ==
          Rational(6, 5));
    CHECK(inverse_power_sum(AtomicMeasure::dirac(0, 1), 2).is_infinite());

    // infinity compares above every rational
    CHECK(!(Moment::infinity() <= Rational(1000000)));
    CHECK(Moment(Rational(5)) <= Rational(5));
}

TEST_CASE("mixing") {
    AtomicMeasure a = AtomicMeasure::dirac(Rational(1, 2), 1);
    AtomicMeasure b = AtomicMeasure::dirac(Rational(1, 2), Rational(1, 3));
    std::vector<std::pair<Rational, AtomicMeasure>> zero{{0, a}, {0, b}};
    CHECK(mix_measures(zero).is_zero());
    std::vector<std::pair<Rational, AtomicMeasure>> one{{1, a}};
    CHECK(mix_measures(one) == a);

    // same-position atoms merge; verified through moments
    std::vector<std::pair<Rational, AtomicMeasure>> both{{2, a}, {3, b}};
    AtomicMeasure mixed = mix_measures(both);
    CHECK(mixed.atoms().size() == 1);
    for (int j = -2; j <= 4; ++j)
        CHECK(measure_moment(mixed, j).value() ==
              2 * measure_moment(a, j).value() + 3 * measure_moment(b, j).value());

    std::vector<std::pair<Rational, AtomicMeasure>> bad{{Rational(-1), a}};
    CHECK_THROWS_AS(mix_measures(bad), StructuralError);
}

TEST_CASE("mix linearity on random data") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<Rational, AtomicMeasure>> parts;
        std::uniform_int_distribution<int> count(0, 3);
        int n = count(rng);
        for (int i = 0; i < n; ++i)
            parts.emplace_back(testing::random_rational(rng, 0, 5, 4),
                               testing::random_measure(rng, 3, true));
        AtomicMeasure mixed = mix_measures(parts);
        for (int j = 0; j <= 6; ++j) {
            Rational expected = 0;
            for (const auto& [w, m] : parts)
                expected += w * measure_moment(m, j).value();
            CHECK(measure_moment(mixed, j).value() == expected);
        }
    }
}

TEST_CASE("inverse-t transform") {
    CHECK(*inv_t_transform(AtomicMeasure::dirac(1, 1)) == AtomicMeasure::dirac(1, 1));
    CHECK(*inv_t_transform(AtomicMeasure::dirac(Rational(1, 2), 1)) ==
          AtomicMeasure::dirac(Rational(1, 2), 2));
    CHECK(!inv_t_transform(AtomicMeasure::dirac(0, 1)).has_value());
}

TEST_CASE("moment-determinacy at atomic scale") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        AtomicMeasure a = testing::random_measure(rng, 3, true);
        AtomicMeasure b = testing::random_measure(rng, 3, true);
        std::size_t bound = a.atoms().size() + b.atoms().size();
        bool all_equal = true;
        for (std::size_t j = 0; j <= bound; ++j)
            all_equal =
                all_equal && measure_moment(a, static_cast<std::int64_t>(j)).value() ==
                                 measure_moment(b, static_cast<std::int64_t>(j)).value();
        CHECK(all_equal == (a == b));
    }
}
