#include "treeshift/classify.hpp"

#include "../support/builders.hpp"

#include <doctest.h>

#include <random>

using namespace treeshift;
using namespace treeshift::testing;

TEST_CASE("h values") {
    ShiftModel iso = iso_ray();
    for (std::uint64_t k = 1; k <= 6; ++k)
        CHECK(h_value(iso, VertexId("r"), k) == 1);

    // two-arm star at the root: alpha/(alpha+... ) evaluated directly:
    // (2/5)/2 + 1/1 = 6/5 > 1, so the star is not hyponormal
    ShiftModel star = che_nonjoint_model(Rational(2, 5));
    CHECK(h_value(star, VertexId("0"), 1) == Rational(6, 5));
    CHECK(!check_hyponormal(star).ok());

    // on the linear-orbit ray the h values are the log-concavity defects,
    // h(t_i, 1) = (i+2)^2 / ((i+1)(i+3)) > 1; i = 1 gives 9/8
    ShiftModel ray = delta1_ray();
    CHECK(h_value(ray, TailSite{"r", 1}, 1) == Rational(9, 8));
    for (std::uint64_t i = 1; i <= 8; ++i)
        CHECK(h_value(ray, TailSite{"r", i}, 1) > 1);

    // leafy or improper models are rejected outright
    DirectedTree path = DirectedTree::from_parent_map({"r", "a"}, {{"r", "r"}, {"a", "r"}});
    ShiftModel leafy(path, {{"a", 1}}, {});
    CHECK_THROWS_AS(h_value(leafy, VertexId("r"), 1), StructuralError);
}

TEST_CASE("ratio monotonicity makes single CA rays at-least-expansive in h") {
    // quotients of consecutive terms of a positive completely alternating
    // sequence decrease, hence h >= 1 along any generated ray, with equality
    // exactly in the isometric case
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        AtomicMeasure tau = random_measure(rng, 3);
        ShiftModel ray = ray_model(measure_tail(tau));
        for (std::uint64_t i = 1; i <= 5; ++i)
            for (std::uint64_t k = 1; k <= 4; ++k) {
                Rational h = h_value(ray, TailSite{"r", i}, k);
                CHECK(h >= 1);
                if (tau.is_zero())
                    CHECK(h == 1);
            }
    }
}

TEST_CASE("power hyponormality") {
    CHECK(check_power_hyponormal(iso_ray(), 8, 64).status == Status::holds);

    ShiftModel geo = ray_model(geometric_tail(Rational(4)));
    CHECK(check_power_hyponormal(geo, 8, 64).status == Status::holds);

    // a leaf fails outright, independent of the h values
    DirectedTree path = DirectedTree::from_parent_map({"r", "a"}, {{"r", "r"}, {"a", "r"}});
    ShiftModel leafy(path, {{"a", 1}}, {});
    ClassVerdict leaf_verdict = check_power_hyponormal(leafy, 4, 8);
    CHECK(leaf_verdict.status == Status::fails);
    CHECK(leaf_verdict.witness->note == "leaf");

    // any measured tail fails at its anchor at order 1: h = a_1^2 / a_2
    ShiftModel ray = delta1_ray();
    ClassVerdict v = check_power_hyponormal(ray, 8, 64);
    CHECK(v.status == Status::fails);
    CHECK(v.witness->vertex == "r");
    CHECK(v.witness->n == 1);
    CHECK(v.witness->value == Rational(4, 3)); // a_1^2/a_2 = 4/3
    // the witness re-evaluates
    CHECK(h_value(ray, VertexId("r"), 1) == Rational(4, 3));

    // scalar multiples of isometries pass for every order
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        ShiftModel m = random_scaled_isometry(rng, 10);
        CHECK(check_power_hyponormal(m, 6, 32).status == Status::holds);
    }
}

TEST_CASE("complete hyperexpansivity of the two-arm star") {
    ShiftModel star = che_nonjoint_model(Rational(2, 5));
    CheResult che = check_che(star, 16);
    REQUIRE(che.verdict.ok());
    CHECK(che.measures.at("0") == AtomicMeasure::dirac(1, Rational(2, 5)));
    CHECK(che.measures.at("1,1") == AtomicMeasure::dirac(1, 1));
    CHECK(che.measures.at("2,1").is_zero());

    CheResult iso = check_che(iso_ray(), 8);
    CHECK(iso.verdict.ok());
    CHECK(iso.measures.at("r").is_zero());
}

TEST_CASE("complete hyperexpansivity failures carry direct witnesses") {
    // a sub-isometric edge breaks monotonicity at its parent
    DirectedTree t = DirectedTree::from_parent_map({"r", "a"}, {{"r", "r"}, {"a", "r"}});
    ShiftModel weak(t, {{"a", Rational(9, 10)}}, {{"a", trivial_tail()}});
    CheResult bad = check_che(weak, 8);
    CHECK(bad.verdict.status == Status::fails);
    CHECK(bad.verdict.witness->vertex == "r");
    CHECK(bad.verdict.witness->m == 0);
    CHECK(bad.verdict.witness->n == 1);
    CHECK(bad.verdict.witness->value == Rational(1, 10));

    // geometric rays are never completely hyperexpansive
    CheResult geo_low = check_che(ray_model(geometric_tail(Rational(1, 4))), 8);
    CHECK(geo_low.verdict.status == Status::fails);
    CHECK(geo_low.verdict.witness->n == 1);
    CheResult geo_high = check_che(ray_model(geometric_tail(Rational(4))), 8);
    CHECK(geo_high.verdict.status == Status::fails);
    CHECK(geo_high.verdict.witness->n == 2);

    // leaves fail immediately
    ShiftModel leafy(t, {{"a", 1}}, {});
    CHECK(check_che(leafy, 8).verdict.status == Status::fails);
}

TEST_CASE("che measures regenerate the norm table exactly") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        ShiftModel m = random_che_model(rng, trial % 3);
        CheResult che = check_che(m, 12);
        REQUIRE(che.verdict.ok());
        NormTable table(m, 12);
        for (const auto& v : m.tree().vertices()) {
            CASeq seq{1, che.measures.at(v)};
            for (std::uint64_t n = 0; n <= 12; ++n)
                CHECK(seq_value(seq, n) == table.at(v, n));
        }
    }
}

TEST_CASE("simple classes") {
    SimpleClassReport iso = check_simple_classes(iso_ray(), 16);
    CHECK(iso.sup_sq == 1);
    CHECK(iso.inf_sq == 1);
    CHECK(iso.verdicts.at(SimpleClass::bounded).ok());
    CHECK(iso.verdicts.at(SimpleClass::contraction).ok());
    CHECK(iso.verdicts.at(SimpleClass::expansive).ok());
    CHECK(iso.verdicts.at(SimpleClass::bounded_below).ok());
    CHECK(iso.verdicts.at(SimpleClass::isometry).ok());
    CHECK(iso.verdicts.at(SimpleClass::quasinormal).ok());

    // all squared weights 2: expansive, quasinormal, not contractive
    ShiftModel doubled = ray_model(geometric_tail(2));
    SimpleClassReport rep = check_simple_classes(doubled, 16);
    CHECK(rep.sup_sq == 2);
    CHECK(rep.verdicts.at(SimpleClass::expansive).ok());
    CHECK(rep.verdicts.at(SimpleClass::quasinormal).ok());
    CHECK(!rep.verdicts.at(SimpleClass::isometry).ok());
    CHECK(!rep.verdicts.at(SimpleClass::contraction).ok());

    // the 1/n member: every vertex has norm 1/n^2 > 0
    ShiftModel nth = ray_model(geometric_tail(Rational(1, 9)));
    SimpleClassReport low = check_simple_classes(nth, 16);
    CHECK(low.inf_sq == Rational(1, 9));
    CHECK(low.verdicts.at(SimpleClass::bounded_below).ok());
    CHECK(!low.verdicts.at(SimpleClass::expansive).ok());

    // the two-arm star: norms decay to 1 along branch 1, never attained
    SimpleClassReport star = check_simple_classes(che_nonjoint_model(Rational(2, 5)), 16);
    CHECK(star.sup_sq == 2);
    CHECK(star.inf_sq == 1);
    CHECK(!star.verdicts.at(SimpleClass::quasinormal).ok());
    CHECK(star.verdicts.at(SimpleClass::expansive).ok());
}

TEST_CASE("glue model: hyperexpansive, not proper, not isometric") {
    ShiftModel glue = glue_demo();
    CHECK(!glue.is_proper());
    CHECK(check_che(glue, 8).verdict.ok());
    SimpleClassReport rep = check_simple_classes(glue, 8);
    CHECK(!rep.verdicts.at(SimpleClass::isometry).ok());
    CHECK(rep.verdicts.at(SimpleClass::isometry).witness->vertex == "b");
}
