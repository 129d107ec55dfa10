#include "treeshift/shift_model.hpp"

#include "../support/builders.hpp"

#include <doctest.h>

#include <random>

using namespace treeshift;
using namespace treeshift::testing;

TEST_CASE("model validation") {
    DirectedTree t = DirectedTree::from_parent_map({"r", "a"}, {{"r", "r"}, {"a", "r"}});
    CHECK_THROWS_AS(ShiftModel(t, {{"r", 1}, {"a", 1}}, {}), StructuralError); // weight on root
    CHECK_THROWS_AS(ShiftModel(t, {}, {}), StructuralError);                  // missing weight
    CHECK_THROWS_AS(ShiftModel(t, {{"a", -1}}, {}), StructuralError);
    // tails only on childless vertices, generators starting at 1
    CHECK_THROWS_AS(ShiftModel(t, {{"a", 1}}, {{"r", trivial_tail()}}), StructuralError);
    CHECK_THROWS_AS(ShiftModel(t, {{"a", 1}}, {{"a", TailModel{CASeq{2, AtomicMeasure{}}, 1}}}),
                    StructuralError);
    // scaled tails must be measureless
    CHECK_THROWS_AS(
        ShiftModel(t, {{"a", 1}},
                   {{"a", TailModel{CASeq{1, AtomicMeasure::dirac(1, 1)}, Rational(1, 4)}}}),
        StructuralError);

    ShiftModel ok(t, {{"a", Rational(1, 2)}}, {{"a", trivial_tail()}});
    CHECK(ok.is_proper());
    CHECK(ok.is_leafless());
    CHECK(ok.weight_sq("r") == 0);
}

TEST_CASE("orbit norms of the two-arm star") {
    ShiftModel m = che_nonjoint_model(Rational(2, 5));
    NormTable table(m, 64);
    for (std::uint64_t n = 0; n <= 64; ++n) {
        CHECK(table.at("0", n) == Rational(2, 5) * Rational(static_cast<unsigned long>(n)) + 1);
        CHECK(table.at("1,1", n) == Rational(static_cast<unsigned long>(n)) + 1);
        CHECK(table.at("2,1", n) == 1);
    }
    // ray positions carry the scaled tails of the generator
    for (std::uint64_t i = 1; i <= 6; ++i)
        for (std::uint64_t n = 0; n <= 6; ++n)
            CHECK(norm_sq(m, TailSite{"1,1", i}, n) ==
                  rat(static_cast<long>(i + n + 1), static_cast<long>(i + 1)));
}

TEST_CASE("isometric and geometric models") {
    ShiftModel iso = iso_ray();
    for (std::uint64_t k = 0; k <= 10; ++k)
        CHECK(norm_sq(iso, VertexId("r"), k) == 1);

    ShiftModel geo = ray_model(geometric_tail(Rational(1, 4)));
    for (std::uint64_t k = 0; k <= 6; ++k)
        CHECK(norm_sq(geo, VertexId("r"), k) == rational_pow(Rational(1, 4), static_cast<long>(k)));
    CHECK(geo.tail_weight_sq("r", 3) == Rational(1, 4));
}

TEST_CASE("ancestor weight products") {
    ShiftModel m = che_nonjoint_model(Rational(2, 5));
    CHECK(lambda_k_sq(m, VertexId("0"), 0) == 1);
    CHECK(lambda_k_sq(m, VertexId("1,1"), 1) == Rational(2, 5));
    // from ray position 4 of branch 1, four steps reach the branch root:
    // the product telescopes to a_4 = 5
    CHECK(lambda_k_sq(m, TailSite{"1,1", 4}, 4) == 5);
    CHECK(lambda_k_sq(m, TailSite{"1,1", 4}, 5) == 2);
    // one step further passes through the root weight zero
    CHECK(lambda_k_sq(m, TailSite{"1,1", 4}, 6) == 0);
    CHECK(lambda_k_sq(m, VertexId("0"), 3) == 0);
}

TEST_CASE("norm recursion against the direct path-sum oracle") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        ShiftModel m = random_scaled_isometry(rng, 12);
        NormTable table(m, 8);
        for (const auto& v : m.tree().vertices()) {
            for (std::uint64_t k = 0; k <= 8; ++k)
                CHECK(table.at(v, k) == norm_sq_bruteforce(m, v, k));
            // child recursion, stated directly
            for (std::uint64_t k = 0; k < 8; ++k) {
                Rational sum = 0;
                for (const auto& u : m.tree().children(v))
                    sum += m.weight_sq(u) * table.at(u, k);
                if (m.has_tail(v))
                    sum += m.tail_weight_sq(v, 1) * norm_sq(m, TailSite{v, 1}, k);
                CHECK(table.at(v, k + 1) == sum);
            }
        }
    }
}

TEST_CASE("operator norm") {
    ShiftModel star = che_nonjoint_model(Rational(2, 5));
    OpNormSq norm = op_norm_sq(star, 64);
    CHECK(norm.value == 2);
    CHECK(norm.exact);

    CHECK(op_norm_sq(iso_ray(), 8).value == 1);

    // root with children of squared weights 1 and 4
    DirectedTree t = DirectedTree::from_parent_map({"r", "a", "b"},
                                                   {{"r", "r"}, {"a", "r"}, {"b", "r"}});
    ShiftModel two(t, {{"a", 1}, {"b", 4}}, {{"a", trivial_tail()}, {"b", trivial_tail()}});
    CHECK(op_norm_sq(two, 8).value == 5);
}

TEST_CASE("restriction to subtrees") {
    ShiftModel star = che_nonjoint_model(Rational(2, 5));
    ShiftModel at_root = restrict_to_subtree(star, "0");
    CHECK(at_root.tree() == star.tree());
    CHECK(at_root.weights_sq() == star.weights_sq());

    ShiftModel branch = restrict_to_subtree(star, "1,1");
    CHECK(branch.tree().size() == 1);
    for (std::uint64_t n = 0; n <= 12; ++n)
        CHECK(norm_sq(branch, VertexId("1,1"), n) == Rational(static_cast<unsigned long>(n)) + 1);

    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        ShiftModel m = random_scaled_isometry(rng, 10);
        for (const auto& v : m.tree().vertices()) {
            ShiftModel sub = restrict_to_subtree(m, v);
            for (const auto& u : sub.tree().vertices())
                for (std::uint64_t k = 0; k <= 5; ++k)
                    CHECK(norm_sq(sub, Site(u), k) == norm_sq(m, Site(u), k));
        }
    }
}

TEST_CASE("norm table export") {
    std::string csv = norm_table_csv(iso_ray(), 2);
    CHECK(csv == "vertex,k,value\nr,0,1\nr,1,1\nr,2,1\n");
}
