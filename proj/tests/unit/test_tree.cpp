#include "treeshift/tree.hpp"

#include "../support/builders.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace treeshift;

namespace {

DirectedTree path3() {
    // w <- a <- b
    return DirectedTree::from_parent_map({"w", "a", "b"},
                                         {{"w", "w"}, {"a", "w"}, {"b", "a"}});
}

DirectedTree star22() {
    // root 0 with two 2-vertex branches, the finite core of the 2-arm star
    return DirectedTree::from_parent_map(
        {"0", "1,1", "1,2", "2,1", "2,2"},
        {{"0", "0"}, {"1,1", "0"}, {"1,2", "1,1"}, {"2,1", "0"}, {"2,2", "2,1"}});
}

std::vector<VertexId> sorted(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("construction rejects bad parent maps") {
    CHECK_THROWS_AS(DirectedTree::from_parent_map({}, {}), StructuralError);
    // proper 2-cycle
    CHECK_THROWS_AS(DirectedTree::from_parent_map({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                    StructuralError);
    // two roots
    CHECK_THROWS_AS(DirectedTree::from_parent_map({"a", "b"}, {{"a", "a"}, {"b", "b"}}),
                    StructuralError);
    // unknown parent
    CHECK_THROWS_AS(DirectedTree::from_parent_map({"a"}, {{"a", "z"}}), StructuralError);
    CHECK_THROWS_AS(DirectedTree::from_parent_map({"a", "a"}, {{"a", "a"}}), StructuralError);
}

TEST_CASE("children") {
    DirectedTree t = path3();
    CHECK(t.children("w") == std::vector<VertexId>{"a"});
    CHECK(t.children("b").empty());
    CHECK(sorted(star22().children("0")) == std::vector<VertexId>{"1,1", "2,1"});
    CHECK_THROWS_AS(t.children("nope"), StructuralError);
}

TEST_CASE("children_k") {
    DirectedTree t = star22();
    CHECK(t.children_k("0", 0) == std::vector<VertexId>{"0"});
    CHECK(sorted(t.children_k("0", 2)) == std::vector<VertexId>{"1,2", "2,2"});
    CHECK(t.children_k("1,2", 1).empty());

    // full binary tree of depth 3 has 8 third children at the root
    std::vector<VertexId> vs{"r"};
    std::map<VertexId, VertexId> parent{{"r", "r"}};
    std::vector<VertexId> frontier{"r"};
    for (int level = 0; level < 3; ++level) {
        std::vector<VertexId> next;
        for (const auto& p : frontier)
            for (int i = 0; i < 2; ++i) {
                VertexId c = p + "." + std::to_string(i);
                vs.push_back(c);
                parent[c] = p;
                next.push_back(c);
            }
        frontier = next;
    }
    DirectedTree binary = DirectedTree::from_parent_map(vs, parent);
    CHECK(binary.children_k("r", 3).size() == 8);
    CHECK(sorted(binary.children_k("r", 3)) ==
          sorted(testing::children_k_bruteforce(binary, "r", 3)));
}

TEST_CASE("descendants") {
    DirectedTree t = star22();
    CHECK(sorted(t.descendants("0")) == sorted(t.vertices()));
    CHECK(t.descendants("1,2") == std::vector<VertexId>{"1,2"});

    // nested subsets on random trees
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        DirectedTree r = testing::random_tree(rng, 40);
        for (const auto& v : r.vertices()) {
            auto des_v = sorted(r.descendants(v));
            for (const auto& w : des_v) {
                auto des_w = sorted(r.descendants(w));
                CHECK(std::includes(des_v.begin(), des_v.end(), des_w.begin(), des_w.end()));
            }
        }
    }
}

TEST_CASE("k-children disjointness and recursion on random trees") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        DirectedTree t = testing::random_tree(rng, 200);
        std::uint64_t kmax = std::min<std::uint64_t>(t.height() + 1, 6);
        for (std::uint64_t k = 0; k <= kmax; ++k) {
            // distinct vertices have disjoint k-th children
            std::set<VertexId> seen;
            for (const auto& v : t.vertices())
                for (const auto& u : t.children_k(v, k))
                    CHECK(seen.insert(u).second);
            // distinct orders from one vertex are disjoint, and both
            // decompositions of the recursion agree
            for (const auto& v : t.vertices()) {
                auto direct = sorted(t.children_k(v, k));
                CHECK(direct == sorted(testing::children_k_bruteforce(t, v, k)));
                if (k == 0)
                    continue;
                auto later = sorted(t.children_k(v, k - 1));
                std::vector<VertexId> via_first, via_last;
                for (const auto& u : t.children(v))
                    for (const auto& w : t.children_k(u, k - 1))
                        via_first.push_back(w);
                for (const auto& u : t.children_k(v, k - 1))
                    for (const auto& w : t.children(u))
                        via_last.push_back(w);
                CHECK(direct == sorted(via_first));
                CHECK(direct == sorted(via_last));
                if (k != 1) {
                    std::vector<VertexId> overlap;
                    std::set_intersection(direct.begin(), direct.end(), later.begin(),
                                          later.end(), std::back_inserter(overlap));
                    CHECK(overlap.empty());
                }
            }
        }
    }
}

TEST_CASE("leaflessness") {
    DirectedTree t = path3();
    CHECK(is_leafless(t, {"b"}));
    CHECK(!is_leafless(t, {}));
    CHECK(is_leafless(star22(), {"1,2", "2,2"}));
    // a childless untailed root is a dead end
    CHECK(!is_leafless(DirectedTree::trivial("r"), {}));
    CHECK(is_leafless(DirectedTree::trivial("r"), {"r"}));
}

TEST_CASE("rooted sum") {
    DirectedTree a = DirectedTree::trivial("x");
    DirectedTree b = DirectedTree::trivial("x"); // deliberately same id
    std::vector<DirectedTree> pair{a, b};
    RootedSum sum = rooted_sum(pair);
    CHECK(sum.tree.size() == 3);
    CHECK(sum.tree.degree(sum.new_root) == 2);
    CHECK(sum.member_embedding[0].at("x") != sum.member_embedding[1].at("x"));

    std::vector<DirectedTree> triple{path3(), star22(), DirectedTree::trivial("z")};
    RootedSum sum3 = rooted_sum(triple);
    CHECK(sum3.tree.degree(sum3.new_root) == 3);
    // each summand is recovered as the subtree at its embedded root
    for (std::size_t j = 0; j < triple.size(); ++j) {
        const auto& embed = sum3.member_embedding[j];
        DirectedTree sub = subtree(sum3.tree, embed.at(triple[j].root()));
        CHECK(sub.size() == triple[j].size());
        for (const auto& v : triple[j].vertices()) {
            if (v == triple[j].root())
                CHECK(sub.root() == embed.at(v));
            else
                CHECK(sub.parent_of(embed.at(v)) == embed.at(triple[j].parent_of(v)));
        }
    }

    CHECK_THROWS_AS(rooted_sum(std::span<const DirectedTree>{}), StructuralError);
}

TEST_CASE("backward tree extension") {
    DirectedTree t = star22();
    BackwardTreeExtension ext = backward_extend_tree(t, 3);
    CHECK(ext.tree.height() == t.height() + 3);
    CHECK(ext.chain.size() == 3);
    CHECK(ext.tree.root() == ext.chain.back());
    // the new chain is a path: one j-th child for every j up to the step count
    for (std::uint64_t k = 1; k <= 4; ++k) {
        BackwardTreeExtension e = backward_extend_tree(t, k);
        for (std::uint64_t j = 1; j <= k; ++j)
            CHECK(e.tree.children_k(e.tree.root(), j).size() == 1);
    }

    // k = 0 is the identity
    CHECK(backward_extend_tree(t, 0).tree == t);

    // the original tree is the subtree at the old root
    CHECK(subtree(ext.tree, t.root()) == t);

    // id collision with the fresh chain names is resolved
    DirectedTree tricky =
        DirectedTree::from_parent_map({"r", "ext:1"}, {{"r", "r"}, {"ext:1", "r"}});
    BackwardTreeExtension e2 = backward_extend_tree(tricky, 1);
    CHECK(e2.tree.size() == 3);
}

TEST_CASE("subtree") {
    DirectedTree t = star22();
    CHECK(subtree(t, "0") == t);
    DirectedTree leaf = subtree(t, "1,2");
    CHECK(leaf.size() == 1);
    CHECK(leaf.root() == "1,2");
    CHECK_THROWS_AS(subtree(t, "zz"), StructuralError);
}
