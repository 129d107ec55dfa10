#pragma once

#include "treeshift/ca_seq.hpp"
#include "treeshift/tree.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <variant>
#include <vector>

namespace treeshift {

/// Infinite ray hanging below a childless core vertex, described finitely.
/// The orbit norms from the anchor are b_k = scale_sq^k * a_k where a is the
/// generated sequence; the squared weight of the i-th ray vertex is
/// b_i / b_{i-1}. With scale_sq == 1 the ray norms are literally the
/// generator values, which is the completely alternating case; scale_sq != 1
/// gives a constant-weight (geometric) ray and then the generator must carry
/// no measure.
struct TailModel {
    CASeq generator;        // generator.a0 == 1
    Rational scale_sq = 1;  // > 0
};

// Ray position i >= 1 below an anchor (i = 0 is the anchor itself, a core
// vertex).
struct TailSite {
    VertexId anchor;
    std::uint64_t index;

    bool operator==(const TailSite&) const = default;
};

// A place the operator acts on: a core vertex or a ray position.
using Site = std::variant<VertexId, TailSite>;

std::string site_to_string(const Site& site);

/// Weighted shift on a rooted directed tree: squared weights on the non-root
/// core vertices plus optional measure-generated ray tails. Squared weights
/// (not weights) are stored throughout; every criterion in sight is a
/// rational function of them.
///
/// Construction is permissive about properness and leaflessness so that the
/// classifiers can report on degenerate inputs; the file loader is stricter.
class ShiftModel {
public:
    // Empty placeholder, for two-phase construction of certificates.
    ShiftModel() = default;

    ShiftModel(DirectedTree tree, std::map<VertexId, Rational> weights_sq,
               std::map<VertexId, TailModel> tails);

    const DirectedTree& tree() const { return tree_; }
    const std::map<VertexId, TailModel>& tails() const { return tails_; }
    const std::map<VertexId, Rational>& weights_sq() const { return weights_sq_; }

    // Squared weight of a core vertex; zero for the root.
    const Rational& weight_sq(const VertexId& v) const;

    bool has_tail(const VertexId& v) const { return tails_.count(v) != 0; }
    const TailModel& tail(const VertexId& anchor) const;

    bool is_proper() const; // zero weights only at the root
    bool is_leafless() const;
    bool is_zero() const; // all weights vanish

    bool has_site(const Site& site) const;
    std::uint64_t site_depth(const Site& site) const;

    // Squared weight of the edge into a site (0 for the root site).
    Rational site_weight_sq(const Site& site) const;

    // ||S^k e_anchor-ray||^2 data: orbit value b_j = scale^j * a_j.
    Rational tail_orbit(const VertexId& anchor, std::uint64_t j) const;

    // Squared weight of ray vertex i >= 1.
    Rational tail_weight_sq(const VertexId& anchor, std::uint64_t i) const;

    // Sites of Chi^[k](v) for a core vertex v: core descendants at relative
    // depth k plus ray positions reached through shallower anchors.
    std::vector<Site> children_k_sites(const VertexId& v, std::uint64_t k) const;

    // Max relative core depth below v (0 for an anchor).
    std::uint64_t core_height_below(const VertexId& v) const;

    bool all_tails_measureless() const;

private:
    DirectedTree tree_;
    std::map<VertexId, Rational> weights_sq_;
    std::map<VertexId, TailModel> tails_;
};

/// Exact table of ||S^k e_v||^2 for all core vertices and k up to a horizon.
class NormTable {
public:
    NormTable(const ShiftModel& model, std::uint64_t horizon);

    const Rational& at(const VertexId& v, std::uint64_t k) const;
    std::uint64_t horizon() const { return horizon_; }

    std::string to_csv() const; // rows "vertex,k,value"

private:
    std::uint64_t horizon_;
    std::map<VertexId, std::vector<Rational>> values_;
};

// Product of the k squared weights along the ancestor path from the site.
// Walking through the root contributes the root's zero weight.
Rational lambda_k_sq(const ShiftModel& model, const Site& site, std::uint64_t k);

// ||S^k e_site||^2, exact.
Rational norm_sq(const ShiftModel& model, const Site& site, std::uint64_t k);

struct OpNormSq {
    Rational value;
    bool exact; // ray suprema collapsed by ratio monotonicity of the generators
};

// sup over all sites of ||S e_site||^2.
OpNormSq op_norm_sq(const ShiftModel& model, std::uint64_t horizon);

// Model on subtree(v), v becoming the (weightless) root.
ShiftModel restrict_to_subtree(const ShiftModel& model, const VertexId& v);

std::string norm_table_csv(const ShiftModel& model, std::uint64_t horizon);

} // namespace treeshift
