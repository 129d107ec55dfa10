#include "treeshift/shift_model.hpp"

#include <algorithm>
#include <sstream>

namespace treeshift {

std::string site_to_string(const Site& site) {
    if (std::holds_alternative<VertexId>(site))
        return std::get<VertexId>(site);
    const auto& t = std::get<TailSite>(site);
    return t.anchor + "[" + std::to_string(t.index) + "]";
}

ShiftModel::ShiftModel(DirectedTree tree, std::map<VertexId, Rational> weights_sq,
                       std::map<VertexId, TailModel> tails)
    : tree_(std::move(tree)), weights_sq_(std::move(weights_sq)), tails_(std::move(tails)) {
    for (const auto& [v, w] : weights_sq_) {
        if (!tree_.contains(v))
            throw StructuralError("model: weight on unknown vertex '" + v + "'");
        if (v == tree_.root())
            throw StructuralError("model: the root carries no weight");
        if (w < 0)
            throw StructuralError("model: negative squared weight at '" + v + "'");
    }
    for (const auto& v : tree_.vertices())
        if (v != tree_.root() && !weights_sq_.count(v))
            throw StructuralError("model: missing weight for vertex '" + v + "'");
    for (const auto& [anchor, tail] : tails_) {
        if (!tree_.contains(anchor))
            throw StructuralError("model: tail on unknown vertex '" + anchor + "'");
        if (tree_.degree(anchor) != 0)
            throw StructuralError("model: tail anchor '" + anchor + "' has children");
        if (tail.generator.a0 != 1)
            throw StructuralError("model: tail generator must start at 1");
        if (tail.scale_sq <= 0)
            throw StructuralError("model: tail scale must be positive");
        if (tail.scale_sq != 1 && !tail.generator.measure.is_zero())
            throw StructuralError("model: scaled tails must have a measureless generator");
    }
}

const Rational& ShiftModel::weight_sq(const VertexId& v) const {
    static const Rational zero = 0;
    if (v == tree_.root()) {
        if (!tree_.contains(v))
            throw StructuralError("model: unknown vertex '" + v + "'");
        return zero;
    }
    auto it = weights_sq_.find(v);
    if (it == weights_sq_.end())
        throw StructuralError("model: unknown vertex '" + v + "'");
    return it->second;
}

const TailModel& ShiftModel::tail(const VertexId& anchor) const {
    auto it = tails_.find(anchor);
    if (it == tails_.end())
        throw StructuralError("model: no tail at '" + anchor + "'");
    return it->second;
}

bool ShiftModel::is_proper() const {
    for (const auto& [v, w] : weights_sq_)
        if (w == 0)
            return false;
    return true;
}

bool ShiftModel::is_leafless() const {
    for (const auto& v : tree_.vertices())
        if (tree_.degree(v) == 0 && !tails_.count(v))
            return false;
    return true;
}

bool ShiftModel::is_zero() const {
    if (!tails_.empty())
        return false; // ray weights are always positive
    for (const auto& [v, w] : weights_sq_)
        if (w != 0)
            return false;
    return true;
}

bool ShiftModel::has_site(const Site& site) const {
    if (std::holds_alternative<VertexId>(site))
        return tree_.contains(std::get<VertexId>(site));
    const auto& t = std::get<TailSite>(site);
    return t.index >= 1 && tails_.count(t.anchor) != 0;
}

std::uint64_t ShiftModel::site_depth(const Site& site) const {
    if (std::holds_alternative<VertexId>(site))
        return tree_.depth(std::get<VertexId>(site));
    const auto& t = std::get<TailSite>(site);
    return tree_.depth(t.anchor) + t.index;
}

Rational ShiftModel::site_weight_sq(const Site& site) const {
    if (std::holds_alternative<VertexId>(site))
        return weight_sq(std::get<VertexId>(site));
    const auto& t = std::get<TailSite>(site);
    return tail_weight_sq(t.anchor, t.index);
}

Rational ShiftModel::tail_orbit(const VertexId& anchor, std::uint64_t j) const {
    const TailModel& t = tail(anchor);
    Rational value = seq_value(t.generator, j);
    if (t.scale_sq != 1)
        value *= rational_pow(t.scale_sq, static_cast<long>(j));
    return value;
}

Rational ShiftModel::tail_weight_sq(const VertexId& anchor, std::uint64_t i) const {
    if (i == 0)
        throw StructuralError("model: tail index must be >= 1");
    return tail_orbit(anchor, i) / tail_orbit(anchor, i - 1);
}

std::vector<Site> ShiftModel::children_k_sites(const VertexId& v, std::uint64_t k) const {
    if (!tree_.contains(v))
        throw StructuralError("model: unknown vertex '" + v + "'");
    std::vector<Site> out;
    std::uint64_t base = tree_.depth(v);
    for (const auto& u : tree_.descendants(v)) {
        std::uint64_t rel = tree_.depth(u) - base;
        if (rel == k)
            out.emplace_back(u);
        else if (rel < k && tails_.count(u))
            out.emplace_back(TailSite{u, k - rel});
    }
    return out;
}

std::uint64_t ShiftModel::core_height_below(const VertexId& v) const {
    std::uint64_t base = tree_.depth(v);
    std::uint64_t best = 0;
    for (const auto& u : tree_.descendants(v))
        best = std::max(best, tree_.depth(u) - base);
    return best;
}

bool ShiftModel::all_tails_measureless() const {
    for (const auto& [anchor, tail] : tails_)
        if (!tail.generator.measure.is_zero())
            return false;
    return true;
}

NormTable::NormTable(const ShiftModel& model, std::uint64_t horizon) : horizon_(horizon) {
    const DirectedTree& tree = model.tree();
    // children before parents: sort by decreasing depth
    std::vector<VertexId> order = tree.vertices();
    std::stable_sort(order.begin(), order.end(), [&](const VertexId& a, const VertexId& b) {
        return tree.depth(a) > tree.depth(b);
    });
    for (const auto& v : order) {
        std::vector<Rational> row(horizon + 1);
        row[0] = 1;
        if (model.has_tail(v)) {
            for (std::uint64_t k = 1; k <= horizon; ++k)
                row[k] = model.tail_orbit(v, k);
        } else {
            for (std::uint64_t k = 1; k <= horizon; ++k) {
                Rational sum = 0;
                for (const auto& u : tree.children(v))
                    sum += model.weight_sq(u) * values_.at(u)[k - 1];
                row[k] = sum;
            }
        }
        values_[v] = std::move(row);
    }
}

const Rational& NormTable::at(const VertexId& v, std::uint64_t k) const {
    auto it = values_.find(v);
    if (it == values_.end() || k >= it->second.size())
        throw StructuralError("norm table: out of range");
    return it->second[k];
}

std::string NormTable::to_csv() const {
    std::ostringstream out;
    out << "vertex,k,value\n";
    for (const auto& [v, row] : values_)
        for (std::size_t k = 0; k < row.size(); ++k)
            out << v << "," << k << "," << rational_to_string(row[k]) << "\n";
    return out.str();
}

Rational lambda_k_sq(const ShiftModel& model, const Site& site, std::uint64_t k) {
    if (!model.has_site(site))
        throw StructuralError("lambda_k_sq: unknown site");
    Rational product = 1;
    Site cur = site;
    for (std::uint64_t step = 0; step < k; ++step) {
        if (std::holds_alternative<TailSite>(cur)) {
            auto& t = std::get<TailSite>(cur);
            product *= model.tail_weight_sq(t.anchor, t.index);
            cur = (t.index == 1) ? Site(t.anchor) : Site(TailSite{t.anchor, t.index - 1});
        } else {
            const VertexId& v = std::get<VertexId>(cur);
            if (v == model.tree().root())
                return 0; // the root weight, and everything above it, is zero
            product *= model.weight_sq(v);
            cur = model.tree().parent_of(v);
        }
    }
    return product;
}

Rational norm_sq(const ShiftModel& model, const Site& site, std::uint64_t k) {
    if (std::holds_alternative<TailSite>(site)) {
        const auto& t = std::get<TailSite>(site);
        if (!model.has_site(site))
            throw StructuralError("norm_sq: unknown site");
        return model.tail_orbit(t.anchor, t.index + k) / model.tail_orbit(t.anchor, t.index);
    }
    NormTable table(model, k);
    return table.at(std::get<VertexId>(site), k);
}

OpNormSq op_norm_sq(const ShiftModel& model, std::uint64_t /*horizon*/) {
    NormTable table(model, 1);
    OpNormSq out{0, true};
    for (const auto& v : model.tree().vertices())
        out.value = std::max(out.value, table.at(v, 1));
    // Ray positions: the value sequence b_{i+1}/b_i is non-increasing for
    // generated tails, so the supremum over the ray sits at the first
    // position (the anchor itself is covered by the core sweep above).
    for (const auto& [anchor, tail] : model.tails()) {
        Rational first = model.tail_orbit(anchor, 2) / model.tail_orbit(anchor, 1);
        out.value = std::max(out.value, first);
    }
    return out;
}

ShiftModel restrict_to_subtree(const ShiftModel& model, const VertexId& v) {
    DirectedTree sub = subtree(model.tree(), v);
    std::map<VertexId, Rational> weights;
    std::map<VertexId, TailModel> tails;
    for (const auto& u : sub.vertices()) {
        if (u != v)
            weights[u] = model.weight_sq(u);
        if (model.has_tail(u))
            tails[u] = model.tail(u);
    }
    return ShiftModel(std::move(sub), std::move(weights), std::move(tails));
}

std::string norm_table_csv(const ShiftModel& model, std::uint64_t horizon) {
    return NormTable(model, horizon).to_csv();
}

} // namespace treeshift
