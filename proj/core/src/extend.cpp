#include "treeshift/extend.hpp"

#include <algorithm>

namespace treeshift {

std::string operator_class_name(OperatorClass c) {
    switch (c) {
    case OperatorClass::bounded:
        return "bounded";
    case OperatorClass::contraction:
        return "contraction";
    case OperatorClass::bounded_below:
        return "bounded-below";
    case OperatorClass::expansive:
        return "expansive";
    case OperatorClass::isometry:
        return "isometry";
    case OperatorClass::scalar_isometry:
        return "scalar-isometry";
    case OperatorClass::hyponormal:
        return "hyponormal";
    case OperatorClass::power_hyponormal:
        return "powhyp";
    case OperatorClass::completely_hyperexpansive:
        return "che";
    }
    return "?";
}

std::optional<Rational> ExtensionCertificate::condition(const std::string& name) const {
    for (const auto& [key, value] : condition_values)
        if (key == name)
            return value;
    return std::nullopt;
}

namespace {

// Extend the tree by a k-chain and assign level weights w[l] = lambda'^2 at
// omega_l (w[0] sits on the old root).
ShiftModel extend_with_weights(const ShiftModel& model, std::uint64_t k,
                               const std::vector<Rational>& level_weights,
                               std::map<VertexId, Rational>* new_weights_out) {
    BackwardTreeExtension ext = backward_extend_tree(model.tree(), k);
    std::map<VertexId, Rational> weights = model.weights_sq();
    VertexId old_root = model.tree().root();
    weights[old_root] = level_weights.at(0);
    if (new_weights_out)
        (*new_weights_out)[old_root] = level_weights.at(0);
    for (std::uint64_t l = 1; l < k; ++l) {
        weights[ext.chain[l - 1]] = level_weights.at(l);
        if (new_weights_out)
            (*new_weights_out)[ext.chain[l - 1]] = level_weights.at(l);
    }
    return ShiftModel(std::move(ext.tree), std::move(weights), model.tails());
}

ShiftModel build_rooted_sum_model(const std::vector<ShiftModel>& members,
                                  const std::vector<Rational>& root_weights_sq,
                                  std::vector<VertexId>* embedded_roots_out) {
    std::vector<DirectedTree> trees;
    trees.reserve(members.size());
    for (const auto& m : members)
        trees.push_back(m.tree());
    RootedSum sum = rooted_sum(trees);

    std::map<VertexId, Rational> weights;
    std::map<VertexId, TailModel> tails;
    for (std::size_t j = 0; j < members.size(); ++j) {
        const auto& embed = sum.member_embedding[j];
        const ShiftModel& m = members[j];
        for (const auto& [v, w] : m.weights_sq())
            weights[embed.at(v)] = w;
        for (const auto& [anchor, tail] : m.tails())
            tails[embed.at(anchor)] = tail;
        VertexId root_image = embed.at(m.tree().root());
        weights[root_image] = root_weights_sq.at(j);
        if (embedded_roots_out)
            embedded_roots_out->push_back(root_image);
    }
    return ShiftModel(sum.tree, std::move(weights), std::move(tails));
}

bool in_simple_class(const ShiftModel& model, OperatorClass cls, std::uint64_t horizon) {
    SimpleClassReport report = check_simple_classes(model, horizon);
    switch (cls) {
    case OperatorClass::bounded:
        return report.verdicts.at(SimpleClass::bounded).ok();
    case OperatorClass::contraction:
        return report.verdicts.at(SimpleClass::contraction).ok();
    case OperatorClass::bounded_below:
        return report.verdicts.at(SimpleClass::bounded_below).ok();
    case OperatorClass::expansive:
        return report.verdicts.at(SimpleClass::expansive).ok();
    case OperatorClass::isometry:
        return report.verdicts.at(SimpleClass::isometry).ok();
    case OperatorClass::scalar_isometry:
        return model.is_proper() && report.verdicts.at(SimpleClass::quasinormal).ok();
    case OperatorClass::hyponormal:
        return model.is_proper() && !model.is_zero() && check_hyponormal(model).ok();
    default:
        throw StructuralError("trivial_extend: unsupported class " + operator_class_name(cls));
    }
}

} // namespace

ExtensionCertificate trivial_extend(const ShiftModel& model, OperatorClass cls, std::uint64_t k) {
    const std::uint64_t horizon = 64;
    if (!in_simple_class(model, cls, horizon))
        throw StructuralError("trivial_extend: model is not in class " +
                              operator_class_name(cls));

    ExtensionCertificate cert;
    cert.cls = cls;
    cert.k = k;
    if (k == 0) {
        // a 0-step extension is membership itself
        cert.model = model;
        return cert;
    }
    Rational c2 = norm_sq(model, model.tree().root(), 1);
    if (c2 == 0)
        throw StructuralError("trivial_extend: zero shift cannot take nonzero chain weights");
    std::vector<Rational> level(k, c2);
    cert.model = extend_with_weights(model, k, level, &cert.new_weights_sq);
    cert.condition_values.emplace_back("w", c2);
    if (!in_simple_class(cert.model, cls, horizon))
        throw ConsistencyError("trivial_extend: extension left the class");
    return cert;
}

ShiftModel isometry_weights(const DirectedTree& tree, const std::set<VertexId>& tails) {
    if (!is_leafless(tree, tails))
        throw StructuralError("isometry_weights: tree has a leaf without a tail");
    std::map<VertexId, Rational> weights;
    for (const auto& v : tree.vertices()) {
        std::size_t deg = tree.degree(v);
        for (const auto& u : tree.children(v))
            weights[u] = Rational(1, static_cast<unsigned long>(deg));
    }
    std::map<VertexId, TailModel> tail_models;
    for (const auto& anchor : tails) {
        if (!tree.contains(anchor))
            throw StructuralError("isometry_weights: unknown tail anchor '" + anchor + "'");
        tail_models[anchor] = TailModel{CASeq{1, AtomicMeasure{}}, 1};
    }
    return ShiftModel(tree, std::move(weights), std::move(tail_models));
}

namespace {

// sup over n >= 0 of B(n, m) for each m = 1..m_max. Exact: with measureless
// tails the values are constant once n passes the core height. A model with
// a measured tail never reaches this point (it is not power hyponormal).
std::vector<Rational> powhyp_bsup(const ShiftModel& model, std::uint64_t m_max) {
    std::uint64_t n_max = model.tree().height() + 1;
    NormTable table(model, n_max + m_max);
    std::vector<Rational> sup(m_max + 1, 0); // index by m, slot 0 unused
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        std::vector<Site> level = model.children_k_sites(model.tree().root(), n);
        for (std::uint64_t m = 1; m <= m_max; ++m) {
            Rational sum = 0;
            for (const Site& u : level) {
                Rational numer = lambda_k_sq(model, u, n);
                if (numer == 0)
                    continue;
                Rational denom;
                if (std::holds_alternative<VertexId>(u)) {
                    denom = table.at(std::get<VertexId>(u), n + m);
                } else {
                    const auto& t = std::get<TailSite>(u);
                    denom = model.tail_orbit(t.anchor, t.index + n + m) /
                            model.tail_orbit(t.anchor, t.index);
                }
                sum += numer / denom;
            }
            sup[m] = std::max(sup[m], sum);
        }
    }
    return sup;
}

bool powhyp_preconditions(const ShiftModel& model, std::uint64_t order, std::uint64_t horizon) {
    if (model.is_zero() || !model.is_proper() || !model.is_leafless())
        return false;
    return check_power_hyponormal(model, order, horizon).ok();
}

} // namespace

std::optional<ExtensionCertificate> powhyp_kstep(const ShiftModel& model, std::uint64_t k,
                                                 std::uint64_t horizon) {
    if (!powhyp_preconditions(model, 2 * k + 4, horizon))
        return std::nullopt;
    if (k == 0) {
        // a 0-step extension is membership itself
        ExtensionCertificate cert;
        cert.cls = OperatorClass::power_hyponormal;
        cert.model = model;
        return cert;
    }

    std::vector<Rational> bsup = powhyp_bsup(model, k);

    // theta must satisfy theta^m <= 1 / sup_n B(n, m) for every m; the n = 0
    // terms already encode ||S^m e_root||^2 >= theta^m. Prefer the exact
    // maximal root when all m-th roots are rational, otherwise fall back to
    // the largest bound that is safe for every m at once.
    std::vector<Rational> bounds;
    bool all_exact = true;
    std::optional<Rational> theta_exact;
    for (std::uint64_t m = 1; m <= k; ++m) {
        Rational g = 1 / bsup[m];
        bounds.push_back(g);
        std::optional<Rational> root = exact_nth_root(g, m);
        if (!root)
            all_exact = false;
        else if (!theta_exact || *root < *theta_exact)
            theta_exact = *root;
    }
    Rational theta;
    if (all_exact) {
        theta = *theta_exact;
    } else {
        theta = 1;
        for (const auto& g : bounds)
            theta = std::min(theta, g);
    }

    ExtensionCertificate cert;
    cert.cls = OperatorClass::power_hyponormal;
    cert.k = k;
    std::vector<Rational> level(k, theta);
    cert.model = extend_with_weights(model, k, level, &cert.new_weights_sq);
    Rational c = 1;
    for (std::uint64_t m = 1; m <= k; ++m) {
        cert.condition_values.emplace_back("B_sup_" + std::to_string(m), bsup[m]);
        c = std::max(c, bsup[m]);
    }
    cert.condition_values.emplace_back("C", c);
    cert.condition_values.emplace_back("theta", theta);

    if (!check_power_hyponormal(cert.model, 2 * k + 4, horizon).ok())
        throw ConsistencyError("powhyp_kstep: extension failed re-verification");
    return cert;
}

namespace {

struct JointWeights {
    std::vector<Rational> a;
    std::vector<Rational> C;
};

std::optional<JointWeights> powhyp_joint_weights(const std::vector<ShiftModel>& members,
                                                 std::uint64_t k, std::uint64_t horizon) {
    if (members.empty())
        throw StructuralError("powhyp_joint: empty family");
    JointWeights jw;
    for (const auto& member : members) {
        if (!powhyp_preconditions(member, 2 * (k + 1) + 4, horizon))
            return std::nullopt;
        std::vector<Rational> bsup = powhyp_bsup(member, k + 1);
        Rational cj = 1;
        for (std::uint64_t m = 1; m <= k + 1; ++m)
            cj = std::max(cj, bsup[m]);
        jw.C.push_back(cj);
    }

    // a'_j = 2^-j normalized; then a_j = a'_j min(1, C_j^-3) for j != 0 and
    // a_0 balances sum a_j C_j to exactly 1.
    std::size_t count = members.size();
    Rational total = 0;
    std::vector<Rational> raw(count);
    for (std::size_t j = 0; j < count; ++j) {
        raw[j] = rational_pow(Rational(1, 2), static_cast<long>(j));
        total += raw[j];
    }
    jw.a.assign(count, 0);
    Rational used = 0;
    for (std::size_t j = 1; j < count; ++j) {
        Rational scale = std::min(Rational(1), Rational(1 / rational_pow(jw.C[j], 3)));
        jw.a[j] = raw[j] / total * scale;
        used += jw.a[j] * jw.C[j];
    }
    jw.a[0] = (1 - used) / jw.C[0];
    if (jw.a[0] <= 0)
        throw ConsistencyError("powhyp_joint: balancing weight not positive");
    return jw;
}

} // namespace

std::optional<ExtensionCertificate> powhyp_joint(const JointSpec& spec, std::uint64_t horizon) {
    auto jw = powhyp_joint_weights(spec.members, spec.k, horizon);
    if (!jw)
        return std::nullopt;

    ExtensionCertificate cert;
    cert.cls = OperatorClass::power_hyponormal;
    cert.k = spec.k;
    std::vector<VertexId> roots;
    cert.model = build_rooted_sum_model(spec.members, jw->a, &roots);
    for (std::size_t j = 0; j < roots.size(); ++j)
        cert.new_weights_sq[roots[j]] = jw->a[j];
    for (std::size_t j = 0; j < spec.members.size(); ++j) {
        cert.condition_values.emplace_back("C_" + std::to_string(j + 1), jw->C[j]);
        cert.condition_values.emplace_back("a_" + std::to_string(j + 1), jw->a[j]);
    }

    if (!check_power_hyponormal(cert.model, 6, horizon).ok())
        throw ConsistencyError("powhyp_joint: joint model failed re-verification");
    if (spec.k >= 1 && !powhyp_kstep(cert.model, spec.k, horizon))
        throw ConsistencyError("powhyp_joint: joint model lost k-step extendability");

    Rational joint_norm = op_norm_sq(cert.model, horizon).value;
    Rational member_norm = 0;
    for (const auto& member : spec.members)
        member_norm = std::max(member_norm, op_norm_sq(member, horizon).value);
    if (joint_norm != member_norm)
        throw ConsistencyError("powhyp_joint: norm identity violated");
    cert.condition_values.emplace_back("opnorm_sq", joint_norm);
    return cert;
}

std::optional<ExtensionCertificate> che_kstep(const ShiftModel& model, std::uint64_t k) {
    const std::uint64_t horizon = 16;
    CheResult che = check_che(model, horizon);
    if (!che.verdict.ok())
        return std::nullopt;
    const AtomicMeasure& tau = che.measures.at(model.tree().root());

    ExtensionCertificate cert;
    cert.cls = OperatorClass::completely_hyperexpansive;
    cert.k = k;
    if (k == 0) {
        // 0-step extension = membership in the class
        cert.model = model;
        cert.condition_values.emplace_back("C0", 0);
        return cert;
    }

    Moment obstruction = inverse_power_sum(tau, k);
    if (!(obstruction < 1))
        return std::nullopt;
    Rational c0 = obstruction.value();
    Rational c = 1 / (1 - c0);

    // Scale the root sequence so the extension condition is met with equality;
    // the zero-atom remainder then vanishes identically.
    std::vector<std::pair<Rational, AtomicMeasure>> scaled{{c, tau}};
    CASeq root_seq{c, mix_measures(scaled)};
    std::optional<CAExtension> ext = ca_extend(root_seq, k);
    if (!ext)
        throw ConsistencyError("che_kstep: the scaled sequence did not extend");

    // e_i runs over a_{-k}, ..., a_{-1}, a_0 = C; chain weights are quotients.
    std::vector<Rational> e = ext->prefix;
    e.push_back(c);
    std::vector<Rational> level(k);
    for (std::uint64_t l = 0; l < k; ++l)
        level[l] = e[k - l] / e[k - l - 1];

    cert.model = extend_with_weights(model, k, level, &cert.new_weights_sq);
    cert.condition_values.emplace_back("C0", c0);
    cert.condition_values.emplace_back("C", c);
    for (std::uint64_t j = 0; j < k; ++j)
        cert.condition_values.emplace_back("a_-" + std::to_string(k - j), ext->prefix[j]);

    if (!check_che(cert.model, horizon).verdict.ok())
        throw ConsistencyError("che_kstep: extension failed re-verification");
    return cert;
}

std::optional<ExtensionCertificate> che_joint(const JointSpec& spec) {
    if (spec.members.empty())
        throw StructuralError("che_joint: empty family");
    const std::uint64_t horizon = 16;

    std::vector<AtomicMeasure> taus;
    std::vector<Rational> c_values, d_values;
    for (const auto& member : spec.members) {
        CheResult che = check_che(member, horizon);
        if (!che.verdict.ok())
            return std::nullopt;
        AtomicMeasure tau = che.measures.at(member.tree().root());
        Moment d = inverse_power_sum(tau, spec.k + 1);
        if (!(d < 1))
            return std::nullopt; // member lacks the (k+1)-step extension
        d_values.push_back(d.value());
        c_values.push_back(inverse_power_sum(tau, 1).value());
        taus.push_back(std::move(tau));
    }

    // a_j = g_j / ((1 - C_j) sum g) makes sum a_j (1 - C_j) exactly 1.
    std::size_t count = spec.members.size();
    Rational total = 0;
    std::vector<Rational> g(count);
    for (std::size_t j = 0; j < count; ++j) {
        g[j] = rational_pow(Rational(1, 2), static_cast<long>(j));
        total += g[j];
    }
    std::vector<Rational> a(count);
    for (std::size_t j = 0; j < count; ++j)
        a[j] = g[j] / ((1 - c_values[j]) * total);

    ExtensionCertificate cert;
    cert.cls = OperatorClass::completely_hyperexpansive;
    cert.k = spec.k;
    std::vector<VertexId> roots;
    cert.model = build_rooted_sum_model(spec.members, a, &roots);
    for (std::size_t j = 0; j < roots.size(); ++j)
        cert.new_weights_sq[roots[j]] = a[j];
    for (std::size_t j = 0; j < count; ++j) {
        cert.condition_values.emplace_back("C_" + std::to_string(j + 1), c_values[j]);
        cert.condition_values.emplace_back("D_" + std::to_string(j + 1), d_values[j]);
        cert.condition_values.emplace_back("a_" + std::to_string(j + 1), a[j]);
    }

    CheResult joint_che = check_che(cert.model, horizon);
    if (!joint_che.verdict.ok())
        throw ConsistencyError("che_joint: joint model failed re-verification");

    // The root measure must be the a_j-mix of the 1/t-transformed member
    // measures; cheap to confirm.
    {
        std::vector<std::pair<Rational, AtomicMeasure>> parts;
        for (std::size_t j = 0; j < count; ++j) {
            std::optional<AtomicMeasure> pulled = inv_t_transform(taus[j]);
            if (!pulled)
                throw ConsistencyError("che_joint: member measure has an atom at zero");
            parts.emplace_back(a[j], *pulled);
        }
        if (!(mix_measures(parts) == joint_che.measures.at(cert.model.tree().root())))
            throw ConsistencyError("che_joint: root measure mismatch");
    }

    if (spec.k >= 1) {
        std::optional<ExtensionCertificate> step = che_kstep(cert.model, spec.k);
        if (!step)
            throw ConsistencyError("che_joint: joint model lost k-step extendability");
        cert.condition_values.emplace_back("C0", *step->condition("C0"));

        Rational member_norm = 0;
        for (const auto& member : spec.members)
            member_norm = std::max(member_norm, op_norm_sq(member, horizon).value);
        Rational bound = std::max(member_norm,
                                  Rational(static_cast<unsigned long>(spec.k + 1),
                                           static_cast<unsigned long>(spec.k)));
        Rational joint_norm = op_norm_sq(cert.model, horizon).value;
        if (joint_norm > bound)
            throw ConsistencyError("che_joint: norm bound violated");
        cert.condition_values.emplace_back("norm_bound_sq", bound);
        cert.condition_values.emplace_back("opnorm_sq", joint_norm);
    }
    return cert;
}

std::optional<ShiftModel> joint_extend_at_depth(const DepthCap& cap,
                                                const std::vector<ShiftModel>& members,
                                                OperatorClass cls, std::uint64_t horizon) {
    if (cls != OperatorClass::power_hyponormal)
        throw StructuralError("joint_extend_at_depth: only the power hyponormal class is wired");
    const DirectedTree& cap_tree = cap.tree;
    std::uint64_t k = cap_tree.height();
    if (k == 0)
        throw StructuralError("joint_extend_at_depth: cap must have positive depth");

    // Uniform depth: every leaf sits at depth k, so the attach points are
    // exactly the k-th children of the cap root.
    std::vector<VertexId> attach_points;
    for (const auto& v : cap_tree.vertices()) {
        if (cap_tree.degree(v) == 0) {
            if (cap_tree.depth(v) != k)
                throw StructuralError("joint_extend_at_depth: cap leaf above the attach depth");
            attach_points.push_back(v);
        }
    }
    for (const auto& [v, index] : cap.attach) {
        if (!cap_tree.contains(v) || cap_tree.depth(v) != k || cap_tree.degree(v) != 0)
            throw StructuralError("joint_extend_at_depth: attach point '" + v +
                                  "' is not a depth-k leaf");
        if (index >= members.size())
            throw StructuralError("joint_extend_at_depth: attach index out of range");
    }

    // Blank attach points get an isometric ray, which never obstructs the
    // construction.
    ShiftModel blank(DirectedTree::trivial("blank"), {},
                     {{"blank", TailModel{CASeq{1, AtomicMeasure{}}, 1}}});

    // Assemble the full tree: cap vertices plus embedded members, the member
    // roots identified with the attach points.
    std::vector<VertexId> vertices;
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, Rational> weights; // cap-edge weights filled level by level
    std::map<VertexId, TailModel> tails;
    for (const auto& v : cap_tree.vertices()) {
        vertices.push_back(v);
        parent[v] = cap_tree.parent_of(v);
    }
    for (const auto& p : attach_points) {
        auto it = cap.attach.find(p);
        const ShiftModel& member = (it == cap.attach.end()) ? blank : members[it->second];
        const DirectedTree& mt = member.tree();
        for (const auto& v : mt.vertices()) {
            VertexId image = (v == mt.root()) ? p : p + "/" + v;
            if (v != mt.root()) {
                if (cap_tree.contains(image))
                    throw StructuralError("joint_extend_at_depth: vertex id collision '" + image +
                                          "'");
                vertices.push_back(image);
                const VertexId& par = mt.parent_of(v);
                parent[image] = (par == mt.root()) ? p : p + "/" + par;
                weights[image] = member.weight_sq(v);
            }
        }
        for (const auto& [anchor, tail] : member.tails())
            tails[(anchor == mt.root()) ? p : p + "/" + anchor] = tail;
    }
    DirectedTree full = DirectedTree::from_parent_map(std::move(vertices), std::move(parent));

    // Work towards the root: the children of a depth-d cap vertex carry
    // shifts admitting (d+1)-step extensions, and the joint weights make the
    // vertex itself admit a d-step extension.
    auto submodel_at = [&](const VertexId& v) {
        DirectedTree sub = subtree(full, v);
        std::map<VertexId, Rational> w;
        std::map<VertexId, TailModel> t;
        for (const auto& u : sub.vertices()) {
            if (u != v)
                w[u] = weights.at(u);
            auto it = tails.find(u);
            if (it != tails.end())
                t[u] = it->second;
        }
        return ShiftModel(std::move(sub), std::move(w), std::move(t));
    };

    for (std::uint64_t d = k; d-- > 0;) {
        for (const auto& u : cap_tree.vertices()) {
            if (cap_tree.depth(u) != d)
                continue;
            std::vector<ShiftModel> group;
            std::vector<VertexId> group_ids = cap_tree.children(u);
            for (const auto& c : group_ids)
                group.push_back(submodel_at(c));
            auto jw = powhyp_joint_weights(group, d, horizon);
            if (!jw)
                return std::nullopt;
            for (std::size_t i = 0; i < group_ids.size(); ++i)
                weights[group_ids[i]] = jw->a[i];
        }
    }

    ShiftModel result(full, std::move(weights), std::move(tails));
    if (!check_power_hyponormal(result, 6, horizon).ok())
        throw ConsistencyError("joint_extend_at_depth: result failed re-verification");
    return result;
}

Site che_witness_finder(const ShiftModel& model, std::uint64_t n, std::uint64_t k) {
    if (!model.is_proper())
        throw StructuralError("che_witness_finder: model must be proper");
    const std::uint64_t horizon = 16;
    CheResult che = check_che(model, horizon);
    if (!che.verdict.ok())
        throw StructuralError("che_witness_finder: model is not completely hyperexpansive");
    if (k >= 1 && !che_kstep(model, k))
        throw StructuralError("che_witness_finder: model lacks the k-step extension");

    for (const Site& site : model.children_k_sites(model.tree().root(), n)) {
        AtomicMeasure tau;
        if (std::holds_alternative<VertexId>(site)) {
            tau = che.measures.at(std::get<VertexId>(site));
        } else {
            // scaled tail of the generator: atom masses pick up t^i / a_i
            const auto& t = std::get<TailSite>(site);
            const TailModel& tail = model.tail(t.anchor);
            Rational ai = model.tail_orbit(t.anchor, t.index);
            std::vector<Atom> atoms;
            for (const auto& atom : tail.generator.measure.atoms()) {
                Rational mass =
                    atom.mass * rational_pow(atom.t, static_cast<long>(t.index)) / ai;
                atoms.push_back(Atom{atom.t, mass});
            }
            tau = AtomicMeasure::from_atoms(std::move(atoms));
        }
        Moment d = inverse_power_sum(tau, n + k);
        if (d < 1)
            return site;
    }
    throw ConsistencyError("che_witness_finder: no admissible child found");
}

ShiftModel glue_demo() {
    std::map<VertexId, VertexId> parent{{"o", "o"}, {"a", "o"}, {"b", "o"}};
    DirectedTree tree = DirectedTree::from_parent_map({"o", "a", "b"}, std::move(parent));
    std::map<VertexId, Rational> weights{{"a", 1}, {"b", 0}};
    std::map<VertexId, TailModel> tails;
    tails["a"] = TailModel{CASeq{1, AtomicMeasure{}}, 1};
    tails["b"] = TailModel{CASeq{1, AtomicMeasure::dirac(1, 1)}, 1};
    return ShiftModel(std::move(tree), std::move(weights), std::move(tails));
}

} // namespace treeshift
