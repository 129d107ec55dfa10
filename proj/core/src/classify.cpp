#include "treeshift/classify.hpp"

#include <algorithm>

namespace treeshift {

namespace {

Rational h_value_core(const ShiftModel& model, const NormTable& table, const VertexId& v,
                      std::uint64_t k) {
    Rational sum = 0;
    for (const Site& u : model.children_k_sites(v, k)) {
        Rational numer = lambda_k_sq(model, u, k);
        if (numer == 0)
            continue;
        Rational denom;
        if (std::holds_alternative<VertexId>(u)) {
            denom = table.at(std::get<VertexId>(u), k);
        } else {
            const auto& t = std::get<TailSite>(u);
            denom = model.tail_orbit(t.anchor, t.index + k) / model.tail_orbit(t.anchor, t.index);
        }
        sum += numer / denom;
    }
    return sum;
}

Rational h_value_ray(const ShiftModel& model, const TailSite& site, std::uint64_t k) {
    Rational bi = model.tail_orbit(site.anchor, site.index);
    Rational bik = model.tail_orbit(site.anchor, site.index + k);
    Rational bi2k = model.tail_orbit(site.anchor, site.index + 2 * k);
    return bik * bik / (bi * bi2k);
}

} // namespace

Rational h_value(const ShiftModel& model, const Site& site, std::uint64_t k) {
    if (k == 0)
        throw StructuralError("h_value: order must be positive");
    if (!model.is_leafless())
        throw StructuralError("h_value: model has a leaf");
    if (!model.is_proper())
        throw StructuralError("h_value: model is not proper");
    if (!model.has_site(site))
        throw StructuralError("h_value: unknown site");
    if (std::holds_alternative<TailSite>(site))
        return h_value_ray(model, std::get<TailSite>(site), k);
    NormTable table(model, k);
    return h_value_core(model, table, std::get<VertexId>(site), k);
}

ClassVerdict check_hyponormal(const ShiftModel& model) {
    if (!model.is_proper())
        throw StructuralError("hyponormality check requires a proper model");
    ClassVerdict verdict;
    verdict.horizon_used = 1;
    for (const auto& v : model.tree().vertices()) {
        if (model.tree().degree(v) == 0 && !model.has_tail(v)) {
            verdict.status = Status::fails;
            Witness w;
            w.vertex = v;
            w.value = 0;
            w.note = "leaf";
            verdict.witness = w;
            return verdict;
        }
    }
    NormTable table(model, 1);
    for (const auto& v : model.tree().vertices()) {
        Rational h = 0;
        for (const auto& u : model.tree().children(v))
            h += model.weight_sq(u) / table.at(u, 1);
        if (model.has_tail(v))
            h += model.tail_orbit(v, 1) * model.tail_orbit(v, 1) / model.tail_orbit(v, 2);
        if (h > 1) {
            verdict.status = Status::fails;
            Witness w;
            w.vertex = v;
            w.n = 1;
            w.value = h;
            w.note = "h exceeds 1";
            verdict.witness = w;
            return verdict;
        }
    }
    verdict.status = Status::holds;
    return verdict;
}

ClassVerdict check_power_hyponormal(const ShiftModel& model, std::uint64_t order_k,
                                    std::uint64_t ray_horizon) {
    if (!model.is_proper())
        throw StructuralError("power hyponormality check requires a proper model");

    ClassVerdict verdict;
    for (const auto& v : model.tree().vertices()) {
        if (model.tree().degree(v) == 0 && !model.has_tail(v)) {
            verdict.status = Status::fails;
            Witness w;
            w.vertex = v;
            w.value = 0;
            w.note = "leaf";
            verdict.witness = w;
            return verdict;
        }
    }

    // Beyond the core height every k-th child is a ray position; with
    // measureless generators the h-values are then constant in k, so scanning
    // one extra order past the height closes the supremum exactly.
    std::uint64_t k_max = std::max<std::uint64_t>(order_k, model.tree().height() + 1);
    verdict.horizon_used = k_max;
    bool exact = model.all_tails_measureless();

    NormTable table(model, k_max);
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        for (const auto& v : model.tree().vertices()) {
            Rational h = h_value_core(model, table, v, k);
            if (h > 1) {
                verdict.status = Status::fails;
                Witness w;
                w.vertex = v;
                w.n = static_cast<std::int64_t>(k);
                w.value = h;
                w.note = "h exceeds 1";
                verdict.witness = w;
                return verdict;
            }
        }
    }
    for (const auto& [anchor, tail] : model.tails()) {
        for (std::uint64_t i = 1; i <= ray_horizon; ++i) {
            for (std::uint64_t k = 1; k <= order_k; ++k) {
                Rational h = h_value_ray(model, TailSite{anchor, i}, k);
                if (h > 1) {
                    verdict.status = Status::fails;
                    Witness w;
                    w.vertex = anchor;
                    w.tail_index = i;
                    w.n = static_cast<std::int64_t>(k);
                    w.value = h;
                    w.note = "h exceeds 1 on a ray";
                    verdict.witness = w;
                    return verdict;
                }
            }
        }
    }

    verdict.status = exact ? Status::holds : Status::inconclusive;
    return verdict;
}

namespace {

// Look for a concrete positive finite difference of the orbit sequence at v,
// so failure witnesses re-check against the defining inequalities.
std::optional<Witness> ca_violation_witness(const NormTable& table, const VertexId& v,
                                            std::uint64_t horizon) {
    std::vector<Rational> prefix;
    prefix.reserve(horizon + 1);
    for (std::uint64_t k = 0; k <= horizon; ++k)
        prefix.push_back(table.at(v, k));
    ClassVerdict check = is_ca_prefix(prefix, horizon);
    if (check.status != Status::fails)
        return std::nullopt;
    Witness w = *check.witness;
    w.vertex = v;
    return w;
}

} // namespace

CheResult check_che(const ShiftModel& model, std::uint64_t horizon) {
    CheResult out;
    out.verdict.horizon_used = horizon;

    for (const auto& v : model.tree().vertices()) {
        if (model.tree().degree(v) == 0 && !model.has_tail(v)) {
            // orbit sequence 1, 0, 0, ... has first difference +1
            out.verdict.status = Status::fails;
            Witness w;
            w.vertex = v;
            w.m = 0;
            w.n = 1;
            w.value = 1;
            w.note = "leaf orbit is not completely alternating";
            out.verdict.witness = w;
            return out;
        }
    }

    for (const auto& [anchor, tail] : model.tails()) {
        const Rational& s = tail.scale_sq;
        if (s == 1)
            continue;
        // geometric ray: 1, s, s^2, ... fails at order 1 (s < 1) or 2 (s > 1)
        out.verdict.status = Status::fails;
        Witness w;
        w.vertex = anchor;
        w.m = 0;
        if (s < 1) {
            w.n = 1;
            w.value = 1 - s;
        } else {
            w.n = 2;
            w.value = (1 - s) * (1 - s);
        }
        w.note = "geometric ray orbit is not completely alternating";
        out.verdict.witness = w;
        return out;
    }

    NormTable table(model, std::max<std::uint64_t>(horizon, 2));

    std::vector<VertexId> order = model.tree().vertices();
    std::stable_sort(order.begin(), order.end(), [&](const VertexId& a, const VertexId& b) {
        return model.tree().depth(a) > model.tree().depth(b);
    });

    for (const auto& v : order) {
        if (model.has_tail(v)) {
            out.measures[v] = model.tail(v).generator.measure;
            continue;
        }
        std::vector<std::pair<Rational, AtomicMeasure>> parts;
        Rational s0 = 0;
        for (const auto& u : model.tree().children(v)) {
            const Rational& w = model.weight_sq(u);
            s0 += w;
            parts.emplace_back(w, out.measures.at(u));
        }
        AtomicMeasure shifted = mix_measures(parts);

        auto fail_at = [&](const Rational& value, const std::string& note) {
            out.verdict.status = Status::fails;
            std::optional<Witness> direct = ca_violation_witness(table, v, horizon);
            if (direct) {
                out.verdict.witness = direct;
            } else {
                Witness w;
                w.vertex = v;
                w.value = value;
                w.note = note;
                out.verdict.witness = w;
            }
            out.measures.clear();
        };

        if (shifted.has_atom_at_zero()) {
            fail_at(shifted.mass_at(0), "shifted measure has an atom at zero");
            return out;
        }
        Moment pull = inverse_power_sum(shifted, 1);
        Rational remainder = s0 - 1 - pull.value();
        if (remainder < 0) {
            fail_at(remainder, "negative remainder in the one-step extension");
            return out;
        }
        std::optional<AtomicMeasure> pulled = inv_t_transform(shifted);
        std::vector<Atom> atoms = pulled->atoms();
        if (remainder > 0)
            atoms.push_back(Atom{0, remainder});
        out.measures[v] = AtomicMeasure::from_atoms(std::move(atoms));
    }

    out.verdict.status = Status::holds;
    return out;
}

std::string simple_class_name(SimpleClass c) {
    switch (c) {
    case SimpleClass::bounded:
        return "bounded";
    case SimpleClass::contraction:
        return "contraction";
    case SimpleClass::expansive:
        return "expansive";
    case SimpleClass::bounded_below:
        return "bounded-below";
    case SimpleClass::isometry:
        return "isometry";
    case SimpleClass::quasinormal:
        return "quasinormal";
    }
    return "?";
}

namespace {

enum class RayKind { constant, one_after_anchor, decaying };

RayKind ray_kind(const TailModel& tail) {
    if (tail.generator.measure.is_zero())
        return RayKind::constant; // value scale_sq at every position
    const auto& atoms = tail.generator.measure.atoms();
    if (atoms.size() == 1 && atoms[0].t == 0)
        return RayKind::one_after_anchor;
    return RayKind::decaying; // values strictly above 1, tending to 1
}

} // namespace

SimpleClassReport check_simple_classes(const ShiftModel& model, std::uint64_t horizon) {
    SimpleClassReport report;
    NormTable table(model, 1);
    const DirectedTree& tree = model.tree();

    // Core sweep.
    VertexId sup_site = tree.root();
    VertexId inf_site = tree.root();
    report.sup_sq = table.at(tree.root(), 1);
    report.inf_sq = report.sup_sq;
    report.inf_attained = true;
    for (const auto& v : tree.vertices()) {
        const Rational& value = table.at(v, 1);
        if (value > report.sup_sq) {
            report.sup_sq = value;
            sup_site = v;
        }
        if (value < report.inf_sq) {
            report.inf_sq = value;
            inf_site = v;
        }
    }

    // Ray sweep; the first position dominates (ratios of generated sequences
    // are non-increasing), the infimum is the limit of the ratios.
    struct RayData {
        VertexId anchor;
        RayKind kind;
        Rational first; // value at position 1
        Rational limit;
        bool limit_attained;
    };
    std::vector<RayData> rays;
    for (const auto& [anchor, tail] : model.tails()) {
        RayData data;
        data.anchor = anchor;
        data.kind = ray_kind(tail);
        data.first = model.tail_orbit(anchor, 2) / model.tail_orbit(anchor, 1);
        switch (data.kind) {
        case RayKind::constant:
            data.limit = tail.scale_sq;
            data.limit_attained = true;
            break;
        case RayKind::one_after_anchor:
            data.limit = 1;
            data.limit_attained = true;
            break;
        case RayKind::decaying:
            data.limit = 1;
            data.limit_attained = false;
            break;
        }
        rays.push_back(std::move(data));
    }

    std::optional<Witness> sup_ray_witness;
    for (const auto& ray : rays) {
        if (ray.first > report.sup_sq) {
            report.sup_sq = ray.first;
            Witness w;
            w.vertex = ray.anchor;
            w.tail_index = 1;
            w.value = ray.first;
            sup_ray_witness = w;
        }
        if (ray.limit < report.inf_sq) {
            report.inf_sq = ray.limit;
            report.inf_attained = ray.limit_attained;
        } else if (ray.limit == report.inf_sq && ray.limit_attained) {
            report.inf_attained = true;
        }
    }

    auto make = [&](Status status, std::optional<Witness> witness) {
        ClassVerdict v;
        v.status = status;
        v.witness = std::move(witness);
        v.horizon_used = horizon;
        return v;
    };
    auto core_witness = [&](const VertexId& v, const Rational& value, const std::string& note) {
        Witness w;
        w.vertex = v;
        w.value = value;
        w.note = note;
        return w;
    };

    // bounded: finitely described models are always bounded; report the norm.
    report.verdicts[SimpleClass::bounded] =
        make(Status::holds, core_witness(sup_site, report.sup_sq, "operator norm squared"));

    // contraction
    if (report.sup_sq <= 1) {
        report.verdicts[SimpleClass::contraction] = make(Status::holds, std::nullopt);
    } else {
        Witness w = sup_ray_witness ? *sup_ray_witness
                                    : core_witness(sup_site, report.sup_sq, "norm above 1");
        report.verdicts[SimpleClass::contraction] = make(Status::fails, w);
    }

    // expansive / bounded below
    {
        std::optional<Witness> low;
        for (const auto& v : tree.vertices())
            if (table.at(v, 1) < 1 && !low)
                low = core_witness(v, table.at(v, 1), "norm below 1");
        for (const auto& ray : rays) {
            if (ray.kind == RayKind::constant && ray.limit < 1 && !low) {
                Witness w;
                w.vertex = ray.anchor;
                w.tail_index = 1;
                w.value = ray.limit;
                low = w;
            }
        }
        report.verdicts[SimpleClass::expansive] =
            low ? make(Status::fails, *low) : make(Status::holds, std::nullopt);

        std::optional<Witness> zero;
        for (const auto& v : tree.vertices())
            if (table.at(v, 1) == 0 && !zero)
                zero = core_witness(v, 0, "dead vertex");
        report.verdicts[SimpleClass::bounded_below] =
            zero ? make(Status::fails, *zero) : make(Status::holds, std::nullopt);
    }

    // isometry
    {
        std::optional<Witness> off;
        for (const auto& v : tree.vertices())
            if (table.at(v, 1) != 1 && !off)
                off = core_witness(v, table.at(v, 1), "norm differs from 1");
        for (const auto& ray : rays) {
            if (off)
                break;
            bool ray_all_one = (ray.kind == RayKind::constant && ray.limit == 1) ||
                               ray.kind == RayKind::one_after_anchor;
            if (!ray_all_one) {
                Witness w;
                w.vertex = ray.anchor;
                w.tail_index = 1;
                w.value = ray.first;
                w.note = "ray norm differs from 1";
                off = w;
            }
        }
        report.verdicts[SimpleClass::isometry] =
            off ? make(Status::fails, *off) : make(Status::holds, std::nullopt);
    }

    // quasinormal (proper case): scalar multiple of an isometry, i.e. all
    // one-step norms agree.
    {
        const Rational common = table.at(tree.root(), 1);
        std::optional<Witness> off;
        for (const auto& v : tree.vertices())
            if (table.at(v, 1) != common && !off)
                off = core_witness(v, table.at(v, 1), "norm differs across vertices");
        for (const auto& ray : rays) {
            if (off)
                break;
            if (ray.kind == RayKind::constant || ray.kind == RayKind::one_after_anchor) {
                Rational value = (ray.kind == RayKind::constant) ? ray.limit : Rational(1);
                if (value != common) {
                    Witness w;
                    w.vertex = ray.anchor;
                    w.tail_index = 1;
                    w.value = value;
                    w.note = "ray norm differs across vertices";
                    off = w;
                }
            } else {
                // values start above 1 and tend to 1, so they cannot all
                // agree; find a position whose value differs from `common`.
                Witness w;
                w.vertex = ray.anchor;
                w.note = "ray norm differs across vertices";
                if (ray.first != common) {
                    w.tail_index = 1;
                    w.value = ray.first;
                } else {
                    std::uint64_t cap = std::max<std::uint64_t>(horizon, 64) * 16;
                    bool found = false;
                    for (std::uint64_t i = 2; i <= cap; ++i) {
                        Rational value = model.tail_orbit(ray.anchor, i + 1) /
                                         model.tail_orbit(ray.anchor, i);
                        if (value != common) {
                            w.tail_index = i;
                            w.value = value;
                            found = true;
                            break;
                        }
                    }
                    if (!found)
                        throw ConsistencyError("quasinormal witness scan exhausted");
                }
                off = w;
            }
        }
        report.verdicts[SimpleClass::quasinormal] =
            off ? make(Status::fails, *off) : make(Status::holds, std::nullopt);
    }

    return report;
}

} // namespace treeshift
