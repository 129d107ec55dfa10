#include "treeshift/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace treeshift {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value, NumericMode mode) {
    if (mode == NumericMode::exact)
        return rational_to_string(value);
    double d = to_double(value);
    if (!std::isfinite(d))
        return rational_to_string(value); // out of double range, stay exact
    // 17 significant digits round-trip any double
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return Json::parse(buf, nullptr, true);
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw StructuralError("model json: " + where + " must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

Json measure_json(const AtomicMeasure& measure, NumericMode mode) {
    Json out = Json::array();
    for (const auto& atom : measure.atoms()) {
        Json entry;
        entry["t"] = rational_json(atom.t, mode);
        entry["mass"] = rational_json(atom.mass, mode);
        out.push_back(std::move(entry));
    }
    return out;
}

AtomicMeasure measure_from_json(const Json& j, const std::string& where) {
    if (!j.is_array())
        throw StructuralError("model json: " + where + " must be an array of atoms");
    std::vector<Atom> atoms;
    for (const auto& entry : j) {
        if (!entry.contains("t") || !entry.contains("mass"))
            throw StructuralError("model json: atom in " + where + " needs t and mass");
        // parsed into named locals: gcc 11 leaks earlier members of a braced
        // temporary when a later initializer throws
        Rational t = rational_from_json(entry.at("t"), where + ".t");
        Rational mass = rational_from_json(entry.at("mass"), where + ".mass");
        atoms.push_back(Atom{std::move(t), std::move(mass)});
    }
    return AtomicMeasure::from_atoms(std::move(atoms));
}

Json model_json(const ShiftModel& model) {
    Json tree;
    tree["vertices"] = Json::array();
    for (const auto& v : model.tree().vertices())
        tree["vertices"].push_back(v);
    tree["root"] = model.tree().root();
    Json parent = Json::object();
    for (const auto& v : model.tree().vertices())
        if (v != model.tree().root())
            parent[v] = model.tree().parent_of(v);
    tree["parent"] = std::move(parent);

    Json weights = Json::object();
    for (const auto& [v, w] : model.weights_sq())
        weights[v] = rational_to_string(w);

    Json tails = Json::object();
    for (const auto& [anchor, tail] : model.tails()) {
        Json t;
        t["a0"] = rational_to_string(tail.generator.a0);
        t["measure"] = measure_json(tail.generator.measure, NumericMode::exact);
        if (tail.scale_sq != 1)
            t["scale_sq"] = rational_to_string(tail.scale_sq);
        tails[anchor] = std::move(t);
    }

    Json out;
    out["tree"] = std::move(tree);
    out["weights_sq"] = std::move(weights);
    out["tails"] = std::move(tails);
    return out;
}

Json site_json(const VertexId& vertex, const std::optional<std::uint64_t>& tail_index) {
    Json site;
    site["vertex"] = vertex;
    if (tail_index)
        site["tail_index"] = *tail_index;
    return site;
}

Json witness_json(const Witness& w, NumericMode mode) {
    Json out;
    if (!w.vertex.empty())
        out["site"] = site_json(w.vertex, w.tail_index);
    out["m"] = w.m;
    out["n"] = w.n;
    out["value"] = rational_json(w.value, mode);
    if (!w.note.empty())
        out["note"] = w.note;
    return out;
}

Json verdict_json(const std::string& class_name, const ClassVerdict& verdict, NumericMode mode) {
    Json out;
    out["class"] = class_name;
    out["status"] = status_to_string(verdict.status);
    out["witness"] = verdict.witness ? witness_json(*verdict.witness, mode) : Json(nullptr);
    out["horizon"] = verdict.horizon_used;
    return out;
}

std::string dump(const Json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

} // namespace

ShiftModel model_from_json_text(const std::string& text, bool strict) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw StructuralError(std::string("model json: ") + e.what());
    }
    if (!j.contains("tree"))
        throw StructuralError("model json: missing tree");
    const Json& tree_j = j.at("tree");
    if (!tree_j.contains("vertices") || !tree_j.contains("root") || !tree_j.contains("parent"))
        throw StructuralError("model json: tree needs vertices, root and parent");

    std::vector<VertexId> vertices;
    for (const auto& v : tree_j.at("vertices")) {
        if (!v.is_string())
            throw StructuralError("model json: vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    VertexId root = tree_j.at("root").get<std::string>();
    std::map<VertexId, VertexId> parent;
    for (const auto& [child, par] : tree_j.at("parent").items())
        parent[child] = par.get<std::string>();
    parent[root] = root;
    DirectedTree tree = DirectedTree::from_parent_map(std::move(vertices), std::move(parent));

    std::map<VertexId, Rational> weights;
    if (j.contains("weights_sq"))
        for (const auto& [v, w] : j.at("weights_sq").items())
            weights[v] = rational_from_json(w, "weights_sq." + v);

    std::map<VertexId, TailModel> tails;
    if (j.contains("tails")) {
        for (const auto& [anchor, t] : j.at("tails").items()) {
            TailModel tail;
            tail.generator.a0 =
                t.contains("a0") ? rational_from_json(t.at("a0"), "a0") : Rational(1);
            if (t.contains("measure"))
                tail.generator.measure = measure_from_json(t.at("measure"), "tails." + anchor);
            if (t.contains("scale_sq"))
                tail.scale_sq = rational_from_json(t.at("scale_sq"), "scale_sq");
            tails[anchor] = std::move(tail);
        }
    }

    ShiftModel model(std::move(tree), std::move(weights), std::move(tails));
    if (strict) {
        for (const auto& [v, w] : model.weights_sq())
            if (w == 0)
                throw StructuralError("model json: zero weight off the root at '" + v + "'");
        if (!model.is_leafless()) {
            for (const auto& v : model.tree().vertices())
                if (model.tree().degree(v) == 0 && !model.has_tail(v))
                    throw StructuralError("model json: leaf without a tail at '" + v + "'");
        }
    }
    return model;
}

std::string model_to_json_text(const ShiftModel& model, int indent) {
    return dump(model_json(model), indent);
}

std::string verdict_to_json_text(const std::string& class_name, const ClassVerdict& verdict,
                                 NumericMode mode, int indent) {
    return dump(verdict_json(class_name, verdict, mode), indent);
}

std::string certificate_to_json_text(const ExtensionCertificate& cert, NumericMode mode,
                                     int indent) {
    Json out;
    out["class"] = operator_class_name(cert.cls);
    out["k"] = cert.k;
    Json weights = Json::object();
    for (const auto& [v, w] : cert.new_weights_sq)
        weights[v] = rational_json(w, mode);
    out["new_weights_sq"] = std::move(weights);
    Json conditions = Json::object();
    for (const auto& [name, value] : cert.condition_values)
        conditions[name] = rational_json(value, mode);
    out["condition_values"] = std::move(conditions);
    out["model"] = model_json(cert.model);
    return dump(out, indent);
}

std::string simple_report_to_json_text(const SimpleClassReport& report, NumericMode mode,
                                       int indent) {
    Json out;
    out["sup_sq"] = rational_json(report.sup_sq, mode);
    out["inf_sq"] = rational_json(report.inf_sq, mode);
    out["inf_attained"] = report.inf_attained;
    Json verdicts = Json::object();
    for (const auto& [cls, verdict] : report.verdicts)
        verdicts[simple_class_name(cls)] = Json::parse(
            verdict_to_json_text(simple_class_name(cls), verdict, mode));
    out["verdicts"] = std::move(verdicts);
    return dump(out, indent);
}

std::string oracle_report_to_json_text(const OracleReport& report, int indent) {
    Json out;
    out["pass"] = report.pass;
    Json lines = Json::array();
    for (const auto& line : report.lines) {
        Json l;
        l["name"] = line.name;
        l["pass"] = line.pass;
        if (!line.detail.empty())
            l["detail"] = line.detail;
        lines.push_back(std::move(l));
    }
    out["lines"] = std::move(lines);
    return dump(out, indent);
}

std::string measure_to_json_text(const AtomicMeasure& measure, NumericMode mode, int indent) {
    return dump(measure_json(measure, mode), indent);
}

} // namespace treeshift
