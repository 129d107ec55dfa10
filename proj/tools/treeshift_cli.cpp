// treeshift: verification and construction toolkit for weighted shifts on
// rooted directed trees.
//
// Subcommands: check, extend, joint, demo, oracle. All results are JSON on
// stdout. Exit codes: 0 = holds / constructed, 1 = fails / no extension,
// 2 = input or structural error, 3 = inconclusive at the configured horizon.

#include "treeshift/classify.hpp"
#include "treeshift/extend.hpp"
#include "treeshift/json_io.hpp"
#include "treeshift/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace treeshift;
using Json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::uint64_t horizon = 64; // norm/ray horizon N
    std::uint64_t order = 8;    // power order K
    std::uint64_t depth = 12;   // truncation depth D
    std::string mode = "exact";

    NumericMode numeric() const {
        return mode == "float" ? NumericMode::floating : NumericMode::exact;
    }
};

void add_config_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--horizon", cfg.horizon, "norm horizon N (default 64)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--order", cfg.order, "power order K (default 8)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--depth", cfg.depth, "truncation depth D (default 12)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--mode", cfg.mode, "numeric mode: exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw StructuralError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ShiftModel load_model(const std::string& path) {
    return model_from_json_text(read_file(path));
}

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

int verdict_exit(const ClassVerdict& v) {
    switch (v.status) {
    case Status::holds:
        return 0;
    case Status::fails:
        return 1;
    case Status::inconclusive:
        return 3;
    }
    return 2;
}

Json parse_sub(const std::string& text) { return Json::parse(text); }

Json rational_out(const Rational& value, NumericMode mode) {
    if (mode == NumericMode::exact)
        return rational_to_string(value);
    double d = to_double(value);
    if (!std::isfinite(d))
        return rational_to_string(value); // out of double range, stay exact
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return Json::parse(buf);
}

// ---- check ---------------------------------------------------------------

int run_check(const std::string& path, const std::string& cls, const RunConfig& cfg,
              const std::string& norms_csv) {
    ShiftModel model = load_model(path);
    if (!norms_csv.empty()) {
        std::ofstream out(norms_csv);
        out << norm_table_csv(model, cfg.horizon);
    }

    ClassVerdict verdict;
    Json extra;
    if (cls == "powhyp") {
        verdict = check_power_hyponormal(model, cfg.order, cfg.horizon);
    } else if (cls == "hyponormal") {
        verdict = check_hyponormal(model);
    } else if (cls == "che") {
        CheResult che = check_che(model, cfg.horizon);
        verdict = che.verdict;
        if (verdict.ok()) {
            Json measures = Json::object();
            for (const auto& [v, tau] : che.measures)
                measures[v] = parse_sub(measure_to_json_text(tau, cfg.numeric()));
            extra["measures"] = std::move(measures);
        }
    } else {
        SimpleClassReport report = check_simple_classes(model, cfg.horizon);
        std::map<std::string, SimpleClass> names{
            {"bounded", SimpleClass::bounded},       {"below", SimpleClass::bounded_below},
            {"contraction", SimpleClass::contraction}, {"expansive", SimpleClass::expansive},
            {"isometry", SimpleClass::isometry},     {"quasinormal", SimpleClass::quasinormal},
        };
        auto it = names.find(cls);
        if (it == names.end())
            throw StructuralError("unknown class '" + cls + "'");
        verdict = report.verdicts.at(it->second);
        extra["sup_sq"] = rational_out(report.sup_sq, cfg.numeric());
        extra["inf_sq"] = rational_out(report.inf_sq, cfg.numeric());
    }

    Json out = parse_sub(verdict_to_json_text(cls, verdict, cfg.numeric()));
    for (auto& [key, value] : extra.items())
        out[key] = value;
    emit(out);
    return verdict_exit(verdict);
}

// ---- extend ----------------------------------------------------------------

OperatorClass trivial_class_from_name(const std::string& name) {
    std::map<std::string, OperatorClass> names{
        {"bounded", OperatorClass::bounded},
        {"contraction", OperatorClass::contraction},
        {"below", OperatorClass::bounded_below},
        {"expansive", OperatorClass::expansive},
        {"isometry", OperatorClass::isometry},
        {"scalar-isometry", OperatorClass::scalar_isometry},
        {"hyponormal", OperatorClass::hyponormal},
    };
    auto it = names.find(name);
    if (it == names.end())
        throw StructuralError("unknown trivial extension class '" + name + "'");
    return it->second;
}

int run_extend(const std::string& path, const std::string& cls, std::uint64_t k,
               const RunConfig& cfg) {
    ShiftModel model = load_model(path);

    if (cls.rfind("trivial:", 0) == 0) {
        OperatorClass target = trivial_class_from_name(cls.substr(8));
        try {
            ExtensionCertificate cert = trivial_extend(model, target, k);
            emit(parse_sub(certificate_to_json_text(cert, cfg.numeric())));
            return 0;
        } catch (const StructuralError& e) {
            emit(Json{{"class", cls}, {"k", k}, {"exists", false}, {"reason", e.what()}});
            return 1;
        }
    }

    if (cls == "powhyp") {
        auto cert = powhyp_kstep(model, k, cfg.horizon);
        if (cert) {
            emit(parse_sub(certificate_to_json_text(*cert, cfg.numeric())));
            return 0;
        }
        ClassVerdict member = check_power_hyponormal(model, cfg.order, cfg.horizon);
        Json out{{"class", cls}, {"k", k}, {"exists", false}};
        out["membership"] = parse_sub(verdict_to_json_text("powhyp", member, cfg.numeric()));
        emit(out);
        return 1;
    }

    if (cls == "che") {
        auto cert = che_kstep(model, k);
        if (cert) {
            emit(parse_sub(certificate_to_json_text(*cert, cfg.numeric())));
            return 0;
        }
        Json out{{"class", cls}, {"k", k}, {"exists", false}};
        CheResult che = check_che(model, cfg.horizon);
        if (che.verdict.ok()) {
            Moment c0 = inverse_power_sum(che.measures.at(model.tree().root()), k);
            out["condition_values"]["C0"] =
                c0.is_infinite() ? Json("inf") : rational_out(c0.value(), cfg.numeric());
        } else {
            out["membership"] =
                parse_sub(verdict_to_json_text("che", che.verdict, cfg.numeric()));
        }
        emit(out);
        return 1;
    }

    throw StructuralError("unknown extension class '" + cls + "'");
}

// ---- joint -----------------------------------------------------------------

DepthCap load_cap(const std::string& path) {
    Json j = Json::parse(read_file(path));
    if (!j.contains("tree") || !j.contains("attach"))
        throw StructuralError("cap json: needs tree and attach");
    Json model_like{{"tree", j.at("tree")}};
    // reuse the model tree parser through a weightless model wrapper
    std::vector<VertexId> vertices;
    for (const auto& v : j.at("tree").at("vertices"))
        vertices.push_back(v.get<std::string>());
    VertexId root = j.at("tree").at("root").get<std::string>();
    std::map<VertexId, VertexId> parent;
    for (const auto& [child, par] : j.at("tree").at("parent").items())
        parent[child] = par.get<std::string>();
    parent[root] = root;
    DepthCap cap;
    cap.tree = DirectedTree::from_parent_map(std::move(vertices), std::move(parent));
    for (const auto& [v, idx] : j.at("attach").items())
        cap.attach[v] = idx.get<std::size_t>();
    return cap;
}

int run_joint(const std::vector<std::string>& paths, const std::string& cls, std::uint64_t k,
              const std::string& cap_path, const RunConfig& cfg) {
    JointSpec spec;
    spec.k = k;
    for (const auto& p : paths)
        spec.members.push_back(load_model(p));

    if (!cap_path.empty()) {
        if (cls != "powhyp")
            throw StructuralError("--cap joins are wired for the powhyp class only");
        DepthCap cap = load_cap(cap_path);
        auto model = joint_extend_at_depth(cap, spec.members, OperatorClass::power_hyponormal,
                                           cfg.horizon);
        if (model) {
            Json out{{"class", cls}, {"cap_depth", cap.tree.height()}, {"exists", true}};
            out["model"] = parse_sub(model_to_json_text(*model));
            emit(out);
            return 0;
        }
        emit(Json{{"class", cls}, {"cap_depth", cap.tree.height()}, {"exists", false}});
        return 1;
    }

    if (cls == "powhyp") {
        auto cert = powhyp_joint(spec, cfg.horizon);
        if (cert) {
            emit(parse_sub(certificate_to_json_text(*cert, cfg.numeric())));
            return 0;
        }
        Json members = Json::array();
        for (std::size_t j = 0; j < spec.members.size(); ++j) {
            bool extendable = powhyp_kstep(spec.members[j], k + 1, cfg.horizon).has_value();
            members.push_back(Json{{"member", j + 1}, {"k1_step", extendable}});
        }
        emit(Json{{"class", cls}, {"k", k}, {"exists", false}, {"members", members}});
        return 1;
    }

    if (cls == "che") {
        auto cert = che_joint(spec);
        if (cert) {
            emit(parse_sub(certificate_to_json_text(*cert, cfg.numeric())));
            return 0;
        }
        Json members = Json::array();
        for (std::size_t j = 0; j < spec.members.size(); ++j) {
            Json entry{{"member", j + 1}};
            CheResult che = check_che(spec.members[j], cfg.horizon);
            entry["che"] = status_to_string(che.verdict.status);
            if (che.verdict.ok()) {
                Moment d = inverse_power_sum(
                    che.measures.at(spec.members[j].tree().root()), k + 1);
                entry["D"] = d.is_infinite() ? Json("inf")
                                             : rational_out(d.value(), cfg.numeric());
            }
            members.push_back(std::move(entry));
        }
        emit(Json{{"class", cls}, {"k", k}, {"exists", false}, {"members", members}});
        return 1;
    }

    throw StructuralError("unknown joint class '" + cls + "'");
}

// ---- demo ------------------------------------------------------------------

TailModel trivial_tail() { return TailModel{CASeq{1, AtomicMeasure{}}, 1}; }

ShiftModel two_arm_star(const Rational& alpha) {
    DirectedTree tree = DirectedTree::from_parent_map(
        {"0", "1,1", "2,1"}, {{"0", "0"}, {"1,1", "0"}, {"2,1", "0"}});
    return ShiftModel(std::move(tree), {{"1,1", alpha}, {"2,1", 1}},
                      {{"1,1", TailModel{CASeq{1, AtomicMeasure::dirac(1, 1)}, 1}},
                       {"2,1", trivial_tail()}});
}

ShiftModel constant_ray(const Rational& weight_sq) {
    return ShiftModel(DirectedTree::trivial("r"), {},
                      {{"r", TailModel{CASeq{1, AtomicMeasure{}}, weight_sq}}});
}

struct DemoAssertions {
    Json list = Json::array();
    bool pass = true;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        Json entry{{"name", name}, {"pass", ok}};
        if (!detail.empty())
            entry["detail"] = detail;
        list.push_back(std::move(entry));
        pass = pass && ok;
    }
};

int run_demo_che_nonjoint(std::uint64_t k, const Rational& alpha, const RunConfig& cfg,
                          Json& out) {
    if (k == 0 || alpha <= 0 || alpha * Rational(static_cast<unsigned long>(k)) >= 1)
        throw StructuralError("che-nonjoint needs k >= 1 and alpha in (0, 1/k)");
    ShiftModel star = two_arm_star(alpha);
    DemoAssertions a;

    NormTable table(star, cfg.horizon);
    bool branch_norms = true, root_norms = true;
    for (std::uint64_t n = 0; n <= cfg.horizon; ++n) {
        branch_norms =
            branch_norms && table.at("1,1", n) == Rational(static_cast<unsigned long>(n)) + 1;
        root_norms = root_norms &&
                     table.at("0", n) == alpha * Rational(static_cast<unsigned long>(n)) + 1;
    }
    a.add("branch-1 orbit norms are n+1", branch_norms);
    a.add("root orbit norms are alpha n + 1", root_norms);

    CheResult che = check_che(star, cfg.horizon);
    a.add("star is completely hyperexpansive", che.verdict.ok());
    if (che.verdict.ok())
        a.add("root measure is alpha at t=1",
              che.measures.at("0") == AtomicMeasure::dirac(1, alpha));

    auto cert = che_kstep(star, k);
    a.add("k-step extension exists", cert.has_value());
    if (cert) {
        Rational expect_c0 = alpha * Rational(static_cast<unsigned long>(k));
        a.add("C0 = k alpha", *cert->condition("C0") == expect_c0,
              rational_to_string(expect_c0));
        out["certificate"] = parse_sub(certificate_to_json_text(*cert, cfg.numeric()));
    }

    ShiftModel branch = restrict_to_subtree(star, "1,1");
    auto branch_cert = che_kstep(branch, 1);
    a.add("branch-1 restriction has no 1-step extension", !branch_cert.has_value());
    CheResult branch_che = check_che(branch, cfg.horizon);
    if (branch_che.verdict.ok()) {
        Moment c0 = inverse_power_sum(branch_che.measures.at("1,1"), 1);
        a.add("branch-1 obstruction C0 = 1", !c0.is_infinite() && c0.value() == 1);
    }

    out["models"]["star"] = parse_sub(model_to_json_text(star));
    out["models"]["branch1"] = parse_sub(model_to_json_text(branch));
    out["assertions"] = a.list;
    out["pass"] = a.pass;
    return a.pass ? 0 : 1;
}

int run_demo_below_fail(std::uint64_t members, const RunConfig& cfg, Json& out) {
    if (members < 2)
        throw StructuralError("below-fail needs at least 2 members");
    DemoAssertions a;
    Json bounds = Json::array();
    Rational previous = 2;
    bool vanishing = true, capped = true;
    for (std::uint64_t count = 2; count <= members; ++count) {
        std::vector<DirectedTree> trees;
        std::vector<ShiftModel> family;
        for (unsigned long n = 1; n <= count; ++n) {
            family.push_back(constant_ray(Rational(1, n * n)));
            trees.push_back(family.back().tree());
        }
        RootedSum sum = rooted_sum(trees);
        std::map<VertexId, Rational> weights;
        std::map<VertexId, TailModel> tails;
        Rational total = 0;
        for (std::size_t j = 0; j < family.size(); ++j) {
            const auto& embed = sum.member_embedding[j];
            for (const auto& [anchor, tail] : family[j].tails())
                tails[embed.at(anchor)] = tail;
            Rational theta = rational_pow(Rational(1, 2), static_cast<long>(j));
            weights[embed.at(family[j].tree().root())] = theta;
            total += theta;
        }
        ShiftModel joint(sum.tree, std::move(weights), std::move(tails));
        SimpleClassReport rep = check_simple_classes(joint, cfg.horizon);
        Rational bound(1, static_cast<unsigned long>(count * count));
        // the bound ignores the root weighting: the member vertices alone
        // pin the infimum below 1/N^2
        capped = capped && rep.inf_sq <= bound;
        vanishing = vanishing && rep.inf_sq < previous;
        previous = rep.inf_sq;
        bounds.push_back(Json{{"members", count},
                              {"inf_sq", rational_out(rep.inf_sq, cfg.numeric())},
                              {"bound", rational_out(bound, cfg.numeric())}});
    }
    a.add("infimum never exceeds 1/N^2", capped);
    a.add("infimum vanishes monotonically", vanishing);
    out["bounds"] = bounds;
    out["assertions"] = a.list;
    out["pass"] = a.pass;
    return a.pass ? 0 : 1;
}

int run_demo_glue(const RunConfig& cfg, Json& out) {
    ShiftModel glue = glue_demo();
    DemoAssertions a;
    a.add("model is not proper", !glue.is_proper());
    a.add("model is completely hyperexpansive", check_che(glue, cfg.horizon).verdict.ok());
    SimpleClassReport rep = check_simple_classes(glue, cfg.horizon);
    a.add("model is not an isometry", !rep.verdicts.at(SimpleClass::isometry).ok());
    bool all_k = true;
    for (std::uint64_t k = 1; k <= cfg.order; ++k)
        all_k = all_k && che_kstep(glue, k).has_value();
    a.add("k-step extensions exist for every tested k", all_k);
    out["models"]["glue"] = parse_sub(model_to_json_text(glue));
    out["assertions"] = a.list;
    out["pass"] = a.pass;
    return a.pass ? 0 : 1;
}

int run_demo_two_trees(const RunConfig& cfg, Json& out) {
    DirectedTree cap_a = DirectedTree::from_parent_map(
        {"w", "x", "y", "p1", "p2", "p3", "p4"},
        {{"w", "w"}, {"x", "w"}, {"y", "x"}, {"p1", "y"}, {"p2", "y"}, {"p3", "y"}, {"p4", "y"}});
    DirectedTree cap_b = DirectedTree::from_parent_map(
        {"w", "l", "r", "ll", "lr", "rl", "rr", "p1", "p2", "p3", "p4"},
        {{"w", "w"},
         {"l", "w"},
         {"r", "w"},
         {"ll", "l"},
         {"lr", "l"},
         {"rl", "r"},
         {"rr", "r"},
         {"p1", "ll"},
         {"p2", "lr"},
         {"p3", "rl"},
         {"p4", "rr"}});
    std::map<VertexId, std::size_t> attach{{"p1", 0}, {"p2", 1}, {"p3", 2}, {"p4", 3}};

    std::vector<ShiftModel> good{constant_ray(1), constant_ray(4), constant_ray(Rational(1, 4)),
                                 constant_ray(2)};
    std::vector<ShiftModel> bad = good;
    bad[1] = ShiftModel(DirectedTree::trivial("r"), {},
                        {{"r", TailModel{CASeq{1, AtomicMeasure::dirac(1, 1)}, 1}}});

    DemoAssertions a;
    auto ga = joint_extend_at_depth({cap_a, attach}, good, OperatorClass::power_hyponormal,
                                    cfg.horizon);
    auto gb = joint_extend_at_depth({cap_b, attach}, good, OperatorClass::power_hyponormal,
                                    cfg.horizon);
    a.add("both caps succeed on extendable members", ga.has_value() && gb.has_value());
    auto ba = joint_extend_at_depth({cap_a, attach}, bad, OperatorClass::power_hyponormal,
                                    cfg.horizon);
    auto bb = joint_extend_at_depth({cap_b, attach}, bad, OperatorClass::power_hyponormal,
                                    cfg.horizon);
    a.add("both caps fail once a member fails", !ba.has_value() && !bb.has_value());
    a.add("outcomes agree across the caps",
          ga.has_value() == gb.has_value() && ba.has_value() == bb.has_value());
    if (ga)
        out["models"]["cap_a"] = parse_sub(model_to_json_text(*ga));
    out["assertions"] = a.list;
    out["pass"] = a.pass;
    return a.pass ? 0 : 1;
}

// ---- oracle ----------------------------------------------------------------

int run_oracle(const std::string& path, const RunConfig& cfg) {
    ShiftModel model = load_model(path);
    std::uint64_t n = std::min<std::uint64_t>(cfg.order, cfg.depth > 1 ? cfg.depth / 2 : 1);
    OracleReport powers = verify_power_formula(model, cfg.depth, std::min<std::uint64_t>(n, 4));
    HypoReport hypo = verify_hyponormal(model, cfg.depth);
    AnReport an = verify_An(model, cfg.depth, std::min<std::uint64_t>(n, 4));

    Json out;
    out["power_formula"] = parse_sub(oracle_report_to_json_text(powers));
    Json hj = parse_sub(oracle_report_to_json_text(hypo.report));
    hj["psd"] = hypo.psd;
    if (!hypo.psd) {
        // witness lives in the weight-scaled coordinates of the compression
        Json witness = Json::array();
        for (const auto& x : hypo.psd_result.witness)
            witness.push_back(rational_out(x, cfg.numeric()));
        hj["witness"] = std::move(witness);
        hj["witness_value"] = rational_out(hypo.psd_result.witness_value, cfg.numeric());
    }
    out["hyponormal"] = std::move(hj);
    Json aj = parse_sub(oracle_report_to_json_text(an.report));
    aj["nsd"] = an.nsd;
    aj["zero"] = an.zero;
    out["alternating_forms"] = std::move(aj);
    bool pass = powers.pass && hypo.report.pass && an.report.pass;
    out["pass"] = pass;
    emit(out);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted shifts on rooted directed trees: class checks, backward "
                 "extensions, joint extensions, matrix oracle"};
    app.require_subcommand(1);

    RunConfig cfg;

    // check
    auto* check = app.add_subcommand("check", "decide membership in an operator class");
    std::string check_path, check_class, norms_csv;
    check->add_option("model", check_path, "model json file")->required();
    check->add_option("--class", check_class,
                      "bounded|below|contraction|expansive|isometry|quasinormal|"
                      "hyponormal|powhyp|che")
        ->required();
    check->add_option("--norms-csv", norms_csv, "dump the norm table as csv");
    add_config_flags(check, cfg);

    // extend
    auto* extend = app.add_subcommand("extend", "construct a k-step backward extension");
    std::string extend_path, extend_class;
    std::uint64_t extend_k = 1;
    extend->add_option("model", extend_path)->required();
    extend->add_option("--class", extend_class, "powhyp | che | trivial:<class>")->required();
    extend->add_option("-k,--k", extend_k, "number of steps")->required();
    add_config_flags(extend, cfg);

    // joint
    auto* joint = app.add_subcommand("joint", "joint extension onto a rooted sum or cap");
    std::vector<std::string> joint_paths;
    std::string joint_class, cap_path;
    std::uint64_t joint_k = 0;
    joint->add_option("models", joint_paths, "member model json files")->required();
    joint->add_option("--class", joint_class, "powhyp | che")->required();
    joint->add_option("-k,--k", joint_k, "steps the joint shift must still admit");
    joint->add_option("--cap", cap_path, "enveloping tree json ({tree, attach})");
    add_config_flags(joint, cfg);

    // demo
    auto* demo = app.add_subcommand("demo", "scripted reproductions of the worked examples");
    std::string demo_name, alpha_text = "2/5";
    std::uint64_t demo_k = 2, demo_members = 8;
    demo->add_option("name", demo_name, "che-nonjoint | below-fail | glue | two-trees")
        ->required();
    demo->add_option("--k", demo_k, "steps (che-nonjoint)");
    demo->add_option("--alpha", alpha_text, "branch weight (che-nonjoint), p/q in (0,1/k)");
    demo->add_option("--members", demo_members, "family size (below-fail)");
    add_config_flags(demo, cfg);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "run the truncated-matrix verifiers");
    std::string oracle_path;
    oracle->add_option("model", oracle_path)->required();
    add_config_flags(oracle, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(check_path, check_class, cfg, norms_csv);
        if (extend->parsed())
            return run_extend(extend_path, extend_class, extend_k, cfg);
        if (joint->parsed())
            return run_joint(joint_paths, joint_class, joint_k, cap_path, cfg);
        if (demo->parsed()) {
            Json out;
            out["demo"] = demo_name;
            int code;
            if (demo_name == "che-nonjoint") {
                out["params"] = Json{{"k", demo_k}, {"alpha", alpha_text}};
                code = run_demo_che_nonjoint(demo_k, parse_rational(alpha_text), cfg, out);
            } else if (demo_name == "below-fail") {
                out["params"] = Json{{"members", demo_members}};
                code = run_demo_below_fail(demo_members, cfg, out);
            } else if (demo_name == "glue") {
                code = run_demo_glue(cfg, out);
            } else if (demo_name == "two-trees") {
                code = run_demo_two_trees(cfg, out);
            } else {
                throw StructuralError("unknown demo '" + demo_name + "'");
            }
            emit(out);
            return code;
        }
        if (oracle->parsed())
            return run_oracle(oracle_path, cfg);
    } catch (const ConsistencyError& e) {
        emit(Json{{"error", e.what()}, {"internal", true}});
        return 2;
    } catch (const std::exception& e) {
        emit(Json{{"error", e.what()}});
        return 2;
    }
    return 2;
}
