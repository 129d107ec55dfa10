#pragma once

#include "treeshift/classify.hpp"
#include "treeshift/shift_model.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace treeshift {

enum class OperatorClass {
    bounded,
    contraction,
    bounded_below,
    expansive,
    isometry,
    scalar_isometry,
    hyponormal,
    power_hyponormal,
    completely_hyperexpansive,
};

std::string operator_class_name(OperatorClass c);

struct ExtensionCertificate {
    OperatorClass cls;
    std::uint64_t k = 0;
    // Squared weights assigned to the new chain vertices (keyed by vertex id;
    // for joint constructions, keyed by the embedded member roots).
    std::map<VertexId, Rational> new_weights_sq;
    ShiftModel model; // the extended / joint model, re-verified in class
    // Named quantities from the construction (C0, C, theta, a_j, C_j, D_j...).
    std::vector<std::pair<std::string, Rational>> condition_values;

    std::optional<Rational> condition(const std::string& name) const;
};

struct JointSpec {
    std::vector<ShiftModel> members;
    std::uint64_t k = 0;
};

// Constant-weight k-step extension with the new squared weights all equal to
// ||S e_root||^2. Works for the classes listed; throws StructuralError when
// the model is not in the requested class.
ExtensionCertificate trivial_extend(const ShiftModel& model, OperatorClass cls, std::uint64_t k);

// Equal splitting 1/deg among children, unit tails: a proper isometry on any
// leafless (tail-marked) countable tree.
ShiftModel isometry_weights(const DirectedTree& tree, const std::set<VertexId>& tails);

// Power hyponormal k-step backward extension. The obstruction is the family
//   B(n, m) = sum over n-th children u of lambda^(n)_u^2 / ||S^(n+m) e_u||^2,
// n >= 0, 1 <= m <= k, which must be bounded; the new chain carries one
// constant squared weight theta with theta^m * sup_n B(n, m) <= 1 for all m.
std::optional<ExtensionCertificate> powhyp_kstep(const ShiftModel& model, std::uint64_t k,
                                                 std::uint64_t horizon);

// Joint power hyponormal extension onto the rooted sum: succeeds exactly when
// every member admits a (k+1)-step extension, with root weights a_j chosen so
// that sum a_j C_j = 1 for the members' extension constants C_j.
std::optional<ExtensionCertificate> powhyp_joint(const JointSpec& spec, std::uint64_t horizon);

// Completely hyperexpansive k-step extension: exists iff
// C0 = integral of 1/t + ... + 1/t^k against the root measure is < 1.
// Scales the root sequence by C = 1/(1 - C0), extends it pinned at 1, and
// reads the chain weights off consecutive quotients.
std::optional<ExtensionCertificate> che_kstep(const ShiftModel& model, std::uint64_t k);

// Joint completely hyperexpansive extension onto the rooted sum, from members
// each admitting a (k+1)-step extension (D_j < 1); root weights a_j satisfy
// sum a_j (1 - C_j) = 1 exactly, C_j the first inverse moment.
std::optional<ExtensionCertificate> che_joint(const JointSpec& spec);

// Enveloping tree of uniform depth k whose depth-k vertices receive the
// members; vertices not mapped are filled with blank isometric rays.
struct DepthCap {
    DirectedTree tree;
    std::map<VertexId, std::size_t> attach; // depth-k vertex -> member index
};

// Fills all cap weights level by level with the joint construction. The
// outcome depends only on the members, not on the cap shape.
std::optional<ShiftModel> joint_extend_at_depth(const DepthCap& cap,
                                                const std::vector<ShiftModel>& members,
                                                OperatorClass cls, std::uint64_t horizon);

// For a k-step-extendable completely hyperexpansive model, some n-th child
// always carries a shift admitting an (n+k)-step extension; returns one.
// Not finding any is an internal inconsistency, never a user error.
Site che_witness_finder(const ShiftModel& model, std::uint64_t n, std::uint64_t k);

// The properness counterexample: an isometric branch glued by a zero weight
// to a non-isometric completely hyperexpansive branch. Completely
// hyperexpansive and k-step extendable for every k, yet not an isometry.
ShiftModel glue_demo();

} // namespace treeshift
