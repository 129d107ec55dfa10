#pragma once

#include "treeshift/shift_model.hpp"
#include "treeshift/verdict.hpp"

#include <cstdint>
#include <map>

namespace treeshift {

// h^<k>(site) = sum over the k-th children u of lambda^(k)_u^2 / ||S^k e_u||^2.
// All powers of the shift are hyponormal exactly when this never exceeds 1
// (and the tree is leafless). Requires a proper, leafless model so the
// denominators are positive.
Rational h_value(const ShiftModel& model, const Site& site, std::uint64_t k);

// Plain hyponormality (the k = 1 case). Exact: a measured tail always
// violates h at its anchor, and measureless rays have h identically 1.
ClassVerdict check_hyponormal(const ShiftModel& model);

// Decides power hyponormality. Core vertices are scanned for orders
// k = 1..max(order_k, core height + 1); values stabilize beyond the core
// height when no tail carries a measure, which makes the verdict exact for
// every model that can pass at all (a measured tail always fails at its
// anchor). Ray positions are scanned up to ray_horizon.
ClassVerdict check_power_hyponormal(const ShiftModel& model, std::uint64_t order_k,
                                    std::uint64_t ray_horizon);

struct CheResult {
    ClassVerdict verdict;
    // Representing measure of {||S^n e_v||^2}_n for every core vertex,
    // present when the verdict holds.
    std::map<VertexId, AtomicMeasure> measures;
};

// Decides complete hyperexpansivity exactly by propagating representing
// measures from the tails to the root: the orbit sequence of a parent is CA
// precisely when its shifted measure has no atom at zero and leaves a
// nonnegative remainder for the atom at zero of the one-step extension.
CheResult check_che(const ShiftModel& model, std::uint64_t horizon);

enum class SimpleClass {
    bounded,
    contraction,
    expansive,
    bounded_below,
    isometry,
    quasinormal, // proper quasinormal = scalar multiple of an isometry
};

std::string simple_class_name(SimpleClass c);

struct SimpleClassReport {
    Rational sup_sq;   // operator norm squared
    Rational inf_sq;   // infimum of ||S e_site||^2 (may be a limit, not attained)
    bool inf_attained;
    std::map<SimpleClass, ClassVerdict> verdicts;
};

SimpleClassReport check_simple_classes(const ShiftModel& model, std::uint64_t horizon);

} // namespace treeshift
