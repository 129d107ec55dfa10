#pragma once

#include "treeshift/measure.hpp"
#include "treeshift/verdict.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace treeshift {

/// Completely alternating sequence in closed form: a_n is a_0 plus the
/// integral of 1 + t + ... + t^(n-1) against the measure. Any choice of a_0
/// and positive measure generates a valid (monotone increasing) sequence.
struct CASeq {
    Rational a0;
    AtomicMeasure measure;

    bool operator==(const CASeq&) const = default;
};

Rational seq_value(const CASeq& seq, std::uint64_t n);

std::vector<Rational> seq_prefix(const CASeq& seq, std::uint64_t length);

/// Triangular table of finite differences
///   A(m, n) = sum_{j<=n} (-1)^j C(n,j) a_{m+j}
/// built by the recursion A(m, n+1) = A(m, n) - A(m+1, n).
class DiffTable {
public:
    DiffTable(std::span<const Rational> prefix, std::uint64_t order);

    const Rational& at(std::uint64_t m, std::uint64_t n) const; // m + n <= order
    std::uint64_t order() const { return order_; }

private:
    std::uint64_t order_;
    std::vector<std::vector<Rational>> rows_; // rows_[n][m]
};

// Direct binomial-sum evaluation, independent of the table recursion.
Rational alternating_sum(std::span<const Rational> values, std::uint64_t m, std::uint64_t n);

// Tests A(m, n) <= 0 for all n >= 1 with m + n <= order. A pass is only
// knowledge up to the tested order and horizon_used records it.
ClassVerdict is_ca_prefix(std::span<const Rational> prefix, std::uint64_t order);

struct CAExtension {
    CASeq extended;                // generates a_{n-k}; extended.a0 == 1
    std::vector<Rational> prefix;  // a_{-k}, ..., a_{-1}
};

// Backward extension by k steps pinned at a_{-k} = 1. Exists iff the measure
// has no atom at zero and the inverse-power sum is at most a_0 - 1; the
// extended measure pushes each atom mass from m to m/t^k and puts whatever
// is left of a_0 - 1 on an atom at zero.
std::optional<CAExtension> ca_extend(const CASeq& seq, std::uint64_t k);

} // namespace treeshift
