#pragma once

#include "treeshift/rational.hpp"
#include "treeshift/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace treeshift {

enum class Status {
    holds,
    fails,
    inconclusive, // passed every test up to the horizon, no closure argument
};

// Counterexample data. Every "fails" verdict carries one and it re-evaluates
// to a violation by the defining formula of the check that produced it.
struct Witness {
    VertexId vertex;                         // empty for pure sequence checks
    std::optional<std::uint64_t> tail_index; // set when the site is a ray position
    std::int64_t m = 0;                      // sequence index, where applicable
    std::int64_t n = 0;                      // order (power k or difference order)
    Rational value;                          // the violating quantity
    std::string note;
};

struct ClassVerdict {
    Status status = Status::holds;
    std::optional<Witness> witness;
    std::uint64_t horizon_used = 0;

    bool ok() const { return status == Status::holds; }
};

std::string status_to_string(Status status);

} // namespace treeshift
