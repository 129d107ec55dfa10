#pragma once

#include "treeshift/shift_model.hpp"
#include "treeshift/sqrt_rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace treeshift {

/// Finite section of the shift on the span of all sites of depth <= D.
/// Entries are exact square roots of the squared model weights. Columns of
/// sites deeper than D - 1 miss children by construction; everything the
/// verifiers assert lives on a safe subspace where the truncation agrees
/// with the infinite operator.
class Truncation {
public:
    Truncation(const ShiftModel& model, std::uint64_t depth);

    std::size_t dim() const { return sites_.size(); }
    std::uint64_t depth() const { return depth_; }
    const std::vector<Site>& sites() const { return sites_; }
    std::size_t index_of(const Site& site) const;
    std::uint64_t site_depth(std::size_t i) const { return depths_[i]; }

    // Sparse structure: children indices per column, entry weight per site.
    const std::vector<std::size_t>& children_of(std::size_t i) const { return children_[i]; }
    std::size_t parent(std::size_t i) const { return parents_[i]; } // root maps to itself
    const SqrtRat& weight(std::size_t i) const { return weights_[i]; }

    // Sites v with depth(v) + n <= D; S^n and its column norms are exact there.
    std::vector<std::size_t> safe_sites(std::uint64_t n) const;

    // S_D^n e_v, sparse.
    std::map<std::size_t, SqrtRat> power_column(std::size_t v, std::uint64_t n) const;
    // (S_D*)^n e_v, sparse (real weights, so the adjoint is the transpose).
    std::map<std::size_t, SqrtRat> adjoint_power_column(std::size_t v, std::uint64_t n) const;

    // Column squared norm of S_D at site i (sum over present children).
    Rational column_norm_sq(std::size_t i) const;

    std::vector<std::vector<double>> dense_double() const;

private:
    std::uint64_t depth_;
    std::vector<Site> sites_;
    std::vector<std::uint64_t> depths_;
    std::vector<std::size_t> parents_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<SqrtRat> weights_;
    std::map<std::string, std::size_t> index_;
};

struct PsdResult {
    bool psd = true;
    // When not psd: x with x^T M x < 0, in the matrix coordinates.
    std::vector<Rational> witness;
    Rational witness_value; // x^T M x
};

// Exact test by symmetric elimination with diagonal pivoting; no floating
// point, no eigenvalues. Witnesses are reconstructed through the elimination
// so they evaluate negative on the input matrix.
PsdResult is_positive_semidefinite(std::vector<std::vector<Rational>> matrix);

Rational quadratic_form(const std::vector<std::vector<Rational>>& matrix,
                        const std::vector<Rational>& x);

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

struct OracleReport {
    bool pass = true;
    std::vector<CheckLine> lines;

    void add(const std::string& name, bool ok, const std::string& detail = "");
};

// Matrix powers against the product formula: S^n e_v hits exactly the n-th
// children of v with the ancestor-path weight products, and the adjoint
// powers collapse to single basis vectors. Exact on the safe subspace, and
// within 1e-10 in the double-precision rebuild.
OracleReport verify_power_formula(const ShiftModel& model, std::uint64_t depth, std::uint64_t n);

struct HypoReport {
    OracleReport report;
    bool psd = false;      // commutator compression positive semidefinite
    bool expected = false; // h <= 1 on all parents whose blocks are safe
    PsdResult psd_result;
};

// Compression of S*S - SS* to the depth-safe subspace, decided exactly after
// a weight-diagonal congruence that clears the square roots. Must agree with
// the h-criterion sign on the safe parents.
HypoReport verify_hyponormal(const ShiftModel& model, std::uint64_t depth);

struct AnReport {
    OracleReport report;
    std::vector<bool> nsd;  // per n = 1..n_max
    std::vector<bool> zero; // compression exactly zero
};

// Builds the alternating forms A_n both by the recurrence
// A_{n+1} = A_n - S* A_n S and by the binomial sum, checks they agree
// entrywise, that the safe compressions are diagonal, that the diagonal
// matches the finite-difference oracle, and reports their signs.
AnReport verify_An(const ShiftModel& model, std::uint64_t depth, std::uint64_t n_max);

} // namespace treeshift
