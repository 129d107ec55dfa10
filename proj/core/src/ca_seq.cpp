#include "treeshift/ca_seq.hpp"

#include "treeshift/errors.hpp"

namespace treeshift {

Rational seq_value(const CASeq& seq, std::uint64_t n) {
    Rational sum = seq.a0;
    for (const auto& atom : seq.measure.atoms()) {
        if (atom.t == 1) {
            sum += atom.mass * Rational(static_cast<unsigned long>(n));
        } else {
            // 1 + t + ... + t^(n-1); also right for t = 0 since 0^0 = 1
            sum += atom.mass * (1 - rational_pow(atom.t, static_cast<long>(n))) / (1 - atom.t);
        }
    }
    return sum;
}

std::vector<Rational> seq_prefix(const CASeq& seq, std::uint64_t length) {
    std::vector<Rational> out;
    out.reserve(length);
    // Incremental: a_{n+1} - a_n is the n-th moment of the measure.
    Rational value = seq.a0;
    std::vector<Rational> powers;
    for (const auto& atom : seq.measure.atoms())
        powers.push_back(atom.mass); // mass * t^0
    for (std::uint64_t n = 0; n < length; ++n) {
        out.push_back(value);
        const auto& atoms = seq.measure.atoms();
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            value += powers[i];
            powers[i] *= atoms[i].t;
        }
    }
    return out;
}

DiffTable::DiffTable(std::span<const Rational> prefix, std::uint64_t order) : order_(order) {
    if (prefix.size() < order + 1)
        throw StructuralError("diff_table: prefix shorter than order + 1");
    rows_.resize(order + 1);
    rows_[0].assign(prefix.begin(), prefix.end());
    for (std::uint64_t n = 1; n <= order; ++n) {
        const auto& prev = rows_[n - 1];
        auto& row = rows_[n];
        row.resize(prev.size() - 1);
        for (std::size_t m = 0; m + 1 < prev.size(); ++m)
            row[m] = prev[m] - prev[m + 1];
    }
}

const Rational& DiffTable::at(std::uint64_t m, std::uint64_t n) const {
    if (n >= rows_.size() || m >= rows_[n].size())
        throw StructuralError("diff_table: index out of range");
    return rows_[n][m];
}

Rational alternating_sum(std::span<const Rational> values, std::uint64_t m, std::uint64_t n) {
    if (m + n >= values.size())
        throw StructuralError("alternating_sum: index out of range");
    Rational sum = 0;
    mpz_class binom = 1;
    for (std::uint64_t j = 0; j <= n; ++j) {
        Rational term = Rational(binom) * values[m + j];
        sum += (j % 2 == 0) ? term : -term;
        // C(n, j+1) = C(n, j) * (n - j) / (j + 1)
        binom *= static_cast<unsigned long>(n - j);
        binom /= static_cast<unsigned long>(j + 1);
    }
    return sum;
}

ClassVerdict is_ca_prefix(std::span<const Rational> prefix, std::uint64_t order) {
    ClassVerdict verdict;
    verdict.horizon_used = order;
    if (prefix.size() < order + 1)
        throw StructuralError("is_ca_prefix: prefix shorter than order + 1");
    DiffTable table(prefix, order);
    std::uint64_t reach = prefix.size() - 1; // indices with m + n <= reach are defined
    for (std::uint64_t n = 1; n <= order; ++n) {
        for (std::uint64_t m = 0; m + n <= std::min<std::uint64_t>(order, reach); ++m) {
            const Rational& value = table.at(m, n);
            if (value > 0) {
                verdict.status = Status::fails;
                Witness w;
                w.m = static_cast<std::int64_t>(m);
                w.n = static_cast<std::int64_t>(n);
                w.value = value;
                w.note = "finite difference positive";
                verdict.witness = w;
                return verdict;
            }
        }
    }
    verdict.status = Status::holds;
    return verdict;
}

std::optional<CAExtension> ca_extend(const CASeq& seq, std::uint64_t k) {
    if (k == 0)
        throw StructuralError("ca_extend: k must be positive");
    if (seq.measure.has_atom_at_zero())
        return std::nullopt;
    Moment obstruction = inverse_power_sum(seq.measure, k);
    if (!(obstruction <= seq.a0 - 1))
        return std::nullopt;

    // rho = (1/t^k)-pushforward of the measure plus the remainder on {0}
    std::vector<Atom> atoms;
    for (const auto& atom : seq.measure.atoms())
        atoms.push_back(Atom{atom.t, atom.mass / rational_pow(atom.t, static_cast<long>(k))});
    Rational remainder = seq.a0 - 1 - obstruction.value();
    if (remainder > 0)
        atoms.push_back(Atom{0, remainder});

    CAExtension out;
    out.extended = CASeq{1, AtomicMeasure::from_atoms(std::move(atoms))};
    out.prefix = seq_prefix(out.extended, k);
    return out;
}

} // namespace treeshift
