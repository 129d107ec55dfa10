#include "treeshift/measure.hpp"

#include "treeshift/errors.hpp"

#include <algorithm>
#include <map>

namespace treeshift {

AtomicMeasure AtomicMeasure::from_atoms(std::vector<Atom> atoms) {
    std::map<Rational, Rational> merged;
    for (const auto& atom : atoms) {
        if (atom.t < 0 || atom.t > 1)
            throw StructuralError("measure: atom outside [0,1]");
        if (atom.mass < 0)
            throw StructuralError("measure: negative mass");
        if (atom.mass == 0)
            continue;
        merged[atom.t] += atom.mass;
    }
    AtomicMeasure out;
    for (auto& [t, mass] : merged)
        out.atoms_.push_back(Atom{t, mass});
    return out;
}

AtomicMeasure AtomicMeasure::dirac(const Rational& t, const Rational& mass) {
    return from_atoms({Atom{t, mass}});
}

Rational AtomicMeasure::total_mass() const {
    Rational sum = 0;
    for (const auto& atom : atoms_)
        sum += atom.mass;
    return sum;
}

Rational AtomicMeasure::mass_at(const Rational& t) const {
    for (const auto& atom : atoms_)
        if (atom.t == t)
            return atom.mass;
    return 0;
}

bool AtomicMeasure::has_atom_at_zero() const {
    return !atoms_.empty() && atoms_.front().t == 0;
}

const Rational& Moment::value() const {
    if (is_infinite())
        throw StructuralError("moment: value of an infinite moment");
    return *value_;
}

Moment measure_moment(const AtomicMeasure& measure, std::int64_t j) {
    Rational sum = 0;
    for (const auto& atom : measure.atoms()) {
        if (atom.t == 0) {
            if (j < 0)
                return Moment::infinity();
            // 0^0 = 1 by convention
            if (j == 0)
                sum += atom.mass;
            continue;
        }
        sum += atom.mass * rational_pow(atom.t, j);
    }
    return Moment(sum);
}

Moment inverse_power_sum(const AtomicMeasure& measure, std::uint64_t k) {
    Rational sum = 0;
    for (std::uint64_t j = 1; j <= k; ++j) {
        Moment m = measure_moment(measure, -static_cast<std::int64_t>(j));
        if (m.is_infinite())
            return Moment::infinity();
        sum += m.value();
    }
    return Moment(sum);
}

AtomicMeasure
mix_measures(std::span<const std::pair<Rational, AtomicMeasure>> weighted_measures) {
    std::vector<Atom> atoms;
    for (const auto& [weight, measure] : weighted_measures) {
        if (weight < 0)
            throw StructuralError("mix_measures: negative weight");
        if (weight == 0)
            continue;
        for (const auto& atom : measure.atoms())
            atoms.push_back(Atom{atom.t, weight * atom.mass});
    }
    return AtomicMeasure::from_atoms(std::move(atoms));
}

std::optional<AtomicMeasure> inv_t_transform(const AtomicMeasure& measure) {
    if (measure.has_atom_at_zero())
        return std::nullopt;
    std::vector<Atom> atoms;
    for (const auto& atom : measure.atoms())
        atoms.push_back(Atom{atom.t, atom.mass / atom.t});
    return AtomicMeasure::from_atoms(std::move(atoms));
}

} // namespace treeshift
