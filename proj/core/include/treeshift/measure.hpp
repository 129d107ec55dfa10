#pragma once

#include "treeshift/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace treeshift {

struct Atom {
    Rational t;    // position in [0, 1]
    Rational mass; // > 0

    bool operator==(const Atom&) const = default;
};

/// Finitely atomic positive measure on [0,1] with rational data. Atoms are
/// kept strictly sorted by position and zero masses are dropped, so equality
/// of measures is equality of the atom lists.
class AtomicMeasure {
public:
    AtomicMeasure() = default; // zero measure

    static AtomicMeasure from_atoms(std::vector<Atom> atoms);
    static AtomicMeasure dirac(const Rational& t, const Rational& mass);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool is_zero() const { return atoms_.empty(); }
    Rational total_mass() const;
    Rational mass_at(const Rational& t) const;
    bool has_atom_at_zero() const;

    bool operator==(const AtomicMeasure&) const = default;

private:
    std::vector<Atom> atoms_;
};

// Value of an integral against the measure; may be +infinity (negative powers
// of t blow up on an atom at zero, by the convention t^-k = +inf at t = 0).
class Moment {
public:
    Moment(Rational value) : value_(std::move(value)) {}
    static Moment infinity() { return Moment(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const; // requires a finite moment

    // +infinity compares greater than every rational.
    bool operator<(const Rational& bound) const { return !is_infinite() && *value_ < bound; }
    bool operator<=(const Rational& bound) const { return !is_infinite() && *value_ <= bound; }

private:
    Moment() = default;
    std::optional<Rational> value_;
};

// Integral of t^j; j may be negative.
Moment measure_moment(const AtomicMeasure& measure, std::int64_t j);

// Integral of 1/t + ... + 1/t^k (the k-step extension obstruction).
Moment inverse_power_sum(const AtomicMeasure& measure, std::uint64_t k);

// Atom-wise weighted sum; weights must be >= 0.
AtomicMeasure
mix_measures(std::span<const std::pair<Rational, AtomicMeasure>> weighted_measures);

// Each atom (t, m) becomes (t, m/t); empty result if an atom sits at zero.
std::optional<AtomicMeasure> inv_t_transform(const AtomicMeasure& measure);

} // namespace treeshift
