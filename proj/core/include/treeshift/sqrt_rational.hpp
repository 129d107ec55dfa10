#pragma once

#include "treeshift/rational.hpp"

#include <stdexcept>

namespace treeshift {

// Two exact square roots whose sum is not of the form c*sqrt(r) for a single
// radicand r. The matrix oracle never adds such values on a weighted shift;
// a throw here means a structural assumption was violated, not a user error.
class RadicandMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact scalar of the form coef * sqrt(rad) with rational coef and rad >= 0.
///
/// Shift weights are square roots of the rational model data, so matrix
/// entries of truncated shifts live in this set. Multiplication is total;
/// addition is defined only when the radicands differ by the square of a
/// rational, which is checked at runtime (no factoring needed, only GMP's
/// perfect-square test). Square factors of the radicand are folded into the
/// coefficient on construction, so value equality is plain field equality.
class SqrtRat {
public:
    SqrtRat() : coef_(0), rad_(1) {}
    SqrtRat(const Rational& rational_value) : coef_(rational_value), rad_(1) {}

    // sqrt(square) with square >= 0.
    static SqrtRat sqrt_of(const Rational& square);

    static SqrtRat scaled_sqrt(const Rational& coef, const Rational& square);

    bool is_zero() const { return coef_ == 0; }
    bool is_rational() const { return rad_ == 1 || coef_ == 0; }

    // Requires is_rational().
    const Rational& as_rational() const;

    // The square of the value; always rational, sign information dropped.
    Rational squared() const { return coef_ * coef_ * rad_; }

    const Rational& coef() const { return coef_; }
    const Rational& radicand() const { return rad_; }

    SqrtRat operator-() const;
    SqrtRat operator*(const SqrtRat& other) const;
    SqrtRat operator+(const SqrtRat& other) const; // throws RadicandMismatch
    SqrtRat operator-(const SqrtRat& other) const;

    // Value equality; representations like 2*sqrt(2/5) and sqrt(8/5) match.
    bool operator==(const SqrtRat& other) const {
        if (is_zero() || other.is_zero())
            return is_zero() == other.is_zero();
        if ((coef_ < 0) != (other.coef_ < 0))
            return false;
        return squared() == other.squared();
    }

    double to_double() const;

private:
    void normalize();

    Rational coef_;
    Rational rad_; // > 0, square part folded into coef_; rad_ == 1 when coef_ == 0
};

} // namespace treeshift
