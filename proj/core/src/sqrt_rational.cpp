#include "treeshift/sqrt_rational.hpp"

#include "treeshift/errors.hpp"

#include <cmath>

namespace treeshift {

SqrtRat SqrtRat::sqrt_of(const Rational& square) { return scaled_sqrt(1, square); }

SqrtRat SqrtRat::scaled_sqrt(const Rational& coef, const Rational& square) {
    if (square < 0)
        throw StructuralError("SqrtRat: negative radicand");
    SqrtRat out;
    out.coef_ = coef;
    out.rad_ = square;
    out.normalize();
    return out;
}

void SqrtRat::normalize() {
    if (coef_ == 0 || rad_ == 0) {
        coef_ = 0;
        rad_ = 1;
        return;
    }
    if (is_perfect_square(rad_)) {
        coef_ *= exact_sqrt(rad_);
        rad_ = 1;
    }
}

const Rational& SqrtRat::as_rational() const {
    if (!is_rational())
        throw RadicandMismatch("SqrtRat: value is irrational");
    return coef_;
}

SqrtRat SqrtRat::operator-() const {
    SqrtRat out(*this);
    out.coef_ = -out.coef_;
    return out;
}

SqrtRat SqrtRat::operator*(const SqrtRat& other) const {
    if (is_zero() || other.is_zero())
        return SqrtRat();
    SqrtRat out;
    out.coef_ = coef_ * other.coef_;
    out.rad_ = rad_ * other.rad_;
    out.normalize();
    return out;
}

SqrtRat SqrtRat::operator+(const SqrtRat& other) const {
    if (is_zero())
        return other;
    if (other.is_zero())
        return *this;
    // coef*sqrt(r) + d*sqrt(s) collapses iff r/s is the square of a rational.
    Rational ratio = rad_ / other.rad_;
    if (!is_perfect_square(ratio))
        throw RadicandMismatch("SqrtRat: sum of incompatible radicands");
    SqrtRat out;
    out.coef_ = coef_ * exact_sqrt(ratio) + other.coef_;
    out.rad_ = other.rad_;
    out.normalize();
    return out;
}

SqrtRat SqrtRat::operator-(const SqrtRat& other) const { return *this + (-other); }

double SqrtRat::to_double() const {
    return treeshift::to_double(coef_) * std::sqrt(treeshift::to_double(rad_));
}

} // namespace treeshift
