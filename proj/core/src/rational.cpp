#include "treeshift/rational.hpp"

#include "treeshift/errors.hpp"

namespace treeshift {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw StructuralError("empty rational literal");
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw StructuralError("bad rational literal: '" + text + "'");
    if (value.get_den() == 0)
        throw StructuralError("zero denominator in rational literal: '" + text + "'");
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0)
        return 1;
    if (exp < 0) {
        if (base == 0)
            throw StructuralError("rational_pow: negative power of zero");
        return rational_pow(1 / base, -exp);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

bool is_perfect_square(const Rational& value) {
    if (value < 0)
        return false;
    return mpz_perfect_square_p(value.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(value.get_den().get_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& value) {
    if (!is_perfect_square(value))
        throw StructuralError("exact_sqrt: not a perfect square");
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), value.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value.get_den().get_mpz_t());
    return Rational(num, den);
}

std::optional<Rational> exact_nth_root(const Rational& value, unsigned long n) {
    if (n == 0)
        throw StructuralError("exact_nth_root: n must be positive");
    if (value < 0)
        return std::nullopt;
    mpz_class num, den;
    int num_exact = mpz_root(num.get_mpz_t(), value.get_num().get_mpz_t(), n);
    int den_exact = mpz_root(den.get_mpz_t(), value.get_den().get_mpz_t(), n);
    if (num_exact == 0 || den_exact == 0)
        return std::nullopt;
    return Rational(num, den);
}

double to_double(const Rational& value) { return value.get_d(); }

} // namespace treeshift
