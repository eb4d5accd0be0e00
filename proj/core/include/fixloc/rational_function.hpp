#pragma once

#include "fixloc/laurent.hpp"

namespace fixloc {

// Quotient of two univariate Laurent polynomials. Kept normalized: the
// denominator is an ordinary polynomial with nonzero constant term and a
// positive leading coefficient. No gcd cancellation is attempted; equality
// is tested by cross multiplication.
class RationalFunction {
public:
    RationalFunction();
    explicit RationalFunction(LaurentPolynomial numerator);
    RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);

    const LaurentPolynomial& numerator() const noexcept { return num_; }
    const LaurentPolynomial& denominator() const noexcept { return den_; }

    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }

    bool equals(const RationalFunction& other) const;

    // Exact division numerator / denominator; throws NotPolynomial when the
    // quotient is not a Laurent polynomial.
    LaurentPolynomial to_laurent() const;

private:
    void normalize();

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

// 1 / (1 - z^{-a}) for nonzero a.
RationalFunction inverse_one_minus(const Integer& a);

// Sparse long division of univariate polynomials; returns nullopt when the
// division leaves a remainder.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& numerator,
                                              const LaurentPolynomial& denominator);

} // namespace fixloc
