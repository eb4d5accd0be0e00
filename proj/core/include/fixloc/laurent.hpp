#pragma once

#include "fixloc/integer.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace fixloc {

// Sparse Laurent polynomial in r variables with integer coefficients:
// a finite sum of E(rho) t^rho with rho in Z^r. Zero coefficients are never
// stored and terms iterate in lexicographic exponent order.
class LaurentPolynomial {
public:
    using TermMap = std::map<IntVector, Integer>;

    explicit LaurentPolynomial(std::size_t rank = 1);

    static LaurentPolynomial constant(std::size_t rank, const Integer& c);
    static LaurentPolynomial monomial(IntVector exponent, const Integer& c = 1);

    std::size_t rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    // Coefficient of t^exponent; 0 for exponents outside the support.
    Integer coeff(const IntVector& exponent) const;

    void add_term(const IntVector& exponent, const Integer& c);

    // max over the support of <u, rho>; nullopt stands for -infinity
    // (the zero polynomial). min_pairing is the mirror image.
    std::optional<Integer> support_max(const IntVector& u) const;
    std::optional<Integer> support_min(const IntVector& u) const;

    // Substitutes t_e = lambda^{u_e}: exponent rho becomes <u, rho>.
    LaurentPolynomial specialize(const IntVector& u) const;

    // Multiplies by t^shift.
    LaurentPolynomial shifted(const IntVector& shift) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

    // Rank 1 prints in `z`, higher rank in t1..tr: "1 + z + z^2", "1 - t1*t2^-1".
    std::string to_string() const;

private:
    void require_rank(const LaurentPolynomial& other) const;

    std::size_t rank_;
    TermMap terms_;
};

// Univariate convenience: sum of c_i z^{e_i}.
LaurentPolynomial univariate(std::initializer_list<std::pair<long long, long long>> terms);

} // namespace fixloc
