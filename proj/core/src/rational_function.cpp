#include "fixloc/rational_function.hpp"

#include "fixloc/error.hpp"

namespace fixloc {

namespace {

void require_univariate(const LaurentPolynomial& p) {
    if (p.rank() != 1)
        throw RankMismatch("rational functions are univariate");
}

// Splits p = z^shift * q with q an ordinary polynomial having q(0) != 0,
// returned as a degree -> coefficient map.
std::pair<Integer, std::map<Integer, Integer>> strip_low_power(const LaurentPolynomial& p) {
    std::map<Integer, Integer> dense;
    if (p.is_zero())
        return {0, dense};
    Integer low = p.terms().begin()->first[0];
    for (const auto& [e, c] : p.terms())
        dense.emplace(e[0] - low, c);
    return {low, dense};
}

} // namespace

RationalFunction::RationalFunction() : num_(1), den_(LaurentPolynomial::constant(1, 1)) {}

RationalFunction::RationalFunction(LaurentPolynomial numerator)
    : RationalFunction(std::move(numerator), LaurentPolynomial::constant(1, 1)) {}

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    require_univariate(num_);
    require_univariate(den_);
    if (den_.is_zero())
        throw std::invalid_argument("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    Integer low = den_.terms().begin()->first[0];
    if (low != 0) {
        num_ = num_.shifted({Integer(-low)});
        den_ = den_.shifted({Integer(-low)});
    }
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ = den_ * other.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

bool RationalFunction::equals(const RationalFunction& other) const {
    return num_ * other.den_ == other.num_ * den_;
}

LaurentPolynomial RationalFunction::to_laurent() const {
    auto q = divide_exact(num_, den_);
    if (!q)
        throw NotPolynomial("quotient is not a Laurent polynomial");
    return *q;
}

RationalFunction inverse_one_minus(const Integer& a) {
    if (a == 0)
        throw std::invalid_argument("inverse_one_minus of a zero exponent");
    // 1/(1 - z^-a) = z^a/(z^a - 1) for a > 0 and -1/(z^|a| - 1) for a < 0.
    LaurentPolynomial den(1);
    den.add_term({abs(a)}, 1);
    den.add_term({Integer(0)}, -1);
    LaurentPolynomial num = a > 0 ? LaurentPolynomial::monomial({a}, 1) : LaurentPolynomial::constant(1, -1);
    return RationalFunction(std::move(num), std::move(den));
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& numerator,
                                              const LaurentPolynomial& denominator) {
    require_univariate(numerator);
    require_univariate(denominator);
    if (denominator.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    if (numerator.is_zero())
        return LaurentPolynomial(1);

    auto [num_shift, rem] = strip_low_power(numerator);
    auto [den_shift, den] = strip_low_power(denominator);
    const auto& [den_deg, den_lead] = *den.rbegin();

    LaurentPolynomial quotient(1);
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Integer deg = top->first;
        Integer coef = top->second;
        if (deg < den_deg || coef % den_lead != 0)
            return std::nullopt;
        Integer q = coef / den_lead;
        Integer qdeg = deg - den_deg;
        quotient.add_term({qdeg + num_shift - den_shift}, q);
        for (const auto& [d, c] : den) {
            auto [it, inserted] = rem.try_emplace(d + qdeg, 0);
            it->second -= q * c;
            if (it->second == 0)
                rem.erase(it);
        }
    }
    return quotient;
}

} // namespace fixloc
