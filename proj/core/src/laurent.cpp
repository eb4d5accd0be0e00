#include "fixloc/laurent.hpp"

#include "fixloc/error.hpp"

#include <sstream>

namespace fixloc {

LaurentPolynomial::LaurentPolynomial(std::size_t rank) : rank_(rank) {}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const Integer& c) {
    LaurentPolynomial p(rank);
    p.add_term(IntVector(rank, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(IntVector exponent, const Integer& c) {
    LaurentPolynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

Integer LaurentPolynomial::coeff(const IntVector& exponent) const {
    if (exponent.size() != rank_)
        throw RankMismatch("exponent of length " + std::to_string(exponent.size()) +
                           " for a rank " + std::to_string(rank_) + " polynomial");
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const IntVector& exponent, const Integer& c) {
    if (exponent.size() != rank_)
        throw RankMismatch("exponent of length " + std::to_string(exponent.size()) +
                           " for a rank " + std::to_string(rank_) + " polynomial");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<Integer> LaurentPolynomial::support_max(const IntVector& u) const {
    if (u.size() != rank_)
        throw RankMismatch("pairing vector has wrong length");
    std::optional<Integer> best;
    for (const auto& [e, c] : terms_) {
        Integer d = dot(e, u);
        if (!best || d > *best)
            best = std::move(d);
    }
    return best;
}

std::optional<Integer> LaurentPolynomial::support_min(const IntVector& u) const {
    auto m = support_max(negate(u));
    if (m)
        *m = -*m;
    return m;
}

LaurentPolynomial LaurentPolynomial::specialize(const IntVector& u) const {
    if (u.size() != rank_)
        throw RankMismatch("specialization vector has wrong length");
    LaurentPolynomial out(1);
    for (const auto& [e, c] : terms_)
        out.add_term({dot(e, u)}, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(const IntVector& shift) const {
    if (shift.size() != rank_)
        throw RankMismatch("shift vector has wrong length");
    LaurentPolynomial out(rank_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(add(e, shift), c);
    return out;
}

void LaurentPolynomial::require_rank(const LaurentPolynomial& other) const {
    if (other.rank_ != rank_)
        throw RankMismatch("Laurent polynomials of rank " + std::to_string(rank_) + " and " +
                           std::to_string(other.rank_));
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    require_rank(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    require_rank(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.require_rank(b);
    LaurentPolynomial out(a.rank_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(add(ea, eb), ca * cb);
    return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial out(a.rank_);
    for (const auto& [e, c] : a.terms_)
        out.terms_.emplace(e, -c);
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += rank_ == 1 ? std::string("z") : "t" + std::to_string(i + 1);
            if (e[i] != 1)
                mono += "^" + e[i].str();
        }
        Integer mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty())
            os << mag;
        else if (mag == 1)
            os << mono;
        else
            os << mag << "*" << mono;
    }
    return os.str();
}

LaurentPolynomial univariate(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPolynomial p(1);
    for (const auto& [e, c] : terms)
        p.add_term({Integer(e)}, c);
    return p;
}

} // namespace fixloc
