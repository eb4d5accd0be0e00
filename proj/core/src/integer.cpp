#include "fixloc/integer.hpp"

#include "fixloc/error.hpp"

#include <charconv>
#include <stdexcept>

namespace fixloc {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b)
        throw RankMismatch("vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    require_same_length(a.size(), b.size());
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
    require_same_length(a.size(), b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * Rational(b[i]);
    return s;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
    require_same_length(a.size(), b.size());
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVector sub(std::span<const Integer> a, std::span<const Integer> b) {
    require_same_length(a.size(), b.size());
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVector scale(std::span<const Integer> a, const Integer& c) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] * c;
    return r;
}

IntVector negate(std::span<const Integer> a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

bool is_zero(std::span<const Integer> a) {
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

int sign(const Integer& x) { return x.sign(); }
int sign(const Rational& x) { return x.sign(); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a), y = abs(b);
    while (y != 0) {
        Integer t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x;
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0)
        return 0;
    return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0)
        throw std::domain_error("floor_div by zero");
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Integer binomial(const Integer& n, unsigned k) {
    if (n < 0 || n < k)
        return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

IntVector clear_denominators(std::span<const Rational> v) {
    Integer common = 1;
    for (const auto& x : v)
        common = lcm(common, boost::multiprecision::denominator(x));
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = boost::multiprecision::numerator(v[i]) * (common / boost::multiprecision::denominator(v[i]));
    return r;
}

std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::optional<Integer> parse_integer(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        return std::nullopt;
    Integer value = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

std::optional<Rational> parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_integer(text);
        if (!n)
            return std::nullopt;
        return Rational(*n);
    }
    auto p = parse_integer(text.substr(0, slash));
    auto q = parse_integer(text.substr(slash + 1));
    if (!p || !q || *q <= 0 || gcd(*p, *q) != 1)
        return std::nullopt;
    return Rational(*p, *q);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(std::span<const Integer> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string to_csv(std::span<const Integer> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].str();
    }
    return s;
}

std::optional<IntVector> parse_csv(std::string_view text) {
    IntVector out;
    while (true) {
        auto comma = text.find(',');
        auto piece = text.substr(0, comma);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        auto v = parse_integer(piece);
        if (!v)
            return std::nullopt;
        out.push_back(*v);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

long long to_ll(const Integer& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer out of 64-bit range: " + x.str());
    return static_cast<long long>(x);
}

} // namespace fixloc
