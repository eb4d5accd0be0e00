#include "fixloc/counting.hpp"

#include "fixloc/error.hpp"
#include "enumerate.hpp"

#include <algorithm>

namespace fixloc {

namespace {

struct Setup {
    detail::LinearEnumerator enumerator;
    std::size_t positive = 0;  // leading variables expanded from 1
    IntVector target;
};

Setup scalar_setup(const Integer& moment, const IntVector& pairings, const Integer& l) {
    std::vector<detail::Generator> gens;
    std::size_t positive = 0;
    for (const auto& a : pairings)
        if (a > 0) {
            gens.push_back({{a}, 1});
            ++positive;
        }
    for (const auto& a : pairings)
        if (a < 0)
            gens.push_back({{Integer(-a)}, 0});
    return Setup{detail::LinearEnumerator({moment}, std::move(gens), {Integer(1)}), positive, {l}};
}

Setup make_setup(const FixedPointSet& fps, std::size_t point, const Target& l, const CountMode& mode) {
    if (point >= fps.size())
        throw std::out_of_range("point index out of range");
    const FixedPoint& p = fps.point(point);

    if (std::holds_alternative<CircleMode>(mode)) {
        if (fps.rank() != 1)
            throw ModeMismatch("circle mode needs rank 1 data, got rank " + std::to_string(fps.rank()));
        if (!std::holds_alternative<Integer>(l))
            throw ModeMismatch("circle mode counts at an integer l");
        IntVector pairings;
        for (const auto& w : p.weights)
            pairings.push_back(w[0]);
        return scalar_setup(p.moment[0], pairings, std::get<Integer>(l));
    }
    if (const auto* pol = std::get_if<PolarizedMode>(&mode)) {
        if (!std::holds_alternative<Integer>(l))
            throw ModeMismatch("polarized mode counts at an integer l");
        auto u = make_polarizing(fps, pol->u);
        return scalar_setup(dot(p.moment, pol->u), u.pairings[point], std::get<Integer>(l));
    }
    const auto& eps = std::get<EpsMode>(mode).eps;
    if (!std::holds_alternative<IntVector>(l))
        throw ModeMismatch("sign-assignment mode counts at a vector l");
    const auto& target = std::get<IntVector>(l);
    if (target.size() != fps.rank())
        throw ModeMismatch("target of length " + std::to_string(target.size()) + " for rank " +
                           std::to_string(fps.rank()) + " data");
    if (eps.signs().size() != fps.size() || eps.ranking().size() != fps.rank())
        throw ModeMismatch("sign assignment does not match the dataset");
    const auto& split = eps.points()[point];
    std::vector<detail::Generator> gens;
    for (auto j : split.positive)
        gens.push_back({p.weights[j], 1});
    for (auto j : split.negative)
        gens.push_back({negate(p.weights[j]), 0});
    return Setup{detail::LinearEnumerator(p.moment, std::move(gens), negate(eps.ranking())), split.positive.size(),
                 target};
}

} // namespace

Integer count_Np(const FixedPointSet& fps, std::size_t point, const Target& l, const CountMode& mode) {
    auto setup = make_setup(fps, point, l, mode);
    return setup.enumerator.count(setup.target);
}

std::vector<Representation> representations_Np(const FixedPointSet& fps, std::size_t point, const Target& l,
                                                const CountMode& mode) {
    auto setup = make_setup(fps, point, l, mode);
    std::vector<Representation> out;
    setup.enumerator.solutions(setup.target, [&](const IntVector& c) {
        Representation rep;
        rep.m.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(setup.positive));
        rep.n.assign(c.begin() + static_cast<std::ptrdiff_t>(setup.positive), c.end());
        out.push_back(std::move(rep));
    });
    return out;
}

std::map<IntVector, Integer> count_Np_window(const FixedPointSet& fps, std::size_t point, const SignAssignment& eps,
                                             const Integer& low) {
    if (point >= fps.size())
        throw std::out_of_range("point index out of range");
    if (eps.signs().size() != fps.size() || eps.ranking().size() != fps.rank())
        throw ModeMismatch("sign assignment does not match the dataset");
    const FixedPoint& p = fps.point(point);
    const auto& split = eps.points()[point];
    std::vector<detail::Generator> gens;
    for (auto j : split.positive)
        gens.push_back({p.weights[j], 1});
    for (auto j : split.negative)
        gens.push_back({negate(p.weights[j]), 0});
    detail::LinearEnumerator en(p.moment, std::move(gens), negate(eps.ranking()));
    std::map<IntVector, Integer> out;
    // Every representation of rho has degree <ranking, rho>, so the bounded
    // walk sees all of them.
    Integer budget = dot(p.moment, eps.ranking()) - low;
    if (budget >= 0)
        en.within(budget, [&](const IntVector& rho, const Integer&) { ++out[rho]; });
    return out;
}

bool in_nonnegative_span(const Integer& l, const IntVector& u) {
    std::vector<Integer> pos, neg;
    for (const auto& x : u) {
        if (x > 0)
            pos.push_back(x);
        else if (x < 0)
            neg.push_back(-x);
    }
    if (pos.empty() && neg.empty())
        return l == 0;
    Integer g = 0;
    for (const auto& x : u)
        g = gcd(g, x);
    if (l % g != 0)
        return false;
    if (!pos.empty() && !neg.empty())
        return true;
    Integer target = pos.empty() ? Integer(-l) : l;
    auto& gens = pos.empty() ? neg : pos;
    if (target < 0)
        return false;
    target /= g;
    for (auto& x : gens)
        x /= g;
    std::sort(gens.begin(), gens.end());
    // Beyond Schur's bound every multiple of the gcd is representable.
    if (target >= (gens.front() - 1) * (gens.back() - 1))
        return true;
    const auto limit = static_cast<std::size_t>(target);
    std::vector<bool> reach(limit + 1, false);
    reach[0] = true;
    for (std::size_t s = 1; s <= limit; ++s)
        for (const auto& a : gens)
            if (a <= s && reach[s - static_cast<std::size_t>(a)]) {
                reach[s] = true;
                break;
            }
    return reach[limit];
}

Integer kostant_C(int sign, unsigned m, const Integer& l) {
    if (sign < 0)
        return l >= m ? binomial(l, m) : Integer(0);
    return l >= 1 ? binomial(l - 1 + m, m) : Integer(0);
}

Integer kostant_C_enumerate(int sign, unsigned m, unsigned l) {
    long long total = sign < 0 ? static_cast<long long>(l) - m : static_cast<long long>(l) - 1;
    if (total < 0)
        return 0;
    // tuples (a_1..a_{m+1}) in N with the given sum
    std::vector<long long> a(m + 1, 0);
    Integer count = 0;
    std::function<void(unsigned, long long)> rec = [&](unsigned i, long long left) {
        if (i == m) {
            ++count;  // a_{m+1} takes the remainder
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, total);
    return count;
}

Integer tilde_C(int sigma, unsigned m, const Integer& l) {
    Integer c = kostant_C(sigma, m, l);
    // (-sigma)^{m+1} is -1 exactly when sigma = +1 and m + 1 is odd.
    if (sigma > 0 && (m + 1) % 2 == 1)
        c = -c;
    return c;
}

} // namespace fixloc
