#include "fixloc/character.hpp"

#include "fixloc/error.hpp"
#include "fixloc/rational_function.hpp"
#include "enumerate.hpp"

#include <map>

namespace fixloc {

namespace {

// (1 - z^c)^k, memoized per call site.
class BinomialPowers {
public:
    const LaurentPolynomial& get(const Integer& c, std::size_t k) {
        auto key = std::make_pair(c, k);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        LaurentPolynomial base(1);
        base.add_term({Integer(0)}, 1);
        base.add_term({c}, -1);
        LaurentPolynomial p = LaurentPolynomial::constant(1, 1);
        for (std::size_t i = 0; i < k; ++i)
            p *= base;
        return cache_.emplace(key, std::move(p)).first->second;
    }

private:
    std::map<std::pair<Integer, std::size_t>, LaurentPolynomial> cache_;
};

// Rank-1 localization sum over the least common multiple of the binomial
// denominators, then one exact division.
LaurentPolynomial character_rank1(const FixedPointSet& fps) {
    // t^J / prod (1 - z^-a) = (-1)^{#a>0} z^{J + sum_{a>0} a} / prod (1 - z^|a|)
    std::vector<std::map<Integer, std::size_t>> counts(fps.size());
    std::map<Integer, std::size_t> lcm_mult;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        for (const auto& w : fps.point(i).weights)
            ++counts[i][abs(w[0])];
        for (const auto& [c, k] : counts[i])
            lcm_mult[c] = std::max(lcm_mult[c], k);
    }

    BinomialPowers powers;
    LaurentPolynomial denominator = LaurentPolynomial::constant(1, 1);
    for (const auto& [c, k] : lcm_mult)
        denominator *= powers.get(c, k);

    LaurentPolynomial numerator(1);
    for (std::size_t i = 0; i < fps.size(); ++i) {
        const auto& p = fps.point(i);
        Integer shift = p.moment[0];
        int sign = 1;
        for (const auto& w : p.weights)
            if (w[0] > 0) {
                shift += w[0];
                sign = -sign;
            }
        LaurentPolynomial term = LaurentPolynomial::monomial({shift}, sign);
        for (const auto& [c, k] : lcm_mult) {
            auto have = counts[i].count(c) ? counts[i].at(c) : 0;
            if (k > have)
                term *= powers.get(c, k - have);
        }
        numerator += term;
    }
    try {
        return RationalFunction(std::move(numerator), std::move(denominator)).to_laurent();
    } catch (const NotPolynomial&) {
        throw NotPolynomial("localization sum is not a Laurent polynomial; the data cannot come from a "
                            "closed quantizable manifold under this convention");
    }
}

Integer pow_sign(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

// One pass of the windowed expansion; returns the collected polynomial and
// the lowest degree that was fully covered.
LaurentPolynomial expand_window(const FixedPointSet& fps, const SignAssignment& eps, const Integer& low) {
    const IntVector& w = eps.ranking();
    LaurentPolynomial out(fps.rank());
    for (std::size_t i = 0; i < fps.size(); ++i) {
        const auto& p = fps.point(i);
        const auto& split = eps.points()[i];
        std::vector<detail::Generator> gens;
        for (auto j : split.positive)
            gens.push_back({p.weights[j], 1});
        for (auto j : split.negative)
            gens.push_back({negate(p.weights[j]), 0});
        detail::LinearEnumerator en(p.moment, std::move(gens), negate(w));
        Integer budget = dot(p.moment, w) - low;
        if (budget < 0)
            continue;
        const int sigma = split.sigma;
        en.within(budget, [&](const IntVector& rho, const Integer&) { out.add_term(rho, sigma); });
    }
    return out;
}

} // namespace

const char* to_string(Convention c) { return c == Convention::Paper ? "paper" : "negated"; }

LaurentPolynomial reconstruct_character(const FixedPointSet& fps, const SignAssignment& eps,
                                        const ReconstructionOptions& options) {
    const IntVector& w = eps.ranking();
    Integer min_j, max_j;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        Integer d = dot(fps.point(i).moment, w);
        if (i == 0 || d < min_j)
            min_j = d;
        if (i == 0 || d > max_j)
            max_j = d;
    }
    const Integer n = fps.half_dim();
    const Integer step = n * std::max<long long>(options.base_window, 1);
    Integer low = min_j - step;
    constexpr int max_rounds = 6;
    for (int round = 0; round < max_rounds; ++round) {
        LaurentPolynomial chi = expand_window(fps, eps, low);
        auto lowest = chi.support_min(w);
        if (!lowest || *lowest - low >= 2 * n)
            return chi;
        low -= step;
    }
    throw NotPolynomial("region expansion keeps producing nonzero coefficients; the localization sum is "
                        "not a Laurent polynomial");
}

LaurentPolynomial character_exact(const FixedPointSet& fps, Convention convention) {
    const FixedPointSet data = convention == Convention::Negated ? negate_weights(fps) : fps;
    if (data.rank() == 1)
        return character_rank1(data);

    auto candidates = find_polarizing(data, 3);
    if (candidates.empty())
        throw NotPolarizing("no polarizing vector found within the search radius");
    const IntVector& u1 = candidates.front();
    SignAssignment first = sign_assignment_from(data, u1);
    std::optional<SignAssignment> second;
    for (std::size_t k = 1; k < candidates.size() && !second; ++k) {
        SignAssignment other = sign_assignment_from(data, candidates[k]);
        if (!(other == first))
            second = std::move(other);
    }
    if (!second)
        second = sign_assignment_from(data, negate(u1));

    LaurentPolynomial chi = reconstruct_character(data, first);
    LaurentPolynomial check = reconstruct_character(data, *second);
    if (!(chi == check))
        throw ReconstructionMismatch("expansions in two regions disagree: " + chi.to_string() + " vs " +
                                     check.to_string());
    LaurentPolynomial specialized = chi.specialize(u1);
    LaurentPolynomial direct = character_rank1(restrict_to_circle(data, u1));
    if (!(specialized == direct))
        throw ReconstructionMismatch("reconstruction specialized along " + to_string(u1) +
                                     " differs from the direct univariate sum");
    return chi;
}

LaurentPolynomial character_polarized(const FixedPointSet& fps, const IntVector& u, Convention convention) {
    make_polarizing(fps, u);
    const FixedPointSet data = convention == Convention::Negated ? negate_weights(fps) : fps;
    return character_rank1(restrict_to_circle(data, u));
}

Integer expansion_coefficient(const FixedPointSet& fps, const PolarizedPartition& partition, const Integer& l) {
    const CountMode mode = PolarizedMode{partition.u.entries};
    Integer total = 0;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        Integer c = count_Np(fps, i, l, mode);
        total += partition.points[i].sigma > 0 ? c : Integer(-c);
    }
    return pow_sign(fps.half_dim()) * total;
}

Integer expansion_coefficient(const FixedPointSet& fps, const SignAssignment& eps, const IntVector& l) {
    const CountMode mode = EpsMode{eps};
    Integer total = 0;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        Integer c = count_Np(fps, i, l, mode);
        total += eps.points()[i].sigma > 0 ? c : Integer(-c);
    }
    return total;
}

} // namespace fixloc
