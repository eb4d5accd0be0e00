#include "fixloc/components.hpp"

#include "fixloc/counting.hpp"
#include "fixloc/error.hpp"
#include "enumerate.hpp"

namespace fixloc {

std::vector<IntVector> solve_weighted_sum(const IntVector& coefficients, const Integer& target) {
    std::vector<detail::Generator> gens;
    for (const auto& a : coefficients) {
        if (a <= 0)
            throw std::invalid_argument("solve_weighted_sum needs positive coefficients");
        gens.push_back({{a}, 0});
    }
    detail::LinearEnumerator en({Integer(0)}, std::move(gens), {Integer(1)});
    std::vector<IntVector> out;
    en.solutions({target}, [&](const IntVector& l) { out.push_back(l); });
    return out;
}

std::vector<ComponentTerm> component_terms(const ComponentSet& cs, const IntVector& u, const Integer& k) {
    if (u.size() != cs.rank())
        throw RankMismatch("polarizing vector has the wrong length");
    std::vector<ComponentTerm> terms;
    for (std::size_t f = 0; f < cs.components().size(); ++f) {
        const auto& comp = cs.component(f);
        IntVector magnitude;
        std::vector<int> sigma;
        for (std::size_t j = 0; j < comp.weights.size(); ++j) {
            Integer a = dot(comp.weights[j], u);
            if (a == 0)
                throw NotPolarizing(to_string(u) + " is orthogonal to normal weight " + std::to_string(j + 1) +
                                    " of component '" + comp.name + "'");
            sigma.push_back(a > 0 ? 1 : -1);
            magnitude.push_back(abs(a));
        }
        auto lattice_points = solve_weighted_sum(magnitude, k - dot(comp.moment, u));
        for (const auto& [n, a] : cs.nonzero_char_numbers(f)) {
            ComponentTerm term{f, n, a, 1, 0};
            for (std::size_t j = 0; j < n.size(); ++j)
                if (sigma[j] > 0 && (n[j] + 1) % 2 == 1)
                    term.tau = -term.tau;
            for (const auto& l : lattice_points) {
                Integer prod = 1;
                for (std::size_t j = 0; j < n.size() && prod != 0; ++j)
                    prod *= kostant_C(sigma[j], n[j], l[j]);
                term.d += prod;
            }
            terms.push_back(std::move(term));
        }
    }
    return terms;
}

Rational component_coefficient(const ComponentSet& cs, const IntVector& u, const Integer& k) {
    Rational total = 0;
    for (const auto& t : component_terms(cs, u, k))
        total += t.char_number * Rational(t.tau * t.d);
    return total;
}

} // namespace fixloc
