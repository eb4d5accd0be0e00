#pragma once

#include "fixloc/dataset.hpp"

#include <vector>

namespace fixloc {

// One (F, n) summand of the component coefficient at lambda^k:
// A_n(F) * tau * D with D = sum_{l in L(F,k)} prod_j C_{sigma_Fj}(n_j, l_j)
// and tau = prod_j (-sigma_Fj)^{n_j + 1}.
struct ComponentTerm {
    std::size_t component = 0;
    MultiIndex n;
    Rational char_number;
    int tau = 1;
    Integer d;
};

// The nonzero-A summands at degree k for polarizing u. Throws NotPolarizing
// if <u, alpha_Fj> = 0 for some component weight.
std::vector<ComponentTerm> component_terms(const ComponentSet& cs, const IntVector& u, const Integer& k);

// sum_F sum_n A_n(F) sum_{l in L(F,k)} prod_j tilde C_{sigma_Fj}(n_j, l_j),
// the coefficient of lambda^k in the character specialized along u.
Rational component_coefficient(const ComponentSet& cs, const IntVector& u, const Integer& k);

// All l in N^s with sum_j a_j l_j = target (a_j > 0), lexicographic.
std::vector<IntVector> solve_weighted_sum(const IntVector& coefficients, const Integer& target);

} // namespace fixloc
