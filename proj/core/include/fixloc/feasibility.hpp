#pragma once

#include "fixloc/integer.hpp"

#include <optional>
#include <vector>

namespace fixloc {

// Decides whether the open cone { u : <u, a_i> > 0 for all i } is nonempty,
// by exact Fourier-Motzkin elimination over the rationals. Variables are
// eliminated in ascending index order; back substitution takes interval
// midpoints (max lower + 1, min upper - 1, or 0 when unconstrained).
//
// Returns a point satisfying every strict inequality (verified before
// returning) or nullopt when the system is infeasible. All a_i must be
// nonzero and share a length; RankMismatch / std::invalid_argument otherwise.
std::optional<RatVector> strict_feasibility(const std::vector<IntVector>& system);

// Verdict plus certificate. When infeasible, `multipliers` is a nonzero
// vector y >= 0 with sum_i y_i a_i = 0, which rules out any strictly
// positive u (alternative theorem of Gordan).
struct FeasibilityResult {
    std::optional<RatVector> point;
    IntVector multipliers;
};

FeasibilityResult strict_feasibility_certified(const std::vector<IntVector>& system);

} // namespace fixloc
