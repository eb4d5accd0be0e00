#pragma once

#include "fixloc/counting.hpp"
#include "fixloc/laurent.hpp"

namespace fixloc {

// `Paper` sums t^{J(p)} / prod_j (1 - t^{-alpha_pj}); `Negated` uses the same
// formula with every weight negated. For toric data stored with outgoing
// edges, `Negated` counts lattice points of the polytope and `Paper` counts
// interior lattice points (up to the sign (-1)^n).
enum class Convention { Paper, Negated };

const char* to_string(Convention c);

// Rank 1: exact rational summation over a common denominator followed by
// exact division (NotPolynomial if it does not divide). Rank >= 2: region
// expansion reconstruction under two different sign assignments, which must
// agree (ReconstructionMismatch otherwise).
LaurentPolynomial character_exact(const FixedPointSet& fps, Convention convention = Convention::Paper);

// The character specialized along t_e = lambda^{u_e}, computed directly with
// univariate rational arithmetic on the paired data.
LaurentPolynomial character_polarized(const FixedPointSet& fps, const IntVector& u,
                                      Convention convention = Convention::Paper);

struct ReconstructionOptions {
    long long base_window = 20;
};

// Expands the localization sum in the region selected by `eps` (Convention::Paper
// on the data as given) and collects every coefficient whose
// degree <ranking, rho> lies in a window that is widened until 2n
// consecutive empty degrees follow the lowest nonzero one.
LaurentPolynomial reconstruct_character(const FixedPointSet& fps, const SignAssignment& eps,
                                        const ReconstructionOptions& options = {});

// (-1)^n (sum_{Q+} N_p(l,u) - sum_{Q-} N_p(l,u)): the coefficient of
// lambda^l in the expansion for 0 < |lambda| < 1.
Integer expansion_coefficient(const FixedPointSet& fps, const PolarizedPartition& partition, const Integer& l);

// sum_{Q+(eps)} N_p(l,eps) - sum_{Q-(eps)} N_p(l,eps): the coefficient of t^l
// in the expansion selected by eps. The sign (-1)^n is already part of
// sigma(p, eps).
Integer expansion_coefficient(const FixedPointSet& fps, const SignAssignment& eps, const IntVector& l);

} // namespace fixloc
