#pragma once

#include "fixloc/partition.hpp"

#include <map>
#include <variant>
#include <vector>

namespace fixloc {

// Circle actions (rank 1), slots split by the sign of the weight.
struct CircleMode {};
// Pairing with an integer polarizing vector u; targets are scalars.
struct PolarizedMode {
    IntVector u;
};
// Region expansion selected by a feasible sign assignment; targets in Z^r.
struct EpsMode {
    SignAssignment eps;
};
using CountMode = std::variant<CircleMode, PolarizedMode, EpsMode>;
using Target = std::variant<Integer, IntVector>;

// A representation J(p) + sum_i m_i alpha_pi - sum_k n_k alpha_pk = l,
// m over the positive slots (each >= 1), n over the negative slots (>= 0).
struct Representation {
    IntVector m;
    IntVector n;
    friend auto operator<=>(const Representation&, const Representation&) = default;
};

// N_p(l) in the given mode. Throws ModeMismatch when the target kind or the
// dataset rank does not fit the mode, NotPolarizing for a bad u.
Integer count_Np(const FixedPointSet& fps, std::size_t point, const Target& l, const CountMode& mode);

// N_p(rho, eps) for every rho with <ranking, rho> >= low, from a single
// bounded enumeration; exponents with zero count are absent.
std::map<IntVector, Integer> count_Np_window(const FixedPointSet& fps, std::size_t point, const SignAssignment& eps,
                                             const Integer& low);

// The representations themselves, lexicographic on (m, n).
std::vector<Representation> representations_Np(const FixedPointSet& fps, std::size_t point,
                                                const Target& l, const CountMode& mode);

// Whether l lies in N u_1 + ... + N u_r.
bool in_nonnegative_span(const Integer& l, const IntVector& u);

// C_-(m, l) = #{a in N^{m+1} : m + sum a = l},
// C_+(m, l) = #{a in N^{m+1} : sum a = l - 1}. sign is -1 or +1.
Integer kostant_C(int sign, unsigned m, const Integer& l);
// Same numbers by exhaustive enumeration of the tuples (small arguments).
Integer kostant_C_enumerate(int sign, unsigned m, unsigned l);
// (-sigma)^{m+1} C_sigma(m, l).
Integer tilde_C(int sigma, unsigned m, const Integer& l);

} // namespace fixloc
