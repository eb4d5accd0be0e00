#pragma once

#include "fixloc/dataset.hpp"

#include <cstddef>
#include <vector>

namespace fixloc {

// An integer vector non-orthogonal to every weight of a dataset, together
// with the cached pairings <u, alpha_pj> (indexed [point][slot]).
struct PolarizingVector {
    IntVector entries;
    std::vector<IntVector> pairings;
};

// Throws NotPolarizing naming the first orthogonal (point, slot).
PolarizingVector make_polarizing(const FixedPointSet& fps, IntVector u);

// First `count` polarizing vectors in the deterministic search order: integer
// vectors of max-norm 1, 2, 3, ... each shell scanned lexicographically with
// entries running from -R to R.
std::vector<IntVector> find_polarizing(const FixedPointSet& fps, std::size_t count = 1,
                                       unsigned max_radius = 64);

// The default polarizing vector: (1) in rank 1, else the first search hit.
IntVector default_polarizing(const FixedPointSet& fps);

// Slot split at one fixed point. `positive` lists the slots expanded with
// strictly positive multiplicities, `negative` the ones expanded from 0.
struct PointSplit {
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;
    int sigma = 1;
};

struct PolarizedPartition {
    PolarizingVector u;
    std::vector<PointSplit> points;     // A_p(u), B_p(u), sigma_p(u)
    std::vector<std::size_t> q_plus;
    std::vector<std::size_t> q_minus;
};

PolarizedPartition polarize(const FixedPointSet& fps, const IntVector& u);

// Sign assignment eps: (point, slot) -> +-1 whose open cone
// K(eps) = { x : eps(p,j) <x, alpha_pj> > 0 } is nonempty.
// A_p(eps) = slots with eps = -1, B_p(eps) = slots with eps = +1,
// sigma(p, eps) = (-1)^{#A_p(eps)}.
class SignAssignment {
public:
    // Runs strict feasibility on { eps(p,j) alpha_pj }; throws
    // InfeasibleAssignment when K(eps) is empty.
    SignAssignment(const FixedPointSet& fps, std::vector<std::vector<int>> eps);
    // Uses `interior` as the certificate after checking it.
    SignAssignment(const FixedPointSet& fps, std::vector<std::vector<int>> eps, RatVector interior);

    int eps(std::size_t point, std::size_t slot) const { return eps_.at(point).at(slot); }
    const std::vector<std::vector<int>>& signs() const noexcept { return eps_; }
    const RatVector& interior() const noexcept { return interior_; }
    // Positive integer multiple of the interior point.
    const IntVector& ranking() const noexcept { return ranking_; }

    const std::vector<PointSplit>& points() const noexcept { return points_; }
    const std::vector<std::size_t>& q_plus() const noexcept { return q_plus_; }
    const std::vector<std::size_t>& q_minus() const noexcept { return q_minus_; }

    friend bool operator==(const SignAssignment& a, const SignAssignment& b) { return a.eps_ == b.eps_; }

private:
    void finish(const FixedPointSet& fps);

    std::vector<std::vector<int>> eps_;
    RatVector interior_;
    IntVector ranking_;
    std::vector<PointSplit> points_;
    std::vector<std::size_t> q_plus_;
    std::vector<std::size_t> q_minus_;
};

// eps(p, j) = sign <u, alpha_pj>; the interior certificate is u itself.
SignAssignment sign_assignment_from(const FixedPointSet& fps, const IntVector& u);

// Builds eps from a name-keyed table; every point must be present with one
// sign per slot.
SignAssignment make_sign_assignment(const FixedPointSet& fps,
                                    const std::vector<std::pair<std::string, std::vector<int>>>& table);

} // namespace fixloc
