#pragma once

#include "fixloc/integer.hpp"

#include <optional>
#include <vector>

namespace fixloc {

// Sublattice of Z^r spanned by a list of generators. The reduced basis is
// the row echelon (Hermite-style) form of the generator matrix, obtained by
// unimodular row operations that are tracked so membership answers come
// with coefficients over the original generators.
class LatticeBasis {
public:
    LatticeBasis(std::size_t rank, std::vector<IntVector> generators);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<IntVector>& generators() const noexcept { return generators_; }
    const std::vector<IntVector>& reduced() const noexcept { return reduced_; }

    // Coefficients x with sum_i x_i * generators[i] == v, or nullopt when v
    // is outside the lattice. Throws RankMismatch on a length mismatch.
    std::optional<IntVector> membership(const IntVector& v) const;
    bool contains(const IntVector& v) const { return membership(v).has_value(); }

private:
    std::size_t rank_;
    std::vector<IntVector> generators_;
    std::vector<IntVector> reduced_;
    std::vector<std::size_t> pivots_;
    // transform_[k] expresses reduced_[k] over the generators.
    std::vector<IntVector> transform_;
};

} // namespace fixloc
