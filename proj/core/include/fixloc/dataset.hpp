#pragma once

#include "fixloc/integer.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace fixloc {

// An isolated fixed point: integer moment J(p) in Z^r and the n weights of
// the isotropy representation on the tangent space.
struct FixedPoint {
    std::string name;
    IntVector moment;
    std::vector<IntVector> weights;

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// Fixed-point data of a torus action with discrete fixed set. Moments are
// stored as given: no normalization is imposed, since shifting every moment
// by a common vector only multiplies the character by a monomial.
class FixedPointSet {
public:
    // Validates and throws InvariantError (with the offending field path).
    FixedPointSet(std::size_t rank, std::size_t half_dim, std::vector<FixedPoint> points);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t half_dim() const noexcept { return half_dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<FixedPoint>& points() const noexcept { return points_; }
    const FixedPoint& point(std::size_t i) const { return points_.at(i); }
    const FixedPoint& point(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    // Every weight of every point, in point order.
    std::vector<IntVector> all_weights() const;

    friend bool operator==(const FixedPointSet&, const FixedPointSet&) = default;

private:
    std::size_t rank_;
    std::size_t half_dim_;
    std::vector<FixedPoint> points_;
};

// Multi-index n = (n_1, ..., n_s) keying the characteristic numbers A_n(F).
using MultiIndex = std::vector<unsigned>;

// A connected fixed component F with moment J(F), normal weights
// alpha_Fj (s_F of them) and its characteristic numbers.
struct Component {
    std::string name;
    IntVector moment;
    std::vector<IntVector> weights;
    std::map<MultiIndex, Rational> char_numbers;

    std::size_t codim_half() const noexcept { return weights.size(); }

    friend bool operator==(const Component&, const Component&) = default;
};

class ComponentSet {
public:
    ComponentSet(std::size_t rank, std::size_t half_dim, std::vector<Component> components);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t half_dim() const noexcept { return half_dim_; }
    const std::vector<Component>& components() const noexcept { return components_; }
    const Component& component(std::size_t i) const { return components_.at(i); }

    // A_n(F) with defaults applied: omitted entries are 0, except that an
    // isolated point (s_F = n) has A_{0...0} = 1 unless given explicitly.
    Rational char_number(std::size_t component, const MultiIndex& n) const;

    // Every multi-index with a nonzero characteristic number (defaults included).
    std::vector<std::pair<MultiIndex, Rational>> nonzero_char_numbers(std::size_t component) const;

    friend bool operator==(const ComponentSet&, const ComponentSet&) = default;

private:
    std::size_t rank_;
    std::size_t half_dim_;
    std::vector<Component> components_;
};

using Dataset = std::variant<FixedPointSet, ComponentSet>;

// Circle subgroup generated by X: moments and weights are paired with X.
// Throws NotGeneric naming the first (point, weight) orthogonal to X.
FixedPointSet restrict_to_circle(const FixedPointSet& fps, const IntVector& generator);

// Same data with every weight negated (moments untouched).
FixedPointSet negate_weights(const FixedPointSet& fps);

// Isolated fixed points viewed as zero-dimensional components (A_0 = 1).
ComponentSet as_components(const FixedPointSet& fps);

} // namespace fixloc
