#include "fixloc/dataset.hpp"

#include "fixloc/error.hpp"

#include <set>

namespace fixloc {

namespace {

std::string path(const char* list, std::size_t i) {
    return std::string(list) + "[" + std::to_string(i) + "]";
}

void check_vector(const IntVector& v, std::size_t rank, const std::string& where) {
    if (v.size() != rank)
        throw InvariantError(where + ": expected " + std::to_string(rank) + " entries, got " +
                             std::to_string(v.size()));
}

} // namespace

FixedPointSet::FixedPointSet(std::size_t rank, std::size_t half_dim, std::vector<FixedPoint> points)
    : rank_(rank), half_dim_(half_dim), points_(std::move(points)) {
    if (rank_ < 1)
        throw InvariantError("rank: must be at least 1");
    if (half_dim_ < 1)
        throw InvariantError("half_dim: must be at least 1");
    if (points_.empty())
        throw InvariantError("points: must be nonempty");
    std::set<std::string> names;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        const std::string where = path("points", i);
        if (!names.insert(p.name).second)
            throw InvariantError(where + ".name: duplicate point name '" + p.name + "'");
        check_vector(p.moment, rank_, where + ".moment");
        if (p.weights.size() != half_dim_)
            throw InvariantError(where + ".weights: expected " + std::to_string(half_dim_) +
                                 " weights, got " + std::to_string(p.weights.size()));
        for (std::size_t j = 0; j < p.weights.size(); ++j) {
            check_vector(p.weights[j], rank_, where + ".weights[" + std::to_string(j) + "]");
            if (is_zero(p.weights[j]))
                throw InvariantError(where + ".weights[" + std::to_string(j) + "]: zero weight");
        }
    }
}

const FixedPoint& FixedPointSet::point(const std::string& name) const {
    return points_[index_of(name)];
}

std::size_t FixedPointSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].name == name)
            return i;
    throw std::out_of_range("no fixed point named '" + name + "'");
}

std::vector<IntVector> FixedPointSet::all_weights() const {
    std::vector<IntVector> out;
    for (const auto& p : points_)
        out.insert(out.end(), p.weights.begin(), p.weights.end());
    return out;
}

ComponentSet::ComponentSet(std::size_t rank, std::size_t half_dim, std::vector<Component> components)
    : rank_(rank), half_dim_(half_dim), components_(std::move(components)) {
    if (rank_ < 1)
        throw InvariantError("rank: must be at least 1");
    if (half_dim_ < 1)
        throw InvariantError("half_dim: must be at least 1");
    if (components_.empty())
        throw InvariantError("components: must be nonempty");
    std::set<std::string> names;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        const std::string where = path("components", i);
        if (!names.insert(c.name).second)
            throw InvariantError(where + ".name: duplicate component name '" + c.name + "'");
        check_vector(c.moment, rank_, where + ".moment");
        if (c.weights.size() > half_dim_)
            throw InvariantError(where + ".weights: " + std::to_string(c.weights.size()) +
                                 " normal weights exceed half_dim " + std::to_string(half_dim_));
        for (std::size_t j = 0; j < c.weights.size(); ++j) {
            check_vector(c.weights[j], rank_, where + ".weights[" + std::to_string(j) + "]");
            if (is_zero(c.weights[j]))
                throw InvariantError(where + ".weights[" + std::to_string(j) + "]: zero weight");
        }
        for (const auto& [n, a] : c.char_numbers) {
            if (n.size() != c.weights.size())
                throw InvariantError(where + ".char_numbers: index of length " + std::to_string(n.size()) +
                                     ", expected " + std::to_string(c.weights.size()));
            for (unsigned e : n)
                if (e > half_dim_)
                    throw InvariantError(where + ".char_numbers: index entry " + std::to_string(e) +
                                         " exceeds half_dim");
        }
    }
}

Rational ComponentSet::char_number(std::size_t component, const MultiIndex& n) const {
    const auto& c = components_.at(component);
    auto it = c.char_numbers.find(n);
    if (it != c.char_numbers.end())
        return it->second;
    bool all_zero = std::all_of(n.begin(), n.end(), [](unsigned e) { return e == 0; });
    if (all_zero && n.size() == c.weights.size() && c.weights.size() == half_dim_)
        return Rational(1);
    return Rational(0);
}

std::vector<std::pair<MultiIndex, Rational>> ComponentSet::nonzero_char_numbers(std::size_t component) const {
    const auto& c = components_.at(component);
    std::map<MultiIndex, Rational> merged = c.char_numbers;
    if (c.weights.size() == half_dim_) {
        MultiIndex zero(c.weights.size(), 0);
        merged.try_emplace(zero, Rational(1));
    }
    std::vector<std::pair<MultiIndex, Rational>> out;
    for (auto& [n, a] : merged)
        if (a != 0)
            out.emplace_back(n, a);
    return out;
}

FixedPointSet restrict_to_circle(const FixedPointSet& fps, const IntVector& generator) {
    if (generator.size() != fps.rank())
        throw RankMismatch("circle generator of length " + std::to_string(generator.size()) +
                           " for rank " + std::to_string(fps.rank()) + " data");
    std::vector<FixedPoint> points;
    points.reserve(fps.size());
    for (const auto& p : fps.points()) {
        FixedPoint q{p.name, {dot(p.moment, generator)}, {}};
        for (std::size_t j = 0; j < p.weights.size(); ++j) {
            Integer w = dot(p.weights[j], generator);
            if (w == 0)
                throw NotGeneric("generator " + to_string(generator) + " is orthogonal to weight " +
                                 std::to_string(j + 1) + " " + to_string(p.weights[j]) + " at point '" +
                                 p.name + "'");
            q.weights.push_back({w});
        }
        points.push_back(std::move(q));
    }
    return FixedPointSet(1, fps.half_dim(), std::move(points));
}

FixedPointSet negate_weights(const FixedPointSet& fps) {
    std::vector<FixedPoint> points = fps.points();
    for (auto& p : points)
        for (auto& w : p.weights)
            w = negate(w);
    return FixedPointSet(fps.rank(), fps.half_dim(), std::move(points));
}

ComponentSet as_components(const FixedPointSet& fps) {
    std::vector<Component> comps;
    for (const auto& p : fps.points())
        comps.push_back(Component{p.name, p.moment, p.weights, {}});
    return ComponentSet(fps.rank(), fps.half_dim(), std::move(comps));
}

} // namespace fixloc
