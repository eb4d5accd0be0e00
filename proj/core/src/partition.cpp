#include "fixloc/partition.hpp"

#include "fixloc/error.hpp"
#include "fixloc/feasibility.hpp"

namespace fixloc {

namespace {

bool pairs_nonzero(const FixedPointSet& fps, const IntVector& u) {
    for (const auto& p : fps.points())
        for (const auto& w : p.weights)
            if (dot(w, u) == 0)
                return false;
    return true;
}

// Visits every vector of {-R..R}^r with max-norm exactly R, lexicographically.
template <class Visit>
bool scan_shell(std::size_t r, long long radius, Visit&& visit) {
    std::vector<long long> v(r, -radius);
    while (true) {
        bool on_shell = false;
        for (auto x : v)
            if (x == radius || x == -radius)
                on_shell = true;
        if (on_shell) {
            IntVector u(v.begin(), v.end());
            if (visit(u))
                return true;
        }
        std::size_t i = r;
        while (i > 0 && v[i - 1] == radius)
            v[--i] = -radius;
        if (i == 0)
            return false;
        ++v[i - 1];
    }
}

void split_classes(const std::vector<PointSplit>& points, std::vector<std::size_t>& plus,
                   std::vector<std::size_t>& minus) {
    for (std::size_t i = 0; i < points.size(); ++i)
        (points[i].sigma > 0 ? plus : minus).push_back(i);
}

} // namespace

PolarizingVector make_polarizing(const FixedPointSet& fps, IntVector u) {
    if (u.size() != fps.rank())
        throw RankMismatch("polarizing vector of length " + std::to_string(u.size()) + " for rank " +
                           std::to_string(fps.rank()) + " data");
    PolarizingVector out{std::move(u), {}};
    for (const auto& p : fps.points()) {
        IntVector row;
        for (std::size_t j = 0; j < p.weights.size(); ++j) {
            Integer s = dot(p.weights[j], out.entries);
            if (s == 0)
                throw NotPolarizing(to_string(out.entries) + " is orthogonal to weight " + std::to_string(j + 1) +
                                    " " + to_string(p.weights[j]) + " at point '" + p.name + "'");
            row.push_back(std::move(s));
        }
        out.pairings.push_back(std::move(row));
    }
    return out;
}

std::vector<IntVector> find_polarizing(const FixedPointSet& fps, std::size_t count, unsigned max_radius) {
    std::vector<IntVector> found;
    if (count == 0)
        return found;
    for (long long radius = 1; radius <= static_cast<long long>(max_radius); ++radius) {
        bool full = scan_shell(fps.rank(), radius, [&](const IntVector& u) {
            if (pairs_nonzero(fps, u))
                found.push_back(u);
            return found.size() >= count;
        });
        if (full)
            break;
    }
    return found;
}

IntVector default_polarizing(const FixedPointSet& fps) {
    if (fps.rank() == 1)
        return {Integer(1)};
    auto found = find_polarizing(fps, 1);
    if (found.empty())
        throw NotPolarizing("no polarizing vector found within the search radius");
    return found.front();
}

PolarizedPartition polarize(const FixedPointSet& fps, const IntVector& u) {
    PolarizedPartition part{make_polarizing(fps, u), {}, {}, {}};
    for (const auto& row : part.u.pairings) {
        PointSplit split;
        for (std::size_t j = 0; j < row.size(); ++j)
            (row[j] > 0 ? split.positive : split.negative).push_back(j);
        split.sigma = split.negative.size() % 2 == 0 ? 1 : -1;
        part.points.push_back(std::move(split));
    }
    split_classes(part.points, part.q_plus, part.q_minus);
    return part;
}

namespace {

void check_shape(const FixedPointSet& fps, const std::vector<std::vector<int>>& eps) {
    if (eps.size() != fps.size())
        throw InvariantError("sign assignment covers " + std::to_string(eps.size()) + " points, dataset has " +
                             std::to_string(fps.size()));
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps[i].size() != fps.half_dim())
            throw InvariantError("sign assignment at point '" + fps.point(i).name + "' has " +
                                 std::to_string(eps[i].size()) + " slots");
        for (int s : eps[i])
            if (s != 1 && s != -1)
                throw InvariantError("sign assignment entries must be +1 or -1");
    }
}

std::vector<IntVector> signed_weights(const FixedPointSet& fps, const std::vector<std::vector<int>>& eps) {
    std::vector<IntVector> system;
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = 0; j < fps.half_dim(); ++j)
            system.push_back(scale(fps.point(i).weights[j], eps[i][j]));
    return system;
}

} // namespace

SignAssignment::SignAssignment(const FixedPointSet& fps, std::vector<std::vector<int>> eps)
    : eps_(std::move(eps)) {
    check_shape(fps, eps_);
    auto interior = strict_feasibility(signed_weights(fps, eps_));
    if (!interior)
        throw InfeasibleAssignment("the open cone selected by the sign assignment is empty");
    interior_ = std::move(*interior);
    finish(fps);
}

SignAssignment::SignAssignment(const FixedPointSet& fps, std::vector<std::vector<int>> eps, RatVector interior)
    : eps_(std::move(eps)), interior_(std::move(interior)) {
    check_shape(fps, eps_);
    if (interior_.size() != fps.rank())
        throw RankMismatch("interior point has the wrong length");
    for (const auto& a : signed_weights(fps, eps_))
        if (dot(std::span<const Rational>(interior_), std::span<const Integer>(a)) <= 0)
            throw InfeasibleAssignment("interior certificate violates the sign assignment");
    finish(fps);
}

void SignAssignment::finish(const FixedPointSet& fps) {
    ranking_ = clear_denominators(interior_);
    Integer g = 0;
    for (const auto& x : ranking_)
        g = gcd(g, x);
    if (g > 1)
        for (auto& x : ranking_)
            x /= g;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        PointSplit split;
        for (std::size_t j = 0; j < fps.half_dim(); ++j)
            (eps_[i][j] < 0 ? split.positive : split.negative).push_back(j);
        split.sigma = split.positive.size() % 2 == 0 ? 1 : -1;
        points_.push_back(std::move(split));
    }
    split_classes(points_, q_plus_, q_minus_);
}

SignAssignment sign_assignment_from(const FixedPointSet& fps, const IntVector& u) {
    auto pol = make_polarizing(fps, u);
    std::vector<std::vector<int>> eps;
    for (const auto& row : pol.pairings) {
        std::vector<int> signs;
        for (const auto& s : row)
            signs.push_back(s > 0 ? 1 : -1);
        eps.push_back(std::move(signs));
    }
    return SignAssignment(fps, std::move(eps), RatVector(u.begin(), u.end()));
}

SignAssignment make_sign_assignment(const FixedPointSet& fps,
                                    const std::vector<std::pair<std::string, std::vector<int>>>& table) {
    std::vector<std::vector<int>> eps(fps.size());
    std::vector<bool> seen(fps.size(), false);
    for (const auto& [name, signs] : table) {
        std::size_t i;
        try {
            i = fps.index_of(name);
        } catch (const std::out_of_range&) {
            throw InvariantError("sign assignment names unknown point '" + name + "'");
        }
        if (seen[i])
            throw InvariantError("sign assignment lists point '" + name + "' twice");
        seen[i] = true;
        eps[i] = signs;
    }
    for (std::size_t i = 0; i < fps.size(); ++i)
        if (!seen[i])
            throw InvariantError("sign assignment misses point '" + fps.point(i).name + "'");
    return SignAssignment(fps, std::move(eps));
}

} // namespace fixloc
