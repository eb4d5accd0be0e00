#pragma once

// Shared fixtures and brute-force oracles for the test suites.

#include "fixloc/dataset_io.hpp"
#include "fixloc/partition.hpp"

#include <random>
#include <string>

namespace fixloc::support {

inline std::string data_path(const std::string& name) { return std::string(FIXLOC_DATA_DIR) + "/" + name; }
inline std::string fixture_path(const std::string& name) { return std::string(FIXLOC_FIXTURE_DIR) + "/" + name; }

inline FixedPointSet load_points(const std::string& path) { return std::get<FixedPointSet>(load_dataset(path)); }

inline IntVector iv(std::initializer_list<long long> xs) { return IntVector(xs.begin(), xs.end()); }

// CP^2 restricted to the circle X = (x, y): p, q, r with J = 0, x, y.
inline FixedPointSet ex1(long long x = 2, long long y = 1) {
    return FixedPointSet(1, 2,
                         {{"p", iv({0}), {iv({x}), iv({y})}},
                          {"q", iv({x}), {iv({-x}), iv({y - x})}},
                          {"r", iv({y}), {iv({x - y}), iv({-y})}}});
}

// N_p by exhaustive search over a coefficient box: every coefficient runs
// over [lower, bound] and the full vector equation is tested. No pruning.
inline long long brute_count(const IntVector& origin, const std::vector<IntVector>& steps,
                             const std::vector<int>& lower, const IntVector& target, int bound) {
    const std::size_t g = steps.size();
    std::vector<int> c(g);
    for (std::size_t j = 0; j < g; ++j)
        c[j] = lower[j];
    long long hits = 0;
    while (true) {
        IntVector v = origin;
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t e = 0; e < v.size(); ++e)
                v[e] += steps[j][e] * c[j];
        if (v == target)
            ++hits;
        std::size_t j = 0;
        while (j < g && c[j] == bound) {
            c[j] = lower[j];
            ++j;
        }
        if (j == g)
            return hits;
        ++c[j];
    }
}

// Random rank-1 data: weights nonzero in [-m, m], moments in [-m, m].
inline FixedPointSet random_circle_data(std::mt19937& rng, std::size_t points, std::size_t n, int m) {
    std::uniform_int_distribution<int> d(-m, m);
    std::vector<FixedPoint> ps;
    for (std::size_t i = 0; i < points; ++i) {
        FixedPoint p{"p" + std::to_string(i), iv({d(rng)}), {}};
        for (std::size_t j = 0; j < n; ++j) {
            int w = 0;
            while (w == 0)
                w = d(rng);
            p.weights.push_back(iv({w}));
        }
        ps.push_back(std::move(p));
    }
    return FixedPointSet(1, n, std::move(ps));
}

// Random rank-2 data whose weights avoid the axes and the diagonals, so
// that (1, 2) and (2, 1) style vectors usually polarize.
inline FixedPointSet random_plane_data(std::mt19937& rng, std::size_t points, std::size_t n, int m) {
    std::uniform_int_distribution<int> d(-m, m);
    std::vector<FixedPoint> ps;
    for (std::size_t i = 0; i < points; ++i) {
        FixedPoint p{"p" + std::to_string(i), iv({d(rng), d(rng)}), {}};
        for (std::size_t j = 0; j < n; ++j) {
            IntVector w;
            do
                w = iv({d(rng), d(rng)});
            while (is_zero(w));
            p.weights.push_back(w);
        }
        ps.push_back(std::move(p));
    }
    return FixedPointSet(2, n, std::move(ps));
}

} // namespace fixloc::support
