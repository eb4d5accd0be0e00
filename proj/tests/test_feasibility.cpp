#include "fixloc/feasibility.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fixloc;

namespace {

bool strictly_positive(const std::vector<IntVector>& system, const RatVector& u) {
    for (const auto& a : system)
        if (dot(std::span<const Rational>(u), std::span<const Integer>(a)) <= 0)
            return false;
    return true;
}

void expect_certificate(const std::vector<IntVector>& system, const IntVector& y) {
    ASSERT_EQ(y.size(), system.size());
    IntVector sum(system.front().size(), 0);
    bool nonzero = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
        EXPECT_GE(y[i], 0);
        nonzero |= y[i] != 0;
        sum = add(sum, scale(system[i], y[i]));
    }
    EXPECT_TRUE(nonzero);
    EXPECT_TRUE(is_zero(sum));
}

} // namespace

TEST(Feasibility, OpenQuadrant) {
    std::vector<IntVector> s{{1, 0}, {0, 1}, {1, 1}};
    auto u = strict_feasibility(s);
    ASSERT_TRUE(u);
    EXPECT_TRUE(strictly_positive(s, *u));
}

TEST(Feasibility, OppositeVectorsAreInfeasible) {
    std::vector<IntVector> s{{1}, {-1}};
    auto r = strict_feasibility_certified(s);
    EXPECT_FALSE(r.point);
    expect_certificate(s, r.multipliers);
}

TEST(Feasibility, SimplexWeightsAreInfeasible) {
    std::vector<IntVector> s{{1, 0}, {0, 1}, {-1, 0}, {-1, 1}, {1, -1}, {0, -1}};
    auto r = strict_feasibility_certified(s);
    EXPECT_FALSE(r.point);
    expect_certificate(s, r.multipliers);
}

TEST(Feasibility, AgreesWithRandomSearch) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-4, 4), probe(-20, 20);
    for (int i = 0; i < 300; ++i) {
        const std::size_t r = 2 + i % 2;
        std::vector<IntVector> s;
        for (int k = 0; k < 4; ++k) {
            IntVector a;
            do {
                a.clear();
                for (std::size_t e = 0; e < r; ++e)
                    a.push_back(d(rng));
            } while (is_zero(a));
            s.push_back(a);
        }
        auto result = strict_feasibility_certified(s);
        if (result.point)
            EXPECT_TRUE(strictly_positive(s, *result.point));
        else
            expect_certificate(s, result.multipliers);
        // Any sampled strictly positive point contradicts infeasibility.
        for (int t = 0; t < 200 && !result.point; ++t) {
            RatVector u;
            for (std::size_t e = 0; e < r; ++e)
                u.push_back(probe(rng));
            EXPECT_FALSE(strictly_positive(s, u));
        }
    }
}
