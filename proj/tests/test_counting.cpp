#include "fixloc/counting.hpp"
#include "fixloc/error.hpp"
#include "fixloc/toric.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fixloc;
using fixloc::support::brute_count;
using fixloc::support::iv;

namespace {

// Circle-mode oracle: positive weights from 1, negative weights enter as
// -alpha from 0; every step raises the value, so l - J bounds each factor.
long long circle_oracle(const FixedPoint& p, long long l) {
    std::vector<IntVector> steps;
    std::vector<int> lower;
    for (const auto& w : p.weights) {
        steps.push_back({abs(w[0])});
        lower.push_back(w[0] > 0 ? 1 : 0);
    }
    long long span = l - static_cast<long long>(p.moment[0]);
    if (span < 0)
        return 0;
    return brute_count(p.moment, steps, lower, {Integer(l)}, static_cast<int>(span) + 1);
}

} // namespace

TEST(Counting, ExampleOneSpotValues) {
    const auto fps = support::ex1();
    const CountMode circle = CircleMode{};
    // brute-force oracle first
    EXPECT_EQ(circle_oracle(fps.point(0), 3), 1);
    EXPECT_EQ(circle_oracle(fps.point(1), 3), 1);
    EXPECT_EQ(circle_oracle(fps.point(2), 3), 2);
    EXPECT_EQ(circle_oracle(fps.point(0), 2), 0);
    EXPECT_EQ(count_Np(fps, 0, Integer(3), circle), 1);
    EXPECT_EQ(count_Np(fps, 1, Integer(3), circle), 1);
    EXPECT_EQ(count_Np(fps, 2, Integer(3), circle), 2);
    EXPECT_EQ(count_Np(fps, 0, Integer(2), circle), 0);
    EXPECT_EQ(count_Np(fps, 1, Integer(2), circle), 1);
    EXPECT_EQ(count_Np(fps, 2, Integer(2), circle), 1);
}

TEST(Counting, RepresentationsReproduceTheTarget) {
    const auto fps = support::ex1();
    auto reps = representations_Np(fps, 2, Integer(3), CircleMode{});
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
    for (const auto& r : reps) {
        // r: J = 1, weights {1, -1}; l = 1 + m*1 - n*(-1)
        ASSERT_EQ(r.m.size(), 1u);
        ASSERT_EQ(r.n.size(), 1u);
        EXPECT_GE(r.m[0], 1);
        EXPECT_EQ(1 + r.m[0] + r.n[0], 3);
    }
}

TEST(Counting, CircleModeAgreesWithBoxOracle) {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        auto fps = support::random_circle_data(rng, 3, 3, 3);
        for (std::size_t p = 0; p < fps.size(); ++p)
            for (long long l = -4; l <= 8; ++l)
                EXPECT_EQ(count_Np(fps, p, Integer(l), CircleMode{}), circle_oracle(fps.point(p), l));
    }
}

TEST(Counting, PolarizedModeIsCircleModeOfTheRestriction) {
    std::mt19937 rng(32);
    for (int i = 0; i < 40; ++i) {
        auto fps = support::random_plane_data(rng, 3, 3, 3);
        auto us = find_polarizing(fps, 2);
        for (const auto& u : us) {
            auto restricted = restrict_to_circle(fps, u);
            for (std::size_t p = 0; p < fps.size(); ++p)
                for (long long l = -6; l <= 10; ++l)
                    EXPECT_EQ(count_Np(fps, p, Integer(l), PolarizedMode{u}),
                              circle_oracle(restricted.point(p), l));
        }
    }
}

TEST(Counting, EpsModeAgreesWithBoxOracle) {
    std::mt19937 rng(33);
    for (int i = 0; i < 25; ++i) {
        auto fps = support::random_plane_data(rng, 3, 2, 2);
        auto us = find_polarizing(fps, 1);
        if (us.empty())
            continue;
        auto eps = sign_assignment_from(fps, us[0]);
        const IntVector& w = eps.ranking();
        for (std::size_t p = 0; p < fps.size(); ++p) {
            const auto& pt = fps.point(p);
            std::vector<IntVector> steps;
            std::vector<int> lower;
            for (auto j : eps.points()[p].positive) {
                steps.push_back(pt.weights[j]);
                lower.push_back(1);
            }
            for (auto j : eps.points()[p].negative) {
                steps.push_back(negate(pt.weights[j]));
                lower.push_back(0);
            }
            for (int dx = -5; dx <= 5; ++dx)
                for (int dy = -5; dy <= 5; ++dy) {
                    IntVector rho = add(pt.moment, iv({dx, dy}));
                    Integer budget = dot(sub(pt.moment, rho), w);
                    long long expected =
                        budget < 0 ? 0 : brute_count(pt.moment, steps, lower, rho, static_cast<int>(budget) + 1);
                    EXPECT_EQ(count_Np(fps, p, rho, EpsMode{eps}), expected);
                }
        }
    }
}

TEST(Counting, WindowTallyMatchesPointwiseCounts) {
    auto simplex = generate_toric(simplex_polytope(2));
    for (const auto& u : find_polarizing(simplex, 3)) {
        auto eps = sign_assignment_from(simplex, u);
        const IntVector& w = eps.ranking();
        for (std::size_t p = 0; p < simplex.size(); ++p) {
            Integer low = dot(simplex.point(p).moment, w) - 12;
            auto tally = count_Np_window(simplex, p, eps, low);
            for (const auto& [rho, c] : tally)
                EXPECT_EQ(count_Np(simplex, p, rho, EpsMode{eps}), c);
            // exponents missing from the tally have no representation
            for (int x = -8; x <= 8; ++x)
                for (int y = -8; y <= 8; ++y) {
                    IntVector rho = iv({x, y});
                    if (dot(rho, w) >= low && !tally.count(rho))
                        EXPECT_EQ(count_Np(simplex, p, rho, EpsMode{eps}), 0);
                }
        }
    }
}

TEST(Counting, ModeMismatchesAreReported) {
    auto simplex = generate_toric(simplex_polytope(1));
    EXPECT_THROW(count_Np(simplex, 0, Integer(1), CircleMode{}), ModeMismatch);
    EXPECT_THROW(count_Np(support::ex1(), 0, iv({1}), CircleMode{}), ModeMismatch);
    EXPECT_THROW(count_Np(simplex, 0, Integer(1), PolarizedMode{iv({1, 1})}), NotPolarizing);
    auto eps = sign_assignment_from(simplex, iv({2, 1}));
    EXPECT_THROW(count_Np(simplex, 0, Integer(1), EpsMode{eps}), ModeMismatch);
    EXPECT_THROW(count_Np(simplex, 0, iv({1, 1, 1}), EpsMode{eps}), ModeMismatch);
}

TEST(Counting, KostantClosedFormsMatchEnumeration) {
    EXPECT_EQ(kostant_C(-1, 0, 5), 1);
    EXPECT_EQ(kostant_C(+1, 0, 0), 0);
    EXPECT_EQ(kostant_C(-1, 2, 5), 10);
    for (unsigned m = 0; m <= 12; ++m)
        for (unsigned l = 0; l <= 12; ++l) {
            EXPECT_EQ(kostant_C(-1, m, l), kostant_C_enumerate(-1, m, l)) << m << "," << l;
            EXPECT_EQ(kostant_C(+1, m, l), kostant_C_enumerate(+1, m, l)) << m << "," << l;
        }
    EXPECT_EQ(tilde_C(+1, 0, 3), -kostant_C(+1, 0, 3));
    EXPECT_EQ(tilde_C(-1, 1, 3), kostant_C(-1, 1, 3));
    EXPECT_EQ(kostant_C(-1, 3, -2), 0);
}

TEST(Counting, NonnegativeSpanAgreesWithReachability) {
    std::mt19937 rng(34);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int i = 0; i < 300; ++i) {
        IntVector u{d(rng), d(rng)};
        // reachability by bounded search over the two multiplicities
        for (int l = -15; l <= 15; ++l) {
            bool reach = false;
            for (int a = 0; a <= 40 && !reach; ++a)
                for (int b = 0; b <= 40 && !reach; ++b)
                    reach = a * u[0] + b * u[1] == l;
            EXPECT_EQ(in_nonnegative_span(l, u), reach) << to_string(u) << " " << l;
        }
    }
}
