#include "fixloc/error.hpp"
#include "fixloc/partition.hpp"
#include "fixloc/toric.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fixloc;
using fixloc::support::iv;

TEST(Partition, ExampleOneCircleClasses) {
    auto part = polarize(support::ex1(), iv({1}));
    EXPECT_EQ(part.q_plus, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(part.q_minus, (std::vector<std::size_t>{2}));
    // p: both weights positive, q: both negative, r: one of each
    EXPECT_EQ(part.points[0].negative.size(), 0u);
    EXPECT_EQ(part.points[1].negative.size(), 2u);
    EXPECT_EQ(part.points[2].negative.size(), 1u);
}

TEST(Partition, SplitInvariantsOnRandomData) {
    std::mt19937 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto fps = support::random_plane_data(rng, 4, 3, 4);
        auto us = find_polarizing(fps, 3);
        for (const auto& u : us) {
            auto part = polarize(fps, u);
            EXPECT_EQ(part.q_plus.size() + part.q_minus.size(), fps.size());
            for (std::size_t p = 0; p < fps.size(); ++p) {
                const auto& s = part.points[p];
                EXPECT_EQ(s.positive.size() + s.negative.size(), fps.half_dim());
                EXPECT_EQ(s.sigma, s.negative.size() % 2 == 0 ? 1 : -1);
                for (auto j : s.positive)
                    EXPECT_GT(dot(fps.point(p).weights[j], u), 0);
                for (auto j : s.negative)
                    EXPECT_LT(dot(fps.point(p).weights[j], u), 0);
            }
        }
    }
}

TEST(Partition, PolarizingSearchOrder) {
    auto simplex = generate_toric(simplex_polytope(1));
    auto found = find_polarizing(simplex, 3);
    ASSERT_EQ(found.size(), 3u);
    EXPECT_EQ(found[0], iv({-1, 1}));
    EXPECT_EQ(default_polarizing(simplex), iv({-1, 1}));
    EXPECT_EQ(default_polarizing(support::ex1()), iv({1}));
    for (const auto& u : found)
        EXPECT_NO_THROW(make_polarizing(simplex, u));
}

TEST(Partition, OrthogonalVectorIsRejected) {
    auto simplex = generate_toric(simplex_polytope(1));
    try {
        make_polarizing(simplex, iv({1, 1}));
        FAIL();
    } catch (const NotPolarizing& e) {
        EXPECT_NE(std::string(e.what()).find("point 'q'"), std::string::npos);
    }
}

TEST(Partition, SignAssignmentFromVectorMatchesPolarization) {
    auto simplex = generate_toric(simplex_polytope(1));
    auto eps = sign_assignment_from(simplex, iv({2, 1}));
    auto part = polarize(simplex, iv({2, 1}));
    EXPECT_EQ(eps.q_plus(), part.q_plus);
    EXPECT_EQ(eps.q_minus(), part.q_minus);
    for (std::size_t p = 0; p < simplex.size(); ++p) {
        // The region of u expands the opposite way: A_p(eps) = B_p(u).
        EXPECT_EQ(eps.points()[p].positive, part.points[p].negative);
        EXPECT_EQ(eps.points()[p].negative, part.points[p].positive);
        for (std::size_t j = 0; j < 2; ++j)
            EXPECT_GT(Rational(eps.eps(p, j)) *
                          dot(std::span<const Rational>(eps.interior()), std::span<const Integer>(simplex.point(p).weights[j])),
                      0);
    }
}

TEST(Partition, InfeasibleAssignmentThrows) {
    auto simplex = generate_toric(simplex_polytope(1));
    // p demands x > 0, y > 0 while q demands x < 0.
    std::vector<std::vector<int>> eps{{1, 1}, {1, 1}, {1, 1}};
    EXPECT_THROW(SignAssignment(simplex, eps), InfeasibleAssignment);
}

TEST(Partition, NamedTableBuildsAssignment) {
    auto simplex = generate_toric(simplex_polytope(1));
    auto eps = make_sign_assignment(simplex, {{"p", {1, 1}}, {"q", {-1, 1}}, {"r", {-1, -1}}});
    EXPECT_EQ(eps.q_plus(), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(eps.q_minus(), (std::vector<std::size_t>{1}));
    EXPECT_THROW(make_sign_assignment(simplex, {{"p", {1, 1}}, {"q", {-1, 1}}}), InvariantError);
    EXPECT_THROW(make_sign_assignment(simplex, {{"p", {1, 1}}, {"q", {-1, 1}}, {"x", {1, 1}}}), InvariantError);
}
