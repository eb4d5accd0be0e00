#include "fixloc/character.hpp"
#include "fixloc/error.hpp"
#include "fixloc/toric.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fixloc;
using fixloc::support::iv;

namespace {

// Lattice points of k times the standard simplex in the plane; `interior`
// keeps only points off the boundary.
LaurentPolynomial simplex_points(int k, bool interior) {
    LaurentPolynomial out(2);
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b) {
            bool inside = a >= 1 && b >= 1 && a + b <= k - 1;
            if (!interior || inside)
                out.add_term(iv({a, b}), 1);
        }
    return out;
}

// Lattice points of the product of k1 * simplex and [0, k2].
LaurentPolynomial prism_points(int k1, int k2) {
    LaurentPolynomial out(3);
    for (int a = 0; a <= k1; ++a)
        for (int b = 0; a + b <= k1; ++b)
            for (int c = 0; c <= k2; ++c)
                out.add_term(iv({a, b, c}), 1);
    return out;
}

LaurentPolynomial tetra_points(int k) {
    LaurentPolynomial out(3);
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b)
            for (int c = 0; a + b + c <= k; ++c)
                out.add_term(iv({a, b, c}), 1);
    return out;
}

} // namespace

TEST(Character, ExampleOneBothConventions) {
    EXPECT_TRUE(character_exact(support::ex1(), Convention::Paper).is_zero());
    EXPECT_EQ(character_exact(support::ex1(), Convention::Negated).to_string(), "1 + z + z^2");
    EXPECT_EQ(character_exact(support::ex1(3, 2), Convention::Negated).to_string(), "1 + z^2 + z^3");
}

TEST(Character, SimplexDilationsMatchLatticePointCount) {
    for (int k = 1; k <= 5; ++k) {
        auto fps = generate_toric(simplex_polytope(k));
        auto all = character_exact(fps, Convention::Negated);
        auto interior = character_exact(fps, Convention::Paper);
        EXPECT_EQ(all, simplex_points(k, false)) << k;
        EXPECT_EQ(interior, simplex_points(k, true)) << k;
        EXPECT_EQ(all.size(), static_cast<std::size_t>((k + 1) * (k + 2) / 2));
        EXPECT_EQ(interior.size(), static_cast<std::size_t>(k <= 2 ? 0 : (k - 1) * (k - 2) / 2));
    }
}

TEST(Character, RankThreeToricData) {
    auto prism = generate_toric(product_polytope(simplex_polytope(2), segment_polytope(2)));
    EXPECT_EQ(character_exact(prism, Convention::Negated), prism_points(2, 2));
    auto tetra = generate_toric(simplex_polytope(2, 3));
    EXPECT_EQ(character_exact(tetra, Convention::Negated), tetra_points(2));
}

TEST(Character, PolarizedEqualsSpecializedExact) {
    for (int k = 1; k <= 4; ++k) {
        auto fps = generate_toric(simplex_polytope(k));
        for (const auto& u : find_polarizing(fps, 3))
            for (auto c : {Convention::Paper, Convention::Negated})
                EXPECT_EQ(character_polarized(fps, u, c), character_exact(fps, c).specialize(u));
    }
}

TEST(Character, ReconstructionIsIndependentOfTheRegion) {
    for (int k = 1; k <= 4; ++k) {
        auto fps = generate_toric(simplex_polytope(k));
        auto reference = character_exact(fps);
        std::vector<IntVector> us = find_polarizing(fps, 6);
        for (const auto& u : us)
            EXPECT_EQ(reconstruct_character(fps, sign_assignment_from(fps, u)), reference) << to_string(u);
        auto eps = make_sign_assignment(fps, {{"p", {1, 1}}, {"q", {-1, 1}}, {"r", {-1, -1}}});
        EXPECT_EQ(reconstruct_character(fps, eps), reference);
    }
}

TEST(Character, ExpansionCoefficientsMatchCharacter) {
    // Truncated series oracle: every coefficient of the expansion, taken
    // term by term, equals the coefficient of the exact character.
    for (auto [x, y] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {1, 3}, {5, -2}}) {
        for (int k = 1; k <= 3; ++k) {
            auto fps = restrict_to_circle(generate_toric(simplex_polytope(k)), iv({x, y}));
            auto chi = character_exact(fps);
            auto part = polarize(fps, iv({1}));
            for (int l = -20; l <= 30; ++l)
                EXPECT_EQ(expansion_coefficient(fps, part, l), chi.coeff({l})) << x << "," << y << " k=" << k << " l=" << l;
        }
    }
    auto fps = generate_toric(simplex_polytope(3));
    auto chi = character_exact(fps);
    auto eps = sign_assignment_from(fps, iv({2, 1}));
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            EXPECT_EQ(expansion_coefficient(fps, eps, iv({a, b})), chi.coeff(iv({a, b})));
}

TEST(Character, NonManifoldDataIsNotPolynomial) {
    auto fps = support::load_points(support::fixture_path("ex1_without_r.json"));
    EXPECT_THROW(character_exact(fps), NotPolynomial);
    auto positive = support::load_points(support::fixture_path("all_positive.json"));
    EXPECT_THROW(reconstruct_character(positive, sign_assignment_from(positive, iv({1, 1}))), NotPolynomial);
}

TEST(Character, MonomialShiftOfMoments) {
    // Shifting every moment by c multiplies the character by z^c.
    auto fps = support::ex1(3, 2);
    auto chi = character_exact(fps, Convention::Negated);
    std::vector<FixedPoint> shifted = fps.points();
    for (auto& p : shifted)
        p.moment[0] += 7;
    FixedPointSet moved(1, 2, shifted);
    EXPECT_EQ(character_exact(moved, Convention::Negated), chi.shifted({7}));
}
