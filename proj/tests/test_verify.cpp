#include "fixloc/error.hpp"
#include "fixloc/toric.hpp"
#include "fixloc/verify.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fixloc;
using fixloc::support::iv;

namespace {

Integer json_int(const Json& j) { return j.is_string() ? *parse_integer(j.get<std::string>()) : Integer(j.get<long long>()); }

IntVector json_vec(const Json& j) {
    IntVector v;
    for (const auto& x : j)
        v.push_back(json_int(x));
    return v;
}

// Re-evaluates every row of a cancellation report from scratch.
void recheck_cancellation(const FixedPointSet& fps, const VerificationReport& rep, const CountMode& mode) {
    const Json& w = rep.witnesses;
    std::vector<std::size_t> plus, minus;
    for (const auto& n : w["q_plus"])
        plus.push_back(fps.index_of(n.get<std::string>()));
    for (const auto& n : w["q_minus"])
        minus.push_back(fps.index_of(n.get<std::string>()));
    const bool eps = std::holds_alternative<EpsMode>(mode);
    ASSERT_FALSE(w["rows"].empty());
    for (const auto& row : w["rows"]) {
        Target l = eps ? Target{json_vec(row["l"])} : Target{json_int(row["l"])};
        Integer sp = 0, sm = 0;
        for (auto i : plus)
            sp += count_Np(fps, i, l, mode);
        for (auto i : minus)
            sm += count_Np(fps, i, l, mode);
        EXPECT_EQ(sp, json_int(row["plus"]));
        EXPECT_EQ(sm, json_int(row["minus"]));
        if (rep.verdict == Verdict::Verified)
            EXPECT_EQ(sp, sm);
    }
}

void recheck_lattice_eps(const FixedPointSet& fps, const VerificationReport& rep) {
    const Json& w = rep.witnesses;
    for (const auto& entry : w["partners"]) {
        const auto& p = fps.point(entry["point"].get<std::string>());
        const auto& q = fps.point(entry["partner"].get<std::string>());
        const Json& gens = w["lattices"][entry["class"] == "+" ? "minus" : "plus"]["generators"];
        IntVector cert = json_vec(entry["certificate"]);
        IntVector sum(fps.rank(), 0);
        for (std::size_t i = 0; i < cert.size(); ++i)
            sum = add(sum, scale(json_vec(gens[i]), cert[i]));
        EXPECT_EQ(sum, sub(p.moment, q.moment));
    }
}

void recheck_lattice_scalar(const FixedPointSet& fps, const VerificationReport& rep) {
    const Json& w = rep.witnesses;
    IntVector u = json_vec(w["u"]);
    for (const auto& entry : w["partners"]) {
        const auto& p = fps.point(entry["point"].get<std::string>());
        const auto& q = fps.point(entry["partner"].get<std::string>());
        IntVector g = json_vec(w["ideals"][entry["class"] == "+" ? "minus" : "plus"]);
        IntVector k = json_vec(entry["multiples"]);
        IntVector diff = sub(p.moment, q.moment);
        for (std::size_t e = 0; e < g.size(); ++e)
            EXPECT_EQ(diff[e], k[e] * g[e]);
    }
    // the ideal generators really are the coordinate gcds
    for (const char* cls : {"q_plus", "q_minus"}) {
        std::size_t e_count = fps.rank();
        for (std::size_t e = 0; e < e_count; ++e) {
            Integer g = 0;
            for (const auto& n : w[cls])
                for (const auto& a : fps.point(n.get<std::string>()).weights)
                    g = gcd(g, a[e]);
            EXPECT_EQ(g, json_vec(w["ideals"][std::string(cls) == "q_plus" ? "plus" : "minus"])[e]);
        }
    }
}

void recheck_halfspace(const FixedPointSet& fps, const VerificationReport& rep) {
    const auto weights = fps.all_weights();
    if (rep.verdict == Verdict::Verified) {
        IntVector y = json_vec(rep.witnesses["multipliers"]);
        IntVector sum(fps.rank(), 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < y.size(); ++i) {
            EXPECT_GE(y[i], 0);
            nonzero |= y[i] != 0;
            sum = add(sum, scale(weights[i], y[i]));
        }
        EXPECT_TRUE(nonzero);
        EXPECT_TRUE(is_zero(sum));
    } else {
        IntVector u = json_vec(rep.witnesses["u"]);
        for (const auto& a : weights)
            EXPECT_GT(dot(a, u), 0);
    }
}

} // namespace

TEST(Verify, ExampleOneCancellation) {
    auto fps = support::ex1();
    auto rep = verify_cancellation(fps, CircleMode{}, {"ex1"});
    EXPECT_EQ(rep.verdict, Verdict::Verified);
    EXPECT_EQ(rep.witnesses["rows"].size(), 40u);
    EXPECT_EQ(rep.witnesses["refined_identity"]["state"], "holds");
    EXPECT_EQ(rep.dataset, "ex1");
    recheck_cancellation(fps, rep, CircleMode{});
}

TEST(Verify, MissingPointBreaksCancellation) {
    auto fps = support::load_points(support::fixture_path("ex1_without_r.json"));
    auto rep = verify_cancellation(fps, CircleMode{});
    EXPECT_EQ(rep.verdict, Verdict::Refuted);
    ASSERT_FALSE(rep.witnesses["first_failure"].is_null());
    Integer l = json_int(rep.witnesses["first_failure"]);
    EXPECT_NE(count_Np(fps, 0, l, CircleMode{}) + count_Np(fps, 1, l, CircleMode{}), 0);
    recheck_cancellation(fps, rep, CircleMode{});
}

TEST(Verify, SimplexPolarizedAndEps) {
    for (int k = 1; k <= 3; ++k) {
        auto fps = generate_toric(simplex_polytope(k));
        CountMode pol = PolarizedMode{iv({2, 1})};
        auto rep = verify_cancellation(fps, pol);
        EXPECT_EQ(rep.verdict, Verdict::Verified);
        EXPECT_EQ(rep.witnesses["refined_identity"]["state"], "holds");
        recheck_cancellation(fps, rep, pol);

        CountMode eps = EpsMode{sign_assignment_from(fps, iv({2, 1}))};
        auto erep = verify_cancellation(fps, eps, {"", 12});
        EXPECT_EQ(erep.verdict, Verdict::Verified);
        EXPECT_EQ(erep.witnesses["refined_identity"]["state"], "holds");
        recheck_cancellation(fps, erep, eps);
    }
}

TEST(Verify, CancellationVerdictDoesNotDependOnTheVector) {
    for (int k = 1; k <= 3; ++k) {
        auto fps = generate_toric(simplex_polytope(k));
        for (const auto& u : find_polarizing(fps, 3)) {
            EXPECT_EQ(verify_cancellation(fps, PolarizedMode{u}).verdict, Verdict::Verified);
            EXPECT_EQ(verify_cancellation(fps, EpsMode{sign_assignment_from(fps, u)}, {"", 10}).verdict,
                      Verdict::Verified);
        }
    }
}

TEST(Verify, ExampleOneLatticeWitness) {
    auto fps = support::ex1();
    auto rep = verify_lattice(fps, CircleMode{});
    EXPECT_EQ(rep.verdict, Verdict::Verified);
    const Json& p = rep.witnesses["partners"][0];
    EXPECT_EQ(p["point"], "p");
    EXPECT_EQ(p["partner"], "r");
    EXPECT_EQ(json_vec(p["difference"]), iv({-1}));
    EXPECT_EQ(json_vec(rep.witnesses["ideals"]["minus"]), iv({1}));
    EXPECT_EQ(rep.witnesses["multipliers"]["plus"]["c"][0], 1);
    EXPECT_EQ(rep.witnesses["multipliers"]["plus"]["bound"], 1);
    EXPECT_EQ(p["morse_index"], 0);
    recheck_lattice_scalar(fps, rep);
    auto sym = verify_lattice(support::ex1(3, 2), CircleMode{});
    EXPECT_EQ(sym.verdict, Verdict::Verified);
    EXPECT_EQ(json_vec(sym.witnesses["ideals"]["minus"]), iv({1}));
}

TEST(Verify, LatticeNeedsBothClasses) {
    auto single = support::load_points(support::fixture_path("single_point.json"));
    EXPECT_THROW(verify_lattice(single, CircleMode{}), EmptyClass);
    auto reports = verify_all(Dataset{single});
    EXPECT_EQ(reports[1].theorem, "lattice");
    EXPECT_EQ(reports[1].verdict, Verdict::Inapplicable);
    EXPECT_EQ(reports[1].witnesses["error"], "EmptyClass");
}

TEST(Verify, LatticeWitnessesRecheckInEveryMode) {
    auto fps = generate_toric(simplex_polytope(3));
    for (const auto& u : find_polarizing(fps, 3)) {
        auto pol = verify_lattice(fps, PolarizedMode{u});
        EXPECT_EQ(pol.verdict, Verdict::Verified);
        recheck_lattice_scalar(fps, pol);
        EXPECT_TRUE(pol.witnesses.contains("joint_lattice"));
        auto eps = verify_lattice(fps, EpsMode{sign_assignment_from(fps, u)});
        EXPECT_EQ(eps.verdict, Verdict::Verified);
        recheck_lattice_eps(fps, eps);
    }
}

TEST(Verify, HalfspaceOnBundledAndDoctoredData) {
    for (const char* name : {"ex1.json", "ex1_x3y2.json", "simplex2.json", "simplex2_k3.json", "segment.json",
                             "simplex_x_segment.json"}) {
        auto fps = support::load_points(support::data_path(name));
        auto rep = verify_halfspace(fps);
        EXPECT_EQ(rep.verdict, Verdict::Verified) << name;
        recheck_halfspace(fps, rep);
    }
    auto bad = support::load_points(support::fixture_path("all_positive.json"));
    auto rep = verify_halfspace(bad);
    EXPECT_EQ(rep.verdict, Verdict::Refuted);
    recheck_halfspace(bad, rep);
}

TEST(Verify, ToricFamiliesPassEveryVerifier) {
    std::vector<std::pair<std::string, DelzantPolytope>> polys;
    for (unsigned k = 1; k <= 5; ++k) {
        polys.emplace_back("simplex" + std::to_string(k), simplex_polytope(k));
        polys.emplace_back("segment" + std::to_string(k), segment_polytope(k));
    }
    for (unsigned k = 1; k <= 2; ++k)
        polys.emplace_back("prism" + std::to_string(k), product_polytope(simplex_polytope(k), segment_polytope(k)));
    VerifyOptions opt;
    opt.window = 15;
    for (const auto& [name, poly] : polys) {
        auto fps = generate_toric(poly);
        for (const auto& rep : verify_all(Dataset{fps}, opt))
            EXPECT_EQ(rep.verdict, Verdict::Verified) << name << " " << rep.theorem << "\n" << rep.summary;
        if (fps.rank() < 2)
            continue;
        // three circle restrictions each
        std::size_t used = 0;
        for (const auto& x : find_polarizing(fps, 8)) {
            auto circle = restrict_to_circle(fps, x);
            for (const auto& rep : verify_all(Dataset{circle}, opt))
                EXPECT_EQ(rep.verdict, Verdict::Verified)
                    << name << " X=" << to_string(x) << " " << rep.theorem << "\n" << rep.summary;
            if (++used == 3)
                break;
        }
    }
}

TEST(Verify, ParallelEvaluationGivesIdenticalReports) {
    auto fps = generate_toric(simplex_polytope(3));
    VerifyOptions serial, parallel;
    parallel.parallel = true;
    for (const CountMode& mode : {CountMode{PolarizedMode{iv({2, 1})}}, CountMode{EpsMode{sign_assignment_from(fps, iv({2, 1}))}}})
        EXPECT_EQ(to_json(verify_cancellation(fps, mode, serial)).dump(),
                  to_json(verify_cancellation(fps, mode, parallel)).dump());
}

TEST(Verify, SurfaceExample) {
    auto cs = std::get<ComponentSet>(load_dataset(support::data_path("ex2_x1.json")));
    auto rep = verify_prop42(cs);
    EXPECT_EQ(rep.verdict, Verdict::Verified);
    const Json& rows = rep.witnesses["item1"]["rows"];
    ASSERT_EQ(rows.size(), 50u);
    for (int n0 = 1; n0 <= 50; ++n0) {
        // m1 + m2 = 1 + n0 with both parts positive: n0 solutions
        long long oracle = 0;
        for (int m1 = 1; m1 <= n0; ++m1)
            oracle += (1 + n0 - m1 >= 1) ? 1 : 0;
        EXPECT_EQ(json_int(rows[n0 - 1]["count"]), oracle);
        EXPECT_EQ(rows[n0 - 1]["expected"], std::to_string(n0) + "/1");
    }
    EXPECT_TRUE(rep.witnesses["item3"]["holds"].get<bool>());

    auto wide = std::get<ComponentSet>(load_dataset(support::data_path("ex2_x2.json")));
    auto rep2 = verify_prop42(wide);
    EXPECT_EQ(rep2.verdict, Verdict::Verified);
    EXPECT_FALSE(rep2.witnesses["item2"]["sampled"].empty());
}

TEST(Verify, PerturbedCharacteristicNumberIsRefuted) {
    auto cs = std::get<ComponentSet>(load_dataset(support::fixture_path("ex2_perturbed.json")));
    auto rep = verify_prop42(cs);
    EXPECT_EQ(rep.verdict, Verdict::Refuted);
    EXPECT_EQ(rep.witnesses["item1"]["first_failure"], 1);
}

TEST(Verify, SurfaceShapeIsChecked) {
    EXPECT_THROW(verify_prop42(as_components(support::ex1())), ShapeMismatch);
}

TEST(Verify, ReportJsonKeyOrder) {
    auto rep = verify_halfspace(support::ex1(), {"ex1"});
    Json j = to_json(rep);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"theorem", "dataset", "verdict", "witnesses", "window", "elapsed_ms"}));
    EXPECT_TRUE(j["elapsed_ms"].is_null());
    VerifyOptions timed;
    timed.timing = true;
    EXPECT_TRUE(to_json(verify_halfspace(support::ex1(), timed))["elapsed_ms"].is_number());
}
