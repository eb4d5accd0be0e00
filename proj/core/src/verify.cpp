#include "fixloc/verify.hpp"

#include "fixloc/character.hpp"
#include "fixloc/components.hpp"
#include "fixloc/error.hpp"
#include "fixloc/feasibility.hpp"
#include "fixloc/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <sstream>
#include <thread>

namespace fixloc {

namespace {

using Clock = std::chrono::steady_clock;

// Evaluates f(0..n-1); with `parallel` the indices are split into contiguous
// chunks run on separate threads. Results are always in index order.
template <class T, class F>
std::vector<T> evaluate_all(std::size_t n, F&& f, bool parallel) {
    std::vector<T> out(n);
    std::size_t workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    workers = std::min(workers, std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = f(i);
        return out;
    }
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
        const std::size_t end = std::min(n, begin + chunk);
        jobs.push_back(std::async(std::launch::async, [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                out[i] = f(i);
        }));
    }
    for (auto& j : jobs)
        j.get();
    return out;
}

Json names_json(const FixedPointSet& fps, const std::vector<std::size_t>& indices) {
    Json out = Json::array();
    for (auto i : indices)
        out.push_back(fps.point(i).name);
    return out;
}

std::string names_text(const FixedPointSet& fps, const std::vector<std::size_t>& indices) {
    std::string s = "{";
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k)
            s += ", ";
        s += fps.point(indices[k]).name;
    }
    return s + "}";
}

Json vectors_json(const std::vector<IntVector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(vector_to_json(v));
    return out;
}

std::string mode_name(const CountMode& mode) {
    if (std::holds_alternative<CircleMode>(mode))
        return "circle";
    if (std::holds_alternative<PolarizedMode>(mode))
        return "polarized";
    return "eps";
}

struct Sums {
    Integer plus;
    Integer minus;
};

Sums class_sums(const FixedPointSet& fps, const std::vector<int>& sigma, const Target& l, const CountMode& mode) {
    Sums s;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        Integer c = count_Np(fps, i, l, mode);
        (sigma[i] > 0 ? s.plus : s.minus) += c;
    }
    return s;
}

std::vector<int> sigmas(const std::vector<PointSplit>& points) {
    std::vector<int> out;
    for (const auto& p : points)
        out.push_back(p.sigma);
    return out;
}

Integer parity(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------- cancellation

VerificationReport cancellation_scalar(const FixedPointSet& fps, const CountMode& mode, const VerifyOptions& opt) {
    const bool circle = std::holds_alternative<CircleMode>(mode);
    if (circle && fps.rank() != 1)
        throw ModeMismatch("circle mode needs rank 1 data, got rank " + std::to_string(fps.rank()));
    const IntVector u = circle ? IntVector{Integer(1)} : std::get<PolarizedMode>(mode).u;
    const PolarizedPartition part = polarize(fps, u);
    const auto sigma = sigmas(part.points);

    std::optional<LaurentPolynomial> chi;
    try {
        chi = character_polarized(fps, u, Convention::Paper);
    } catch (const NotPolynomial&) {
    }
    Integer min_j, max_j;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        Integer d = dot(fps.point(i).moment, u);
        if (i == 0 || d < min_j)
            min_j = d;
        if (i == 0 || d > max_j)
            max_j = d;
    }
    Integer threshold;
    if (!chi)
        threshold = max_j;
    else if (chi->is_zero())
        threshold = min_j - 1;
    else
        threshold = *chi->support_max({Integer(1)});

    // <u, rho> only takes values in gcd(u) Z.
    Integer step = 0;
    for (const auto& x : u)
        step = gcd(step, x);
    const long long width = std::max<long long>(opt.window, 1);
    const Integer hi = threshold + width;
    const Integer lo = std::min<Integer>(min_j, threshold + 1);
    const std::size_t count = static_cast<std::size_t>(to_ll(hi - lo + 1));
    auto sums = evaluate_all<Sums>(
        count, [&](std::size_t k) { return class_sums(fps, sigma, Target{Integer(lo + k)}, mode); }, opt.parallel);

    Json rows = Json::array();
    std::optional<Integer> first_failure;
    std::size_t tested = 0;
    std::vector<Integer> refined_failures;
    bool refined_below_only = true;
    for (std::size_t k = 0; k < count; ++k) {
        const Integer l = lo + k;
        const auto& s = sums[k];
        if (chi) {
            Integer expected = parity(fps.half_dim()) * (s.plus - s.minus);
            if (chi->coeff({l}) != expected) {
                refined_failures.push_back(l);
                if (l > threshold)
                    refined_below_only = false;
            }
        }
        if (l <= threshold)
            continue;
        if (l % step != 0)
            continue;
        ++tested;
        Json row;
        row["l"] = integer_to_json(l);
        row["plus"] = integer_to_json(s.plus);
        row["minus"] = integer_to_json(s.minus);
        rows.push_back(std::move(row));
        if (s.plus != s.minus && !first_failure)
            first_failure = l;
    }

    VerificationReport rep;
    rep.theorem = "cancellation";
    rep.verdict = first_failure ? Verdict::Refuted : Verdict::Verified;
    Json& w = rep.witnesses;
    w["mode"] = mode_name(mode);
    w["u"] = vector_to_json(u);
    w["q_plus"] = names_json(fps, part.q_plus);
    w["q_minus"] = names_json(fps, part.q_minus);
    w["character"] = chi ? Json(chi->to_string()) : Json(nullptr);
    w["threshold"] = integer_to_json(threshold);
    w["rows"] = std::move(rows);
    w["first_failure"] = first_failure ? integer_to_json(*first_failure) : Json(nullptr);
    std::string refined_state;
    if (!chi)
        refined_state = "unavailable";
    else if (refined_failures.empty())
        refined_state = "holds";
    else if (refined_below_only)
        refined_state = "fails below threshold";
    else
        refined_state = "fails";
    Json refined;
    refined["state"] = refined_state;
    refined["from"] = integer_to_json(lo);
    refined["to"] = integer_to_json(hi);
    refined["failures"] = Json::array();
    for (const auto& l : refined_failures)
        refined["failures"].push_back(integer_to_json(l));
    w["refined_identity"] = std::move(refined);
    rep.window = Json{{"from", integer_to_json(threshold + 1)}, {"to", integer_to_json(hi)}};

    std::ostringstream os;
    os << "mode " << mode_name(mode) << ", u = " << to_string(u) << "; Q+ = " << names_text(fps, part.q_plus)
       << ", Q- = " << names_text(fps, part.q_minus) << "\n";
    os << "character " << (chi ? chi->to_string() : std::string("not a Laurent polynomial"))
       << "; threshold l* = " << threshold << "\n";
    os << "l\tsum Q+\tsum Q-\n";
    for (const auto& row : rep.witnesses["rows"])
        os << row["l"].dump() << "\t" << row["plus"].dump() << "\t" << row["minus"].dump() << "\n";
    if (first_failure)
        os << "sums differ at l = " << *first_failure << "\n";
    else
        os << "sums agree at all " << tested << " admissible l in (" << threshold << ", " << hi << "]\n";
    os << "coefficient identity on [" << lo << ", " << hi << "]: " << refined_state << "\n";
    rep.summary = os.str();
    return rep;
}

VerificationReport cancellation_eps(const FixedPointSet& fps, const SignAssignment& eps, const VerifyOptions& opt) {
    const CountMode mode = EpsMode{eps};
    const IntVector& w = eps.ranking();
    const auto sigma = sigmas(eps.points());

    std::optional<LaurentPolynomial> chi;
    try {
        chi = reconstruct_character(fps, eps);
    } catch (const NotPolynomial&) {
    }
    // Independent route for the coefficient identity.
    std::optional<LaurentPolynomial> reference;
    try {
        reference = character_exact(fps, Convention::Paper);
    } catch (const Error&) {
    }

    Integer min_j, max_j;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        Integer d = dot(fps.point(i).moment, w);
        if (i == 0 || d < min_j)
            min_j = d;
        if (i == 0 || d > max_j)
            max_j = d;
    }
    Integer threshold;  // lowest degree of the character
    if (!chi)
        threshold = min_j;
    else if (chi->is_zero())
        threshold = max_j + 1;
    else
        threshold = *chi->support_min(w);

    const long long width = std::max<long long>(opt.window, 1);
    const Integer low = threshold - width;
    auto tallies = evaluate_all<std::map<IntVector, Integer>>(
        fps.size(), [&](std::size_t i) { return count_Np_window(fps, i, eps, low); }, opt.parallel);
    std::map<IntVector, Sums> by_exponent;
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (const auto& [rho, c] : tallies[i]) {
            auto& s = by_exponent[rho];
            (sigma[i] > 0 ? s.plus : s.minus) += c;
        }
    std::vector<IntVector> candidates;
    std::vector<Sums> sums;
    for (auto& [rho, s] : by_exponent) {
        candidates.push_back(rho);
        sums.push_back(std::move(s));
    }

    Json rows = Json::array();
    std::optional<std::size_t> first_failure;
    std::size_t tested = 0;
    std::vector<IntVector> refined_failures;
    bool refined_below_only = true;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& rho = candidates[k];
        const Integer degree = dot(rho, w);
        const auto& s = sums[k];
        if (reference && reference->coeff(rho) != s.plus - s.minus) {
            refined_failures.push_back(rho);
            if (degree < threshold)
                refined_below_only = false;
        }
        if (degree >= threshold)
            continue;
        ++tested;
        Json row;
        row["l"] = vector_to_json(rho);
        row["plus"] = integer_to_json(s.plus);
        row["minus"] = integer_to_json(s.minus);
        rows.push_back(std::move(row));
        if (s.plus != s.minus && !first_failure)
            first_failure = k;
    }
    if (reference) {
        std::set<IntVector> seen(candidates.begin(), candidates.end());
        for (const auto& [rho, c] : reference->terms())
            if (dot(rho, w) >= low && !seen.count(rho)) {
                refined_failures.push_back(rho);
                if (dot(rho, w) < threshold)
                    refined_below_only = false;
            }
    }

    VerificationReport rep;
    rep.theorem = "cancellation";
    rep.verdict = first_failure ? Verdict::Refuted : Verdict::Verified;
    Json& wit = rep.witnesses;
    wit["mode"] = "eps";
    Json signs = Json::object();
    for (std::size_t i = 0; i < fps.size(); ++i)
        signs[fps.point(i).name] = eps.signs()[i];
    wit["eps"] = std::move(signs);
    wit["ranking"] = vector_to_json(w);
    wit["q_plus"] = names_json(fps, eps.q_plus());
    wit["q_minus"] = names_json(fps, eps.q_minus());
    wit["character"] = chi ? Json(chi->to_string()) : Json(nullptr);
    wit["threshold"] = integer_to_json(threshold);
    wit["rows"] = std::move(rows);
    wit["first_failure"] = first_failure ? vector_to_json(candidates[*first_failure]) : Json(nullptr);
    std::string refined_state;
    if (!reference)
        refined_state = "unavailable";
    else if (refined_failures.empty())
        refined_state = "holds";
    else if (refined_below_only)
        refined_state = "fails above threshold only";
    else
        refined_state = "fails";
    Json refined;
    refined["state"] = refined_state;
    refined["failures"] = vectors_json(refined_failures);
    wit["refined_identity"] = std::move(refined);
    rep.window = Json{{"from_degree", integer_to_json(low)}, {"to_degree", integer_to_json(threshold - 1)}};

    std::ostringstream os;
    os << "mode eps, ranking " << to_string(w) << "; Q+ = " << names_text(fps, eps.q_plus())
       << ", Q- = " << names_text(fps, eps.q_minus()) << "\n";
    os << "character " << (chi ? chi->to_string() : std::string("not a Laurent polynomial"))
       << "; lowest degree " << threshold << "\n";
    if (first_failure) {
        const auto& s = sums[*first_failure];
        os << "sums differ at " << to_string(candidates[*first_failure]) << ": " << s.plus << " vs " << s.minus
           << "\n";
    } else {
        os << "sums agree at all " << tested << " exponents with degree in [" << low << ", " << threshold - 1
           << "]\n";
    }
    os << "coefficient identity against the exact character: " << refined_state << "\n";
    rep.summary = os.str();
    return rep;
}

// ---------------------------------------------------------------- lattice

std::vector<IntVector> class_weights(const FixedPointSet& fps, const std::vector<std::size_t>& cls) {
    std::vector<IntVector> out;
    for (auto i : cls)
        for (const auto& w : fps.point(i).weights)
            out.push_back(w);
    return out;
}

Integer coordinate_gcd(const std::vector<IntVector>& weights, std::size_t e) {
    Integer g = 0;
    for (const auto& w : weights)
        g = gcd(g, w[e]);
    return g;
}

bool in_ideal(const Integer& x, const Integer& g) { return g == 0 ? x == 0 : x % g == 0; }

// Minimal c in 1..bound with c*g in gZ for the target ideal.
std::optional<std::size_t> minimal_multiplier(const Integer& g, const Integer& target, std::size_t bound) {
    for (std::size_t c = 1; c <= bound; ++c)
        if (in_ideal(Integer(c) * g, target))
            return c;
    return std::nullopt;
}

VerificationReport lattice_scalar(const FixedPointSet& fps, const CountMode& mode) {
    const bool circle = std::holds_alternative<CircleMode>(mode);
    if (circle && fps.rank() != 1)
        throw ModeMismatch("circle mode needs rank 1 data, got rank " + std::to_string(fps.rank()));
    const IntVector u = circle ? IntVector{Integer(1)} : std::get<PolarizedMode>(mode).u;
    const PolarizedPartition part = polarize(fps, u);
    if (part.q_plus.empty() || part.q_minus.empty())
        throw EmptyClass(std::string(part.q_plus.empty() ? "Q+" : "Q-") + " is empty under u = " + to_string(u));
    const std::size_t r = fps.rank();
    const auto w_plus = class_weights(fps, part.q_plus);
    const auto w_minus = class_weights(fps, part.q_minus);
    IntVector g_plus, g_minus;
    for (std::size_t e = 0; e < r; ++e) {
        g_plus.push_back(coordinate_gcd(w_plus, e));
        g_minus.push_back(coordinate_gcd(w_minus, e));
    }

    bool ok = true;
    std::ostringstream os;
    os << "mode " << mode_name(mode) << ", u = " << to_string(u) << "; Q+ = " << names_text(fps, part.q_plus)
       << ", Q- = " << names_text(fps, part.q_minus) << "\n";
    os << "coordinate ideals I+ = " << to_string(g_plus) << ", I- = " << to_string(g_minus) << " (generators)\n";

    Json partners = Json::array();
    auto search = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to, const IntVector& g,
                      const char* cls) {
        for (auto i : from) {
            const auto& p = fps.point(i);
            Json entry;
            entry["point"] = p.name;
            entry["class"] = cls;
            std::optional<std::size_t> found;
            for (auto j : to) {
                IntVector diff = sub(p.moment, fps.point(j).moment);
                bool all = true;
                for (std::size_t e = 0; e < r && all; ++e)
                    all = in_ideal(diff[e], g[e]);
                if (all) {
                    found = j;
                    break;
                }
            }
            if (found) {
                const auto& q = fps.point(*found);
                IntVector diff = sub(p.moment, q.moment);
                IntVector multiples;
                for (std::size_t e = 0; e < r; ++e)
                    multiples.push_back(g[e] == 0 ? Integer(0) : Integer(diff[e] / g[e]));
                entry["partner"] = q.name;
                entry["difference"] = vector_to_json(diff);
                entry["multiples"] = vector_to_json(multiples);
                os << p.name << " (" << cls << ") -> " << q.name << ", J difference " << to_string(diff) << "\n";
            } else {
                ok = false;
                entry["partner"] = nullptr;
                os << p.name << " (" << cls << ") has no partner in the opposite class\n";
            }
            if (circle) {
                std::size_t negative = 0;
                for (const auto& w : p.weights)
                    if (w[0] < 0)
                        ++negative;
                entry["morse_index"] = 2 * negative;
            }
            partners.push_back(std::move(entry));
        }
    };
    search(part.q_plus, part.q_minus, g_minus, "+");
    search(part.q_minus, part.q_plus, g_plus, "-");

    auto multipliers = [&](const IntVector& from, const IntVector& to, std::size_t bound, const char* label) {
        Json j;
        Json cs = Json::array();
        for (std::size_t e = 0; e < r; ++e) {
            auto c = minimal_multiplier(from[e], to[e], bound);
            if (!c)
                ok = false;
            cs.push_back(c ? Json(*c) : Json(nullptr));
        }
        j["c"] = cs;
        j["bound"] = bound;
        os << "minimal c" << label << " = " << cs.dump() << " (bound " << bound << ")\n";
        return j;
    };

    VerificationReport rep;
    rep.theorem = "lattice";
    Json& w = rep.witnesses;
    w["mode"] = mode_name(mode);
    w["u"] = vector_to_json(u);
    w["q_plus"] = names_json(fps, part.q_plus);
    w["q_minus"] = names_json(fps, part.q_minus);
    w["ideals"] = Json{{"plus", vector_to_json(g_plus)}, {"minus", vector_to_json(g_minus)}};
    w["partners"] = std::move(partners);
    Json mult;
    mult["plus"] = multipliers(g_plus, g_minus, part.q_minus.size(), "+");
    mult["minus"] = multipliers(g_minus, g_plus, part.q_plus.size(), "-");
    w["multipliers"] = std::move(mult);

    if (r >= 2) {
        // Joint lattice reading, reported alongside the coordinate-wise one.
        LatticeBasis lat_plus(r, w_plus), lat_minus(r, w_minus);
        bool joint = true;
        Json jp = Json::array();
        auto joint_search = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                                const LatticeBasis& lat) {
            for (auto i : from) {
                Json entry{{"point", fps.point(i).name}, {"partner", nullptr}};
                for (auto j : to)
                    if (lat.contains(sub(fps.point(i).moment, fps.point(j).moment))) {
                        entry["partner"] = fps.point(j).name;
                        break;
                    }
                if (entry["partner"].is_null())
                    joint = false;
                jp.push_back(std::move(entry));
            }
        };
        joint_search(part.q_plus, part.q_minus, lat_minus);
        joint_search(part.q_minus, part.q_plus, lat_plus);
        w["joint_lattice"] = Json{{"holds", joint}, {"partners", std::move(jp)}};
        os << "joint lattice reading: " << (joint ? "holds" : "fails") << "\n";
    }
    rep.verdict = ok ? Verdict::Verified : Verdict::Refuted;
    rep.summary = os.str();
    return rep;
}

VerificationReport lattice_eps(const FixedPointSet& fps, const SignAssignment& eps) {
    if (eps.q_plus().empty() || eps.q_minus().empty())
        throw EmptyClass(std::string(eps.q_plus().empty() ? "Q+" : "Q-") + "(eps) is empty");
    const std::size_t r = fps.rank();
    const auto w_plus = class_weights(fps, eps.q_plus());
    const auto w_minus = class_weights(fps, eps.q_minus());
    const LatticeBasis lat_plus(r, w_plus), lat_minus(r, w_minus);

    bool ok = true;
    std::ostringstream os;
    os << "mode eps; Q+ = " << names_text(fps, eps.q_plus()) << ", Q- = " << names_text(fps, eps.q_minus())
       << "\n";
    Json partners = Json::array();
    auto search = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                      const LatticeBasis& lat, const char* cls) {
        for (auto i : from) {
            const auto& p = fps.point(i);
            Json entry;
            entry["point"] = p.name;
            entry["class"] = cls;
            entry["partner"] = nullptr;
            for (auto j : to) {
                IntVector diff = sub(p.moment, fps.point(j).moment);
                if (auto cert = lat.membership(diff)) {
                    entry["partner"] = fps.point(j).name;
                    entry["difference"] = vector_to_json(diff);
                    entry["certificate"] = vector_to_json(*cert);
                    os << p.name << " (" << cls << ") -> " << fps.point(j).name << ", J difference "
                       << to_string(diff) << "\n";
                    break;
                }
            }
            if (entry["partner"].is_null()) {
                ok = false;
                os << p.name << " (" << cls << ") has no partner in the opposite class\n";
            }
            partners.push_back(std::move(entry));
        }
    };
    search(eps.q_plus(), eps.q_minus(), lat_minus, "+");
    search(eps.q_minus(), eps.q_plus(), lat_plus, "-");

    auto multiplier = [&](const std::vector<IntVector>& from, const LatticeBasis& to, std::size_t bound,
                          const char* label) {
        std::optional<std::size_t> found;
        for (std::size_t c = 1; c <= bound && !found; ++c) {
            bool all = true;
            for (const auto& g : from)
                if (!to.contains(scale(g, Integer(c)))) {
                    all = false;
                    break;
                }
            if (all)
                found = c;
        }
        if (!found)
            ok = false;
        os << "minimal c" << label << " = " << (found ? std::to_string(*found) : std::string("none")) << " (bound "
           << bound << ")\n";
        return Json{{"c", found ? Json(*found) : Json(nullptr)}, {"bound", bound}};
    };

    VerificationReport rep;
    rep.theorem = "lattice";
    Json& w = rep.witnesses;
    w["mode"] = "eps";
    w["q_plus"] = names_json(fps, eps.q_plus());
    w["q_minus"] = names_json(fps, eps.q_minus());
    w["lattices"] = Json{{"plus", Json{{"generators", vectors_json(w_plus)}, {"basis", vectors_json(lat_plus.reduced())}}},
                         {"minus", Json{{"generators", vectors_json(w_minus)}, {"basis", vectors_json(lat_minus.reduced())}}}};
    w["partners"] = std::move(partners);
    Json mult;
    mult["plus"] = multiplier(w_plus, lat_minus, eps.q_minus().size(), "+");
    mult["minus"] = multiplier(w_minus, lat_plus, eps.q_plus().size(), "-");
    w["multipliers"] = std::move(mult);
    rep.verdict = ok ? Verdict::Verified : Verdict::Refuted;
    rep.summary = os.str();
    return rep;
}

template <class F>
VerificationReport timed(const VerifyOptions& opt, F&& body) {
    const auto start = Clock::now();
    VerificationReport rep = body();
    rep.dataset = opt.dataset;
    if (opt.timing)
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rep;
}

bool is_precondition(const Error& e) {
    static const std::set<std::string> kinds = {"EmptyClass",   "ShapeMismatch", "NotPolarizing",
                                                "ModeMismatch", "NotGeneric",    "InfeasibleAssignment",
                                                "RankMismatch"};
    return kinds.count(e.kind()) > 0;
}

template <class F>
VerificationReport or_inapplicable(const std::string& theorem, const VerifyOptions& opt, F&& run) {
    try {
        return run();
    } catch (const Error& e) {
        if (!is_precondition(e))
            throw;
        VerificationReport rep;
        rep.theorem = theorem;
        rep.dataset = opt.dataset;
        rep.verdict = Verdict::Inapplicable;
        rep.witnesses = Json{{"error", e.kind()}, {"message", e.what()}};
        rep.summary = e.kind() + ": " + e.what();
        return rep;
    }
}

} // namespace

VerificationReport verify_cancellation(const FixedPointSet& fps, const CountMode& mode, const VerifyOptions& options) {
    return timed(options, [&] {
        if (const auto* e = std::get_if<EpsMode>(&mode))
            return cancellation_eps(fps, e->eps, options);
        return cancellation_scalar(fps, mode, options);
    });
}

VerificationReport verify_lattice(const FixedPointSet& fps, const CountMode& mode, const VerifyOptions& options) {
    return timed(options, [&] {
        if (const auto* e = std::get_if<EpsMode>(&mode))
            return lattice_eps(fps, e->eps);
        return lattice_scalar(fps, mode);
    });
}

VerificationReport verify_halfspace(const FixedPointSet& fps, const VerifyOptions& options) {
    return timed(options, [&] {
        const auto weights = fps.all_weights();
        const auto result = strict_feasibility_certified(weights);
        VerificationReport rep;
        rep.theorem = "halfspace";
        Json& w = rep.witnesses;
        w["weights"] = vectors_json(weights);
        std::ostringstream os;
        if (result.point) {
            rep.verdict = Verdict::Refuted;
            IntVector u = clear_denominators(*result.point);
            IntVector pairings;
            for (const auto& a : weights)
                pairings.push_back(dot(a, u));
            w["u"] = vector_to_json(u);
            w["pairings"] = vector_to_json(pairings);
            os << "every weight pairs positively with u = " << to_string(u) << "\n";
        } else {
            rep.verdict = Verdict::Verified;
            IntVector combination(fps.rank(), 0);
            for (std::size_t i = 0; i < weights.size(); ++i)
                combination = add(combination, scale(weights[i], result.multipliers[i]));
            w["multipliers"] = vector_to_json(result.multipliers);
            w["combination"] = vector_to_json(combination);
            os << "no open half space contains all " << weights.size()
               << " weights; nonnegative multipliers " << to_string(result.multipliers)
               << " combine them to zero\n";
        }
        rep.summary = os.str();
        return rep;
    });
}

VerificationReport verify_prop42(const ComponentSet& cs, const VerifyOptions& options) {
    return timed(options, [&] {
        if (cs.rank() != 1)
            throw ShapeMismatch("needs a circle action (rank 1), got rank " + std::to_string(cs.rank()));
        if (cs.half_dim() != 2)
            throw ShapeMismatch("needs a 4-manifold (half_dim 2), got half_dim " + std::to_string(cs.half_dim()));
        if (cs.components().size() != 2)
            throw ShapeMismatch("needs exactly two fixed components, got " + std::to_string(cs.components().size()));
        std::optional<std::size_t> qi, fi;
        for (std::size_t i = 0; i < 2; ++i) {
            auto s = cs.component(i).codim_half();
            if (s == 2)
                qi = i;
            else if (s == 1)
                fi = i;
        }
        if (!qi || !fi)
            throw ShapeMismatch("needs one isolated point and one fixed surface");
        const auto& q = cs.component(*qi);
        const auto& f = cs.component(*fi);
        const Integer a1 = q.weights[0][0], a2 = q.weights[1][0];
        const Integer alpha = f.weights[0][0];
        if (a1 <= 0 || a2 <= 0)
            throw ShapeMismatch("isolated point '" + q.name + "' must have two positive weights");
        if (alpha >= 0)
            throw ShapeMismatch("surface '" + f.name + "' must have a negative normal weight");
        const Integer jq = q.moment[0], jf = f.moment[0];
        if (jf <= jq)
            throw ShapeMismatch("J(F) must exceed J(q)");
        const Rational a0 = cs.char_number(*fi, {0});
        const Rational a1f = cs.char_number(*fi, {1});
        const unsigned range = std::max(options.range, 1u);

        // Pairs (m1, m2) of positive integers with m1 a1 + m2 a2 = target.
        auto pairs = [&](const Integer& target) {
            Integer shifted = target - a1 - a2;
            if (shifted < 0)
                return Integer(0);
            return Integer(solve_weighted_sum({a1, a2}, shifted).size());
        };

        Json rows = Json::array();
        std::vector<unsigned> failing;
        for (unsigned n0 = 1; n0 <= range; ++n0) {
            Integer count = pairs(jf - jq - Integer(n0) * alpha);
            Rational expected = -a0 - Rational(n0) * a1f;
            bool match = Rational(count) == expected;
            if (!match)
                failing.push_back(n0);
            rows.push_back(Json{{"n0", n0},
                                {"count", integer_to_json(count)},
                                {"expected", rational_to_json(expected)},
                                {"match", match}});
        }
        const unsigned threshold = failing.empty() ? 0 : failing.back();
        const bool item1 = threshold <= range / 2;

        const Integer step = abs(alpha);
        Json sampled = Json::array(), nonzero = Json::array();
        for (Integer k = jf + Integer(threshold) * step + 1; k <= jf + Integer(range) * step; ++k) {
            if ((k - jf) % step == 0)
                continue;
            sampled.push_back(integer_to_json(k));
            Integer n = pairs(k - jq);
            if (n != 0)
                nonzero.push_back(Json{{"k", integer_to_json(k)}, {"count", integer_to_json(n)}});
        }
        const bool item2 = nonzero.empty();
        const Integer diff = jf - jq;
        const bool item3 = diff % alpha == 0;

        VerificationReport rep;
        rep.theorem = "prop42";
        rep.verdict = item1 && item2 && item3 ? Verdict::Verified : Verdict::Refuted;
        Json& w = rep.witnesses;
        w["q"] = q.name;
        w["F"] = f.name;
        w["A0"] = rational_to_json(a0);
        w["A1"] = rational_to_json(a1f);
        w["threshold"] = threshold;
        w["item1"] = Json{{"holds", item1},
                          {"first_failure", failing.empty() ? Json(nullptr) : Json(failing.front())},
                          {"rows", std::move(rows)}};
        const bool vacuous = sampled.empty();
        w["item2"] = Json{{"holds", item2}, {"sampled", std::move(sampled)}, {"nonzero", nonzero}};
        w["item3"] = Json{{"holds", item3},
                          {"difference", integer_to_json(diff)},
                          {"alpha_F", integer_to_json(alpha)},
                          {"quotient", item3 ? integer_to_json(diff / alpha) : Json(nullptr)}};
        rep.window = Json{{"n0_from", 1}, {"n0_to", range}};

        std::ostringstream os;
        os << "q = " << q.name << " (J " << jq << ", weights " << a1 << ", " << a2 << "), F = " << f.name << " (J "
           << jf << ", weight " << alpha << "), A0 = " << to_fraction_string(a0)
           << ", A1 = " << to_fraction_string(a1f) << "\n";
        if (failing.empty())
            os << "item 1: count equals -A0 - n0 A1 for every n0 in 1.." << range << "\n";
        else
            os << "item 1: " << (item1 ? "holds" : "fails") << " past n0 = " << threshold << " (first mismatch at n0 = "
               << failing.front() << ")\n";
        if (vacuous)
            os << "item 2: no non-resonant k in range (|alpha_F| = " << step << ")\n";
        else
            os << "item 2: " << (item2 ? "zero counts at every sampled non-resonant k" : "nonzero count found")
               << "\n";
        os << "item 3: J(F) - J(q) = " << diff << (item3 ? " is" : " is not") << " divisible by " << alpha << "\n";
        rep.summary = os.str();
        return rep;
    });
}

std::vector<VerificationReport> verify_all(const Dataset& dataset, const VerifyOptions& options) {
    std::vector<VerificationReport> out;
    if (const auto* cs = std::get_if<ComponentSet>(&dataset)) {
        out.push_back(or_inapplicable("prop42", options, [&] { return verify_prop42(*cs, options); }));
        return out;
    }
    const auto& fps = std::get<FixedPointSet>(dataset);
    if (fps.rank() == 1) {
        const CountMode mode = CircleMode{};
        out.push_back(or_inapplicable("cancellation", options, [&] { return verify_cancellation(fps, mode, options); }));
        out.push_back(or_inapplicable("lattice", options, [&] { return verify_lattice(fps, mode, options); }));
    } else {
        std::optional<IntVector> u;
        try {
            u = default_polarizing(fps);
        } catch (const Error& e) {
            if (!is_precondition(e))
                throw;
        }
        if (u) {
            const CountMode polarized = PolarizedMode{*u};
            const CountMode eps = EpsMode{sign_assignment_from(fps, *u)};
            out.push_back(or_inapplicable("cancellation", options,
                                          [&] { return verify_cancellation(fps, polarized, options); }));
            out.push_back(
                or_inapplicable("cancellation", options, [&] { return verify_cancellation(fps, eps, options); }));
            out.push_back(
                or_inapplicable("lattice", options, [&] { return verify_lattice(fps, polarized, options); }));
            out.push_back(or_inapplicable("lattice", options, [&] { return verify_lattice(fps, eps, options); }));
        } else {
            for (const char* t : {"cancellation", "lattice"})
                out.push_back(or_inapplicable(t, options, [&]() -> VerificationReport {
                    throw NotPolarizing("no polarizing vector found within the search radius");
                }));
        }
    }
    out.push_back(verify_halfspace(fps, options));
    return out;
}

} // namespace fixloc
