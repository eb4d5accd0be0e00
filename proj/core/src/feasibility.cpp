#include "fixloc/feasibility.hpp"

#include "fixloc/error.hpp"

#include <map>
#include <stdexcept>

namespace fixloc {

namespace {

// A derived constraint together with the nonnegative combination of the
// input constraints that produced it: vec = sum_i mult_i a_i.
struct Derived {
    IntVector vec;
    RatVector mult;
};

// Strict homogeneous inequalities are invariant under positive scaling, so
// every derived row is kept primitive; the multipliers follow the scaling.
Derived primitive(Derived d) {
    Integer g = 0;
    for (const auto& x : d.vec)
        g = gcd(g, x);
    if (g > 1) {
        for (auto& x : d.vec)
            x /= g;
        for (auto& m : d.mult)
            m /= Rational(g);
    }
    return d;
}

using System = std::map<IntVector, RatVector>;

void insert(System& sys, Derived d) { sys.try_emplace(std::move(d.vec), std::move(d.mult)); }

} // namespace

FeasibilityResult strict_feasibility_certified(const std::vector<IntVector>& system) {
    if (system.empty())
        return {RatVector{}, {}};
    const std::size_t r = system.front().size();
    const std::size_t m = system.size();
    System current;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& a = system[i];
        if (a.size() != r)
            throw RankMismatch("constraints of different lengths");
        if (is_zero(a))
            throw std::invalid_argument("zero constraint vector");
        RatVector mult(m, Rational(0));
        mult[i] = 1;
        insert(current, primitive({a, std::move(mult)}));
    }

    // stages[v] = the system in which variables 0..v-1 are already eliminated.
    std::vector<System> stages;
    for (std::size_t var = 0; var < r; ++var) {
        stages.push_back(current);
        System next;
        std::vector<const System::value_type*> lower, upper;
        for (const auto& row : current) {
            if (row.first[var] > 0)
                lower.push_back(&row);
            else if (row.first[var] < 0)
                upper.push_back(&row);
            else
                insert(next, {row.first, row.second});
        }
        for (const auto* lo : lower)
            for (const auto* up : upper) {
                // |up_v| * lo + lo_v * up has a zero in column var.
                Integer cl = -up->first[var], cu = lo->first[var];
                Derived comb{IntVector(r), RatVector(m)};
                for (std::size_t i = 0; i < r; ++i)
                    comb.vec[i] = cl * lo->first[i] + cu * up->first[i];
                for (std::size_t i = 0; i < m; ++i)
                    comb.mult[i] = Rational(cl) * lo->second[i] + Rational(cu) * up->second[i];
                if (is_zero(comb.vec))
                    return {std::nullopt, clear_denominators(comb.mult)};  // 0 > 0
                insert(next, primitive(std::move(comb)));
            }
        current = std::move(next);
    }
    // Rows surviving every elimination would be zero rows, which are caught above.
    if (!current.empty())
        throw std::logic_error("Fourier-Motzkin left constraints without variables");

    RatVector u(r, Rational(0));
    for (std::size_t k = r; k-- > 0;) {
        std::optional<Rational> lo, hi;
        for (const auto& [a, mult] : stages[k]) {
            if (a[k] == 0)
                continue;
            // a_k u_k + sum_{i>k} a_i u_i > 0
            Rational rest = 0;
            for (std::size_t i = k + 1; i < r; ++i)
                rest += Rational(a[i]) * u[i];
            Rational bound = -rest / Rational(a[k]);
            if (a[k] > 0) {
                if (!lo || bound > *lo)
                    lo = bound;
            } else {
                if (!hi || bound < *hi)
                    hi = bound;
            }
        }
        if (lo && hi)
            u[k] = (*lo + *hi) / 2;
        else if (lo)
            u[k] = *lo + 1;
        else if (hi)
            u[k] = *hi - 1;
        else
            u[k] = 0;
    }

    for (const auto& a : system)
        if (dot(std::span<const Rational>(u), std::span<const Integer>(a)) <= 0)
            throw std::logic_error("Fourier-Motzkin back substitution produced an infeasible point");
    return {std::move(u), {}};
}

std::optional<RatVector> strict_feasibility(const std::vector<IntVector>& system) {
    return strict_feasibility_certified(system).point;
}

} // namespace fixloc
