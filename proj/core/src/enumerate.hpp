#pragma once

// Bounded enumeration of origin + sum_j c_j step_j with c_j >= lower_j.
// A ranking functional w makes every step strictly positive (cost_j =
// <w, step_j> > 0), so for a given target all unknowns are bounded by the
// budget <w, target - origin>.

#include "fixloc/integer.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace fixloc::detail {

struct Generator {
    IntVector step;
    Integer lower;  // 0 or 1
};

class LinearEnumerator {
public:
    LinearEnumerator(IntVector origin, std::vector<Generator> gens, IntVector ranking)
        : origin_(std::move(origin)), gens_(std::move(gens)), ranking_(std::move(ranking)) {
        for (const auto& g : gens_) {
            Integer c = dot(g.step, ranking_);
            if (c <= 0)
                throw std::logic_error("ranking functional is not positive on a generator");
            costs_.push_back(std::move(c));
        }
    }

    std::size_t variables() const noexcept { return gens_.size(); }

    // Number of tuples hitting `target` exactly.
    Integer count(const IntVector& target) const {
        Integer total = 0;
        solve(target, [&](const IntVector&) { ++total; }, false);
        return total;
    }

    // Calls visit(c) for every solution, lexicographically ascending.
    void solutions(const IntVector& target, const std::function<void(const IntVector&)>& visit) const {
        solve(target, visit, true);
    }

    // Calls visit(exponent, depth) for every tuple whose cost above the
    // mandatory minimum is at most `budget`; depth = <w, exponent - origin>.
    void within(const Integer& budget, const std::function<void(const IntVector&, const Integer&)>& visit) const {
        IntVector point = origin_;
        Integer spent = 0;
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (gens_[j].lower != 0) {
                point = add(point, scale(gens_[j].step, gens_[j].lower));
                spent += costs_[j] * gens_[j].lower;
            }
        }
        if (spent > budget)
            return;
        walk(0, point, budget - spent, spent, visit);
    }

private:
    void walk(std::size_t j, IntVector& point, const Integer& remaining, const Integer& spent,
              const std::function<void(const IntVector&, const Integer&)>& visit) const {
        if (j == gens_.size()) {
            visit(point, spent);
            return;
        }
        IntVector saved = point;
        Integer left = remaining;
        Integer used = spent;
        while (true) {
            walk(j + 1, point, left, used, visit);
            if (left < costs_[j])
                break;
            left -= costs_[j];
            used += costs_[j];
            for (std::size_t e = 0; e < point.size(); ++e)
                point[e] += gens_[j].step[e];
        }
        point = std::move(saved);
    }

    void solve(const IntVector& target, const std::function<void(const IntVector&)>& visit, bool want) const {
        IntVector residual = sub(target, origin_);
        for (const auto& g : gens_)
            if (g.lower != 0)
                residual = sub(residual, scale(g.step, g.lower));
        Integer budget = dot(residual, ranking_);
        if (budget < 0)
            return;
        if (gens_.empty()) {
            if (is_zero(residual))
                visit({});
            return;
        }
        IntVector extra(gens_.size(), 0);
        search(0, residual, budget, extra, visit, want);
    }

    void search(std::size_t j, IntVector& residual, const Integer& budget, IntVector& extra,
                const std::function<void(const IntVector&)>& visit, bool want) const {
        const auto& g = gens_[j];
        if (j + 1 == gens_.size()) {
            // The last unknown is forced by the budget; check the full vector.
            if (budget % costs_[j] != 0)
                return;
            Integer c = budget / costs_[j];
            for (std::size_t e = 0; e < residual.size(); ++e)
                if (residual[e] != c * g.step[e])
                    return;
            if (want) {
                extra[j] = c;
                IntVector full(extra.size());
                for (std::size_t i = 0; i < full.size(); ++i)
                    full[i] = extra[i] + gens_[i].lower;
                visit(full);
            } else {
                visit(extra);
            }
            return;
        }
        IntVector saved = residual;
        Integer left = budget;
        Integer c = 0;
        while (true) {
            extra[j] = c;
            search(j + 1, residual, left, extra, visit, want);
            if (left < costs_[j])
                break;
            left -= costs_[j];
            ++c;
            for (std::size_t e = 0; e < residual.size(); ++e)
                residual[e] -= g.step[e];
        }
        residual = std::move(saved);
        extra[j] = 0;
    }

    IntVector origin_;
    std::vector<Generator> gens_;
    IntVector ranking_;
    std::vector<Integer> costs_;
};

} // namespace fixloc::detail
