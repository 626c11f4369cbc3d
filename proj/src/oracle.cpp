// Copyright 2026 The nrp-chee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nrp/oracle.hpp"

#include <algorithm>
#include <limits>

namespace nrp {

std::string_view to_string(ExactStatus status) {
    switch (status) {
        case ExactStatus::kOptimal:
            return "OPTIMAL";
        case ExactStatus::kInfeasible:
            return "INFEASIBLE";
        case ExactStatus::kTimeout:
            return "TIMEOUT";
    }
    return "UNKNOWN";
}

namespace {

class BranchAndBound {
  public:
    BranchAndBound(const Instance &instance, std::int64_t node_budget)
        : instance_(instance),
          n_(instance.nurse_count()),
          grades_(instance.grade_count()),
          budget_(node_budget),
          roster_(n_),
          coverage_(instance) {
        // Options cheapest first so good incumbents turn up early.
        order_.resize(static_cast<std::size_t>(n_));
        min_cost_suffix_.assign(static_cast<std::size_t>(n_ + 1), 0);
        reach_.assign(static_cast<std::size_t>((n_ + 1) * kPeriods * grades_), 0);
        for (NurseId i = n_ - 1; i >= 0; --i) {
            auto &options = order_[static_cast<std::size_t>(i)];
            options = instance.nurse(i).options;
            std::stable_sort(options.begin(), options.end(),
                             [](const PatternOption &a, const PatternOption &b) { return a.cost < b.cost; });
            min_cost_suffix_[static_cast<std::size_t>(i)] =
                min_cost_suffix_[static_cast<std::size_t>(i + 1)] + options.front().cost;

            for (int k = 0; k < kPeriods; ++k) {
                const bool can_cover = std::any_of(options.begin(), options.end(), [&](const PatternOption &o) {
                    return instance.pattern(o.pattern).covers(k);
                });
                for (int s = 1; s <= grades_; ++s) {
                    const bool counts = can_cover && serves_band(instance.nurse(i), s);
                    reach(i, k, s) = reach(i + 1, k, s) + (counts ? 1 : 0);
                }
            }
        }
    }

    ExactResult solve() {
        search(0, 0);
        ExactResult result;
        result.nodes_explored = nodes_;
        if (best_cost_ < std::numeric_limits<int>::max()) {
            result.cost = best_cost_;
            result.roster = best_roster_;
        }
        if (timed_out_) {
            result.status = ExactStatus::kTimeout;
        } else {
            result.status = result.cost ? ExactStatus::kOptimal : ExactStatus::kInfeasible;
        }
        return result;
    }

  private:
    int &reach(NurseId from, int period, int band) {
        return reach_[static_cast<std::size_t>((from * kPeriods + period) * grades_ + (band - 1))];
    }

    // Optimistic: every remaining nurse able to work (k, s) is assumed to do so.
    bool coverage_repairable(NurseId next) {
        for (int k = 0; k < kPeriods; ++k) {
            for (int s = 1; s <= grades_; ++s) {
                if (coverage_.shortfall(k, s) > reach(next, k, s)) return false;
            }
        }
        return true;
    }

    void search(NurseId next, int cost) {
        if (timed_out_) return;
        if (++nodes_ > budget_) {
            timed_out_ = true;
            return;
        }
        if (cost + min_cost_suffix_[static_cast<std::size_t>(next)] >= best_cost_) return;
        if (!coverage_repairable(next)) return;
        if (next == n_) {
            best_cost_ = cost;
            best_roster_ = roster_;
            return;
        }
        for (const PatternOption &option : order_[static_cast<std::size_t>(next)]) {
            roster_.assign(next, option.pattern);
            coverage_.add(instance_, next, option.pattern);
            search(next + 1, cost + option.cost);
            coverage_.remove(instance_, next, option.pattern);
            roster_.release(next);
            if (timed_out_) return;
        }
    }

    const Instance &instance_;
    const int n_;
    const int grades_;
    const std::int64_t budget_;
    std::vector<std::vector<PatternOption>> order_;
    std::vector<int> min_cost_suffix_;
    std::vector<int> reach_;  // nurses from index i on that could serve (k, s)

    Roster roster_;
    CoverageState coverage_;
    std::int64_t nodes_ = 0;
    bool timed_out_ = false;
    int best_cost_ = std::numeric_limits<int>::max();
    Roster best_roster_;
};

}  // namespace

ExactResult exact_solve(const Instance &instance, std::int64_t node_budget) {
    return BranchAndBound(instance, node_budget).solve();
}

}  // namespace nrp
