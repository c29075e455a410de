#include "hitchin/companion.hpp"

#include "hitchin/errors.hpp"

#include <numeric>

namespace hitchin {

std::size_t CompanionPlan::coordinate(std::pair<int, int> cell) const {
    std::size_t offset = 0;
    for (int a = 1; a < cell.first; ++a) {
        offset += static_cast<std::size_t>(blocks[static_cast<std::size_t>(a - 1)]);
    }
    return offset + static_cast<std::size_t>(cell.second - 1);
}

CompanionPlan build_plan(const std::vector<int>& blocks) {
    if (blocks.empty()) {
        throw PreconditionError("blocks: empty");
    }
    for (int b : blocks) {
        if (b <= 0) {
            throw PreconditionError("blocks: sizes must be positive");
        }
    }
    CompanionPlan plan;
    plan.blocks = blocks;
    const int k = static_cast<int>(blocks.size());
    const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
    auto size_of = [&](int a) { return blocks[static_cast<std::size_t>(a - 1)]; };
    std::pair<int, int> cur{k, 1};
    plan.s.push_back(cur);
    while (static_cast<int>(plan.s.size()) < n) {
        const auto [a, b] = cur;
        std::pair<int, int> next{0, 0};
        for (int a2 = a - 1; a2 >= 1; --a2) {
            if (size_of(a2) >= b) {
                next = {a2, b};
                break;
            }
        }
        if (next.first == 0) {
            for (int a2 = k; a2 >= 1; --a2) {
                if (size_of(a2) >= b + 1) {
                    next = {a2, b + 1};
                    break;
                }
            }
        }
        if (next.first == 0) {
            throw StructuralError("build_plan: sequence ended early");
        }
        plan.eps.push_back(next.first < a ? 1 : 0);
        plan.s.push_back(next);
        cur = next;
    }
    for (const auto& c : plan.s) {
        plan.m.push_back(c.second);
    }
    return plan;
}

SeriesMatrix companion_matrix(const CompanionPlan& plan, const std::vector<Series>& f) {
    const std::size_t n = plan.size();
    if (f.size() != n) {
        throw PreconditionError("companion_matrix: expected " + std::to_string(n) + " entries f_0..f_{n-1}");
    }
    SeriesMatrix A(n, n);
    for (std::size_t j = 1; j < n; ++j) {
        A(plan.coordinate(plan.s[j]), plan.coordinate(plan.s[j - 1])) = Series::monomial(Rational(1), -plan.eps[j - 1]);
    }
    const std::size_t row = plan.coordinate(plan.s[0]);
    for (std::size_t j = 0; j < n; ++j) {
        if (!f[j].is_integral()) {
            throw PreconditionError("companion_matrix: f_" + std::to_string(j) + " has a pole");
        }
        A(row, plan.coordinate(plan.s[j])) -= f[j];
    }
    return A;
}

SeriesMatrix sl_companion_witness(const CompanionPlan& plan, const std::vector<int>& targets) {
    const std::size_t n = plan.size();
    if (targets.size() + 1 != n) {
        throw PreconditionError("witness: expected " + std::to_string(n - 1) + " targets");
    }
    std::vector<Series> f(n);
    for (std::size_t j = 2; j <= n; ++j) {
        const int lowest = -static_cast<int>(j) + plan.m[j - 1];
        const int target = targets[j - 2];
        if (target < lowest) {
            throw PreconditionError("witness: target " + std::to_string(target) + " for c_" + std::to_string(j) +
                                    " is below the predicted minimum " + std::to_string(lowest));
        }
        f[j - 1] = Series::monomial(Rational(1), target - lowest);
    }
    return companion_matrix(plan, f);
}

}  // namespace hitchin
