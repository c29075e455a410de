#pragma once

#include "hitchin/matrix.hpp"

#include <utility>
#include <vector>

namespace hitchin {

/// The greedy cell sequence s(0..n-1) over the blocks and its decrease flags.
struct CompanionPlan {
    std::vector<int> blocks;
    /// (block a, column b), 1-based.
    std::vector<std::pair<int, int>> s;
    /// eps[j-1] = 1 iff step j lowers the block index, j = 1..n-1.
    std::vector<int> eps;
    /// m_j = column of s(j), j = 0..n-1.
    std::vector<int> m;

    [[nodiscard]] std::size_t size() const noexcept { return s.size(); }
    /// Coordinate of cell (a, b) in the block-ordered basis.
    [[nodiscard]] std::size_t coordinate(std::pair<int, int> cell) const;
};

/// Throws `PreconditionError` unless every block is positive.
CompanionPlan build_plan(const std::vector<int>& blocks);

/// E - sum_j f_j e*_{s(j)} (x) e_{s(0)}, E = sum_j t^{-eps_j} e*_{s(j-1)} (x) e_{s(j)}.
/// Throws `PreconditionError` when some f_j has a pole or the length is wrong.
SeriesMatrix companion_matrix(const CompanionPlan& plan, const std::vector<Series>& f);

/// Trace-free companion matrix with c_j = t^{targets[j-2]} exactly for j = 2..n
/// (f_0 = 0, f_{j-1} = t^{target_j + j - m_{j-1}}). Targets below -j + m_{j-1} are rejected.
SeriesMatrix sl_companion_witness(const CompanionPlan& plan, const std::vector<int>& targets);

}  // namespace hitchin
