#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

struct RankSelection {
    std::vector<int> candidate_ranks;
    double holdout_fraction = 0.1;
    int repeats = 5;
    int chosen_rank = 1;
    std::vector<int> per_repeat_argmax;
    Matrix per_rank_auc;  // repeats x candidates
    std::uint64_t seed = 0;
};

/// Rounded (half away from zero) average of the per-repeat argmax ranks.
int round_average_rank(const std::vector<int>& picks);

/// Cross-validated rank selection: repeatedly hold out a fraction of the
/// observed nodes, re-run the LE pipeline on the shrunken view for each
/// candidate rank, and score AUC on the held-out entries that are known
/// from a11. Chosen rank is the rounded average of per-repeat argmaxes,
/// argmax ties broken toward the smaller rank.
RankSelection select_rank(const EgoView& view,
                          const std::vector<int>& candidates,
                          double holdout_fraction, int repeats,
                          std::uint64_t seed);

/// CSV audit trace: one row per (repeat, candidate) with its AUC.
void write_selection_trace(const RankSelection& sel, std::ostream& out);

}  // namespace egonet
