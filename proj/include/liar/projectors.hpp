#pragma once

#include "liar/inference.hpp"
#include "liar/state_space.hpp"

#include <vector>

namespace liar {

/// Diagonal 0/1 projector acting on one sentence factor (identity elsewhere):
/// keeps basis vectors whose `sentence` entry lies in `entries`.
/// Never materialized as a matrix; application filters the sparse support.
struct ProjectorSpec {
    int sentence = 1;
    std::vector<int> entries;  // sorted, unique, non-empty

    bool selects(const TensorIndex& idx) const;
    bool operator==(const ProjectorSpec&) const = default;
};

// All constructors throw Error{OutOfRange} on a bad sentence/entry for the given m.
ProjectorSpec truth_hypothesis_projector(int sentence, int m);
ProjectorSpec falsehood_hypothesis_projector(int sentence, int m);
ProjectorSpec hypothesis_projector(Hypothesis h, int m);
/// Inference entries only: 1 <= entry <= 2m-2.
ProjectorSpec inference_projector(int sentence, int entry, int m);
/// Any single entry in [1, 2m]; used for completeness checks.
ProjectorSpec entry_projector(int sentence, int entry, int m);

SparseState apply(const ProjectorSpec& p, const SparseState& state);

enum class CollapseMode { Renormalize, Raw };

struct CollapseResult {
    SparseState state;         // null state when the projection vanishes
    double probability = 0.0;  // squared norm of the raw projection
};

CollapseResult collapse(const SparseState& state, const ProjectorSpec& p,
                        CollapseMode mode = CollapseMode::Renormalize);

/// ||P psi||^2 without building the projected state.
double probability(const SparseState& state, const ProjectorSpec& p);

} // namespace liar
