#include "liar/projectors.hpp"

#include "liar/error.hpp"

#include <algorithm>
#include <string>

namespace liar {

namespace {

void check_sentence(int sentence, int m) {
    if (m < 1 || sentence < 1 || sentence > m) {
        throw Error(ErrorKind::OutOfRange, "sentence " + std::to_string(sentence) + " outside 1.." + std::to_string(m));
    }
}

} // namespace

bool ProjectorSpec::selects(const TensorIndex& idx) const {
    return std::binary_search(entries.begin(), entries.end(), idx[sentence]);
}

ProjectorSpec truth_hypothesis_projector(int sentence, int m) {
    check_sentence(sentence, m);
    return {sentence, {2 * m - 1}};
}

ProjectorSpec falsehood_hypothesis_projector(int sentence, int m) {
    check_sentence(sentence, m);
    return {sentence, {2 * m}};
}

ProjectorSpec hypothesis_projector(Hypothesis h, int m) {
    return h.value == Truth::True ? truth_hypothesis_projector(h.sentence, m)
                                  : falsehood_hypothesis_projector(h.sentence, m);
}

ProjectorSpec inference_projector(int sentence, int entry, int m) {
    check_sentence(sentence, m);
    if (entry < 1 || entry > 2 * m - 2) {
        throw Error(ErrorKind::OutOfRange, "inference entry " + std::to_string(entry) + " outside 1.." +
                                               std::to_string(2 * m - 2));
    }
    return {sentence, {entry}};
}

ProjectorSpec entry_projector(int sentence, int entry, int m) {
    check_sentence(sentence, m);
    if (entry < 1 || entry > 2 * m) {
        throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(entry) + " outside 1.." + std::to_string(2 * m));
    }
    return {sentence, {entry}};
}

SparseState apply(const ProjectorSpec& p, const SparseState& state) {
    SparseState out(state.m(), state.n());
    for (const auto& t : state.terms()) {
        if (p.selects(t.index)) {
            out.add(t.index, t.amplitude);
        }
    }
    return out;
}

double probability(const SparseState& state, const ProjectorSpec& p) {
    double sum = 0.0;
    for (const auto& t : state.terms()) {
        if (p.selects(t.index)) {
            sum += std::norm(t.amplitude);
        }
    }
    return sum;
}

CollapseResult collapse(const SparseState& state, const ProjectorSpec& p, CollapseMode mode) {
    SparseState projected = apply(p, state);
    const double prob = projected.norm_squared();
    if (prob == 0.0) {
        return {SparseState(state.m(), state.n()), 0.0};
    }
    if (mode == CollapseMode::Renormalize) {
        projected = projected.normalized();
    }
    return {std::move(projected), prob};
}

} // namespace liar
