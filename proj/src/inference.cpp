#include "liar/inference.hpp"

#include "liar/error.hpp"

#include <string>

namespace liar {

int ReasoningCycle::step_of(int sentence, Truth value) const {
    for (const auto& s : steps) {
        if (s.sentence == sentence && s.value == value) {
            return s.step;
        }
    }
    throw Error(ErrorKind::OutOfRange, "sentence " + std::to_string(sentence) + " not in cycle");
}

const HypothesisStep& ReasoningCycle::at(long long k) const {
    const auto period = static_cast<long long>(steps.size());
    auto idx = (k - 1) % period;
    if (idx < 0) {
        idx += period;
    }
    return steps[static_cast<std::size_t>(idx)];
}

Hypothesis infer_next(const Configuration& config, Hypothesis h) {
    const bool affirming = !config.is_negating(h.sentence);
    // value XNOR affirming
    const bool next = (h.value == Truth::True) == affirming;
    return {config.referent_of(h.sentence), next ? Truth::True : Truth::False};
}

ReasoningCycle reasoning_cycle(const Configuration& raw, Hypothesis start) {
    const Configuration config = validate(raw);
    if (start.sentence < 1 || start.sentence > config.m) {
        throw Error(ErrorKind::OutOfRange, "start sentence " + std::to_string(start.sentence) + " outside 1.." +
                                               std::to_string(config.m));
    }
    if (!is_paradoxical(config)) {
        throw Error(ErrorKind::NotParadoxical, "even number of negations: reasoning closes after m steps");
    }
    ReasoningCycle cycle;
    cycle.m = config.m;
    cycle.steps.reserve(2 * config.m);
    Hypothesis h = start;
    for (int k = 1; k <= 2 * config.m; ++k) {
        cycle.steps.push_back({k, h.sentence, h.value});
        h = infer_next(config, h);
    }
    return cycle;
}

} // namespace liar
