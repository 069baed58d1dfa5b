#pragma once

#include "liar/config.hpp"

#include <vector>

namespace liar {

enum class Truth : bool { False = false, True = true };

constexpr Truth operator!(Truth t) { return t == Truth::True ? Truth::False : Truth::True; }
constexpr char to_char(Truth t) { return t == Truth::True ? 'T' : 'F'; }

struct Hypothesis {
    int sentence = 1;
    Truth value = Truth::True;

    bool operator==(const Hypothesis&) const = default;
};

struct HypothesisStep {
    int step = 1;  // 1-based position in the cycle
    int sentence = 1;
    Truth value = Truth::True;

    Hypothesis hypothesis() const { return {sentence, value}; }
    bool operator==(const HypothesisStep&) const = default;
};

/// The 2m hypothesis events an agent cycles through. Every sentence occurs
/// once True and once False, m steps apart.
struct ReasoningCycle {
    int m = 0;
    std::vector<HypothesisStep> steps;

    /// 1-based step at which `sentence` is hypothesized with `value`.
    int step_of(int sentence, Truth value) const;
    /// Step k taken cyclically (k may be any integer).
    const HypothesisStep& at(long long k) const;
};

/// Read sentence `h.sentence` under hypothesis `h.value`; the referent inherits
/// the value when the claim affirms, its negation when the claim negates.
Hypothesis infer_next(const Configuration& config, Hypothesis h);

/// Throws Error{NotParadoxical} for an even negation count.
ReasoningCycle reasoning_cycle(const Configuration& config, Hypothesis start = {1, Truth::True});

} // namespace liar
