#include "liar/state_space.hpp"

#include "liar/error.hpp"
#include "liar/inference.hpp"

#include <algorithm>
#include <cmath>

namespace liar {

std::string TensorIndex::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k) {
            out += '.';
        }
        out += std::to_string(entries_[k]);
    }
    return out;
}

EmbeddedIndex kappa(const TensorIndex& idx, int n) {
    BigInt value = 0;
    for (int entry : idx.entries()) {
        if (entry < 1 || entry > n) {
            throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(entry) + " outside 1.." + std::to_string(n));
        }
        value = value * n + (entry - 1);
    }
    return {value + 1};
}

TensorIndex kappa_inverse(const EmbeddedIndex& e, int m, int n) {
    if (m < 1 || n < 1) {
        throw Error(ErrorKind::OutOfRange, "m and n must be positive");
    }
    const BigInt limit = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m));
    if (e.value < 1 || e.value > limit) {
        throw Error(ErrorKind::OutOfRange, "embedded index " + e.to_string() + " outside [1, n^m]");
    }
    std::vector<int> entries(m);
    BigInt rest = e.value - 1;
    for (int j = m - 1; j >= 0; --j) {
        entries[j] = static_cast<int>(rest % n) + 1;
        rest /= n;
    }
    return TensorIndex(std::move(entries));
}

void SparseState::add(const TensorIndex& idx, Complex amplitude) {
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.index == idx; });
    if (it != terms_.end()) {
        it->amplitude += amplitude;
    } else {
        terms_.push_back({idx, amplitude});
    }
}

Complex SparseState::amplitude_of(const TensorIndex& idx) const {
    for (const auto& t : terms_) {
        if (t.index == idx) {
            return t.amplitude;
        }
    }
    return {};
}

double SparseState::norm_squared() const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        sum += std::norm(t.amplitude);
    }
    return sum;
}

SparseState SparseState::scaled(Complex factor) const {
    SparseState out = *this;
    for (auto& t : out.terms_) {
        t.amplitude *= factor;
    }
    return out;
}

SparseState SparseState::normalized() const {
    const double norm2 = norm_squared();
    if (norm2 == 0.0) {
        return SparseState(m_, n_);
    }
    return scaled(1.0 / std::sqrt(norm2));
}

double max_abs_diff(const SparseState& a, const SparseState& b) {
    double worst = 0.0;
    for (const auto& t : a.terms_) {
        worst = std::max(worst, std::abs(t.amplitude - b.amplitude_of(t.index)));
    }
    for (const auto& t : b.terms_) {
        worst = std::max(worst, std::abs(t.amplitude - a.amplitude_of(t.index)));
    }
    return worst;
}

double l2_distance(const SparseState& a, const SparseState& b) {
    double sum = 0.0;
    for (const auto& t : a.terms_) {
        sum += std::norm(t.amplitude - b.amplitude_of(t.index));
    }
    for (const auto& t : b.terms_) {
        if (std::none_of(a.terms_.begin(), a.terms_.end(), [&](const Term& u) { return u.index == t.index; })) {
            sum += std::norm(t.amplitude);
        }
    }
    return std::sqrt(sum);
}

std::vector<int> canonical_entry_cycle(int m) {
    if (m < 1) {
        throw Error(ErrorKind::OutOfRange, "m must be positive");
    }
    std::vector<int> cycle;
    cycle.reserve(2 * m);
    for (int j = 2 * m - 1; j >= m; --j) {
        cycle.push_back(j);
    }
    cycle.push_back(2 * m);
    for (int j = m - 1; j >= 1; --j) {
        cycle.push_back(j);
    }
    return cycle;
}

std::vector<TensorIndex> cycle_states(const Configuration& config) {
    const ReasoningCycle reasoning = reasoning_cycle(config);
    const int m = config.m;
    const int period = 2 * m;
    const std::vector<int> entries = canonical_entry_cycle(m);

    std::vector<int> true_step(m);
    for (int i = 1; i <= m; ++i) {
        true_step[i - 1] = reasoning.step_of(i, Truth::True);
    }
    std::vector<TensorIndex> states;
    states.reserve(period);
    for (int t = 1; t <= period; ++t) {
        std::vector<int> tuple(m);
        for (int i = 1; i <= m; ++i) {
            const int phase = ((t - true_step[i - 1]) % period + period) % period;
            tuple[i - 1] = entries[phase];
        }
        states.emplace_back(std::move(tuple));
    }
    return states;
}

SparseState build_initial_state(const Configuration& config) {
    const auto basis = cycle_states(config);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(basis.size()));
    SparseState psi(config.m, 2 * config.m);
    for (const auto& idx : basis) {
        psi.add(idx, amplitude);
    }
    return psi;
}

std::string_view to_string(EntryMeaning::Kind kind) {
    switch (kind) {
        case EntryMeaning::Kind::TrueByHypothesis: return "TrueByHypothesis";
        case EntryMeaning::Kind::FalseByHypothesis: return "FalseByHypothesis";
        case EntryMeaning::Kind::TrueByInference: return "TrueByInference";
        case EntryMeaning::Kind::FalseByInference: return "FalseByInference";
    }
    return "Unknown";
}

EntryMeaning interpret_entry(int j, int m) {
    if (m < 1 || j < 1 || j > 2 * m) {
        throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(j) + " outside 1.." + std::to_string(2 * m));
    }
    using K = EntryMeaning::Kind;
    if (j == 2 * m - 1) {
        return {K::TrueByHypothesis, 0};
    }
    if (j == 2 * m) {
        return {K::FalseByHypothesis, 0};
    }
    if (j <= m - 1) {
        return {K::TrueByInference, j};
    }
    return {K::FalseByInference, j + 1 - m};
}

} // namespace liar
