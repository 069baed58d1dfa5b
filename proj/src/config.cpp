#include "liar/config.hpp"

#include "liar/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace liar {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotSingleCycle: return "NotSingleCycle";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::NotParadoxical: return "NotParadoxical";
        case ErrorKind::ZeroProbabilityMeasurement: return "ZeroProbabilityMeasurement";
        case ErrorKind::SupportOutsideSubspace: return "SupportOutsideSubspace";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Configuration validate(Configuration config) {
    const int m = config.m;
    if (m < 1) {
        throw Error(ErrorKind::OutOfRange, "sentence count must be positive, got " + std::to_string(m));
    }
    if (static_cast<int>(config.referent.size()) != m || static_cast<int>(config.negating.size()) != m) {
        throw Error(ErrorKind::OutOfRange, "referent and negating must both have m = " + std::to_string(m) +
                                               " entries");
    }
    for (int r : config.referent) {
        if (r < 1 || r > m) {
            throw Error(ErrorKind::OutOfRange, "referent " + std::to_string(r) + " outside 1.." + std::to_string(m));
        }
    }
    // Walk from sentence 1; a single m-cycle visits every sentence before returning.
    std::vector<bool> seen(m, false);
    int current = 1;
    int length = 0;
    do {
        if (seen[current - 1]) {
            break;
        }
        seen[current - 1] = true;
        current = config.referent[current - 1];
        ++length;
    } while (current != 1);
    if (current != 1 || length != m) {
        throw Error(ErrorKind::NotSingleCycle, "referent map is not a single " + std::to_string(m) + "-cycle");
    }
    return config;
}

bool is_paradoxical(const Configuration& config) {
    return std::count(config.negating.begin(), config.negating.end(), true) % 2 == 1;
}

BigInt count_paradoxical(int m) {
    if (m < 1) {
        throw Error(ErrorKind::OutOfRange, "m must be positive");
    }
    BigInt factorial = 1;
    for (int k = 2; k < m; ++k) {
        factorial *= k;
    }
    BigInt odd_subsets = 0;
    BigInt binomial = 1;  // C(m, k), advanced incrementally
    for (int k = 1; k <= m; ++k) {
        binomial = binomial * (m - k + 1) / k;
        if (k % 2 == 1) {
            odd_subsets += binomial;
        }
    }
    return factorial * odd_subsets;
}

void for_each_paradoxical(int m, const std::function<void(const Configuration&)>& visit, int bound) {
    if (m < 1) {
        throw Error(ErrorKind::OutOfRange, "m must be positive");
    }
    if (m > bound) {
        throw Error(ErrorKind::BoundExceeded,
                    "m = " + std::to_string(m) + " exceeds enumeration bound " + std::to_string(bound));
    }
    // Cycle order 1 -> order[0] -> ... -> order[m-2] -> 1 over all orderings of {2..m}.
    std::vector<int> order(m - 1);
    std::iota(order.begin(), order.end(), 2);

    Configuration config;
    config.m = m;
    config.referent.assign(m, 1);
    config.negating.assign(m, false);
    do {
        int from = 1;
        for (int next : order) {
            config.referent[from - 1] = next;
            from = next;
        }
        config.referent[from - 1] = 1;

        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) % 2 == 0) {
                continue;
            }
            for (int i = 0; i < m; ++i) {
                config.negating[i] = (mask >> i) & 1u;
            }
            visit(config);
        }
    } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<Configuration> enumerate_paradoxical(int m, int bound) {
    std::vector<Configuration> out;
    for_each_paradoxical(m, [&](const Configuration& c) { out.push_back(c); }, bound);
    return out;
}

Configuration random_paradoxical(int m, std::mt19937_64& rng) {
    if (m < 1) {
        throw Error(ErrorKind::OutOfRange, "m must be positive");
    }
    std::vector<int> order(m - 1);
    std::iota(order.begin(), order.end(), 2);
    std::shuffle(order.begin(), order.end(), rng);

    Configuration c;
    c.m = m;
    c.referent.assign(m, 1);
    int from = 1;
    for (int next : order) {
        c.referent[from - 1] = next;
        from = next;
    }
    c.referent[from - 1] = 1;

    std::bernoulli_distribution coin(0.5);
    c.negating.resize(m);
    for (int i = 0; i < m; ++i) {
        c.negating[i] = coin(rng);
    }
    if (!is_paradoxical(c)) {
        std::uniform_int_distribution<int> pick(0, m - 1);
        const int flip = pick(rng);
        c.negating[flip] = !c.negating[flip];
    }
    return c;
}

Configuration one_liar() { return Configuration{1, {1}, {true}}; }

Configuration eight_liar() {
    Configuration c;
    c.m = 8;
    // 1->3->8->2->7->4->6->5->1
    c.referent = {3, 7, 8, 6, 1, 5, 4, 2};
    c.negating = {true, true, false, false, true, true, true, false};
    return c;
}

Configuration chain_liar(int m) {
    if (m < 1) {
        throw Error(ErrorKind::OutOfRange, "m must be positive");
    }
    Configuration c;
    c.m = m;
    c.referent.resize(m);
    for (int i = 1; i <= m; ++i) {
        c.referent[i - 1] = i % m + 1;
    }
    c.negating.assign(m, false);
    c.negating[m - 1] = true;
    return c;
}

} // namespace liar
