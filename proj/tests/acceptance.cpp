// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "liar/config.hpp"
#include "liar/dimension_audit.hpp"
#include "liar/evolution.hpp"
#include "liar/projectors.hpp"
#include "liar/serialization.hpp"
#include "liar/state_space.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>

using namespace liar;

namespace {

constexpr double kPi = std::numbers::pi;

// Published 8-sentence initial state, in cycle order.
constexpr int kTuples[16][8] = {
    {15, 10, 8, 12, 7, 13, 4, 9},  {14, 9, 16, 11, 6, 12, 3, 8}, {13, 8, 7, 10, 5, 11, 2, 16},
    {12, 16, 6, 9, 4, 10, 1, 7},   {11, 7, 5, 8, 3, 9, 15, 6},   {10, 6, 4, 16, 2, 8, 14, 5},
    {9, 5, 3, 7, 1, 16, 13, 4},    {8, 4, 2, 6, 15, 7, 12, 3},   {16, 3, 1, 5, 14, 6, 11, 2},
    {7, 2, 15, 4, 13, 5, 10, 1},   {6, 1, 14, 3, 12, 4, 9, 15},  {5, 15, 13, 2, 11, 3, 8, 14},
    {4, 14, 12, 1, 10, 2, 16, 13}, {3, 13, 11, 15, 9, 1, 7, 12}, {2, 12, 10, 14, 8, 15, 6, 11},
    {1, 11, 9, 13, 16, 14, 5, 10},
};
constexpr std::uint64_t kEmbedded[16] = {
    3917179961, 3640285992, 3345566240, 3210230023, 2789681382, 2503940053, 2217086916, 1930815155,
    4060403106, 1642316945, 1355985807, 1321312894, 1034981885, 749633644,  463306331,  177012042,
};

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0.0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f s exceeds %.0f s", elapsed, limit_s);
        out.expect(elapsed < limit_s, buf);
    }
    failures += !out.pass;
    std::printf("criterion %2d: %s  %s (%.3f s)%s%s\n", id, out.pass ? "PASS" : "FAIL", name, elapsed,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

// Configurations for the spectral criteria: every config for m <= 3 plus two 8-sentence ones.
std::vector<Configuration> spectral_configs() {
    std::vector<Configuration> out;
    for (int m = 1; m <= 3; ++m) {
        for (auto& c : enumerate_paradoxical(m)) {
            out.push_back(std::move(c));
        }
    }
    out.push_back(eight_liar());
    out.push_back(chain_liar(8));
    return out;
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c);
        }
    }
    return out;
}

// Plain positional value of a tuple in base n, entries shifted to 0..n-1.
std::uint64_t positional(const std::vector<int>& e, int n) {
    std::uint64_t v = 0;
    for (int x : e) {
        v = v * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(x - 1);
    }
    return v + 1;
}

void psi0_ground_truth(Outcome& out) {
    const auto j = nlohmann::json::parse(state_to_json(build_initial_state(eight_liar())));
    out.expect(j.at("m") == 8 && j.at("n") == 16, "dimensions");
    const auto& terms = j.at("terms");
    out.expect(terms.size() == 16, "expected 16 terms, got " + std::to_string(terms.size()));
    for (std::size_t k = 0; k < std::min<std::size_t>(terms.size(), 16); ++k) {
        const auto tuple = terms[k].at("tuple").get<std::vector<int>>();
        out.expect(tuple == std::vector<int>(std::begin(kTuples[k]), std::end(kTuples[k])),
                   "tuple " + std::to_string(k + 1));
        out.expect(terms[k].at("embedded").get<std::string>() == std::to_string(kEmbedded[k]),
                   "embedded index " + std::to_string(k + 1));
        out.expect(std::abs(terms[k].at("re").get<double>() - 0.25) <= 1e-12 &&
                       std::abs(terms[k].at("im").get<double>()) <= 1e-12,
                   "amplitude " + std::to_string(k + 1));
    }
}

void kappa_pairing(Outcome& out) {
    for (int k = 0; k < 16; ++k) {
        const TensorIndex idx(std::vector<int>(std::begin(kTuples[k]), std::end(kTuples[k])));
        out.expect(kappa(idx).value == kEmbedded[k], "kappa of published tuple " + std::to_string(k + 1));
        out.expect(kappa_inverse(EmbeddedIndex{kEmbedded[k]}, 8, 16) == idx,
                   "kappa_inverse of published index " + std::to_string(k + 1));
    }
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        std::uniform_int_distribution<int> entry(1, 2 * m);
        std::vector<int> e(m);
        for (auto& x : e) {
            x = entry(rng);
        }
        const TensorIndex idx(e);
        const EmbeddedIndex k = kappa(idx);
        out.expect(k.value == positional(e, 2 * m), "kappa mismatch at " + idx.to_string());
        out.expect(kappa_inverse(k, m, 2 * m) == idx, "round trip at " + idx.to_string());
    }
}

void one_liar_trace(Outcome& out) {
    const double scale = kPi / 2.0;
    const auto times = time_grid(6.0, 0.05, scale);
    const std::vector<int> sentences{1};
    const auto rows = probability_trace(one_liar(), {1, Truth::True}, sentences, times, {scale});
    auto at_step = [&](double tau) {
        const auto k = static_cast<std::size_t>(std::llround(tau / 0.05));
        return rows.at(k);
    };
    out.expect(std::abs(at_step(1.0).p_false - 1.0) <= 1e-10, "P_False(1 step) != 1");
    out.expect(std::abs(at_step(1.0).t - kPi / 2.0) <= 1e-12, "t = 1 step is not pi/2 in figure time");
    out.expect(std::abs(at_step(0.5).p_false - 0.5) <= 1e-10, "P_False(0.5) != 0.5");
    const std::size_t period = 40;  // 2 steps on a 0.05 grid
    for (std::size_t k = 0; k + period < rows.size(); ++k) {
        out.expect(std::abs(rows[k].p_false - rows[k + period].p_false) <= 1e-10, "period 2 broken");
        out.expect(std::abs(rows[k].p_true + rows[k].p_false - 1.0) <= 1e-10, "P_True + P_False != 1");
    }
    out.expect(std::abs(at_step(1.0).p_false - at_step(0.0).p_true) <= 1e-10, "not a full swing");
}

void eight_liar_trace(Outcome& out) {
    const double scale = kPi / 2.0;
    std::vector<double> times;
    for (int k = 0; k <= 16; ++k) {
        times.push_back(k * scale);
    }
    const std::vector<int> sentences{1, 2, 3, 4, 5, 6, 7, 8};
    const auto rows = probability_trace(eight_liar(), {1, Truth::True}, sentences, times, {scale});
    out.expect(std::abs(rows[8 * 8].p_false - 1.0) <= 1e-10, "P(1.F) != 1 at t = 8 steps");
    out.expect(std::abs(rows[16 * 8].p_true - 1.0) <= 1e-10, "no full return at t = 16 steps");
    const auto cycle = reasoning_cycle(eight_liar());
    for (int k = 0; k <= 16; ++k) {
        const auto& step = cycle.at(k + 1);
        for (int i = 1; i <= 8; ++i) {
            const auto& r = rows[k * 8 + (i - 1)];
            const double want_t = step.sentence == i && step.value == Truth::True ? 1.0 : 0.0;
            const double want_f = step.sentence == i && step.value == Truth::False ? 1.0 : 0.0;
            out.expect(std::abs(r.p_true - want_t) <= 1e-10 && std::abs(r.p_false - want_f) <= 1e-10,
                       "indicator mismatch at t = " + std::to_string(k) + ", sentence " + std::to_string(i));
        }
    }
}

void spectral_contracts(Outcome& out) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (const auto& c : spectral_configs()) {
        const auto ev = SubspaceEvolution::build(c);
        const int n = ev.dimension();
        const auto id = ComplexMatrix::identity(n);
        const ComplexMatrix h = ev.hamiltonian();
        const std::string who = "m=" + std::to_string(c.m);
        out.expect(max_abs_diff(h, h.adjoint()) <= 1e-10, who + " Hermiticity");
        // H = i log U_D, so exp(1 * log U_D) = exp(-i H), evaluated by Pade approximation.
        const Eigen::MatrixXcd e = (std::complex<double>(0.0, -1.0) * to_eigen(h)).exp();
        out.expect((e - to_eigen(ev.step_matrix())).cwiseAbs().maxCoeff() <= 1e-10, who + " exp(log U_D)");
        for (int trial = 0; trial < 100; ++trial) {
            const double tau = dist(rng);
            const double sigma = dist(rng);
            const ComplexMatrix u = ev.propagator(tau);
            out.expect(max_abs_diff(u.adjoint() * u, id) <= 1e-10, who + " unitarity");
            out.expect(max_abs_diff(ev.propagator(tau + sigma), u * ev.propagator(sigma)) <= 1e-10,
                       who + " group law");
        }
    }
}

void time_invariance(Outcome& out) {
    std::mt19937_64 rng(78);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    for (const auto& c : spectral_configs()) {
        const auto ev = SubspaceEvolution::build(c);
        const SparseState psi0 = build_initial_state(c);
        for (int trial = 0; trial < 100; ++trial) {
            const double tau = dist(rng);
            out.expect(l2_distance(ev.propagate(psi0, tau), psi0) <= 1e-10,
                       "m=" + std::to_string(c.m) + " tau=" + std::to_string(tau));
        }
    }
}

void completeness(Outcome& out) {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> dist(0.0, 40.0);
    for (const auto& c : spectral_configs()) {
        const auto ev = SubspaceEvolution::build(c);
        const int m = c.m;
        const auto start = collapse(build_initial_state(c), truth_hypothesis_projector(1, m)).state;
        for (int trial = 0; trial < 20; ++trial) {
            const SparseState s = ev.propagate(start, dist(rng));
            for (int i = 1; i <= m; ++i) {
                SparseState rebuilt(m, 2 * m);
                double total = 0.0;
                for (int j = 1; j <= 2 * m; ++j) {
                    const SparseState part = apply(entry_projector(i, j, m), s);
                    for (const auto& t : part.terms()) {
                        rebuilt.add(t.index, t.amplitude);
                    }
                    total += collapse(s, entry_projector(i, j, m)).probability;
                }
                out.expect(max_abs_diff(rebuilt, s) <= 1e-12, "projectors do not partition the identity");
                out.expect(std::abs(total - 1.0) <= 1e-12, "probabilities sum to " + std::to_string(total));
            }
        }
    }
}

void minimality(Outcome& out) {
    for (int m = 2; m <= 4; ++m) {
        const auto report = audit::verify_minimality(m);
        out.expect(report.pass, "verify_minimality failed for m = " + std::to_string(m));
        const auto* reduced = std::get_if<audit::Contradiction>(&report.reduced);
        out.expect(reduced != nullptr, "no contradiction at n = 2m-1");
        if (reduced) {
            const auto& w = reduced->witness;
            out.expect(w.coefficient_fact.to_string() == "tau[1,1] = 1 and alpha[" +
                                                              TensorIndex(std::vector<int>(m, 1)).to_string() +
                                                              "] = t_1",
                       "witness outcome 2");
            out.expect(w.amplitude_fact.source.coefficient.to_string() == "phi[2," + std::to_string(m) + "]",
                       "witness outcome 1");
            out.expect(w.zero_equation.coefficient.to_string() == "tau[1,1]" &&
                           w.zero_equation.tuple == w.amplitude_fact.source.tuple && !w.zero_equation.rhs,
                       "witness outcome 3");
        }
    }
}

// Odd negations on a single m-cycle, found by trying every permutation and flag mask.
std::uint64_t brute_force_count(int m) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) {
        perm[i] = i;
    }
    std::uint64_t count = 0;
    do {
        int len = 0;
        int x = 0;
        do {
            x = perm[x];
            ++len;
        } while (x != 0);
        if (len != m) {
            continue;
        }
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            count += std::popcount(mask) % 2 == 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

void counting(Outcome& out) {
    const std::uint64_t frozen[] = {1, 2, 8, 48, 384};
    for (int m = 1; m <= 5; ++m) {
        const std::uint64_t brute = brute_force_count(m);
        out.expect(brute == frozen[m - 1], "brute force m=" + std::to_string(m));
        out.expect(count_paradoxical(m) == brute, "count_paradoxical m=" + std::to_string(m));
        out.expect(enumerate_paradoxical(m).size() == brute, "enumeration size m=" + std::to_string(m));
    }
    BigInt factorial = 1;
    for (int m = 1; m <= 20; ++m) {
        if (m > 1) {
            factorial *= m - 1;
        }
        const BigInt expected = factorial * (BigInt(1) << (m - 1));
        out.expect(count_paradoxical(m) == expected, "closed form m=" + std::to_string(m));
    }
}

void no_degenerescence(Outcome& out) {
    std::mt19937_64 rng(80);
    std::map<int, std::vector<Configuration>> pool;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        auto& configs = pool[m];
        if (configs.empty()) {
            configs = enumerate_paradoxical(m);
        }
        const Configuration& c = configs[rng() % configs.size()];
        const auto states = cycle_states(c);
        out.expect(static_cast<int>(states.size()) == 2 * m, "cycle length");
        for (int i = 1; i <= m; ++i) {
            std::set<int> column;
            for (const auto& s : states) {
                column.insert(s[i]);
            }
            out.expect(static_cast<int>(column.size()) == 2 * m && *column.begin() == 1 &&
                           *column.rbegin() == 2 * m,
                       "degenerate column " + std::to_string(i) + " in " + config_to_json(c));
        }
    }
}

} // namespace

int main() {
    run(1, "initial state ground truth (8 sentences)", 1.0, psi0_ground_truth);
    run(2, "kappa pairing", 1.0, kappa_pairing);
    run(3, "1-sentence trace", 0.0, one_liar_trace);
    run(4, "8-sentence trace", 0.0, eight_liar_trace);
    run(5, "spectral contracts", 5.0, spectral_contracts);
    run(6, "time invariance of the initial state", 0.0, time_invariance);
    run(7, "completeness of single-entry projectors", 0.0, completeness);
    run(8, "dimension audit m = 2..4", 1.0, minimality);
    run(9, "counting", 0.0, counting);
    run(10, "no degenerescence", 0.0, no_degenerescence);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
