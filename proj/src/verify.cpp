#include "liar/verify.hpp"

#include "liar/dimension_audit.hpp"
#include "liar/error.hpp"
#include "liar/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

namespace liar {

const std::array<std::array<int, 8>, 16> kEightLiarTuples = {{
    {15, 10, 8, 12, 7, 13, 4, 9},  {14, 9, 16, 11, 6, 12, 3, 8}, {13, 8, 7, 10, 5, 11, 2, 16},
    {12, 16, 6, 9, 4, 10, 1, 7},   {11, 7, 5, 8, 3, 9, 15, 6},   {10, 6, 4, 16, 2, 8, 14, 5},
    {9, 5, 3, 7, 1, 16, 13, 4},    {8, 4, 2, 6, 15, 7, 12, 3},   {16, 3, 1, 5, 14, 6, 11, 2},
    {7, 2, 15, 4, 13, 5, 10, 1},   {6, 1, 14, 3, 12, 4, 9, 15},  {5, 15, 13, 2, 11, 3, 8, 14},
    {4, 14, 12, 1, 10, 2, 16, 13}, {3, 13, 11, 15, 9, 1, 7, 12}, {2, 12, 10, 14, 8, 15, 6, 11},
    {1, 11, 9, 13, 16, 14, 5, 10},
}};

const std::array<std::uint64_t, 16> kEightLiarEmbedded = {
    3917179961, 3640285992, 3345566240, 3210230023, 2789681382, 2503940053, 2217086916, 1930815155,
    4060403106, 1642316945, 1355985807, 1321312894, 1034981885, 749633644,  463306331,  177012042,
};

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

// Collects pass/fail for one named check across all configurations; keeps the first failure.
class Check {
public:
    explicit Check(std::string name) : result_{std::move(name), true, ""} {}

    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = what;
        }
    }
    void residual(double value, double tol, const std::string& what) {
        worst_ = std::max(worst_, value);
        expect(value <= tol, what + " residual " + std::to_string(value));
    }

    CheckResult finish() && {
        if (result_.pass) {
            char buf[96];
            if (worst_ > 0.0) {
                std::snprintf(buf, sizeof buf, "%zu assertions, worst residual %.3g", count_, worst_);
            } else {
                std::snprintf(buf, sizeof buf, "%zu assertions", count_);
            }
            result_.detail = buf;
        }
        return std::move(result_);
    }

private:
    CheckResult result_;
    std::size_t count_ = 0;
    double worst_ = 0.0;
};

std::vector<Configuration> sample_configs(int m) {
    if (m <= 4) {
        return enumerate_paradoxical(m);
    }
    std::vector<Configuration> out{chain_liar(m)};
    if (m == 8) {
        out.push_back(eight_liar());
    }
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(m));
    for (int k = 0; k < 6; ++k) {
        out.push_back(random_paradoxical(m, rng));
    }
    return out;
}

std::string name_of(const Configuration& c) { return "m=" + std::to_string(c.m) + " config"; }

std::vector<double> sample_taus() {
    std::vector<double> taus;
    for (int k = 0; k < 25; ++k) {
        taus.push_back(-5.3 + 0.437 * k);
    }
    return taus;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int k) {
    ComplexMatrix out = ComplexMatrix::identity(a.rows());
    const ComplexMatrix base = k >= 0 ? a : a.adjoint();  // permutation: inverse = adjoint
    for (int s = 0; s < std::abs(k); ++s) {
        out = out * base;
    }
    return out;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.m_max < 1 || options.m_max > 8) {
        throw Error(ErrorKind::OutOfRange, "m_max must lie in 1..8");
    }
    const double tol = options.tolerance;
    VerifyReport report;

    {
        Check check("kappa pairing (8-sentence initial state)");
        const auto basis = cycle_states(eight_liar());
        for (std::size_t t = 0; t < kEightLiarTuples.size(); ++t) {
            const TensorIndex expected(std::vector<int>(kEightLiarTuples[t].begin(), kEightLiarTuples[t].end()));
            BigInt reference = kEightLiarEmbedded[t];
            if (options.corrupt_kappa_reference && t == 0) {
                reference += 1;
            }
            check.expect(basis[t] == expected, "cycle state " + std::to_string(t + 1) + " is " +
                                                   basis[t].to_string() + ", expected " + expected.to_string());
            check.expect(kappa(expected).value == reference,
                         "kappa(" + expected.to_string() + ") = " + kappa(expected).to_string() +
                             ", reference " + reference.str());
            check.expect(kappa_inverse({reference}, 8, 16) == expected,
                         "kappa_inverse(" + reference.str() + ") != " + expected.to_string());
        }
        report.checks.push_back(std::move(check).finish());
    }

    Check counting("counting = enumeration");
    Check closure("reasoning closure and complement symmetry");
    Check uniqueness("no degenerescence of cycle states");
    Check interpretation("entry interpretation consistency");
    Check spectral("U(1) = U_D and Hamiltonian Hermitian");
    Check unitarity("unitarity of U(tau)");
    Check group("group law U(tau+sigma) = U(tau)U(sigma)");
    Check integer("integer steps match permutation stepping");
    Check oracle("trace indicators match reasoning cycle");
    Check invariance("Psi_0 time invariance");
    Check completeness("Kirchhoff-von Neumann completeness");
    Check audit("dimension audit (n = 2m vs 2m-1)");

    const auto taus = sample_taus();
    for (int m = 1; m <= options.m_max; ++m) {
        long long enumerated = 0;
        for_each_paradoxical(m, [&](const Configuration&) { ++enumerated; });
        counting.expect(BigInt(enumerated) == count_paradoxical(m), "m=" + std::to_string(m));

        for (const auto& config : sample_configs(m)) {
            const std::string who = name_of(config);
            const int n = 2 * m;

            const ReasoningCycle cycle = reasoning_cycle(config);
            for (int k = 1; k <= n; ++k) {
                const auto& a = cycle.at(k);
                const auto& b = cycle.at(k + m);
                closure.expect(a.sentence == b.sentence && a.value == !b.value, who + " complement at " +
                                                                                    std::to_string(k));
            }
            Hypothesis h = cycle.steps.front().hypothesis();
            for (int k = 0; k < n; ++k) {
                h = infer_next(config, h);
            }
            closure.expect(h == cycle.steps.front().hypothesis(), who + " closure");

            const auto basis = cycle_states(config);
            for (int i = 1; i <= m; ++i) {
                std::set<int> column;
                for (const auto& s : basis) {
                    column.insert(s[i]);
                }
                uniqueness.expect(static_cast<int>(column.size()) == n, who + " sentence " + std::to_string(i));
            }
            for (int t = 1; t <= n; ++t) {
                const auto& step = cycle.steps[t - 1];
                for (int i = 1; i <= m; ++i) {
                    const EntryMeaning meaning = interpret_entry(basis[t - 1][i], m);
                    const int true_step = cycle.step_of(i, Truth::True);
                    const int false_step = cycle.step_of(i, Truth::False);
                    const int to_true = ((true_step - t) % n + n) % n;
                    const int to_false = ((false_step - t) % n + n) % n;
                    bool ok = false;
                    switch (meaning.kind) {
                        case EntryMeaning::Kind::TrueByHypothesis:
                            ok = step.sentence == i && step.value == Truth::True;
                            break;
                        case EntryMeaning::Kind::FalseByHypothesis:
                            ok = step.sentence == i && step.value == Truth::False;
                            break;
                        case EntryMeaning::Kind::TrueByInference: ok = meaning.inferences == to_true; break;
                        case EntryMeaning::Kind::FalseByInference: ok = meaning.inferences == to_false; break;
                    }
                    interpretation.expect(ok, who + " state " + std::to_string(t) + " sentence " + std::to_string(i));
                }
            }

            const SubspaceEvolution ev = SubspaceEvolution::build(config, options.branch);
            const ComplexMatrix ud = ev.step_matrix();
            const ComplexMatrix id = ComplexMatrix::identity(n);
            const ComplexMatrix ham = ev.hamiltonian();
            spectral.residual(max_abs_diff(ev.propagator(1.0), ud), tol, who + " exp(log U_D) - U_D");
            spectral.residual(max_abs_diff(ham, ham.adjoint()), tol, who + " H - H^H");

            for (std::size_t a = 0; a < taus.size(); ++a) {
                const ComplexMatrix u = ev.propagator(taus[a]);
                unitarity.residual(max_abs_diff(u.adjoint() * u, id), tol, who);
                const double sigma = taus[(a * 7 + 3) % taus.size()];
                group.residual(max_abs_diff(ev.propagator(taus[a] + sigma), u * ev.propagator(sigma)), tol, who);
            }
            for (int k = -n; k <= n; ++k) {
                integer.residual(max_abs_diff(ev.propagator(k), matrix_power(ud, k)), tol,
                                 who + " spectral U(" + std::to_string(k) + ")");
            }

            const SparseState psi0 = build_initial_state(config);
            const Hypothesis start{1, Truth::True};
            const CollapseResult measured = collapse(psi0, hypothesis_projector(start, m));
            for (int k = 0; k <= n; ++k) {
                const SparseState stepped = ev.step(measured.state, k);
                integer.expect(max_abs_diff(ev.propagate(measured.state, k), stepped) == 0.0,
                               who + " propagate(" + std::to_string(k) + ") != step^k");
                const auto& expected = cycle.at(k + 1);
                for (int i = 1; i <= m; ++i) {
                    const double pt = probability(stepped, truth_hypothesis_projector(i, m));
                    const double pf = probability(stepped, falsehood_hypothesis_projector(i, m));
                    const bool on = expected.sentence == i;
                    oracle.expect(pt == (on && expected.value == Truth::True ? 1.0 : 0.0) &&
                                      pf == (on && expected.value == Truth::False ? 1.0 : 0.0),
                                  who + " t=" + std::to_string(k) + " sentence " + std::to_string(i));
                }
            }
            for (double tau : taus) {
                invariance.residual(l2_distance(ev.propagate(psi0, tau), psi0), tol,
                                    who + " tau=" + std::to_string(tau));
                const SparseState evolved = ev.propagate(measured.state, tau);
                for (int i = 1; i <= m; ++i) {
                    double total = 0.0;
                    for (int j = 1; j <= n; ++j) {
                        total += probability(evolved, entry_projector(i, j, m));
                    }
                    completeness.residual(std::abs(total - 1.0), 1e-12, who + " sentence " + std::to_string(i));
                }
            }

            if (m >= 2 && m <= audit::kAuditBound) {
                const auto solved = audit::solve_constraints(m, n);
                const auto* full = std::get_if<audit::Satisfiable>(&solved);
                audit.expect(full != nullptr && audit::consistent_with_solution(config, *full),
                             who + " relabeled Psi_0 vs n=2m solution support");
            }
        }
        if (m >= 2 && m <= audit::kAuditBound) {
            audit.expect(audit::verify_minimality(m).pass, "verify_minimality(" + std::to_string(m) + ")");
        }
    }

    for (Check* c : {&counting, &closure, &uniqueness, &interpretation, &spectral, &unitarity, &group, &integer,
                     &oracle, &invariance, &completeness, &audit}) {
        report.checks.push_back(std::move(*c).finish());
    }
    return report;
}

} // namespace liar
