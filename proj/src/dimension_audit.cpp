#include "liar/dimension_audit.hpp"

#include "liar/error.hpp"
#include "liar/inference.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liar::audit {

namespace {

std::string tuple_name(const TensorIndex& idx) { return "alpha[" + idx.to_string() + "]"; }

TensorIndex constant_tuple(int m, int entry) { return TensorIndex(std::vector<int>(m, entry)); }

struct CoefficientState {
    int value;
    std::size_t equation;  // the equation that forced it
};

struct AmplitudeState {
    AmplitudeValue value;
    std::size_t equation;
};

} // namespace

std::string Coefficient::to_string() const {
    return std::string(family == Family::Truth ? "tau" : "phi") + "[" + std::to_string(entry) + "," +
           std::to_string(sentence) + "]";
}

std::string Outcome::to_string() const {
    return std::string(family == Family::Truth ? "t_" : "f_") + std::to_string(sentence);
}

std::string Constraint::to_string() const {
    return std::string(family == Family::Truth ? "T_" : "F_") + std::to_string(sentence) + " Psi0 = " +
           outcome.to_string() + " e[" + target.to_string() + "]";
}

std::string Equation::to_string() const {
    return coefficient.to_string() + " * " + tuple_name(tuple) + " = " + (rhs ? rhs->to_string() : "0");
}

std::string AmplitudeValue::to_string() const { return symbol ? symbol->to_string() : "0"; }

std::string PositiveFact::to_string() const {
    return source.coefficient.to_string() + " = 1 and " + tuple_name(source.tuple) + " = " +
           (source.rhs ? source.rhs->to_string() : "0");
}

ConstraintSystem build_constraint_system(int m, int n) {
    if (m < 1) {
        throw Error(ErrorKind::OutOfRange, "m must be positive");
    }
    const bool reduced = n == 2 * m - 1;
    if (n != 2 * m && !reduced) {
        throw Error(ErrorKind::UnsupportedDimension,
                    "n = " + std::to_string(n) + " is neither 2m nor 2m-1 for m = " + std::to_string(m));
    }
    if (reduced && m < 2) {
        throw Error(ErrorKind::OutOfRange, "the n = 2m-1 branch needs m >= 2");
    }

    ConstraintSystem sys;
    sys.m = m;
    sys.n = n;
    for (int i = 1; i <= m; ++i) {
        sys.constraints.push_back({Family::Truth, i, constant_tuple(m, i), {Family::Truth, i}});
    }
    for (int i = 1; i <= m; ++i) {
        TensorIndex target = constant_tuple(m, m + i);
        if (reduced && i == m) {
            // No entry m+m exists; the last constraint has to reuse low indices.
            std::vector<int> entries(m, 1);
            entries.back() = 2;
            target = TensorIndex(std::move(entries));
        }
        sys.constraints.push_back({Family::Falsehood, i, std::move(target), {Family::Falsehood, i}});
    }
    for (const auto& c : sys.constraints) {
        if (std::find(sys.materialized.begin(), sys.materialized.end(), c.target) == sys.materialized.end()) {
            sys.materialized.push_back(c.target);
        }
    }
    for (std::size_t k = 0; k < sys.constraints.size(); ++k) {
        const auto& c = sys.constraints[k];
        for (const auto& tuple : sys.materialized) {
            Equation eq{{c.family, tuple[c.sentence], c.sentence}, tuple, std::nullopt, k};
            if (tuple == c.target) {
                eq.rhs = c.outcome;
            }
            sys.equations.push_back(std::move(eq));
        }
    }
    return sys;
}

SolveResult solve_constraints(int m, int n) {
    const ConstraintSystem sys = build_constraint_system(m, n);
    std::map<Coefficient, CoefficientState> coef;
    std::map<TensorIndex, AmplitudeState> amp;
    std::vector<std::string> transcript;
    std::vector<Conflict> conflicts;

    transcript.push_back("m = " + std::to_string(m) + ", n = " + std::to_string(n) + ", " +
                         std::to_string(sys.constraints.size()) + " constraints over " +
                         std::to_string(sys.materialized.size()) + " materialized tuples");
    for (const auto& c : sys.constraints) {
        transcript.push_back("  constraint " + c.to_string());
    }

    // Positive equations: coef * alpha = s > 0 with coef in {0,1} forces coef = 1, alpha = s.
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
        const Equation& eq = sys.equations[e];
        if (!eq.rhs) {
            continue;
        }
        auto [cit, cnew] = coef.try_emplace(eq.coefficient, CoefficientState{1, e});
        if (!cnew && cit->second.value != 1) {
            throw std::logic_error("coefficient forced to 0 before positive equations were applied");
        }
        auto [ait, anew] = amp.try_emplace(eq.tuple, AmplitudeState{{eq.rhs}, e});
        if (!anew && ait->second.value.symbol != eq.rhs) {
            throw std::logic_error("two constraints share a target tuple");
        }
        transcript.push_back("  " + eq.to_string() + " with coefficient in {0,1}  =>  " +
                             eq.coefficient.to_string() + " = 1, " + tuple_name(eq.tuple) + " = " +
                             eq.rhs->to_string());
    }

    // Zero equations, to a fixpoint.
    std::vector<bool> settled(sys.equations.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < sys.equations.size(); ++e) {
            const Equation& eq = sys.equations[e];
            if (eq.rhs || settled[e]) {
                continue;
            }
            auto cit = coef.find(eq.coefficient);
            auto ait = amp.find(eq.tuple);
            const bool coef_one = cit != coef.end() && cit->second.value == 1;
            const bool coef_zero = cit != coef.end() && cit->second.value == 0;
            const bool amp_positive = ait != amp.end() && !ait->second.value.is_zero();
            const bool amp_zero = ait != amp.end() && ait->second.value.is_zero();

            if (coef_zero || amp_zero) {
                settled[e] = true;
            } else if (coef_one && amp_positive) {
                Conflict conflict{PositiveFact{sys.equations[ait->second.equation]},
                                  PositiveFact{sys.equations[cit->second.equation]}, eq};
                transcript.push_back("  CONTRADICTION: " + eq.to_string() + " but " +
                                     conflict.coefficient_fact.to_string() + " and " +
                                     conflict.amplitude_fact.to_string());
                conflicts.push_back(std::move(conflict));
                settled[e] = true;
            } else if (coef_one) {
                amp.emplace(eq.tuple, AmplitudeState{{}, e});
                transcript.push_back("  " + eq.to_string() + " with " + eq.coefficient.to_string() + " = 1  =>  " +
                                     tuple_name(eq.tuple) + " = 0");
                settled[e] = changed = true;
            } else if (amp_positive) {
                coef.emplace(eq.coefficient, CoefficientState{0, e});
                transcript.push_back("  " + eq.to_string() + " with " + tuple_name(eq.tuple) + " = " +
                                     ait->second.value.to_string() + " > 0  =>  " + eq.coefficient.to_string() +
                                     " = 0");
                settled[e] = changed = true;
            }
        }
    }

    if (!conflicts.empty()) {
        Contradiction out;
        out.m = m;
        out.n = n;
        out.conflicts = conflicts;
        const TensorIndex& modified = sys.constraints.back().target;
        auto pick = std::find_if(conflicts.begin(), conflicts.end(), [&](const Conflict& c) {
            const auto& origin = sys.constraints[c.zero_equation.constraint];
            return origin.family == Family::Truth && origin.sentence == 1 && c.zero_equation.tuple == modified;
        });
        out.witness = pick != conflicts.end() ? *pick : conflicts.front();
        transcript.push_back("witness:");
        transcript.push_back("  outcome 1: " + out.witness.amplitude_fact.to_string());
        transcript.push_back("  outcome 2: " + out.witness.coefficient_fact.to_string());
        transcript.push_back("  outcome 3: " + out.witness.zero_equation.to_string());
        transcript.push_back("  outcomes 1 and 2 give a nonzero product; outcome 3 requires zero");
        out.transcript = std::move(transcript);
        return out;
    }

    Satisfiable out;
    out.m = m;
    out.n = n;
    bool determined = true;
    for (Family family : {Family::Truth, Family::Falsehood}) {
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j) {
                const Coefficient c{family, j, i};
                auto it = coef.find(c);
                if (it == coef.end()) {
                    determined = false;
                }
                out.coefficients.push_back({c, it == coef.end() ? 0 : it->second.value});
            }
        }
    }
    for (const auto& tuple : sys.materialized) {
        auto it = amp.find(tuple);
        if (it == amp.end()) {
            determined = false;
        }
        out.amplitudes.emplace_back(tuple, it == amp.end() ? AmplitudeValue{} : it->second.value);
    }
    out.unique = determined;
    transcript.push_back(std::string("solution ") + (determined ? "unique" : "not unique") +
                         ": every coefficient and materialized amplitude " + (determined ? "is" : "is not") +
                         " forced");
    out.transcript = std::move(transcript);
    return out;
}

int Satisfiable::coefficient(Family family, int entry, int sentence) const {
    for (const auto& c : coefficients) {
        if (c.coefficient == Coefficient{family, entry, sentence}) {
            return c.value;
        }
    }
    throw Error(ErrorKind::OutOfRange, "no coefficient " + Coefficient{family, entry, sentence}.to_string());
}

AmplitudeValue Satisfiable::amplitude(const TensorIndex& tuple) const {
    for (const auto& [idx, value] : amplitudes) {
        if (idx == tuple) {
            return value;
        }
    }
    return {};
}

bool Satisfiable::forced_zero(const TensorIndex& tuple) const {
    if (!amplitude(tuple).is_zero()) {
        return false;
    }
    for (Family family : {Family::Truth, Family::Falsehood}) {
        for (int i = 1; i <= m; ++i) {
            if (tuple[i] >= 1 && tuple[i] <= n && coefficient(family, tuple[i], i) == 1) {
                return true;
            }
        }
    }
    return false;
}

MinimalityReport verify_minimality(int m, int bound) {
    if (m < 2 || m > bound) {
        throw Error(ErrorKind::OutOfRange,
                    "audit needs 2 <= m <= " + std::to_string(bound) + ", got " + std::to_string(m));
    }
    MinimalityReport report;
    report.m = m;
    report.full = solve_constraints(m, 2 * m);
    report.reduced = solve_constraints(m, 2 * m - 1);

    const auto* full = std::get_if<Satisfiable>(&report.full);
    const auto* reduced = std::get_if<Contradiction>(&report.reduced);
    bool full_ok = full != nullptr && full->unique;
    if (full_ok) {
        for (int i = 1; i <= m; ++i) {
            full_ok = full_ok && full->coefficient(Family::Truth, i, i) == 1 &&
                      full->coefficient(Family::Falsehood, m + i, i) == 1 &&
                      full->amplitude(constant_tuple(m, i)) == AmplitudeValue{Outcome{Family::Truth, i}} &&
                      full->amplitude(constant_tuple(m, m + i)) == AmplitudeValue{Outcome{Family::Falsehood, i}};
        }
    }
    bool reduced_ok = false;
    if (reduced != nullptr) {
        const Conflict& w = reduced->witness;
        reduced_ok = w.coefficient_fact.source.coefficient == Coefficient{Family::Truth, 1, 1} &&
                     w.amplitude_fact.source.coefficient == Coefficient{Family::Falsehood, 2, m} &&
                     w.zero_equation.coefficient == Coefficient{Family::Truth, 1, 1};
    }
    report.pass = full_ok && reduced_ok;

    auto append = [&](const std::vector<std::string>& lines) {
        report.transcript.insert(report.transcript.end(), lines.begin(), lines.end());
    };
    report.transcript.push_back("== n = 2m = " + std::to_string(2 * m) + " ==");
    std::visit([&](const auto& r) { append(r.transcript); }, report.full);
    report.transcript.push_back(std::string("   => ") + (full_ok ? "satisfiable with the unique diagonal solution"
                                                                  : "UNEXPECTED: not the unique diagonal solution"));
    report.transcript.push_back("== n = 2m-1 = " + std::to_string(2 * m - 1) + " ==");
    std::visit([&](const auto& r) { append(r.transcript); }, report.reduced);
    report.transcript.push_back(std::string("   => ") +
                                (reduced_ok ? "contradiction" : "UNEXPECTED: no contradiction of the expected form"));
    return report;
}

Relabeling relabel_to_audit_basis(const Configuration& config) {
    const int m = config.m;
    const int n = 2 * m;
    const ReasoningCycle cycle = reasoning_cycle(config);
    const std::vector<TensorIndex> basis = cycle_states(config);

    Relabeling out;
    out.map.assign(m, std::vector<int>(n, 0));
    out.bijective = true;
    for (int t = 1; t <= n; ++t) {
        const auto& step = cycle.steps[t - 1];
        const int label = step.value == Truth::True ? step.sentence : m + step.sentence;
        for (int i = 1; i <= m; ++i) {
            int& slot = out.map[i - 1][basis[t - 1][i] - 1];
            if (slot != 0) {
                out.bijective = false;  // entry reused within one sentence: degenerate
            }
            slot = label;
        }
    }
    for (const auto& row : out.map) {
        std::vector<int> sorted = row;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 0; k < n; ++k) {
            out.bijective = out.bijective && sorted[k] == k + 1;
        }
    }

    out.relabeled_initial_state = SparseState(m, n);
    const SparseState psi0 = build_initial_state(config);
    for (const auto& term : psi0.terms()) {
        std::vector<int> entries(m);
        for (int i = 1; i <= m; ++i) {
            entries[i - 1] = out.map[i - 1][term.index[i] - 1];
        }
        out.relabeled_initial_state.add(TensorIndex(std::move(entries)), term.amplitude);
    }
    return out;
}

bool consistent_with_solution(const Configuration& config, const Satisfiable& full) {
    const int m = config.m;
    if (full.m != m || full.n != 2 * m) {
        return false;
    }
    const Relabeling r = relabel_to_audit_basis(config);
    if (!r.bijective) {
        return false;
    }
    for (int i = 1; i <= m; ++i) {
        // Hypothesis entries land where the audit's projectors select.
        if (r.map[i - 1][2 * m - 2] != i || r.map[i - 1][2 * m - 1] != m + i) {
            return false;
        }
        if (full.coefficient(Family::Truth, i, i) != 1 || full.coefficient(Family::Falsehood, m + i, i) != 1) {
            return false;
        }
    }
    std::vector<TensorIndex> psi_support;
    for (const auto& t : r.relabeled_initial_state.terms()) {
        if (t.amplitude != Complex{}) {
            psi_support.push_back(t.index);
        }
    }
    std::vector<TensorIndex> solution_support;
    for (const auto& [idx, value] : full.amplitudes) {
        if (!value.is_zero()) {
            solution_support.push_back(idx);
        }
    }
    std::sort(psi_support.begin(), psi_support.end());
    std::sort(solution_support.begin(), solution_support.end());
    return psi_support == solution_support;
}

} // namespace liar::audit
