#pragma once

// Mechanical check that each sentence factor needs n = 2m entries.
//
// Unknowns are the projector coefficients tau[j,i], phi[j,i] in {0,1} and the
// amplitudes alpha[tuple]. Each constraint T_i Psi = t_i e_target (or F_i ...)
// expands, tuple by tuple, into equations  coef[tuple_i, i] * alpha[tuple] = rhs
// with rhs = t_i (or f_i) on the target and 0 elsewhere. Only tuples that appear
// as some constraint's target are materialized; t_i, f_i are opaque positive
// symbols, so every conclusion is exact.

#include "liar/config.hpp"
#include "liar/state_space.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace liar::audit {

inline constexpr int kAuditBound = 4;

enum class Family { Truth, Falsehood };  // tau / t_i  versus  phi / f_i

struct Coefficient {
    Family family;
    int entry;     // j
    int sentence;  // i

    std::string to_string() const;  // "tau[1,1]"
    auto operator<=>(const Coefficient&) const = default;
};

struct Outcome {
    Family family;
    int sentence;

    std::string to_string() const;  // "t_1" / "f_2"
    auto operator<=>(const Outcome&) const = default;
};

struct Constraint {
    Family family;
    int sentence;
    TensorIndex target;
    Outcome outcome;

    std::string to_string() const;  // "F_2 Psi0 = f_2 e[1.2]"
};

/// coefficient * alpha[tuple] = rhs (0 when rhs is empty)
struct Equation {
    Coefficient coefficient;
    TensorIndex tuple;
    std::optional<Outcome> rhs;
    std::size_t constraint;  // index into ConstraintSystem::constraints

    std::string to_string() const;
};

struct ConstraintSystem {
    int m = 0;
    int n = 0;
    std::vector<Constraint> constraints;
    std::vector<TensorIndex> materialized;
    std::vector<Equation> equations;
};

/// n = 2m: T_i -> e[i..i], F_i -> e[m+i..m+i].
/// n = 2m-1: same for all but F_m, whose target becomes e[1..1 2].
/// Throws Error{UnsupportedDimension} for other n, Error{OutOfRange} for m < 1 (m < 2 when n = 2m-1).
ConstraintSystem build_constraint_system(int m, int n);

/// Value of one amplitude in a solution: zero or one of the positive outcome symbols.
struct AmplitudeValue {
    std::optional<Outcome> symbol;  // empty = 0

    bool is_zero() const { return !symbol.has_value(); }
    std::string to_string() const;
    bool operator==(const AmplitudeValue&) const = default;
};

struct CoefficientValue {
    Coefficient coefficient;
    int value;  // 0 or 1
};

struct Satisfiable {
    int m = 0;
    int n = 0;
    std::vector<CoefficientValue> coefficients;  // every tau[j,i], phi[j,i]
    std::vector<std::pair<TensorIndex, AmplitudeValue>> amplitudes;  // materialized tuples
    bool unique = false;  // every coefficient and materialized amplitude forced
    std::vector<std::string> transcript;

    int coefficient(Family family, int entry, int sentence) const;
    /// Materialized tuples carry their derived value; every other tuple is 0 in this solution.
    AmplitudeValue amplitude(const TensorIndex& tuple) const;
    /// True when some equation coef * alpha[tuple] = 0 has coef = 1, i.e. alpha[tuple]
    /// must vanish in every solution, not just this one.
    bool forced_zero(const TensorIndex& tuple) const;
};

/// A derived fact: `coefficient` = 1 and alpha[tuple] = rhs, both from one positive equation.
struct PositiveFact {
    Equation source;
    std::string to_string() const;  // "phi[2,2] = 1 and alpha[1.2] = f_2"
};

/// coefficient = 1 (coefficient_fact) and alpha = positive symbol (amplitude_fact)
/// while zero_equation demands their product vanish.
struct Conflict {
    PositiveFact amplitude_fact;    // outcome 1
    PositiveFact coefficient_fact;  // outcome 2
    Equation zero_equation;         // outcome 3
};

struct Contradiction {
    int m = 0;
    int n = 0;
    Conflict witness;  // the T_1 / modified-F_m conflict when present
    std::vector<Conflict> conflicts;
    std::vector<std::string> transcript;
};

using SolveResult = std::variant<Satisfiable, Contradiction>;

SolveResult solve_constraints(int m, int n);

struct MinimalityReport {
    int m = 0;
    SolveResult full;     // n = 2m, expected Satisfiable
    SolveResult reduced;  // n = 2m - 1, expected Contradiction
    bool pass = false;
    std::vector<std::string> transcript;
};

/// Solves both branches; `pass` is false when either comes out the wrong way.
/// Throws Error{OutOfRange} unless 2 <= m <= bound.
MinimalityReport verify_minimality(int m, int bound = kAuditBound);

/// Per-sentence relabeling of the 2m entries from the cycle-state labeling to the
/// audit labeling (step of "i True" -> i, step of "i False" -> m+i).
struct Relabeling {
    std::vector<std::vector<int>> map;  // map[i-1][entry-1] = audit label, 0 if undefined
    bool bijective = false;
    SparseState relabeled_initial_state;
};

Relabeling relabel_to_audit_basis(const Configuration& config);

/// The relabeled Psi_0 has exactly the nonzero support of the n = 2m solution and
/// the relabeled T_i / F_i select entries i / m+i.
bool consistent_with_solution(const Configuration& config, const Satisfiable& full);

} // namespace liar::audit
