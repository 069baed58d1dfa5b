#pragma once

#include "liar/config.hpp"

#include <complex>
#include <string>
#include <vector>

namespace liar {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;

/// Per-sentence entries (i_1, ..., i_m) of one tensor basis vector, 1-based in [1, n].
class TensorIndex {
public:
    TensorIndex() = default;
    explicit TensorIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    int m() const { return static_cast<int>(entries_.size()); }
    int operator[](int sentence) const { return entries_.at(sentence - 1); }  // 1-based sentence
    const std::vector<int>& entries() const { return entries_; }

    std::string to_string() const;  // "15.10.8.12"

    auto operator<=>(const TensorIndex&) const = default;

private:
    std::vector<int> entries_;
};

/// Linearized index into the n^m-dimensional product space, in [1, n^m].
struct EmbeddedIndex {
    BigInt value;

    std::string to_string() const { return value.str(); }
    auto operator<=>(const EmbeddedIndex&) const = default;
};

/// 1 + sum_j (i_j - 1) n^(m-j); sentence 1 is the most significant digit.
/// Throws Error{OutOfRange} when an entry lies outside [1, n].
EmbeddedIndex kappa(const TensorIndex& idx, int n);
inline EmbeddedIndex kappa(const TensorIndex& idx) { return kappa(idx, 2 * idx.m()); }

/// Mixed-radix digit extraction; throws Error{OutOfRange} unless 1 <= e <= n^m.
TensorIndex kappa_inverse(const EmbeddedIndex& e, int m, int n);

struct Term {
    TensorIndex index;
    Complex amplitude;
};

/// Sparse amplitude map over tensor basis vectors. Term order is preserved
/// (cycle order for states built here). An empty term list is the null state.
class SparseState {
public:
    SparseState() = default;
    SparseState(int m, int n) : m_(m), n_(n) {}

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_null() const { return terms_.empty(); }

    /// Adds to an existing term's amplitude or appends a new term.
    void add(const TensorIndex& idx, Complex amplitude);
    Complex amplitude_of(const TensorIndex& idx) const;
    double norm_squared() const;

    SparseState scaled(Complex factor) const;
    SparseState normalized() const;

    /// Largest |a_k - b_k| over the union of supports.
    friend double max_abs_diff(const SparseState& a, const SparseState& b);
    /// Euclidean norm of a - b.
    friend double l2_distance(const SparseState& a, const SparseState& b);

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<Term> terms_;
};

/// (2m-1, 2m-2, ..., m, 2m, m-1, ..., 1)
std::vector<int> canonical_entry_cycle(int m);

/// The 2m tensor basis states visited by one reasoning cycle started at (1, True).
/// State t gives sentence i the canonical entry phase-shifted so that 2m-1 sits on
/// i's true-hypothesis step and 2m on its false-hypothesis step.
/// Throws Error{NotParadoxical}.
std::vector<TensorIndex> cycle_states(const Configuration& config);

/// Equiponderate superposition of the cycle states, amplitude 1/sqrt(2m) each.
SparseState build_initial_state(const Configuration& config);

struct EntryMeaning {
    enum class Kind { TrueByHypothesis, FalseByHypothesis, TrueByInference, FalseByInference };
    Kind kind;
    int inferences = 0;  // steps until the sentence is next hypothesized this way; 0 for hypotheses

    bool operator==(const EntryMeaning&) const = default;
};

std::string_view to_string(EntryMeaning::Kind kind);

/// Meaning of entry j in a 2m-dimensional sentence vector. Throws Error{OutOfRange}.
EntryMeaning interpret_entry(int j, int m);

} // namespace liar
