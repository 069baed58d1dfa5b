#pragma once

#include "liar/config.hpp"
#include "liar/inference.hpp"
#include "liar/matrix.hpp"
#include "liar/projectors.hpp"
#include "liar/state_space.hpp"

#include <map>
#include <span>
#include <vector>

namespace liar {

/// Where the eigenphase of U_D at -1 lands. Integer-step behaviour does not depend on it.
enum class PhaseBranch {
    Principal,  // (-pi, pi]: -1 -> +pi
    Flipped,    // [-pi, pi): -1 -> -pi
};

/// The reasoning dynamics restricted to the 2m cycle states.
///
/// In cycle order the step matrix U_D is the cyclic shift e_t -> e_{t+1}; it is
/// diagonalized analytically by the discrete Fourier frame
///     v_k[t] = w^(-k t) / sqrt(N),  w = exp(2 pi i / N),  U_D v_k = w^k v_k,
/// so no eigensolver is involved. Immutable after build(); safe to share across threads.
class SubspaceEvolution {
public:
    /// Throws Error{NotParadoxical}.
    static SubspaceEvolution build(const Configuration& config, PhaseBranch branch = PhaseBranch::Principal);

    int m() const { return m_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    PhaseBranch branch() const { return branch_; }

    const std::vector<TensorIndex>& basis() const { return basis_; }
    /// step_perm()[t] is the 0-based position reached from basis position t in one step.
    const std::vector<int>& step_perm() const { return step_perm_; }
    /// theta_k = 2 pi k / N reduced to the branch interval; U_D v_k = exp(i theta_k) v_k.
    const std::vector<double>& eigenphases() const { return phases_; }

    ComplexMatrix step_matrix() const;
    /// R with rows v_k^H, so R U_D R^H = diag(exp(i theta_k)).
    ComplexMatrix fourier_frame() const;
    /// exp(tau log U_D) assembled purely in the spectral frame.
    ComplexMatrix propagator(double tau) const;
    /// H = i log U_D = R^H diag(-theta_k) R.
    ComplexMatrix hamiltonian() const;

    /// Coordinates of `state` in basis order. Throws Error{SupportOutsideSubspace}.
    std::vector<Complex> coordinates(const SparseState& state) const;
    /// Inverse of coordinates(); exact zeros are dropped.
    SparseState from_coordinates(std::span<const Complex> coords) const;

    /// `steps` applications of the step permutation (exact).
    SparseState step(const SparseState& state, long long steps = 1) const;
    /// U(tau) state, evaluated as U_D^floor(tau) exp(frac(tau) log U_D), so integer
    /// tau reproduces permutation stepping bit for bit.
    SparseState propagate(const SparseState& state, double tau) const;

private:
    friend class SpectralPropagator;

    int m_ = 0;
    PhaseBranch branch_ = PhaseBranch::Principal;
    std::vector<TensorIndex> basis_;
    std::map<TensorIndex, int> position_;
    std::vector<int> step_perm_;
    std::vector<double> phases_;
    // Split-complex frames for the kernels: forward_ = R, inverse_ = R^H.
    std::vector<double> forward_re_, forward_im_, inverse_re_, inverse_im_;
};

inline ComplexMatrix hamiltonian(const SubspaceEvolution& ev) { return ev.hamiltonian(); }
inline SparseState propagate(const SubspaceEvolution& ev, const SparseState& state, double tau) {
    return ev.propagate(state, tau);
}

/// Repeated evaluation of U(tau) x for one fixed x: the spectral coefficients
/// R x are computed once; each call costs one phase rotation and one matvec.
class SpectralPropagator {
public:
    SpectralPropagator(const SubspaceEvolution& ev, std::span<const Complex> coords);

    /// Writes U(tau) x (basis order) into re/im.
    void evaluate(double tau, std::span<double> re, std::span<double> im) const;

private:
    const SubspaceEvolution* ev_;
    std::vector<double> x_re_, x_im_;
    std::vector<double> c_re_, c_im_;
};

struct TraceOptions {
    double time_scale = 1.0;  // tau = t / time_scale
    CollapseMode collapse = CollapseMode::Renormalize;
    PhaseBranch branch = PhaseBranch::Principal;
};

struct TraceRow {
    double t = 0.0;
    int sentence = 1;
    double p_true = 0.0;
    double p_false = 0.0;
};

/// Collapse Psi_0 with the hypothesis projector for `initial`, then report
/// ||T_i U(t/time_scale) psi||^2 and ||F_i U(t/time_scale) psi||^2 for every
/// t in `times` (outer) and i in `sentences` (inner).
/// Throws Error{ZeroProbabilityMeasurement}, Error{NotParadoxical}, Error{OutOfRange}.
std::vector<TraceRow> probability_trace(const Configuration& config, Hypothesis initial,
                                        std::span<const int> sentences, std::span<const double> times,
                                        const TraceOptions& options = {});

/// Same, starting from an arbitrary state supported on ev.basis(), measured with `initial`.
/// The configuration overload builds ev (with options.branch) and Psi_0 and delegates here.
std::vector<TraceRow> probability_trace(const SubspaceEvolution& ev, const SparseState& state,
                                        const ProjectorSpec& initial, std::span<const int> sentences,
                                        std::span<const double> times, const TraceOptions& options = {});

/// t_k = k * dt * scale for k = 0 .. floor(t_max / dt) (a grid point within 1e-9 dt of t_max is kept).
std::vector<double> time_grid(double t_max, double dt, double scale = 1.0);

} // namespace liar
