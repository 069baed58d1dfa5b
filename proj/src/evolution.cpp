#include "liar/evolution.hpp"

#include "liar/error.hpp"
#include "liar/kernels.hpp"

#include <cmath>
#include <numbers>

namespace liar {

namespace {

// w^(k t) for w = exp(2 pi i / N); the exponent is reduced mod N first so the
// angle stays in [0, 2 pi) regardless of k, t.
Complex root_power(long long exponent, int n) {
    const long long r = ((exponent % n) + n) % n;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
    return {std::cos(angle), std::sin(angle)};
}

ComplexMatrix from_split(std::span<const double> re, std::span<const double> im, std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = {re[r * n + c], im[r * n + c]};
        }
    }
    return out;
}

ComplexMatrix spectral_sandwich(const SubspaceEvolution& ev, const std::vector<Complex>& diagonal) {
    const ComplexMatrix frame = ev.fourier_frame();
    const std::size_t n = frame.rows();
    ComplexMatrix scaled = frame;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < n; ++c) {
            scaled(k, c) *= diagonal[k];
        }
    }
    return frame.adjoint() * scaled;
}

} // namespace

SubspaceEvolution SubspaceEvolution::build(const Configuration& config, PhaseBranch branch) {
    SubspaceEvolution ev;
    ev.m_ = config.m;
    ev.branch_ = branch;
    ev.basis_ = cycle_states(config);
    const int n = static_cast<int>(ev.basis_.size());
    for (int t = 0; t < n; ++t) {
        ev.position_.emplace(ev.basis_[t], t);
    }
    ev.step_perm_.resize(n);
    for (int t = 0; t < n; ++t) {
        ev.step_perm_[t] = (t + 1) % n;
    }

    ev.phases_.resize(n);
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * std::numbers::pi * k / n;
        if (2 * k > n || (2 * k == n && branch == PhaseBranch::Flipped)) {
            theta -= 2.0 * std::numbers::pi;
        }
        ev.phases_[k] = theta;
    }

    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    const auto cells = static_cast<std::size_t>(n) * n;
    ev.forward_re_.resize(cells);
    ev.forward_im_.resize(cells);
    ev.inverse_re_.resize(cells);
    ev.inverse_im_.resize(cells);
    for (int k = 0; k < n; ++k) {
        for (int t = 0; t < n; ++t) {
            // R[k][t] = conj(v_k[t]) = w^(k t)/sqrt(N);  R^H[t][k] = v_k[t].
            const Complex w = root_power(static_cast<long long>(k) * t, n) * norm;
            ev.forward_re_[k * n + t] = w.real();
            ev.forward_im_[k * n + t] = w.imag();
            ev.inverse_re_[t * n + k] = w.real();
            ev.inverse_im_[t * n + k] = -w.imag();
        }
    }
    return ev;
}

ComplexMatrix SubspaceEvolution::step_matrix() const {
    const auto n = basis_.size();
    ComplexMatrix u(n, n);
    for (std::size_t t = 0; t < n; ++t) {
        u(step_perm_[t], t) = 1.0;
    }
    return u;
}

ComplexMatrix SubspaceEvolution::fourier_frame() const {
    return from_split(forward_re_, forward_im_, basis_.size());
}

ComplexMatrix SubspaceEvolution::propagator(double tau) const {
    std::vector<Complex> diagonal(phases_.size());
    for (std::size_t k = 0; k < phases_.size(); ++k) {
        diagonal[k] = std::polar(1.0, phases_[k] * tau);
    }
    return spectral_sandwich(*this, diagonal);
}

ComplexMatrix SubspaceEvolution::hamiltonian() const {
    std::vector<Complex> diagonal(phases_.size());
    for (std::size_t k = 0; k < phases_.size(); ++k) {
        diagonal[k] = -phases_[k];  // i * (i theta)
    }
    return spectral_sandwich(*this, diagonal);
}

std::vector<Complex> SubspaceEvolution::coordinates(const SparseState& state) const {
    std::vector<Complex> coords(basis_.size());
    for (const auto& term : state.terms()) {
        auto it = position_.find(term.index);
        if (it == position_.end()) {
            if (term.amplitude == Complex{}) {
                continue;
            }
            throw Error(ErrorKind::SupportOutsideSubspace,
                        "basis vector " + term.index.to_string() + " is not a reasoning-cycle state");
        }
        coords[it->second] += term.amplitude;
    }
    return coords;
}

SparseState SubspaceEvolution::from_coordinates(std::span<const Complex> coords) const {
    SparseState out(m_, 2 * m_);
    for (std::size_t t = 0; t < coords.size(); ++t) {
        if (coords[t] != Complex{}) {
            out.add(basis_[t], coords[t]);
        }
    }
    return out;
}

SparseState SubspaceEvolution::step(const SparseState& state, long long steps) const {
    const auto coords = coordinates(state);
    const auto n = static_cast<long long>(coords.size());
    std::vector<Complex> moved(coords.size());
    for (long long t = 0; t < n; ++t) {
        moved[static_cast<std::size_t>((((t + steps) % n) + n) % n)] = coords[static_cast<std::size_t>(t)];
    }
    return from_coordinates(moved);
}

SparseState SubspaceEvolution::propagate(const SparseState& state, double tau) const {
    const auto coords = coordinates(state);
    const std::size_t n = coords.size();
    SpectralPropagator prop(*this, coords);
    std::vector<double> re(n), im(n);
    prop.evaluate(tau, re, im);
    std::vector<Complex> out(n);
    for (std::size_t t = 0; t < n; ++t) {
        out[t] = {re[t], im[t]};
    }
    return from_coordinates(out);
}

SpectralPropagator::SpectralPropagator(const SubspaceEvolution& ev, std::span<const Complex> coords) : ev_(&ev) {
    const std::size_t n = coords.size();
    x_re_.resize(n);
    x_im_.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        x_re_[t] = coords[t].real();
        x_im_[t] = coords[t].imag();
    }
    c_re_.resize(n);
    c_im_.resize(n);
    kernels::active().cmatvec(ev.forward_re_, ev.forward_im_, n, n, x_re_, x_im_, c_re_, c_im_);
}

void SpectralPropagator::evaluate(double tau, std::span<double> re, std::span<double> im) const {
    const std::size_t n = x_re_.size();
    const double whole = std::floor(tau);
    const double frac = tau - whole;

    std::vector<double> y_re(n), y_im(n);
    if (frac == 0.0) {
        y_re = x_re_;
        y_im = x_im_;
    } else {
        const auto& kern = kernels::active();
        std::vector<double> rot_re(n), rot_im(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = ev_->phases_[k] * frac;
            rot_re[k] = std::cos(angle);
            rot_im[k] = std::sin(angle);
        }
        kern.cmul(c_re_, c_im_, rot_re, rot_im, rot_re, rot_im);
        kern.cmatvec(ev_->inverse_re_, ev_->inverse_im_, n, n, rot_re, rot_im, y_re, y_im);
    }

    const auto period = static_cast<long long>(n);
    const auto shift = static_cast<long long>(std::fmod(whole, static_cast<double>(period)));
    for (long long t = 0; t < period; ++t) {
        const auto dest = static_cast<std::size_t>((((t + shift) % period) + period) % period);
        re[dest] = y_re[static_cast<std::size_t>(t)];
        im[dest] = y_im[static_cast<std::size_t>(t)];
    }
}

std::vector<double> time_grid(double t_max, double dt, double scale) {
    if (!(dt > 0.0) || !(t_max >= 0.0) || !std::isfinite(t_max)) {
        throw Error(ErrorKind::OutOfRange, "time grid needs dt > 0 and finite t_max >= 0");
    }
    const auto count = static_cast<long long>(std::floor(t_max / dt + 1e-9));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count + 1));
    for (long long k = 0; k <= count; ++k) {
        grid.push_back(static_cast<double>(k) * dt * scale);
    }
    return grid;
}

std::vector<TraceRow> probability_trace(const Configuration& config, Hypothesis initial,
                                        std::span<const int> sentences, std::span<const double> times,
                                        const TraceOptions& options) {
    const SubspaceEvolution ev = SubspaceEvolution::build(config, options.branch);
    return probability_trace(ev, build_initial_state(config), hypothesis_projector(initial, config.m), sentences,
                             times, options);
}

std::vector<TraceRow> probability_trace(const SubspaceEvolution& ev, const SparseState& state,
                                        const ProjectorSpec& initial, std::span<const int> sentences,
                                        std::span<const double> times, const TraceOptions& options) {
    if (!(options.time_scale > 0.0)) {
        throw Error(ErrorKind::OutOfRange, "time_scale must be positive");
    }
    const int m = ev.m();
    const CollapseResult measured = collapse(state, initial, options.collapse);
    if (measured.probability == 0.0) {
        throw Error(ErrorKind::ZeroProbabilityMeasurement, "initial measurement has zero probability");
    }

    // Basis positions selected by T_i / F_i for each requested sentence.
    struct Selection {
        int sentence;
        std::vector<std::size_t> truth, falsehood;
    };
    std::vector<Selection> selections;
    for (int i : sentences) {
        const ProjectorSpec t = truth_hypothesis_projector(i, m);
        const ProjectorSpec f = falsehood_hypothesis_projector(i, m);
        Selection sel{i, {}, {}};
        for (std::size_t s = 0; s < ev.basis().size(); ++s) {
            if (t.selects(ev.basis()[s])) {
                sel.truth.push_back(s);
            }
            if (f.selects(ev.basis()[s])) {
                sel.falsehood.push_back(s);
            }
        }
        selections.push_back(std::move(sel));
    }

    const auto n = static_cast<std::size_t>(ev.dimension());
    const SpectralPropagator prop(ev, ev.coordinates(measured.state));
    std::vector<double> re(n), im(n), prob(n);
    std::vector<TraceRow> rows;
    rows.reserve(times.size() * selections.size());
    for (double t : times) {
        prop.evaluate(t / options.time_scale, re, im);
        kernels::active().abs2(re, im, prob);
        for (const auto& sel : selections) {
            TraceRow row{t, sel.sentence, 0.0, 0.0};
            for (auto s : sel.truth) {
                row.p_true += prob[s];
            }
            for (auto s : sel.falsehood) {
                row.p_false += prob[s];
            }
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace liar
