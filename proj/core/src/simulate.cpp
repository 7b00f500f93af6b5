#include "lvgame/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "lvgame/errors.hpp"

namespace lvgame {

std::string_view to_string(TrajectoryStatus status) {
    switch (status) {
        case TrajectoryStatus::completed: return "completed";
        case TrajectoryStatus::blowup: return "blowup";
        case TrajectoryStatus::invalid: return "invalid";
    }
    return "unknown";
}

void validate_config(const IntegrationConfig& c) {
    if (!(std::isfinite(c.t_end) && c.t_end > 0.0)) throw Error(ErrorKind::InvalidConfig, "t_end > 0");
    if (!(std::isfinite(c.step) && c.step > 0.0 && c.step <= c.t_end)) {
        throw Error(ErrorKind::InvalidConfig, "0 < step <= t_end");
    }
    if (!(c.blowup_threshold > 0.0)) throw Error(ErrorKind::InvalidConfig, "blowup_threshold > 0");
    if (!(std::isfinite(c.jitter) && c.jitter >= 0.0)) throw Error(ErrorKind::InvalidConfig, "jitter >= 0");
}

namespace {

void axpy(State& out, const State& x, double a, const State& k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + a * k[i];
}

bool all_finite(const State& s) {
    return std::all_of(s.begin(), s.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

Trajectory integrate(const Model& model, std::span<const double> initial, const IntegrationConfig& config) {
    validate_config(config);
    const std::size_t dim = model.dimension();
    if (initial.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "initial state has " + std::to_string(initial.size()) +
                                                      " components, model expects " + std::to_string(dim));
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (!(std::isfinite(initial[i]) && initial[i] >= 0.0)) {
            throw Error(ErrorKind::InvalidState, "initial component " + std::to_string(i + 1) + " must be finite and >= 0");
        }
    }

    const double h = config.step;
    const auto steps = static_cast<std::size_t>(std::floor(config.t_end / h + 1e-9));

    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    State x(initial.begin(), initial.end());
    traj.times.push_back(0.0);
    traj.states.push_back(x);

    State tmp(dim);
    State next(dim);
    for (std::size_t k = 1; k <= steps; ++k) {
        const State k1 = model.derivative(x);
        axpy(tmp, x, 0.5 * h, k1);
        const State k2 = model.derivative(tmp);
        axpy(tmp, x, 0.5 * h, k2);
        const State k3 = model.derivative(tmp);
        axpy(tmp, x, h, k3);
        const State k4 = model.derivative(tmp);
        for (std::size_t i = 0; i < dim; ++i) {
            next[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }

        const double t = static_cast<double>(k) * h;
        const bool finite = all_finite(next);
        if (!finite || max_norm(next) > config.blowup_threshold) {
            // A NaN out of a moderate state means the dynamics broke down, not divergence.
            const bool diverged = finite || std::any_of(next.begin(), next.end(), [](double v) { return std::isinf(v); }) ||
                                  max_norm(x) >= 1e3;
            traj.status = diverged ? TrajectoryStatus::blowup : TrajectoryStatus::invalid;
            traj.stop_time = t;
            return traj;
        }
        x = next;
        traj.times.push_back(t);
        traj.states.push_back(x);
    }
    traj.stop_time = traj.times.back();
    return traj;
}

std::vector<State> PortraitGrid::initial_conditions() const {
    if (!explicit_points.empty()) return explicit_points;
    if (axes.empty()) throw Error(ErrorKind::InvalidConfig, "portrait grid is empty");
    for (const auto& a : axes) {
        if (a.count < 1) throw Error(ErrorKind::InvalidConfig, "grid axis count >= 1");
        if (a.count > 1 && !(a.hi > a.lo)) throw Error(ErrorKind::InvalidConfig, "grid axis range needs hi > lo");
    }
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.count;

    std::vector<State> points;
    points.reserve(total);
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        State p(axes.size());
        for (std::size_t d = 0; d < axes.size(); ++d) {
            const auto& a = axes[d];
            p[d] = a.count == 1 ? a.lo
                                : a.lo + (a.hi - a.lo) * static_cast<double>(idx[d]) / static_cast<double>(a.count - 1);
        }
        points.push_back(std::move(p));
        for (std::size_t d = axes.size(); d-- > 0;) {
            if (++idx[d] < axes[d].count) break;
            idx[d] = 0;
        }
    }
    return points;
}

std::vector<Trajectory> phase_portrait(const Model& model, const PortraitGrid& grid, const IntegrationConfig& config,
                                       unsigned threads) {
    validate_config(config);
    std::vector<State> starts = grid.initial_conditions();
    if (config.jitter > 0.0) {
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> u(-config.jitter, config.jitter);
        for (auto& s : starts) {
            for (double& v : s) v = std::max(0.0, v + u(rng));
        }
    }

    std::vector<Trajectory> out(starts.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, starts.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    const auto worker = [&] {
        for (std::size_t i = next++; i < starts.size(); i = next++) {
            if (failed) return;
            try {
                out[i] = integrate(model, starts[i], config);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

AttractorResult detect_attractor(const Trajectory& traj, std::span<const EquilibriumPoint> candidates, double tol) {
    if (traj.status == TrajectoryStatus::blowup) return {AttractorKind::divergent, 0};
    if (traj.status != TrajectoryStatus::completed || traj.states.empty() || candidates.empty()) return {};

    const auto distance = [](const State& a, const State& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(s);
    };

    const State& last = traj.final_state();
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (candidates[c].coords.size() != last.size()) continue;
        const double d = distance(last, candidates[c].coords);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    if (!(best_d <= tol)) return {};

    const std::size_t n = traj.states.size();
    const std::size_t tail = std::max<std::size_t>(1, n / 10);
    for (std::size_t k = n - tail; k < n; ++k) {
        if (distance(traj.states[k], candidates[best].coords) > tol) return {};
    }
    return {AttractorKind::attractor, best};
}

double first_integral(const PredatorPreyParams& p, double prey, double pred) {
    return p.alpha * prey - p.beta * std::log(prey) + p.epsilon * pred - p.delta * std::log(pred);
}

double first_integral_drift(const Trajectory& traj, const PredatorPreyParams& params) {
    if (traj.states.empty()) return 0.0;
    double h0 = 0.0;
    double drift = 0.0;
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        const auto& s = traj.states[k];
        if (s.size() != 2) throw Error(ErrorKind::DimensionMismatch, "predator-prey trajectory must be 2-dimensional");
        if (!(s[0] > 0.0 && s[1] > 0.0)) {
            throw Error(ErrorKind::NonPositiveState, "state at t=" + std::to_string(traj.times[k]) + " is not positive");
        }
        const double h = first_integral(params, s[0], s[1]);
        if (k == 0) {
            h0 = h;
        } else {
            drift = std::max(drift, std::abs(h - h0));
        }
    }
    return drift;
}

}  // namespace lvgame
