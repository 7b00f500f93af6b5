#include "lvgame/equilibria.hpp"

#include <algorithm>
#include <string>

#include "lvgame/errors.hpp"

namespace lvgame {

std::string_view to_string(PointKind kind) {
    switch (kind) {
        case PointKind::origin: return "origin";
        case PointKind::axis: return "axis";
        case PointKind::interior: return "interior";
    }
    return "unknown";
}

FixedPointCheck verify_fixed_point(const Model& model, std::span<const double> coords, double tol) {
    const double r = max_norm(model.derivative(coords));
    return {r, r <= tol};
}

namespace {

EquilibriumPoint annotate(const Model& model, State coords, PointKind kind, double tol) {
    const auto check = verify_fixed_point(model, coords, tol);
    EquilibriumPoint p;
    p.feasible = std::all_of(coords.begin(), coords.end(), [](double x) { return x >= 0.0; });
    p.coords = std::move(coords);
    p.residual = check.residual;
    p.kind = kind;
    p.is_true_fixed_point = check.is_fixed_point;
    return p;
}

struct Candidate {
    State coords;
    PointKind kind;
};

std::vector<Candidate> nondim_candidates(const NondimParams& p) {
    const double det = 1.0 - p.a12 * p.a21;
    if (det == 0.0) {
        throw Error(ErrorKind::SingularInteraction, "a12 * a21 == 1: interior point undefined");
    }
    const double sg = p.mode == Interaction::competitive ? -1.0 : 1.0;
    return {
        {{0.0, 0.0}, PointKind::origin},
        {{1.0, 0.0}, PointKind::axis},
        {{0.0, 1.0}, PointKind::axis},
        {{(1.0 + sg * p.a12) / det, (1.0 + sg * p.a21) / det}, PointKind::interior},
    };
}

}  // namespace

std::vector<EquilibriumPoint> enumerate_equilibria(const Model& model, double tol) {
    std::vector<Candidate> candidates;
    if (const auto* p = model.get_if<NondimParams>()) {
        candidates = nondim_candidates(*p);
    } else if (const auto* p = model.get_if<TwoPlayerParams>()) {
        const auto form = nondimensionalize(*p);
        candidates = nondim_candidates(form.params);
        for (auto& c : candidates) c.coords = form.scale.to_dimensional(c.coords);
    } else if (const auto* p = model.get_if<PredatorPreyParams>()) {
        candidates = {
            {{0.0, 0.0}, PointKind::origin},
            {{p->delta / p->alpha, 0.0}, PointKind::axis},
            {{0.0, p->delta / p->epsilon}, PointKind::axis},
            {{p->beta / p->alpha, p->delta / p->epsilon}, PointKind::interior},
        };
    } else if (const auto* p = model.get_if<LogisticParams>()) {
        candidates = {{{0.0}, PointKind::origin}, {{p->K}, PointKind::interior}};
    } else {
        throw Error(ErrorKind::UnsupportedModel,
                    "enumerate_equilibria does not handle " + std::string(to_string(model.kind())));
    }

    std::vector<EquilibriumPoint> out;
    out.reserve(candidates.size());
    for (auto& c : candidates) out.push_back(annotate(model, std::move(c.coords), c.kind, tol));
    return out;
}

EquilibriumPoint interior_equilibrium_nplayer(const Model& model, double tol) {
    const auto* p = model.get_if<NPlayerParams>();
    if (p == nullptr) {
        throw Error(ErrorKind::UnsupportedModel, "interior_equilibrium_nplayer requires an n-player model");
    }
    const std::size_t n = p->n();
    const double sg = p->mode == Interaction::competitive ? 1.0 : -1.0;
    Matrix system = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) system(i, j) = sg * p->C(i, j) * p->K[j];
        }
    }
    const State u = solve_linear(std::move(system), State(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] < 0.0) {
            throw Error(ErrorKind::InfeasibleEquilibrium,
                        "player " + std::to_string(i + 1) + " has negative equilibrium share " + std::to_string(u[i]));
        }
    }
    State coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = p->K[i] * u[i];
    return annotate(model, std::move(coords), PointKind::interior, tol);
}

}  // namespace lvgame
