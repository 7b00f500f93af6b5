#include "lvgame/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lvgame/errors.hpp"

namespace lvgame {

std::string_view to_string(PointClass c) {
    switch (c) {
        case PointClass::saddle: return "saddle";
        case PointClass::stable_node: return "stable node";
        case PointClass::unstable_node: return "unstable node";
        case PointClass::stable_spiral: return "stable spiral";
        case PointClass::unstable_spiral: return "unstable spiral";
        case PointClass::center: return "center";
        case PointClass::degenerate: return "improper/degenerate";
        case PointClass::non_equilibrium: return "non-equilibrium-linearization";
        case PointClass::unclassified: return "unclassified";
    }
    return "unknown";
}

bool is_attracting(PointClass c) { return c == PointClass::stable_node || c == PointClass::stable_spiral; }

std::string_view to_string(RegimeCase c) {
    switch (c) {
        case RegimeCase::A: return "A";
        case RegimeCase::B: return "B";
        case RegimeCase::C: return "C";
        case RegimeCase::D: return "D";
        case RegimeCase::Boundary: return "Boundary";
    }
    return "unknown";
}

std::string_view to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::stable: return "stable";
        case StabilityVerdict::unstable: return "unstable";
        case StabilityVerdict::undetermined: return "undetermined";
    }
    return "unknown";
}

JacobianMatrix jacobian(const Model& model, std::span<const double> x) {
    if (x.size() != model.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                      " components, model expects " + std::to_string(model.dimension()));
    }
    const auto sign = [](Interaction m) { return m == Interaction::competitive ? -1.0 : 1.0; };
    Matrix j(model.dimension());
    if (const auto* p = model.get_if<LogisticParams>()) {
        j(0, 0) = p->rho * (1.0 - 2.0 * x[0] / p->K);
    } else if (const auto* p = model.get_if<NondimParams>()) {
        const double s = sign(p->mode);
        j(0, 0) = 1.0 - 2.0 * x[0] + s * p->a12 * x[1];
        j(0, 1) = s * p->a12 * x[0];
        j(1, 0) = s * p->rho * p->a21 * x[1];
        j(1, 1) = p->rho * (1.0 - 2.0 * x[1] + s * p->a21 * x[0]);
    } else if (const auto* p = model.get_if<TwoPlayerParams>()) {
        const double s = sign(p->mode);
        j(0, 0) = p->rho1 * (1.0 - 2.0 * x[0] / p->K1 + s * p->c1 * x[1]);
        j(0, 1) = p->rho1 * x[0] * s * p->c1;
        j(1, 0) = p->rho2 * x[1] * s * p->c2;
        j(1, 1) = p->rho2 * (1.0 - 2.0 * x[1] / p->K2 + s * p->c2 * x[0]);
    } else if (const auto* p = model.get_if<PredatorPreyParams>()) {
        j(0, 0) = p->delta - p->epsilon * x[1];
        j(0, 1) = -p->epsilon * x[0];
        j(1, 0) = p->alpha * x[1];
        j(1, 1) = p->alpha * x[0] - p->beta;
    } else if (const auto* p = model.get_if<NPlayerParams>()) {
        const double s = sign(p->mode);
        const std::size_t n = p->n();
        for (std::size_t i = 0; i < n; ++i) {
            double coupling = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) coupling += p->C(i, k) * x[k];
            }
            for (std::size_t k = 0; k < n; ++k) {
                j(i, k) = k == i ? p->rho[i] * (1.0 - 2.0 * x[i] / p->K[i] + s * coupling)
                                 : p->rho[i] * x[i] * s * p->C(i, k);
            }
        }
    }
    return {std::move(j), State(x.begin(), x.end())};
}

EigenPair eigenvalues_2x2(const Matrix& j) {
    EigenPair out;
    out.method = EigenMethod::closed_form_2x2;
    if (j.size() == 1) {
        out.values = {{j(0, 0) + 0.0, 0.0}};
        return out;
    }
    if (j.size() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "closed-form eigenvalues need a 1x1 or 2x2 matrix");
    }
    const double tau = j.trace();
    const double det = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
    const double disc = tau * tau - 4.0 * det;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        // Larger-magnitude root first, the other through the product to avoid cancellation.
        const double l1 = 0.5 * (tau + std::copysign(s, tau));
        const double l2 = l1 != 0.0 ? det / l1 : 0.5 * (tau - std::copysign(s, tau));
        // + 0.0 turns a signed zero into +0.
        out.values = {{std::max(l1, l2) + 0.0, 0.0}, {std::min(l1, l2) + 0.0, 0.0}};
    } else {
        const double re = 0.5 * tau + 0.0;
        const double im = 0.5 * std::sqrt(-disc);
        out.values = {{re, im}, {re, -im}};
    }
    return out;
}

PointClass classify(const EigenPair& eigen, bool is_true_fixed_point, double zero_tol) {
    if (!is_true_fixed_point) return PointClass::non_equilibrium;
    if (eigen.values.empty() || eigen.values.size() > 2) return PointClass::unclassified;

    const auto is_zero = [&](double v, std::complex<double> lambda) {
        return std::abs(v) <= zero_tol * std::max(1.0, std::abs(lambda));
    };
    const auto sign_of = [&](std::complex<double> l) {
        if (is_zero(l.real(), l)) return 0;
        return l.real() > 0.0 ? 1 : -1;
    };

    if (eigen.values.size() == 1) {
        const int s = sign_of(eigen.values[0]);
        if (s == 0) return PointClass::degenerate;
        return s < 0 ? PointClass::stable_node : PointClass::unstable_node;
    }

    const auto l1 = eigen.values[0];
    const auto l2 = eigen.values[1];
    const bool complex_pair = !is_zero(l1.imag(), l1);
    if (complex_pair) {
        const int s = sign_of(l1);
        if (s == 0) return PointClass::center;
        return s < 0 ? PointClass::stable_spiral : PointClass::unstable_spiral;
    }
    const int s1 = sign_of(l1);
    const int s2 = sign_of(l2);
    if (s1 == 0 || s2 == 0) return PointClass::degenerate;
    if (s1 != s2) return PointClass::saddle;
    return s1 < 0 ? PointClass::stable_node : PointClass::unstable_node;
}

RegimeCase regime_case(const NondimParams& p) {
    if (p.mode == Interaction::cooperative) {
        const double prod = p.a12 * p.a21;
        if (prod < 1.0) return RegimeCase::A;
        if (prod > 1.0) return RegimeCase::B;
        return RegimeCase::Boundary;
    }
    if (p.a12 == 1.0 || p.a21 == 1.0) return RegimeCase::Boundary;
    if (p.a12 < 1.0 && p.a21 < 1.0) return RegimeCase::A;
    if (p.a12 > 1.0 && p.a21 > 1.0) return RegimeCase::B;
    if (p.a12 < 1.0) return RegimeCase::C;
    return RegimeCase::D;
}

bool cooperative_sign_check(const Matrix& j) {
    for (std::size_t r = 0; r < j.size(); ++r) {
        for (std::size_t c = 0; c < j.size(); ++c) {
            if (r != c && !(j(r, c) >= 0.0)) return false;
        }
    }
    return true;
}

namespace {

double off_diagonal_mass(const Matrix& a, std::size_t i, std::span<const double> d) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != i) s += std::abs(a(i, k)) * d[k];
    }
    return s;
}

}  // namespace

std::optional<State> negative_diagonal_dominance(const Matrix& a, int max_iterations) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(a(i, i) < 0.0)) return std::nullopt;
    }
    // Each violated row gets d_i raised just past the level that balances its
    // off-diagonal mass. The sequence is monotone and bounded exactly when a
    // witness exists.
    constexpr double kMargin = 1.0 + 1e-9;
    State d(n, 1.0);
    for (int it = 0; it <= max_iterations; ++it) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            const double off = off_diagonal_mass(a, i, d);
            if (a(i, i) * d[i] + off < 0.0) continue;
            ok = false;
            d[i] = kMargin * off / -a(i, i);
        }
        if (ok) return d;
        const double top = *std::max_element(d.begin(), d.end());
        if (!std::isfinite(top)) return std::nullopt;
        if (top > 1e150) {
            for (double& v : d) v /= top;
        }
    }
    return std::nullopt;
}

StabilityVerdict is_stable_matrix(const Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return StabilityVerdict::undetermined;
    if (n <= 2) {
        const auto eig = eigenvalues_2x2(a);
        const bool all_negative =
            std::all_of(eig.values.begin(), eig.values.end(), [](std::complex<double> l) { return l.real() < 0.0; });
        return all_negative ? StabilityVerdict::stable : StabilityVerdict::unstable;
    }
    if (negative_diagonal_dominance(a)) return StabilityVerdict::stable;
    if (a.trace() > 0.0) return StabilityVerdict::unstable;

    std::vector<double> radius(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k != i) radius[i] += std::abs(a(i, k));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) - radius[i] <= 0.0) continue;
        bool isolated = true;
        for (std::size_t k = 0; k < n && isolated; ++k) {
            if (k != i && std::abs(a(i, i) - a(k, k)) <= radius[i] + radius[k]) isolated = false;
        }
        // An isolated disc holds exactly one (real) eigenvalue.
        if (isolated) return StabilityVerdict::unstable;
    }
    return StabilityVerdict::undetermined;
}

StabilityReport analyze_point(const Model& model, const EquilibriumPoint& point) {
    StabilityReport r;
    r.point = point;
    r.jacobian = jacobian(model, point.coords);
    r.verdict = is_stable_matrix(r.jacobian.entries);
    if (model.dimension() <= 2) {
        r.eigen = eigenvalues_2x2(r.jacobian.entries);
        r.linearized_class = classify(r.eigen, true);
    } else {
        r.eigen.method = EigenMethod::certificate;
        r.linearized_class = PointClass::unclassified;
    }
    r.point_class = point.is_true_fixed_point ? r.linearized_class : PointClass::non_equilibrium;

    if (!point.is_true_fixed_point) {
        r.notes = "not a fixed point (residual " + std::to_string(point.residual) +
                  "); linearization is formal and carries no stability claim";
    } else if (r.point_class == PointClass::degenerate) {
        r.notes = "zero eigenvalue; linearization does not decide stability";
    } else if (r.point_class == PointClass::center) {
        r.notes = "purely imaginary pair; closed orbits around the point";
    } else if (r.point_class == PointClass::unclassified) {
        r.notes = "matrix certificate verdict: " + std::string(to_string(r.verdict));
    }
    return r;
}

}  // namespace lvgame
