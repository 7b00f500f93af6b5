#include "lvgame/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lvgame/errors.hpp"

namespace lvgame::analytic {

namespace {

void require(bool ok, const char* bound) {
    if (!ok) throw Error(ErrorKind::ParameterOutOfRange, bound);
}

void check_curve(const ExponentialCurve& c, CurveSign expected, double t) {
    require(std::isfinite(c.amplitude) && c.amplitude > 0.0, "amplitude > 0");
    require(std::isfinite(c.rate) && c.rate > 0.0, "rate > 0");
    require(c.sign == expected, expected == CurveSign::growth ? "growth curve" : "decay curve");
    require(std::isfinite(t) && t >= 0.0, "t >= 0");
}

}  // namespace

double logistic_solution(double N0, double K, double rho, double t) {
    require(std::isfinite(K) && K > 0.0, "K > 0");
    require(std::isfinite(rho) && rho > 0.0, "rho > 0");
    require(std::isfinite(N0) && N0 >= 0.0, "N0 >= 0");
    require(std::isfinite(t) && t >= 0.0, "t >= 0");
    if (N0 == 0.0) return 0.0;
    if (N0 == K) return K;
    const double ratio = N0 / K;
    return N0 / (ratio + (1.0 - ratio) * std::exp(-rho * t));
}

double zero_interaction_risk(const ExponentialCurve& curve, double t) {
    check_curve(curve, CurveSign::growth, t);
    const double v = curve.amplitude * std::exp(curve.rate * t);
    if (!std::isfinite(v)) {
        throw Error(ErrorKind::Overflow, "A*exp(delta*t) exceeds double range at t=" + std::to_string(t));
    }
    return v;
}

double zero_interaction_return(const ExponentialCurve& curve, double t) {
    check_curve(curve, CurveSign::decay, t);
    const double v = curve.amplitude * std::exp(-curve.rate * t);
    // A decaying return never reaches zero; underflow is a representability failure.
    if (!(v > 0.0)) {
        throw Error(ErrorKind::Overflow, "B*exp(-alpha*t) underflows at t=" + std::to_string(t));
    }
    return v;
}

double threshold_constant(double limit) {
    require(std::isfinite(limit) && limit > 0.0, "A > 0");
    return limit / std::numbers::e;
}

}  // namespace lvgame::analytic
