#pragma once

namespace lvgame::analytic {

enum class CurveSign { growth, decay };

/// A * exp(+rate t) for growth, A * exp(-rate t) for decay.
struct ExponentialCurve {
    double amplitude = 1.0;
    double rate = 1.0;
    CurveSign sign = CurveSign::growth;
};

/// Closed-form solution of dN/dt = rho N (1 - N/K) from N(0) = N0:
///   N(t) = N0 / (N0/K + (1 - N0/K) exp(-rho t))
double logistic_solution(double N0, double K, double rho, double t);

/// Zero-interaction policyholder risk, P(t) = A exp(delta t). Throws Overflow
/// when the result is not representable.
double zero_interaction_risk(const ExponentialCurve& curve, double t);

/// Zero-interaction insurer return, R(t) = B exp(-alpha t). Strictly positive.
double zero_interaction_return(const ExponentialCurve& curve, double t);

/// Decision threshold A / e for an asymptote A.
double threshold_constant(double limit);

}  // namespace lvgame::analytic
