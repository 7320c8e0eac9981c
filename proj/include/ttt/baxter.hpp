#pragma once

#include "ttt/errors.hpp"

namespace ttt {

enum class EntropyRegime { Subcritical, Critical, Supercritical };

struct EntropyPoint {
    EntropyRegime regime = EntropyRegime::Critical;
    double Q = 4.0;
    double log_S = 0.0;
    double error_bound = 0.0;
};

struct QuadratureConfig {
    double tolerance = 1e-12; // absolute
    double t_max = 0.0;       // truncation point; 0 = derive from the tail bound
    enum class Scheme { AdaptiveSimpson, GaussLegendre } scheme = Scheme::AdaptiveSimpson;
};

// 0 < Q < 4 via q = e^{i mu}, mu in (0, pi/2):
//   log S = int_{-inf}^{inf} dt sinh((pi-mu)t) tanh(mu t) / (t sinh(pi t)),
// evaluated as twice the integral of the even integrand over [0, inf) with the
// removable t = 0 value (pi-mu) mu / pi. Both quadrature schemes are run and
// must agree within 10x the tolerance (AccuracyError otherwise); the truncated
// tail's bound enters error_bound.
EntropyPoint entropy_integral(double mu, const QuadratureConfig& cfg = {});
// One scheme only, for cross-checks.
double entropy_integral_scheme(double mu, const QuadratureConfig& cfg);

// Q > 4 via q = e^{lambda}, lambda > 0:
//   log S = lambda + 2 sum_{n>=1} e^{-n lambda} tanh(n lambda) / n,
// summed until the geometric tail bound 2 e^{-(N+1)L} / ((N+1)(1-e^{-L}))
// drops below the tolerance.
EntropyPoint entropy_series(double lambda, double tolerance = 1e-12);

// Q = 4 closed form. The printed ratio (Gamma(5/4)/Gamma(3/4))^4 is
// inconsistent with the growth of tiling counts and with both formula limits;
// the value consistent with the mu->0+ and lambda->0+ limits is exactly 16x
// it (equivalently (Gamma(1/4) / (2 Gamma(3/4)))^4, via the classical
// beta'(0) = ln[Gamma(1/4)^2/(2 pi sqrt(2))]). log_S here is the consistent
// value; the printed one stays available below for reporting.
EntropyPoint entropy_q4();
double paper_printed_q4_log_s();

// Finite-size estimate (Q^{-mn/2} Z_G(Q, v = sqrt(Q)))^{1/(mn)} on the m x n
// grid graph, by transfer matrix in double precision.
double finite_size_entropy(int m, int n, double Q);

// Parameter maps between Q and the regime parameter.
double mu_from_q_value(double Q);     // 0 < Q < 4
double lambda_from_q_value(double Q); // Q > 4

} // namespace ttt
