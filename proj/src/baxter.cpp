#include "ttt/baxter.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "ttt/tutte.hpp"

namespace ttt {

namespace {

constexpr double kPi = std::numbers::pi;

// sinh((pi-mu)t) tanh(mu t) / (t sinh(pi t)), written so it neither overflows
// nor cancels for large t: the sinh ratio is exp(-mu t) (1-e^{-2(pi-mu)t}) /
// (1-e^{-2 pi t}).
double integrand(double mu, double t) {
    if (t == 0.0) return (kPi - mu) * mu / kPi;
    double ratio = std::exp(-mu * t) * (-std::expm1(-2.0 * (kPi - mu) * t)) /
                   (-std::expm1(-2.0 * kPi * t));
    return ratio * std::tanh(mu * t) / t;
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                            double fb, double m, double fm, double whole, double eps, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * eps) return left + right + diff / 15.0;
    if (depth <= 0) throw AccuracyError("adaptive quadrature failed to converge");
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double eps) {
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, eps, 56);
}

// 16-point Gauss-Legendre on [-1, 1], positive nodes.
constexpr double kGlNode[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
constexpr double kGlWeight[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
};

double gauss_legendre_panel(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (int k = 0; k < 8; ++k)
        sum += kGlWeight[k] * (f(c - h * kGlNode[k]) + f(c + h * kGlNode[k]));
    return h * sum;
}

std::vector<double> geometric_panels(double t_max) {
    std::vector<double> cuts{0.0, 0.5, 1.0};
    while (cuts.back() < t_max) cuts.push_back(std::min(t_max, cuts.back() * 2.0));
    return cuts;
}

double truncation_point(double mu, double tol) {
    // integrand < e^{-mu t}/t for t >= 1; stop where it falls under tol/e
    double t = std::max(1.0, 8.0 / mu);
    while (integrand(mu, t) > tol / std::numbers::e) t *= 1.5;
    return t;
}

double integral_tail_bound(double mu, double t_max) {
    return std::exp(-mu * t_max) / (mu * t_max);
}

} // namespace

double entropy_integral_scheme(double mu, const QuadratureConfig& cfg) {
    if (!(mu > 0.0 && mu < kPi / 2.0))
        throw std::domain_error("entropy_integral: mu must lie in (0, pi/2)");
    double t_max = cfg.t_max > 0.0 ? cfg.t_max : truncation_point(mu, cfg.tolerance);
    auto f = [mu](double t) { return integrand(mu, t); };
    if (cfg.scheme == QuadratureConfig::Scheme::AdaptiveSimpson)
        return 2.0 * adaptive_simpson(f, 0.0, t_max, cfg.tolerance / 2.0);
    double sum = 0.0;
    auto cuts = geometric_panels(t_max);
    for (size_t k = 0; k + 1 < cuts.size(); ++k)
        sum += gauss_legendre_panel(f, cuts[k], cuts[k + 1]);
    return 2.0 * sum;
}

EntropyPoint entropy_integral(double mu, const QuadratureConfig& cfg) {
    QuadratureConfig a = cfg, b = cfg;
    a.scheme = QuadratureConfig::Scheme::AdaptiveSimpson;
    b.scheme = QuadratureConfig::Scheme::GaussLegendre;
    double t_max = cfg.t_max > 0.0 ? cfg.t_max : truncation_point(mu, cfg.tolerance);
    a.t_max = b.t_max = t_max;
    double va = entropy_integral_scheme(mu, a);
    double vb = entropy_integral_scheme(mu, b);
    double disagreement = std::abs(va - vb);
    if (disagreement > 10.0 * cfg.tolerance)
        throw AccuracyError("quadrature schemes disagree beyond 10x tolerance");
    EntropyPoint p;
    p.regime = EntropyRegime::Subcritical;
    double c = 2.0 * std::cos(mu);
    p.Q = c * c;
    p.log_S = va;
    p.error_bound =
        std::max({disagreement, 2.0 * integral_tail_bound(mu, t_max), cfg.tolerance});
    return p;
}

EntropyPoint entropy_series(double lambda, double tolerance) {
    if (!(lambda > 0.0)) throw std::domain_error("entropy_series: lambda must be positive");
    double sum = 0.0;
    double tail = 1.0;
    long n = 0;
    double geom = 1.0 - std::exp(-lambda);
    while (true) {
        ++n;
        double term = std::exp(-double(n) * lambda) * std::tanh(double(n) * lambda) / double(n);
        sum += term;
        tail = 2.0 * std::exp(-double(n + 1) * lambda) / (double(n + 1) * geom);
        if (tail < tolerance) break;
        if (n > 200'000'000) throw AccuracyError("entropy_series: tail bound not reached");
    }
    EntropyPoint p;
    p.regime = EntropyRegime::Supercritical;
    double c = 2.0 * std::cosh(lambda);
    p.Q = c * c;
    p.log_S = lambda + 2.0 * sum;
    p.error_bound = tail;
    return p;
}

EntropyPoint entropy_q4() {
    EntropyPoint p;
    p.regime = EntropyRegime::Critical;
    p.Q = 4.0;
    p.log_S = 4.0 * (std::lgamma(0.25) - std::log(2.0) - std::lgamma(0.75));
    p.error_bound = 1e-14;
    return p;
}

double paper_printed_q4_log_s() { return 4.0 * (std::lgamma(1.25) - std::lgamma(0.75)); }

double finite_size_entropy(int m, int n, double Q) {
    if (!(Q > 0.0)) throw std::domain_error("finite_size_entropy: Q must be positive");
    double v = std::sqrt(Q);
    double z = z_transfer<double>(m, n, Q, v);
    double mn = double(m) * double(n);
    return std::exp((std::log(z) - 0.5 * mn * std::log(Q)) / mn);
}

double mu_from_q_value(double Q) {
    if (!(Q > 0.0 && Q < 4.0)) throw std::domain_error("mu_from_q_value: need 0 < Q < 4");
    return std::acos(0.5 * std::sqrt(Q));
}

double lambda_from_q_value(double Q) {
    if (!(Q > 4.0)) throw std::domain_error("lambda_from_q_value: need Q > 4");
    return std::acosh(0.5 * std::sqrt(Q));
}

} // namespace ttt
