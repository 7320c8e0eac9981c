#include "ttt/tutte.hpp"

namespace ttt {

namespace {

ScalarMode graph_mode(const WeightedGraph& g, const Scalar& s) {
    ScalarMode m = s.mode();
    for (const auto& e : g.edges)
        if (e.w.mode() != m)
            throw ScalarModeError("graph edge weights mix exact and complex scalars");
    return m;
}

template <class T>
BasicGraph<T> typed_graph(const WeightedGraph& g) {
    BasicGraph<T> out(g.n);
    for (const auto& e : g.edges) {
        if constexpr (std::is_same_v<T, Rational>) out.edges.push_back({e.u, e.v, e.w.rat()});
        else out.edges.push_back({e.u, e.v, e.w.cplx()});
    }
    return out;
}

} // namespace

BigInt korn_pak_count(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("korn_pak_count: m and n must be >= 1");
    // T_G(3,3) via Q = 4, v = 2: 2 T = Z / 2^{mn}
    Rational z = z_transfer<Rational>(m, n, Rational(4), Rational(2));
    Rational doubled = z / rational_pow(Rational(2), m * n);
    if (denominator(doubled) != 1)
        throw std::logic_error("korn_pak_count: Z(4,2) not divisible by 2^(mn)");
    return numerator(doubled);
}

Scalar z_subset(const WeightedGraph& g, const Scalar& Q, int threads) {
    if (graph_mode(g, Q) == ScalarMode::Exact)
        return Scalar(z_subset<Rational>(typed_graph<Rational>(g), Q.rat(), threads));
    return Scalar(z_subset<Complex>(typed_graph<Complex>(g), Q.cplx(), threads));
}

Scalar z_delcon(const WeightedGraph& g, const Scalar& Q) {
    if (graph_mode(g, Q) == ScalarMode::Exact)
        return Scalar(z_delcon<Rational>(typed_graph<Rational>(g), Q.rat()));
    return Scalar(z_delcon<Complex>(typed_graph<Complex>(g), Q.cplx()));
}

Scalar z_transfer(int m, int n, const Scalar& Q, const std::vector<Scalar>& edge_weights) {
    bool exact = Q.is_exact();
    for (const auto& w : edge_weights)
        if (w.is_exact() != exact)
            throw ScalarModeError("edge weights mix exact and complex scalars");
    if (exact) {
        std::vector<Rational> w;
        w.reserve(edge_weights.size());
        for (const auto& s : edge_weights) w.push_back(s.rat());
        return Scalar(z_transfer<Rational>(m, n, Q.rat(), w));
    }
    std::vector<Complex> w;
    w.reserve(edge_weights.size());
    for (const auto& s : edge_weights) w.push_back(s.cplx());
    return Scalar(z_transfer<Complex>(m, n, Q.cplx(), w));
}

Scalar tutte_classical(const WeightedGraph& g, const Scalar& x, const Scalar& y) {
    if (x.mode() != y.mode()) throw ScalarModeError("tutte_classical: x and y modes differ");
    if (x.is_exact()) {
        BasicGraph<Rational> h(g.n);
        for (const auto& e : g.edges) h.edges.push_back({e.u, e.v, Rational(1)});
        return Scalar(tutte_classical<Rational>(h, x.rat(), y.rat()));
    }
    BasicGraph<Complex> h(g.n);
    for (const auto& e : g.edges) h.edges.push_back({e.u, e.v, Complex(1.0)});
    return Scalar(tutte_classical<Complex>(h, x.cplx(), y.cplx()));
}

} // namespace ttt
