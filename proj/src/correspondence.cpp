#include "ttt/correspondence.hpp"

namespace ttt {

CorrespondenceParams uniform_params(const GridGraph& g, Scalar q, Scalar x) {
    CorrespondenceParams p;
    p.q = std::move(q);
    p.x.assign(static_cast<size_t>(g.edge_count()), x);
    return p;
}

WeightSystem potts_weight_system(const GridGraph& g, const CorrespondenceParams& params) {
    if (static_cast<int>(params.x.size()) != g.edge_count())
        throw std::invalid_argument("potts_weight_system: need one x per grid edge");
    DomainSpec d(g.m, g.n);
    WeightSystem w(d);
    if (!params.q.is_exact()) {
        // keep every stored weight in one mode
        for (const auto& v : w.whites().vertices())
            for (int o = 1; o <= 4; ++o)
                w.set_a(orientation_from_index(o), v, Scalar(Complex(1.0, 0.0)));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        Orientation carrier =
            g.edge(e).horizontal ? Orientation::StemUp : Orientation::StemRight;
        w.set_a(carrier, g.white_of_edge(e), params.x[static_cast<size_t>(e)]);
    }
    auto [b1, b2] = b_type_weight_assignment(params.q, params.chirality);
    w.set_b(b1, b2);
    return w;
}

IdentityReport verify_identity(int m, int n, const CorrespondenceParams& params,
                               const std::vector<TilingProfile>& profiles) {
    GridGraph g(m, n);
    WeightSystem w = potts_weight_system(g, params);
    Scalar f = f_eval(profiles, w);
    Scalar lhs = params.q_plus_qinv().pow(m * n) * f;

    WeightedGraph wg(g.vertex_count());
    auto v = params.edge_weights();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto ed = g.edge(e);
        wg.add_edge(ed.u, ed.v, v[static_cast<size_t>(e)]);
    }
    Scalar Q = params.big_q();
    IdentityReport rep;
    rep.lhs = lhs;
    rep.rhs_subset = z_subset(wg, Q);
    rep.rhs_delcon = z_delcon(wg, Q);
    rep.exact_mode = lhs.is_exact();
    if (rep.exact_mode) {
        rep.equal = lhs == rep.rhs_subset && lhs == rep.rhs_delcon;
        rep.residual = 0.0;
    } else {
        double scale = std::abs(rep.rhs_subset.cplx());
        double num = std::max(std::abs(lhs.cplx() - rep.rhs_subset.cplx()),
                              std::abs(lhs.cplx() - rep.rhs_delcon.cplx()));
        rep.residual = scale > 0 ? num / scale : num;
        rep.equal = rep.residual == 0.0;
    }
    return rep;
}

IdentityReport verify_identity(int m, int n, const CorrespondenceParams& params) {
    return verify_identity(m, n, params, profile_tilings(DomainSpec(m, n)));
}

} // namespace ttt
