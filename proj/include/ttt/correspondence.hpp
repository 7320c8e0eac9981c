#pragma once

#include <vector>

#include "ttt/cycles.hpp"
#include "ttt/genfun.hpp"
#include "ttt/tutte.hpp"

namespace ttt {

// Potts-side parameters: q and one x_e per grid edge (canonical edge order).
// Derived: Q = (q + 1/q)^2 and v_e = (q + 1/q) x_e.
struct CorrespondenceParams {
    Scalar q;
    std::vector<Scalar> x;
    Chirality chirality = Chirality::Standard;

    Scalar q_plus_qinv() const { return q + q.inverse(); }
    Scalar big_q() const {
        Scalar s = q_plus_qinv();
        return s * s;
    }
    std::vector<Scalar> edge_weights() const {
        Scalar s = q_plus_qinv();
        std::vector<Scalar> v;
        v.reserve(x.size());
        for (const auto& xe : x) v.push_back(s * xe);
        return v;
    }
};

CorrespondenceParams uniform_params(const GridGraph& g, Scalar q, Scalar x);

// Tile weights realizing the Potts point: at the white vertex of a horizontal
// edge e set a1 = x_e (a3 = 1), at a vertical one a2 = x_e (a4 = 1); only the
// products a1 a3 and a2 a4 matter. b per b_type_weight_assignment(q).
WeightSystem potts_weight_system(const GridGraph& g, const CorrespondenceParams& params);

struct IdentityReport {
    Scalar lhs;        // (q + 1/q)^{mn} * F
    Scalar rhs_subset; // Z by subset expansion
    Scalar rhs_delcon; // Z by deletion-contraction
    bool exact_mode = true;
    bool equal = false;    // exact mode only
    double residual = 0.0; // |lhs - rhs| / |rhs| in complex mode
};

// Checks Q^{mn/2} F = Z_G(Q, v) on the 4m x 4n domain, with Q^{mn/2} realized
// as (q + 1/q)^{mn}. Exact equality in exact mode; relative residual in
// complex mode. Reuses a profiled enumeration when one is supplied.
IdentityReport verify_identity(int m, int n, const CorrespondenceParams& params);
IdentityReport verify_identity(int m, int n, const CorrespondenceParams& params,
                               const std::vector<TilingProfile>& profiles);

} // namespace ttt
