#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ttt/enumerate.hpp"
#include "ttt/lattice.hpp"
#include "ttt/scalar.hpp"

namespace ttt {

// Per-tiling factorization of the generating-function weight.
struct TilingWeightSummary {
    Scalar a_product; // product of a_{o(t)}^{w(t)} over the tiles
    int b1_count = 0; // B_1
    int b2_count = 0; // B_2
};

// Which b-type carries q^{+1/4}.
enum class Chirality { Standard, Flipped };

// (b1, b2) = (q^{1/4}, q^{-1/4}), swapped when flipped. In exact mode q must
// be a fourth power of a rational; otherwise use a complex q.
std::pair<Scalar, Scalar> b_type_weight_assignment(const Scalar& q,
                                                   Chirality chirality = Chirality::Standard);

// Tile weights on a domain: a-weights per (orientation, interior white
// vertex), defaulting to 1, plus the global pair (b1, b2). a-weights at
// boundary white vertices are identically 1 and cannot be set.
class WeightSystem {
  public:
    explicit WeightSystem(const DomainSpec& d);

    const DomainSpec& domain() const { return domain_; }
    const InteriorWhiteIndex& whites() const { return whites_; }

    void set_a(Orientation o, Vertex w, Scalar value);
    void set_b(Scalar b1, Scalar b2);

    const Scalar& a(Orientation o, int white_index) const;
    // 1 for boundary whites; throws for vertices that are not white at all.
    Scalar a_at(Orientation o, Vertex w) const;
    const Scalar& b1() const { return b1_; }
    const Scalar& b2() const { return b2_; }

    // Uniform scalar mode of every stored weight; mixed modes throw.
    ScalarMode mode() const;

    Scalar a_product(const Tiling& t) const;
    TilingWeightSummary summarize(const Tiling& t) const;

  private:
    DomainSpec domain_;
    InteriorWhiteIndex whites_;
    std::vector<std::array<Scalar, 4>> a_; // [white index][orientation-1]
    Scalar b1_;
    Scalar b2_;
};

// Tilings reduced to what weight evaluation needs: which orientation hit
// which interior white vertex, plus the b-type counts.
struct TilingProfile {
    std::vector<std::pair<int, uint8_t>> hits; // (white index, orientation-1)
    int b1_count = 0;
    int b2_count = 0;
};

std::vector<TilingProfile> profile_tilings(const DomainSpec& d);
std::vector<TilingProfile> profile_tilings(const std::vector<Tiling>& tilings,
                                           const InteriorWhiteIndex& whites);

// Sum over all tilings of  prod_t a_{o(t)}^{w(t)} * b1^{B1} * b2^{B2}.
// Exact in exact mode. The enumeration budget is the caller's problem.
Scalar f_eval(const DomainSpec& d, const WeightSystem& w);
Scalar f_eval(const std::vector<TilingProfile>& profiles, const WeightSystem& w);

// Per interior white vertex: (a1*a3, a2*a4). Two weight systems with equal
// reduced products have equal f_eval.
std::map<Vertex, std::pair<Scalar, Scalar>> reduced_a_products(const WeightSystem& w);

} // namespace ttt
