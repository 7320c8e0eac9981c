#include "ttt/genfun.hpp"

#include <cmath>

namespace ttt {

std::pair<Scalar, Scalar> b_type_weight_assignment(const Scalar& q, Chirality chirality) {
    if (q.is_zero()) throw std::domain_error("b-type weights need invertible q");
    Scalar b1;
    if (q.is_exact()) {
        auto root = rational_fourth_root(q.rat());
        if (!root)
            throw ScalarModeError("q = " + q.str() +
                                  " is not a rational fourth power; use complex mode");
        b1 = Scalar(*root);
    } else {
        b1 = Scalar(std::pow(q.cplx(), 0.25));
    }
    Scalar b2 = b1.inverse();
    if (chirality == Chirality::Flipped) std::swap(b1, b2);
    return {b1, b2};
}

WeightSystem::WeightSystem(const DomainSpec& d)
    : domain_(d), whites_(d), b1_(1), b2_(1) {
    a_.assign(static_cast<size_t>(whites_.count()), {Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
}

void WeightSystem::set_a(Orientation o, Vertex w, Scalar value) {
    int idx = whites_.index_of(w);
    if (idx < 0) {
        VertexClass c = classify_vertex(w.x, w.y, domain_);
        if (is_white(c))
            throw std::invalid_argument(
                "a-weights at boundary white vertices are fixed to 1 by the boundary "
                "normalization and cannot be set");
        throw std::invalid_argument("(" + std::to_string(w.x) + "," + std::to_string(w.y) +
                                    ") is not a white vertex");
    }
    a_[static_cast<size_t>(idx)][static_cast<size_t>(orientation_index(o)) - 1] =
        std::move(value);
}

void WeightSystem::set_b(Scalar b1, Scalar b2) {
    b1_ = std::move(b1);
    b2_ = std::move(b2);
}

const Scalar& WeightSystem::a(Orientation o, int white_index) const {
    return a_[static_cast<size_t>(white_index)][static_cast<size_t>(orientation_index(o)) - 1];
}

Scalar WeightSystem::a_at(Orientation o, Vertex w) const {
    int idx = whites_.index_of(w);
    if (idx >= 0) return a(o, idx);
    if (!is_white(classify_vertex(w.x, w.y, domain_)))
        throw std::invalid_argument("not a white vertex");
    return Scalar(1);
}

ScalarMode WeightSystem::mode() const {
    ScalarMode m = b1_.mode();
    if (b2_.mode() != m) throw ScalarModeError("weight system mixes exact and complex scalars");
    for (const auto& row : a_)
        for (const auto& s : row)
            if (s.mode() != m)
                throw ScalarModeError("weight system mixes exact and complex scalars");
    return m;
}

Scalar WeightSystem::a_product(const Tiling& t) const {
    Scalar prod(1);
    if (mode() == ScalarMode::ComplexFloat) prod = Scalar(Complex(1.0, 0.0));
    for (const auto& tile : t.tiles) {
        int idx = whites_.index_of(tile.white);
        if (idx >= 0) prod *= a(tile.o, idx);
    }
    return prod;
}

TilingWeightSummary WeightSystem::summarize(const Tiling& t) const {
    return {a_product(t), t.b_count(1), t.b_count(2)};
}

std::vector<TilingProfile> profile_tilings(const std::vector<Tiling>& tilings,
                                           const InteriorWhiteIndex& whites) {
    std::vector<TilingProfile> out;
    out.reserve(tilings.size());
    for (const auto& t : tilings) {
        TilingProfile p;
        p.b1_count = t.b_count(1);
        p.b2_count = t.b_count(2);
        for (const auto& tile : t.tiles) {
            int idx = whites.index_of(tile.white);
            if (idx >= 0)
                p.hits.push_back({idx, static_cast<uint8_t>(orientation_index(tile.o) - 1)});
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<TilingProfile> profile_tilings(const DomainSpec& d) {
    InteriorWhiteIndex whites(d);
    std::vector<TilingProfile> out;
    enumerate_tilings(d, {}, [&](const Tiling& t) {
        TilingProfile p;
        p.b1_count = t.b_count(1);
        p.b2_count = t.b_count(2);
        for (const auto& tile : t.tiles) {
            int idx = whites.index_of(tile.white);
            if (idx >= 0)
                p.hits.push_back({idx, static_cast<uint8_t>(orientation_index(tile.o) - 1)});
        }
        out.push_back(std::move(p));
        return true;
    });
    return out;
}

namespace {

template <class T>
T f_eval_typed(const std::vector<TilingProfile>& profiles,
               const std::vector<std::array<T, 4>>& a, const T& b1, const T& b2, const T& one) {
    T sum = one - one;
    for (const auto& p : profiles) {
        T w = one;
        for (const auto& [idx, oi] : p.hits) w *= a[static_cast<size_t>(idx)][oi];
        T bw = one;
        {
            T acc = b1;
            int e = p.b1_count;
            while (e) {
                if (e & 1) bw *= acc;
                acc *= acc;
                e >>= 1;
            }
        }
        {
            T acc = b2;
            int e = p.b2_count;
            while (e) {
                if (e & 1) bw *= acc;
                acc *= acc;
                e >>= 1;
            }
        }
        sum += w * bw;
    }
    return sum;
}

} // namespace

Scalar f_eval(const std::vector<TilingProfile>& profiles, const WeightSystem& w) {
    ScalarMode mode = w.mode();
    size_t nw = static_cast<size_t>(w.whites().count());
    if (mode == ScalarMode::Exact) {
        std::vector<std::array<Rational, 4>> a(nw);
        for (size_t i = 0; i < nw; ++i)
            for (int o = 1; o <= 4; ++o)
                a[i][static_cast<size_t>(o - 1)] =
                    w.a(orientation_from_index(o), static_cast<int>(i)).rat();
        return Scalar(
            f_eval_typed<Rational>(profiles, a, w.b1().rat(), w.b2().rat(), Rational(1)));
    }
    std::vector<std::array<Complex, 4>> a(nw);
    for (size_t i = 0; i < nw; ++i)
        for (int o = 1; o <= 4; ++o)
            a[i][static_cast<size_t>(o - 1)] =
                w.a(orientation_from_index(o), static_cast<int>(i)).cplx();
    return Scalar(
        f_eval_typed<Complex>(profiles, a, w.b1().cplx(), w.b2().cplx(), Complex(1.0)));
}

Scalar f_eval(const DomainSpec& d, const WeightSystem& w) {
    if (!(d == w.domain()))
        throw std::invalid_argument("f_eval: weight system built for a different domain");
    return f_eval(profile_tilings(d), w);
}

std::map<Vertex, std::pair<Scalar, Scalar>> reduced_a_products(const WeightSystem& w) {
    std::map<Vertex, std::pair<Scalar, Scalar>> out;
    const auto& verts = w.whites().vertices();
    for (size_t i = 0; i < verts.size(); ++i) {
        int idx = static_cast<int>(i);
        out[verts[i]] = {w.a(Orientation::StemUp, idx) * w.a(Orientation::StemDown, idx),
                         w.a(Orientation::StemRight, idx) * w.a(Orientation::StemLeft, idx)};
    }
    return out;
}

} // namespace ttt
