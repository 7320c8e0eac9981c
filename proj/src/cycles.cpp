#include "ttt/cycles.hpp"

#include <stdexcept>

#include "ttt/genfun.hpp"

namespace ttt {

GridGraph::GridGraph(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw std::invalid_argument("GridGraph: m and n must be >= 1");
    if (edge_count() > 64) throw BudgetError("GridGraph: more than 64 edges");
}

GridGraph::Edge GridGraph::edge(int e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("GridGraph::edge");
    if (e < h_edge_count()) {
        int b = e / (m - 1), a = e % (m - 1);
        return {vertex_id(a, b), vertex_id(a + 1, b), true};
    }
    int k = e - h_edge_count();
    int b = k / m, a = k % m;
    return {vertex_id(a, b), vertex_id(a, b + 1), false};
}

Vertex GridGraph::white_of_edge(int e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("GridGraph::white_of_edge");
    if (e < h_edge_count()) {
        int b = e / (m - 1), a = e % (m - 1);
        return {4 * a + 4, 4 * b + 2};
    }
    int k = e - h_edge_count();
    int b = k / m, a = k % m;
    return {4 * a + 2, 4 * b + 4};
}

int GridGraph::edge_of_white(Vertex v) const {
    if (v.x <= 0 || v.y <= 0 || v.x >= 4 * m || v.y >= 4 * n) return -1;
    if (v.x % 2 != 0 || v.y % 2 != 0) return -1;
    int u = v.x / 2, w = v.y / 2;
    if ((u + w) % 2 == 0) return -1;
    if (u % 2 == 0 && w % 2 == 1) { // horizontal-edge midpoint
        int a = u / 2 - 1, b = (w - 1) / 2;
        return b * (m - 1) + a;
    }
    // vertical-edge midpoint
    int a = (u - 1) / 2, b = w / 2 - 1;
    return h_edge_count() + b * m + a;
}

std::vector<int> EdgeSubset::indices() const {
    std::vector<int> out;
    uint64_t b = bits;
    while (b) {
        out.push_back(__builtin_ctzll(b));
        b &= b - 1;
    }
    return out;
}

// ---- medial loop tracing ----------------------------------------------------
//
// White vertices live on the half-scaled lattice (u,v) = (x/2, y/2) with u+v
// odd, 0 <= u <= 2m, 0 <= v <= 2n. One closed curve strand passes through each
// boundary white and two pass through each interior white; strands step
// between diagonal neighbours. At each white the two incident strand ends are
// paired by a mirror: across the y-axis ("x-mirror", horizontal strands) or
// across the x-axis ("y-mirror", vertical strands).
//   - bottom/top boundary: x-mirror,  left/right boundary: y-mirror
//   - midpoint of a horizontal edge e: x-mirror iff e is kept in A
//   - midpoint of a vertical edge e:   y-mirror iff e is kept in A

namespace {
constexpr int kDU[4] = {+1, -1, -1, +1}; // NE, NW, SW, SE
constexpr int kDV[4] = {+1, +1, -1, -1};
inline int x_mirror(int d) { return d ^ 1; } // NE<->NW, SW<->SE
inline int y_mirror(int d) { return 3 - d; } // NE<->SE, NW<->SW
} // namespace

LoopTracer::LoopTracer(const GridGraph& g) : g_(g), nu_(2 * g.m + 1), nv_(2 * g.n + 1) {
    white_id_.assign(static_cast<size_t>(nu_) * nv_, -1);
    int count = 0;
    for (int v = 0; v < nv_; ++v)
        for (int u = 0; u < nu_; ++u)
            if ((u + v) % 2 == 1) white_id_[static_cast<size_t>(v) * nu_ + u] = count++;

    edge_at_.assign(static_cast<size_t>(count), -1);
    kind_.assign(static_cast<size_t>(count), 0);
    travel_.assign(static_cast<size_t>(count) * 4, -1);
    port_count_ = count * 4;
    mark_.assign(static_cast<size_t>(port_count_), 0);

    for (int v = 0; v < nv_; ++v)
        for (int u = 0; u < nu_; ++u) {
            int id = white_id_[static_cast<size_t>(v) * nu_ + u];
            if (id < 0) continue;
            if (v == 0) kind_[id] = 2;
            else if (v == nv_ - 1) kind_[id] = 3;
            else if (u == 0) kind_[id] = 4;
            else if (u == nu_ - 1) kind_[id] = 5;
            else {
                kind_[id] = (u % 2 == 0) ? 0 : 1;
                edge_at_[id] = g_.edge_of_white({2 * u, 2 * v});
            }
            for (int d = 0; d < 4; ++d) {
                int uu = u + kDU[d], vv = v + kDV[d];
                if (uu < 0 || vv < 0 || uu >= nu_ || vv >= nv_) continue;
                int nb = white_id_[static_cast<size_t>(vv) * nu_ + uu];
                travel_[static_cast<size_t>(id) * 4 + d] = nb * 4 + (d ^ 2); // opposite diagonal
            }
        }
}

int LoopTracer::count(EdgeSubset a) {
    ++stamp_;
    int loops = 0;
    for (int p0 = 0; p0 < port_count_; ++p0) {
        if (travel_[static_cast<size_t>(p0)] < 0 || mark_[static_cast<size_t>(p0)] == stamp_)
            continue;
        ++loops;
        int p = p0;
        do {
            mark_[static_cast<size_t>(p)] = stamp_;
            int q = travel_[static_cast<size_t>(p)];
            mark_[static_cast<size_t>(q)] = stamp_;
            int w = q / 4, d = q % 4;
            bool xm;
            switch (kind_[static_cast<size_t>(w)]) {
                case 0: xm = a.contains(edge_at_[static_cast<size_t>(w)]); break;
                case 1: xm = !a.contains(edge_at_[static_cast<size_t>(w)]); break;
                case 2:
                case 3: xm = true; break;
                default: xm = false; break;
            }
            p = w * 4 + (xm ? x_mirror(d) : y_mirror(d));
        } while (p != p0);
    }
    return loops;
}

int trace_loops(const GridGraph& g, EdgeSubset a) { return LoopTracer(g).count(a); }

ClusterStats cluster_stats(const GridGraph& g, EdgeSubset a) {
    UnionFind uf(g.vertex_count());
    for (int e : a.indices()) {
        auto ed = g.edge(e);
        uf.unite(ed.u, ed.v);
    }
    ClusterStats s;
    s.components = uf.components;
    s.edges = a.size();
    s.loops = 2 * s.components + s.edges - g.vertex_count();
    int traced = trace_loops(g, a);
    if (traced != s.loops)
        throw std::logic_error("loop count mismatch: Euler " + std::to_string(s.loops) +
                               " vs traced " + std::to_string(traced));
    return s;
}

EdgeSubset edge_subset_of(const Tiling& t) {
    auto rep = validate_tiling(t);
    if (!rep.ok()) throw ValidationError("edge_subset_of: " + rep.summary());

    GridGraph g(t.domain);
    std::vector<int8_t> dir(static_cast<size_t>(g.edge_count()), -1); // 1 horizontal, 0 vertical
    for (const auto& tile : t.tiles) {
        int e = g.edge_of_white(tile.white);
        if (e < 0) continue; // boundary white
        int8_t h = long_side_horizontal(tile.o) ? 1 : 0;
        if (dir[static_cast<size_t>(e)] == -1) dir[static_cast<size_t>(e)] = h;
        else if (dir[static_cast<size_t>(e)] != h)
            throw ValidationError("perpendicular long sides meet at an interior white vertex");
    }
    EdgeSubset a;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (dir[static_cast<size_t>(e)] == -1)
            throw ValidationError("interior white vertex covered by no tile");
        if ((dir[static_cast<size_t>(e)] == 1) == g.edge(e).horizontal) a.add(e);
    }
    return a;
}

std::map<EdgeSubset, ClassRecord> class_partition(const DomainSpec& d,
                                                  const std::vector<Tiling>& tilings,
                                                  const WeightSystem* weights) {
    GridGraph g(d);
    std::map<EdgeSubset, ClassRecord> classes;
    for (const auto& t : tilings) {
        EdgeSubset a = edge_subset_of(t);
        auto [it, fresh] = classes.try_emplace(a);
        if (fresh) {
            it->second.subset = a;
            it->second.stats = cluster_stats(g, a);
        }
        TilingWeightSummary s;
        s.a_product = weights ? weights->a_product(t) : Scalar(1);
        s.b1_count = t.b_count(1);
        s.b2_count = t.b_count(2);
        it->second.members.push_back(std::move(s));
    }
    return classes;
}

} // namespace ttt
