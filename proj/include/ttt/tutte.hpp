#pragma once

#include <map>
#include <thread>
#include <vector>

#include "ttt/cycles.hpp"
#include "ttt/scalar.hpp"

namespace ttt {

// Undirected multigraph with per-edge weights; loops and parallel edges are
// allowed (contraction produces both).
template <class T>
struct BasicGraph {
    struct Edge {
        int u, v;
        T w;
    };
    int n = 0;
    std::vector<Edge> edges;

    BasicGraph() = default;
    explicit BasicGraph(int vertices) : n(vertices) {
        if (vertices < 0) throw std::invalid_argument("negative vertex count");
    }
    void add_edge(int u, int v, T w) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        edges.push_back({u, v, std::move(w)});
    }
};

using WeightedGraph = BasicGraph<Scalar>;

// m x n grid of vertices with canonical edge order: horizontal edges
// row-major, then vertical edges row-major (matching GridGraph).
template <class T>
BasicGraph<T> grid_basic_graph(int m, int n, const std::vector<T>& edge_weights) {
    GridGraph g(m, n);
    if (static_cast<int>(edge_weights.size()) != g.edge_count())
        throw std::invalid_argument("grid_basic_graph: need one weight per edge");
    BasicGraph<T> out(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto ed = g.edge(e);
        out.add_edge(ed.u, ed.v, edge_weights[static_cast<size_t>(e)]);
    }
    return out;
}

template <class T>
BasicGraph<T> grid_basic_graph(int m, int n, const T& uniform) {
    GridGraph g(m, n);
    return grid_basic_graph<T>(m, n, std::vector<T>(static_cast<size_t>(g.edge_count()), uniform));
}

namespace detail {

template <class T>
T int_pow(T base, int e) {
    T acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace detail

// ---- engine 1: brute-force sum over edge subsets ---------------------------
// Z = sum_{A subseteq E} Q^{k(A)} prod_{e in A} v_e. Hard budget |E| <= 25.
// Partial sums over contiguous mask blocks are combined in block order, so the
// result is deterministic for any thread count.
template <class T>
T z_subset(const BasicGraph<T>& g, const T& Q, int threads = 1) {
    int e_count = static_cast<int>(g.edges.size());
    if (e_count > 25) throw BudgetError("z_subset: more than 25 edges (2^E blow-up)");
    std::vector<T> q_pow(static_cast<size_t>(g.n) + 1, T(1));
    for (int k = 1; k <= g.n; ++k)
        q_pow[static_cast<size_t>(k)] = q_pow[static_cast<size_t>(k - 1)] * Q;

    uint64_t total = uint64_t(1) << e_count;
    auto block_sum = [&](uint64_t lo, uint64_t hi) {
        T sum = T(0);
        UnionFind uf(g.n);
        for (uint64_t mask = lo; mask < hi; ++mask) {
            uf.reset(g.n);
            T prod(1);
            for (int e = 0; e < e_count; ++e)
                if ((mask >> e) & 1u) {
                    const auto& ed = g.edges[static_cast<size_t>(e)];
                    uf.unite(ed.u, ed.v);
                    prod *= ed.w;
                }
            sum += q_pow[static_cast<size_t>(uf.components)] * prod;
        }
        return sum;
    };

    if (threads <= 1 || total < 4096) return block_sum(0, total);

    int workers = std::min<int>(threads, 64);
    std::vector<T> partial(static_cast<size_t>(workers), T(0));
    std::vector<std::thread> pool;
    uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        uint64_t lo = chunk * static_cast<uint64_t>(w);
        uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] { partial[static_cast<size_t>(w)] = block_sum(lo, hi); });
    }
    for (auto& t : pool) t.join();
    T sum = T(0);
    for (const auto& p : partial) sum += p;
    return sum;
}

// ---- engine 2: deletion / contraction ---------------------------------------
// Z_G = Z_{G-e} + v_e Z_{G/e}; loops contribute a factor (1+v_e); edgeless
// graphs give Q^{|V|}. Pivot is always the last edge. No memoization.
template <class T>
T z_delcon(const BasicGraph<T>& g, const T& Q) {
    if (g.edges.empty()) return detail::int_pow(Q, g.n);
    BasicGraph<T> rest = g;
    auto e = rest.edges.back();
    rest.edges.pop_back();
    if (e.u == e.v) return (T(1) + e.w) * z_delcon(rest, Q);

    T deleted = z_delcon(rest, Q);

    BasicGraph<T> contracted(rest.n - 1);
    int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
    auto relabel = [&](int x) {
        if (x == gone) return keep;
        return x > gone ? x - 1 : x;
    };
    for (const auto& ed : rest.edges)
        contracted.edges.push_back({relabel(ed.u), relabel(ed.v), ed.w});
    return deleted + e.w * z_delcon(contracted, Q);
}

// ---- engine 3: transfer matrix over connectivity states --------------------
// Sweeps the m x n grid row by row; states are non-crossing partitions of the
// m frontier sites, canonically encoded as restricted-growth strings. A
// cluster contributes its factor Q when it disconnects from the frontier (or
// at the end). Width budget m <= 10. edge_weights follow the canonical grid
// edge order; use the uniform overload otherwise.
template <class T>
T z_transfer(int m, int n, const T& Q, const std::vector<T>& edge_weights) {
    if (m < 1 || n < 1) throw std::invalid_argument("z_transfer: grid sides must be >= 1");
    if (m > 10) throw BudgetError("z_transfer: width budget is 10 frontier sites");
    GridGraph grid(m, n);
    if (static_cast<int>(edge_weights.size()) != grid.edge_count())
        throw std::invalid_argument("z_transfer: need one weight per edge");
    auto h_edge = [&](int a, int b) { return b * (m - 1) + a; };          // (a,b)-(a+1,b)
    auto v_edge = [&](int a, int b) { return (m - 1) * n + b * m + a; };  // (a,b)-(a,b+1)

    using State = std::vector<uint8_t>;
    auto canonical = [](State s) {
        std::array<int, 256> remap;
        remap.fill(-1);
        uint8_t next = 0;
        for (auto& x : s) {
            if (remap[x] < 0) remap[x] = next++;
            x = static_cast<uint8_t>(remap[x]);
        }
        return s;
    };

    std::map<State, T> states;
    {
        State init(static_cast<size_t>(m));
        for (int a = 0; a < m; ++a) init[static_cast<size_t>(a)] = static_cast<uint8_t>(a);
        states.emplace(std::move(init), T(1));
    }
    auto apply_h_edge = [&](std::map<State, T>& cur, int a, int b) {
        std::map<State, T> next;
        const T& v = edge_weights[static_cast<size_t>(h_edge(a - 1, b))];
        for (const auto& [s, w] : cur) {
            next[s] += w; // edge absent
            State joined = s;
            uint8_t from = joined[static_cast<size_t>(a)], to = joined[static_cast<size_t>(a - 1)];
            if (from != to)
                for (auto& x : joined)
                    if (x == from) x = to;
            next[canonical(std::move(joined))] += w * v;
        }
        cur = std::move(next);
    };

    for (int a = 1; a < m; ++a) apply_h_edge(states, a, 0);

    for (int b = 1; b < n; ++b) {
        for (int a = 0; a < m; ++a) {
            // vertical edge (a,b-1)-(a,b): the new vertex replaces slot a
            std::map<State, T> next;
            const T& v = edge_weights[static_cast<size_t>(v_edge(a, b - 1))];
            for (const auto& [s, w] : states) {
                next[s] += w * v; // edge present: slot continues its cluster
                State detached = s;
                int occurrences = 0;
                for (auto x : s) occurrences += (x == s[static_cast<size_t>(a)]);
                detached[static_cast<size_t>(a)] = 255; // fresh singleton
                T weight = occurrences == 1 ? w * Q : w; // cluster closed off
                next[canonical(std::move(detached))] += weight;
            }
            states = std::move(next);
            if (a >= 1) apply_h_edge(states, a, b);
        }
    }

    T total(0);
    for (const auto& [s, w] : states) {
        int blocks = 0;
        for (size_t i = 0; i < s.size(); ++i) blocks = std::max(blocks, int(s[i]) + 1);
        total += w * detail::int_pow(Q, blocks);
    }
    return total;
}

template <class T>
T z_transfer(int m, int n, const T& Q, const T& uniform_v) {
    GridGraph grid(m, n);
    return z_transfer<T>(m, n, Q,
                         std::vector<T>(static_cast<size_t>(grid.edge_count()), uniform_v));
}

// ---- classical two-variable Tutte polynomial --------------------------------
// T_G(x,y) from Z via Q = (x-1)(y-1), v = y-1, T = Z / (Q v^{|V|-1}).
// Requires a connected graph; x = 1 and y = 1 are rejected rather than taken
// as limits.
template <class T>
T tutte_classical(const BasicGraph<T>& g, const T& x, const T& y) {
    T one(1);
    if (x == one || y == one)
        throw std::domain_error("tutte_classical: x = 1 or y = 1 not supported");
    UnionFind uf(g.n);
    for (const auto& e : g.edges) uf.unite(e.u, e.v);
    if (uf.components != 1)
        throw std::domain_error("tutte_classical: graph must be connected");

    T v = y - one;
    T Q = (x - one) * v;
    BasicGraph<T> h = g;
    for (auto& e : h.edges) e.w = v;
    T z = z_delcon(h, Q);
    return z / (Q * detail::int_pow(v, g.n - 1));
}

// 2 * T_G(3,3) on the m x n grid graph; equals the number of T-tetromino
// tilings of the 4m x 4n rectangle.
BigInt korn_pak_count(int m, int n);

// Scalar-mode front ends (mode-check the graph, then dispatch).
Scalar z_subset(const WeightedGraph& g, const Scalar& Q, int threads = 1);
Scalar z_delcon(const WeightedGraph& g, const Scalar& Q);
Scalar z_transfer(int m, int n, const Scalar& Q, const std::vector<Scalar>& edge_weights);
Scalar tutte_classical(const WeightedGraph& g, const Scalar& x, const Scalar& y);

} // namespace ttt
