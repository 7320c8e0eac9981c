#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ttt/genfun.hpp"
#include "ttt/lattice.hpp"
#include "ttt/scalar.hpp"

namespace ttt {

struct UnionFind {
    explicit UnionFind(int n) { reset(n); }
    void reset(int n) {
        parent.assign(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
        components = n;
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[parent[static_cast<size_t>(a)]];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        --components;
        return true;
    }
    std::vector<int> parent;
    int components = 0;
};

// The graph G on the even black sublattice of a 4m x 4n domain: an m x n array
// of vertices joined by nearest-neighbour edges. Edges are indexed
// horizontal-first row-major, then vertical row-major; edge e corresponds to
// the interior white vertex at its midpoint, in the same order as
// interior_whites(d).
struct GridGraph {
    int m = 1; // columns of vertices
    int n = 1; // rows of vertices

    GridGraph() = default;
    GridGraph(int m_, int n_);
    explicit GridGraph(const DomainSpec& d) : GridGraph(d.m, d.n) {}

    int vertex_count() const { return m * n; }
    int h_edge_count() const { return (m - 1) * n; }
    int v_edge_count() const { return m * (n - 1); }
    int edge_count() const { return h_edge_count() + v_edge_count(); }

    int vertex_id(int a, int b) const { return b * m + a; }

    struct Edge {
        int u, v;
        bool horizontal;
    };
    Edge edge(int e) const;

    // midpoint of edge e, in domain coordinates
    Vertex white_of_edge(int e) const;
    // inverse map; -1 when v is not an interior white of the domain
    int edge_of_white(Vertex v) const;
};

// Subset of grid edges as a bitmask (at most 64 edges, enough for 6x6 grids).
struct EdgeSubset {
    uint64_t bits = 0;

    bool contains(int e) const { return (bits >> e) & 1u; }
    void add(int e) { bits |= uint64_t(1) << e; }
    int size() const { return __builtin_popcountll(bits); }
    std::vector<int> indices() const;
    auto operator<=>(const EdgeSubset&) const = default;
};

struct ClusterStats {
    int components = 0; // k
    int loops = 0;      // l
    int edges = 0;      // |A|
};

// k by union-find, l by the Euler relation l = 2k + |A| - |V|; the result is
// cross-checked against direct loop tracing and a logic_error is thrown if
// the two ever disagree.
ClusterStats cluster_stats(const GridGraph& g, EdgeSubset a);

// Number of closed curves through the white vertices that cut exactly the
// edges outside `a` and reflect off the domain boundary. Counted by walking
// the quarter-turn pairings at each white vertex; independent of union-find.
int trace_loops(const GridGraph& g, EdgeSubset a);

// Reusable tracer for tight loops over many subsets of one grid.
class LoopTracer {
  public:
    explicit LoopTracer(const GridGraph& g);
    int count(EdgeSubset a);

  private:
    GridGraph g_;
    int nu_, nv_;
    std::vector<int> white_id_;  // (u,v) -> white index, -1 otherwise
    std::vector<int> travel_;    // port -> port across the diagonal segment
    std::vector<int> edge_at_;   // white index -> grid edge, -1 for boundary
    std::vector<uint8_t> kind_;  // white index: 0 h-midpoint, 1 v-midpoint, 2..5 boundary side
    std::vector<uint32_t> mark_;
    uint32_t stamp_ = 0;
    int port_count_ = 0;
};

// Edge subset induced by a tiling: edge e is kept iff the two long sides
// meeting at its midpoint white vertex run parallel to e.
EdgeSubset edge_subset_of(const Tiling& t);

struct ClassRecord {
    EdgeSubset subset;
    ClusterStats stats;
    std::vector<TilingWeightSummary> members;
};

// Groups a complete enumeration by induced edge subset. When a weight system
// is given, each member records its exact a-weight product (all ones
// otherwise).
std::map<EdgeSubset, ClassRecord> class_partition(const DomainSpec& d,
                                                  const std::vector<Tiling>& tilings,
                                                  const WeightSystem* weights = nullptr);

} // namespace ttt
