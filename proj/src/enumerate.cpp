#include "ttt/enumerate.hpp"

#include <algorithm>

namespace ttt {

bool is_tileable(int M, int N) {
    if (M < 1 || N < 1) throw std::invalid_argument("is_tileable: sides must be positive");
    return M % 4 == 0 && N % 4 == 0;
}

namespace {

// Candidate placements covering cell c as their lowest (row-major) cell:
// o=1,2 anchored at c, o=3,4 anchored one column left of c (their lowest cell
// is the stem / bottom-right cell).
struct Candidate {
    Orientation o;
    int di; // anchor.i = c.i + di
};
constexpr Candidate kCandidates[4] = {
    {Orientation::StemUp, 0},
    {Orientation::StemRight, 0},
    {Orientation::StemDown, -1},
    {Orientation::StemLeft, -1},
};

struct Searcher {
    int M, N;
    bool pruning;
    const DomainSpec* domain = nullptr; // null for raw rectangles
    std::vector<int8_t> occupied;
    std::vector<std::pair<Orientation, Cell>> placed;

    // sink(placed) -> keep going?
    std::function<bool(const std::vector<std::pair<Orientation, Cell>>&)> on_solution;
    bool stopped = false;

    Searcher(int M_, int N_) : M(M_), N(N_), pruning(false), occupied(size_t(M_) * N_, 0) {}

    bool in_bounds(Orientation o, Cell a) const {
        int bw = long_side_horizontal(o) ? 3 : 2;
        int bh = long_side_horizontal(o) ? 2 : 3;
        return a.i >= 0 && a.j >= 0 && a.i + bw <= M && a.j + bh <= N;
    }

    bool placement_allowed(Orientation o, Cell a) const {
        return !pruning || placement_coverage_ok(o, a, *domain);
    }

    void search(int from) {
        if (stopped) return;
        int total = M * N;
        while (from < total && occupied[from]) ++from;
        if (from == total) {
            if (!on_solution(placed)) stopped = true;
            return;
        }
        Cell c{from % M, from / M};
        for (const auto& cand : kCandidates) {
            Cell a{c.i + cand.di, c.j};
            if (!in_bounds(cand.o, a)) continue;
            auto cells = tile_cells(cand.o, a);
            bool free = true;
            for (const auto& cc : cells)
                if (occupied[size_t(cc.j) * M + cc.i]) {
                    free = false;
                    break;
                }
            if (!free || !placement_allowed(cand.o, a)) continue;

            for (const auto& cc : cells) occupied[size_t(cc.j) * M + cc.i] = 1;
            placed.push_back({cand.o, a});
            search(from + 1); // `from` is covered now; the scan pointer only advances
            placed.pop_back();
            for (const auto& cc : cells) occupied[size_t(cc.j) * M + cc.i] = 0;
            if (stopped) return;
        }
    }
};

} // namespace

void enumerate_tilings(const DomainSpec& d, const EnumerationConfig& cfg,
                       const std::function<bool(const Tiling&)>& sink) {
    if (cfg.limit && *cfg.limit < 1) throw std::invalid_argument("enumeration limit must be >= 1");
    Searcher s(d.width(), d.height());
    s.pruning = cfg.pruning;
    s.domain = &d;
    uint64_t emitted = 0;
    s.on_solution = [&](const std::vector<std::pair<Orientation, Cell>>& placed) {
        Tiling t;
        t.domain = d;
        t.tiles.reserve(placed.size());
        // tile_from re-derives the white vertex and b-type and throws if a
        // complete cover ever broke the coverage rules (it cannot).
        for (const auto& [o, a] : placed) t.tiles.push_back(tile_from(o, a, d));
        ++emitted;
        bool keep = sink(t);
        if (cfg.limit && emitted >= *cfg.limit) keep = false;
        return keep;
    };
    s.search(0);
}

std::vector<Tiling> collect_tilings(const DomainSpec& d, EnumerationConfig cfg) {
    std::vector<Tiling> out;
    enumerate_tilings(d, cfg, [&](const Tiling& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

BigInt count_tilings(const DomainSpec& d) {
    Searcher s(d.width(), d.height());
    s.pruning = true;
    s.domain = &d;
    BigInt count = 0;
    s.on_solution = [&](const auto&) {
        ++count;
        return true;
    };
    s.search(0);
    return count;
}

BigInt count_covers_raw(int M, int N) {
    if (M < 1 || N < 1) throw std::invalid_argument("count_covers_raw: sides must be positive");
    Searcher s(M, N);
    BigInt count = 0;
    s.on_solution = [&](const auto&) {
        ++count;
        return true;
    };
    s.search(0);
    return count;
}

} // namespace ttt
