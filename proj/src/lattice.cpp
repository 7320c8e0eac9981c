#include "ttt/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace ttt {

DomainSpec::DomainSpec(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw std::invalid_argument("DomainSpec: m and n must be >= 1");
}

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::BlackOdd: return "BlackOdd";
        case VertexClass::BlackEven: return "BlackEven";
        case VertexClass::WhiteOdd: return "WhiteOdd";
        case VertexClass::WhiteEven: return "WhiteEven";
        case VertexClass::Plain: return "Plain";
    }
    return "?";
}

VertexClass classify_vertex(int x, int y, const DomainSpec& d) {
    if (x < 0 || y < 0 || x > d.width() || y > d.height())
        throw std::out_of_range("classify_vertex: (" + std::to_string(x) + "," +
                                std::to_string(y) + ") outside the domain");
    if (x % 2 != 0 || y % 2 != 0) return VertexClass::Plain;
    bool odd_row = (y % 4 == 0);
    int s = (x + y) % 4;
    if (s == 0) return odd_row ? VertexClass::BlackOdd : VertexClass::BlackEven;
    return odd_row ? VertexClass::WhiteOdd : VertexClass::WhiteEven;
}

Orientation orientation_from_index(int o) {
    if (o < 1 || o > 4) throw std::invalid_argument("orientation must be 1..4");
    return static_cast<Orientation>(o);
}

std::array<Cell, 4> tile_cells(Orientation o, Cell a) {
    switch (o) {
        case Orientation::StemUp:
            return {Cell{a.i, a.j}, Cell{a.i + 1, a.j}, Cell{a.i + 2, a.j}, Cell{a.i + 1, a.j + 1}};
        case Orientation::StemRight:
            return {Cell{a.i, a.j}, Cell{a.i, a.j + 1}, Cell{a.i, a.j + 2}, Cell{a.i + 1, a.j + 1}};
        case Orientation::StemDown:
            return {Cell{a.i + 1, a.j}, Cell{a.i, a.j + 1}, Cell{a.i + 1, a.j + 1},
                    Cell{a.i + 2, a.j + 1}};
        case Orientation::StemLeft:
            return {Cell{a.i + 1, a.j}, Cell{a.i, a.j + 1}, Cell{a.i + 1, a.j + 1},
                    Cell{a.i + 1, a.j + 2}};
    }
    throw std::invalid_argument("bad orientation");
}

std::array<Vertex, 8> tile_corners(Orientation o, Cell a) {
    int i = a.i, j = a.j;
    switch (o) {
        case Orientation::StemUp:
            return {Vertex{i, j},         Vertex{i + 3, j},     Vertex{i + 3, j + 1},
                    Vertex{i + 2, j + 1}, Vertex{i + 2, j + 2}, Vertex{i + 1, j + 2},
                    Vertex{i + 1, j + 1}, Vertex{i, j + 1}};
        case Orientation::StemRight:
            return {Vertex{i, j},         Vertex{i + 1, j},     Vertex{i + 1, j + 1},
                    Vertex{i + 2, j + 1}, Vertex{i + 2, j + 2}, Vertex{i + 1, j + 2},
                    Vertex{i + 1, j + 3}, Vertex{i, j + 3}};
        case Orientation::StemDown:
            return {Vertex{i + 1, j},     Vertex{i + 2, j},     Vertex{i + 2, j + 1},
                    Vertex{i + 3, j + 1}, Vertex{i + 3, j + 2}, Vertex{i, j + 2},
                    Vertex{i, j + 1},     Vertex{i + 1, j + 1}};
        case Orientation::StemLeft:
            return {Vertex{i + 1, j},     Vertex{i + 2, j},     Vertex{i + 2, j + 3},
                    Vertex{i + 1, j + 3}, Vertex{i + 1, j + 2}, Vertex{i, j + 2},
                    Vertex{i, j + 1},     Vertex{i + 1, j + 1}};
    }
    throw std::invalid_argument("bad orientation");
}

std::array<Vertex, 2> tile_cornerless(Orientation o, Cell a) {
    int i = a.i, j = a.j;
    switch (o) {
        case Orientation::StemUp: // bottom side, left to right
            return {Vertex{i + 1, j}, Vertex{i + 2, j}};
        case Orientation::StemRight: // left side, top to bottom
            return {Vertex{i, j + 2}, Vertex{i, j + 1}};
        case Orientation::StemDown: // top side, right to left
            return {Vertex{i + 2, j + 2}, Vertex{i + 1, j + 2}};
        case Orientation::StemLeft: // right side, bottom to top
            return {Vertex{i + 2, j + 1}, Vertex{i + 2, j + 2}};
    }
    throw std::invalid_argument("bad orientation");
}

bool placement_coverage_ok(Orientation o, Cell anchor, const DomainSpec& d) {
    for (const auto& v : tile_corners(o, anchor))
        if (is_white(classify_vertex(v.x, v.y, d))) return false;
    int whites = 0;
    for (const auto& v : tile_cornerless(o, anchor)) {
        VertexClass c = classify_vertex(v.x, v.y, d);
        if (is_black(c)) return false;
        whites += is_white(c);
    }
    return whites == 1;
}

Tile tile_from(Orientation o, Cell anchor, const DomainSpec& d) {
    int bw = long_side_horizontal(o) ? 3 : 2;
    int bh = long_side_horizontal(o) ? 2 : 3;
    if (anchor.i < 0 || anchor.j < 0 || anchor.i + bw > d.width() || anchor.j + bh > d.height())
        throw std::out_of_range("tile_from: placement outside the domain");

    auto corners = tile_corners(o, anchor);
    for (const auto& v : corners) {
        if (is_white(classify_vertex(v.x, v.y, d)))
            throw PlacementError("tile corner covers white vertex (" + std::to_string(v.x) + "," +
                                 std::to_string(v.y) + ")");
    }

    auto cl = tile_cornerless(o, anchor);
    int white_at = -1;
    for (int k = 0; k < 2; ++k) {
        VertexClass c = classify_vertex(cl[k].x, cl[k].y, d);
        if (is_black(c))
            throw PlacementError("cornerless vertex covers black vertex (" +
                                 std::to_string(cl[k].x) + "," + std::to_string(cl[k].y) + ")");
        if (is_white(c)) white_at = k;
    }
    if (white_at < 0)
        throw PlacementError("neither cornerless vertex lies on a white vertex (anchor " +
                             std::to_string(anchor.i) + "," + std::to_string(anchor.j) + ")");

    return Tile{o, anchor, cl[white_at], white_at + 1};
}

int Tiling::b_count(int b_type) const {
    int c = 0;
    for (const auto& t : tiles) c += (t.b_type == b_type);
    return c;
}

std::vector<int> Tiling::cell_map() const {
    std::vector<int> map(static_cast<size_t>(domain.cell_count()), -1);
    int w = domain.width();
    for (size_t ti = 0; ti < tiles.size(); ++ti)
        for (const auto& c : tile_cells(tiles[ti].o, tiles[ti].anchor)) {
            if (c.i < 0 || c.j < 0 || c.i >= w || c.j >= domain.height()) continue;
            map[static_cast<size_t>(c.j) * w + c.i] = static_cast<int>(ti);
        }
    return map;
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    os << violations.size() << " violation(s): ";
    for (size_t k = 0; k < violations.size(); ++k) {
        if (k) os << "; ";
        os << violations[k].detail;
        if (k == 9 && violations.size() > 10) {
            os << "; ...";
            break;
        }
    }
    return os.str();
}

ValidationReport validate_tiling(const Tiling& t) {
    ValidationReport rep;
    const DomainSpec& d = t.domain;
    auto add = [&rep](Violation::Kind k, std::string msg) {
        rep.violations.push_back({k, std::move(msg)});
    };

    if (static_cast<int>(t.tiles.size()) != d.tile_count())
        add(Violation::Kind::TileCountMismatch,
            "tile count " + std::to_string(t.tiles.size()) + " != " +
                std::to_string(d.tile_count()));

    std::vector<int> cover(static_cast<size_t>(d.cell_count()), 0);
    for (const auto& tile : t.tiles) {
        int bw = long_side_horizontal(tile.o) ? 3 : 2;
        int bh = long_side_horizontal(tile.o) ? 2 : 3;
        if (tile.anchor.i < 0 || tile.anchor.j < 0 || tile.anchor.i + bw > d.width() ||
            tile.anchor.j + bh > d.height()) {
            add(Violation::Kind::OutOfBounds,
                "tile anchored at (" + std::to_string(tile.anchor.i) + "," +
                    std::to_string(tile.anchor.j) + ") leaves the domain");
            continue;
        }
        for (const auto& c : tile_cells(tile.o, tile.anchor))
            cover[static_cast<size_t>(c.j) * d.width() + c.i]++;

        for (const auto& v : tile_corners(tile.o, tile.anchor))
            if (is_white(classify_vertex(v.x, v.y, d)))
                add(Violation::Kind::CornerOnWhite, "corner on white vertex (" +
                                                        std::to_string(v.x) + "," +
                                                        std::to_string(v.y) + ")");

        auto cl = tile_cornerless(tile.o, tile.anchor);
        int whites = 0;
        for (const auto& v : cl) {
            VertexClass c = classify_vertex(v.x, v.y, d);
            if (is_black(c))
                add(Violation::Kind::CornerlessOnBlack, "cornerless vertex on black vertex (" +
                                                            std::to_string(v.x) + "," +
                                                            std::to_string(v.y) + ")");
            whites += is_white(c);
        }
        if (whites != 1)
            add(Violation::Kind::NoWhiteUnderTile,
                "tile at (" + std::to_string(tile.anchor.i) + "," +
                    std::to_string(tile.anchor.j) + ") covers " + std::to_string(whites) +
                    " white vertices at cornerless positions");
    }

    for (int j = 0; j < d.height(); ++j)
        for (int i = 0; i < d.width(); ++i) {
            int c = cover[static_cast<size_t>(j) * d.width() + i];
            if (c == 0)
                add(Violation::Kind::UncoveredCell,
                    "cell (" + std::to_string(i) + "," + std::to_string(j) + ") uncovered");
            else if (c > 1)
                add(Violation::Kind::DoubleCover, "cell (" + std::to_string(i) + "," +
                                                      std::to_string(j) + ") covered " +
                                                      std::to_string(c) + " times");
        }
    return rep;
}

std::vector<Vertex> interior_whites(const DomainSpec& d) {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(2 * d.m * d.n));
    // WhiteEven: x = 0 mod 4 interior, y = 2 mod 4. Horizontal-edge midpoints.
    for (int y = 2; y <= d.height() - 2; y += 4)
        for (int x = 4; x <= d.width() - 4; x += 4) out.push_back({x, y});
    // WhiteOdd: x = 2 mod 4, y = 0 mod 4 interior. Vertical-edge midpoints.
    for (int y = 4; y <= d.height() - 4; y += 4)
        for (int x = 2; x <= d.width() - 2; x += 4) out.push_back({x, y});
    return out;
}

InteriorWhiteIndex::InteriorWhiteIndex(const DomainSpec& d) : verts_(interior_whites(d)) {
    for (size_t k = 0; k < verts_.size(); ++k) lookup_.emplace(verts_[k], static_cast<int>(k));
}

int InteriorWhiteIndex::index_of(Vertex v) const {
    auto it = lookup_.find(v);
    return it == lookup_.end() ? -1 : it->second;
}

} // namespace ttt
