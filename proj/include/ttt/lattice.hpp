#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttt/errors.hpp"

namespace ttt {

// The 4m x 4n rectangle. Cells are (i,j) with 0 <= i < 4m, 0 <= j < 4n,
// lattice vertices (x,y) sit at cell corners.
struct DomainSpec {
    int m = 1;
    int n = 1;

    DomainSpec() = default;
    DomainSpec(int m_, int n_);

    int width() const { return 4 * m; }  // M
    int height() const { return 4 * n; } // N
    int cell_count() const { return width() * height(); }
    int tile_count() const { return 4 * m * n; }

    bool operator==(const DomainSpec&) const = default;
};

struct Vertex {
    int x = 0;
    int y = 0;
    bool operator==(const Vertex&) const = default;
    auto operator<=>(const Vertex&) const = default;
};

struct VertexHash {
    size_t operator()(const Vertex& v) const {
        return std::hash<uint64_t>()((uint64_t(uint32_t(v.x)) << 32) | uint32_t(v.y));
    }
};

struct Cell {
    int i = 0;
    int j = 0;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

enum class VertexClass : uint8_t { BlackOdd, BlackEven, WhiteOdd, WhiteEven, Plain };

const char* to_string(VertexClass c);

inline bool is_black(VertexClass c) {
    return c == VertexClass::BlackOdd || c == VertexClass::BlackEven;
}
inline bool is_white(VertexClass c) {
    return c == VertexClass::WhiteOdd || c == VertexClass::WhiteEven;
}

// Colour of a lattice vertex. Black: x,y even, x+y = 0 mod 4; white: x,y even,
// x+y = 2 mod 4; odd sublattice at y = 0 mod 4, even at y = 2 mod 4.
VertexClass classify_vertex(int x, int y, const DomainSpec& d);

// Stem direction of the T; the long (flat) side is opposite the stem.
// 1 and 3 have the long side horizontal, 2 and 4 vertical.
enum class Orientation : uint8_t { StemUp = 1, StemRight = 2, StemDown = 3, StemLeft = 4 };

inline int orientation_index(Orientation o) { return static_cast<int>(o); }
Orientation orientation_from_index(int o);

inline bool long_side_horizontal(Orientation o) {
    return o == Orientation::StemUp || o == Orientation::StemDown;
}

// Geometry of a placement, all relative to the anchor = lower-left corner of
// the bounding box (3x2 for horizontal, 2x3 for vertical orientations).
std::array<Cell, 4> tile_cells(Orientation o, Cell anchor);
std::array<Vertex, 8> tile_corners(Orientation o, Cell anchor);
// The two flat-side vertices that are not corners, in the order they are met
// walking the tile boundary counter-clockwise (interior on the left). That
// walk is rotation-covariant, so "first" and "second" mean the same thing in
// all four orientations.
std::array<Vertex, 2> tile_cornerless(Orientation o, Cell anchor);

// True iff an in-bounds placement satisfies the coverage rules: no corner on a
// white vertex, no cornerless vertex on a black one, exactly one cornerless
// vertex on a white one. This is the enumerator's pruning predicate.
bool placement_coverage_ok(Orientation o, Cell anchor, const DomainSpec& d);

// A placed tile with the derived white vertex and b-type (1 if the white
// vertex sits at the first cornerless position, 2 if at the second).
struct Tile {
    Orientation o = Orientation::StemUp;
    Cell anchor;
    Vertex white;
    int b_type = 1;

    bool operator==(const Tile&) const = default;
};

// Validating constructor. Throws std::out_of_range when the tile does not fit
// and PlacementError when the placement breaks the coverage rules (a corner on
// a white vertex, a cornerless vertex on a black one, or no white vertex under
// either cornerless position).
Tile tile_from(Orientation o, Cell anchor, const DomainSpec& d);

struct Tiling {
    DomainSpec domain;
    std::vector<Tile> tiles;

    int b_count(int b_type) const; // B_1 or B_2
    // cell -> tile index, -1 for uncovered. Row-major, index = j*width + i.
    std::vector<int> cell_map() const;
};

struct Violation {
    enum class Kind {
        UncoveredCell,
        DoubleCover,
        CornerOnWhite,
        CornerlessOnBlack,
        NoWhiteUnderTile,
        TileCountMismatch,
        OutOfBounds,
    };
    Kind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Exact cover plus the black/white coverage conditions; every failure is
// listed with coordinates.
ValidationReport validate_tiling(const Tiling& t);

// Interior white vertices in canonical order: WhiteEven (horizontal-edge
// midpoints) row-major first, then WhiteOdd (vertical-edge midpoints)
// row-major. Index order matches the grid-graph edge order.
std::vector<Vertex> interior_whites(const DomainSpec& d);

struct InteriorWhiteIndex {
    explicit InteriorWhiteIndex(const DomainSpec& d);
    // -1 when v is not an interior white vertex.
    int index_of(Vertex v) const;
    const std::vector<Vertex>& vertices() const { return verts_; }
    int count() const { return static_cast<int>(verts_.size()); }

  private:
    std::vector<Vertex> verts_;
    std::unordered_map<Vertex, int, VertexHash> lookup_;
};

} // namespace ttt
