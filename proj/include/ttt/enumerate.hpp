#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ttt/lattice.hpp"
#include "ttt/scalar.hpp"

namespace ttt {

struct EnumerationConfig {
    bool pruning = true;
    std::optional<uint64_t> limit; // max tilings to emit, >= 1 when present
    enum class Emit { CountOnly, FullTilings } emit = Emit::FullTilings;
};

// True iff an M x N rectangle admits a T-tetromino tiling: both sides must be
// positive multiples of 4.
bool is_tileable(int M, int N);

// Emits every tiling exactly once in canonical order: the search always
// branches on the lowest uncovered cell in row-major order and tries
// orientations 1..4. The sink returns false to stop early. With pruning the
// coverage rules cut invalid placements; without it only exact cover is
// enforced during the search and the coverage rules are asserted on each
// complete tiling (PlacementError if one ever failed).
void enumerate_tilings(const DomainSpec& d, const EnumerationConfig& cfg,
                       const std::function<bool(const Tiling&)>& sink);

std::vector<Tiling> collect_tilings(const DomainSpec& d, EnumerationConfig cfg = {});

// Same search, counting only.
BigInt count_tilings(const DomainSpec& d);

// Exact-cover count on an arbitrary rectangle, no colour rules at all.
// Usable as an independent check and for rectangles that are not 4m x 4n
// (where it returns 0).
BigInt count_covers_raw(int M, int N);

} // namespace ttt
