#pragma once

#include <json.hpp>

#include "ttt/cycles.hpp"
#include "ttt/genfun.hpp"
#include "ttt/lattice.hpp"
#include "ttt/tutte.hpp"

namespace ttt {

// Insertion-ordered JSON keeps output byte-stable across runs.
using Json = nlohmann::ordered_json;

// Exact scalars serialize as decimal-free rational strings ("p/q" or "p"),
// complex ones as [re, im].
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"m":., "n":., "tiles":[{"o":., "anchor":[i,j]}...]}, tiles sorted by
// (anchor j, anchor i, o).
Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

// {"a":[{"o":., "w":[x,y], "value":...}...], "b1":., "b2":.}; only non-unit
// a-weights are listed.
Json weight_system_to_json(const WeightSystem& w);
WeightSystem weight_system_from_json(const DomainSpec& d, const Json& j);

// {"vertices":k, "edges":[[u,v,value]...], "grid":[m,n] when applicable}.
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

// {"A":[edge indices], "k":., "l":., "size":., "b_exponent_multiset":[[B1,B2,count]...]}
Json class_record_to_json(const ClassRecord& rec);

} // namespace ttt
