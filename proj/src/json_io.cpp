#include "ttt/json_io.hpp"

#include <algorithm>
#include <map>

namespace ttt {

Json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return s.str();
    Complex c = s.cplx();
    return Json::array({c.real(), c.imag()});
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
    if (j.is_array() && j.size() == 2)
        return Scalar(Complex(j[0].get<double>(), j[1].get<double>()));
    throw std::invalid_argument("scalar must be a rational string or [re,im] pair");
}

Json tiling_to_json(const Tiling& t) {
    auto sorted = t.tiles;
    std::sort(sorted.begin(), sorted.end(), [](const Tile& a, const Tile& b) {
        return std::tuple(a.anchor.j, a.anchor.i, orientation_index(a.o)) <
               std::tuple(b.anchor.j, b.anchor.i, orientation_index(b.o));
    });
    Json tiles = Json::array();
    for (const auto& tile : sorted)
        tiles.push_back(Json{{"o", orientation_index(tile.o)},
                             {"anchor", Json::array({tile.anchor.i, tile.anchor.j})}});
    return Json{{"m", t.domain.m}, {"n", t.domain.n}, {"tiles", std::move(tiles)}};
}

Tiling tiling_from_json(const Json& j) {
    DomainSpec d(j.at("m").get<int>(), j.at("n").get<int>());
    Tiling t;
    t.domain = d;
    for (const auto& tj : j.at("tiles")) {
        Orientation o = orientation_from_index(tj.at("o").get<int>());
        Cell anchor{tj.at("anchor")[0].get<int>(), tj.at("anchor")[1].get<int>()};
        t.tiles.push_back(tile_from(o, anchor, d));
    }
    return t;
}

Json weight_system_to_json(const WeightSystem& w) {
    Json a = Json::array();
    const auto& verts = w.whites().vertices();
    for (size_t i = 0; i < verts.size(); ++i)
        for (int o = 1; o <= 4; ++o) {
            const Scalar& val = w.a(orientation_from_index(o), static_cast<int>(i));
            if (val.is_exact() && val.rat() == 1) continue;
            a.push_back(Json{{"o", o},
                             {"w", Json::array({verts[i].x, verts[i].y})},
                             {"value", scalar_to_json(val)}});
        }
    return Json{{"a", std::move(a)},
                {"b1", scalar_to_json(w.b1())},
                {"b2", scalar_to_json(w.b2())}};
}

WeightSystem weight_system_from_json(const DomainSpec& d, const Json& j) {
    WeightSystem w(d);
    if (j.contains("a"))
        for (const auto& e : j.at("a")) {
            Orientation o = orientation_from_index(e.at("o").get<int>());
            Vertex v{e.at("w")[0].get<int>(), e.at("w")[1].get<int>()};
            w.set_a(o, v, scalar_from_json(e.at("value")));
        }
    Scalar b1 = j.contains("b1") ? scalar_from_json(j.at("b1")) : Scalar(1);
    Scalar b2 = j.contains("b2") ? scalar_from_json(j.at("b2")) : Scalar(1);
    w.set_b(std::move(b1), std::move(b2));
    return w;
}

Json graph_to_json(const WeightedGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back(Json::array({e.u, e.v, scalar_to_json(e.w)}));
    return Json{{"vertices", g.n}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const Json& j) {
    WeightedGraph g(j.at("vertices").get<int>());
    for (const auto& e : j.at("edges"))
        g.add_edge(e[0].get<int>(), e[1].get<int>(), scalar_from_json(e[2]));
    return g;
}

Json class_record_to_json(const ClassRecord& rec) {
    Json a = Json::array();
    for (int e : rec.subset.indices()) a.push_back(e);
    std::map<std::pair<int, int>, int> multiset;
    for (const auto& mem : rec.members) multiset[{mem.b1_count, mem.b2_count}]++;
    Json ms = Json::array();
    for (const auto& [key, count] : multiset)
        ms.push_back(Json::array({key.first, key.second, count}));
    return Json{{"A", std::move(a)},
                {"k", rec.stats.components},
                {"l", rec.stats.loops},
                {"size", rec.members.size()},
                {"b_exponent_multiset", std::move(ms)}};
}

} // namespace ttt
