#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berezin/rng.hpp"
#include "berezin/transfer.hpp"

using namespace berezin;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

DirectedMultigraph layer(int n, std::vector<std::tuple<int, int, std::string>> edges) {
    DirectedMultigraph g;
    g.n_vertices = n;
    for (auto& [i, j, w] : edges) g.add_edge(i, j, var(w));
    return g;
}

} // namespace

TEST_CASE("chaining examples") {
    // n = 1: the chain is the layer itself
    LayeredGraph one;
    one.layer_size = 2;
    one.layers = {layer(2, {{1, 2, "u"}})};
    auto cg1 = chain_graph(one);
    CHECK(cg1.flat.n_vertices == 2);
    CHECK(cg1.flat.edges.size() == 1);

    // n = 2, N = 2, empty layers: exactly N(n-1) = 2 unit inter-layer edges
    LayeredGraph empty;
    empty.layer_size = 2;
    empty.layers.resize(2);
    empty.layers[0].n_vertices = empty.layers[1].n_vertices = 2;
    auto cg2 = chain_graph(empty);
    CHECK(cg2.flat.edges.size() == 2);
    for (const auto& e : cg2.flat.edges) CHECK(e.weight == MultiPoly(1));
    CHECK(cg2.flat_id(1, 2) == 3);

    // intra-layer weight lands in the right block
    LayeredGraph lw;
    lw.layer_size = 2;
    lw.layers = {layer(2, {{1, 2, "w"}}), layer(2, {})};
    auto a = weighted_adjacency(chain_graph(lw).flat);
    CHECK(a.at(0, 1) == var("w")); // (1,1) -> (2,1)
    CHECK(a.at(0, 2) == MultiPoly(1)); // (1,1) -> (1,2)
    CHECK(a.at(1, 3) == MultiPoly(1)); // (2,1) -> (2,2)
}

TEST_CASE("layer size mismatch is a shape error") {
    LayeredGraph lg;
    lg.layer_size = 2;
    lg.layers = {layer(3, {})};
    CHECK_THROWS_AS(chain_graph(lg), shape_error);
}

TEST_CASE("transfer identity: acyclic two-layer example") {
    LayeredGraph lg;
    lg.layer_size = 2;
    lg.layers = {layer(2, {{1, 2, "x1"}}), layer(2, {{1, 2, "x2"}})};
    auto rep = transfer_check(lg, {1}, {2}, 3, 42);
    CHECK(rep.pass);
    CHECK(rep.flow_polynomial == var("x1") + var("x2"));
}

TEST_CASE("transfer identity with a cyclic layer") {
    LayeredGraph lg;
    lg.layer_size = 2;
    lg.layers = {layer(2, {{1, 2, "u"}, {2, 2, "w"}}), layer(2, {{1, 2, "v"}})};
    auto rep = transfer_check(lg, {1}, {2}, 3, 9);
    CHECK(rep.pass);
    // the loop rides along the v-path with a negative sign
    CHECK(rep.flow_polynomial == var("u") + var("v") - var("v") * var("w"));
}

TEST_CASE("n = 1 reduces to the plain path-sum identity") {
    auto l1 = layer(2, {{1, 2, "u"}, {2, 2, "w"}});
    LayeredGraph lg;
    lg.layer_size = 2;
    lg.layers = {l1};
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto t2 = transfer_check(lg, {1}, {2}, 3, seed);
        auto t1 = lgv_check(l1, {1}, {2}, 3, seed);
        CHECK(t2.pass == t1.pass);
        REQUIRE(t2.points.size() == t1.points.size());
        for (size_t i = 0; i < t2.points.size(); ++i) {
            CHECK(t2.points[i].pass == t1.points[i].pass);
            CHECK(t2.points[i].point == t1.points[i].point);
        }
    }
}

TEST_CASE("the matrix product order matters on non-commuting layers") {
    LayeredGraph lg;
    lg.layer_size = 2;
    lg.layers = {layer(2, {{1, 2, "u"}}), layer(2, {{2, 1, "v"}})};
    CHECK(transfer_check(lg, {1}, {1}, 3, 5).pass);
    CHECK_FALSE(transfer_check(lg, {1}, {1}, 3, 5, /*reverse_product=*/true).pass);
}

TEST_CASE("two-path systems pick up the permutation sign") {
    // vertex 2 is both a source and a sink, so its path has length zero and
    // the matching of endpoints is the transposition: the single flow
    // (trivial path at 2, path 1 -> 3) carries sign -1
    LayeredGraph lg;
    lg.layer_size = 3;
    lg.layers = {layer(3, {{1, 3, "v"}})};
    auto rep = transfer_check(lg, {1, 2}, {2, 3}, 3, 13);
    CHECK(rep.pass);
    CHECK(rep.flow_polynomial == -var("v"));
}

TEST_CASE("exhaustive small sweep: n <= 2, N <= 2, one edge per layer") {
    std::vector<std::pair<int, int>> slots{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    long instances = 0;
    for (size_t s1 = 0; s1 < slots.size(); ++s1)
        for (size_t s2 = 0; s2 < slots.size(); ++s2) {
            LayeredGraph lg;
            lg.layer_size = 2;
            DirectedMultigraph a, b;
            a.n_vertices = b.n_vertices = 2;
            a.add_edge(slots[s1].first, slots[s1].second, var("u"));
            b.add_edge(slots[s2].first, slots[s2].second, var("v"));
            lg.layers = {a, b};
            for (const auto& A : std::vector<std::vector<int>>{{1}, {2}, {1, 2}})
                for (const auto& B : std::vector<std::vector<int>>{{1}, {2}, {1, 2}}) {
                    if (A.size() != B.size()) continue;
                    CHECK(transfer_check(lg, A, B, 2,
                                         Rng::derive(17, instances)).pass);
                    ++instances;
                }
        }
    CHECK(instances == 16 * 5);
}

TEST_CASE("layered JSON") {
    auto lg = layered_from_json(R"({"N": 2, "layers": [
        {"edges": [{"from": 1, "to": 2, "weight": "u"}]},
        {"edges": []}]})");
    CHECK(lg.layer_size == 2);
    CHECK(lg.n_layers() == 2);
    CHECK(lg.layers[0].edges.size() == 1);
    CHECK_THROWS_AS(layered_from_json(R"({"layers": []})"), argument_error);
    CHECK_THROWS_AS(layered_from_json(R"({"N": 2})"), argument_error);
    CHECK_THROWS_AS(layered_from_json(R"({"N": 1, "layers": [
        {"edges": [{"from": 1, "to": 2, "weight": "u"}]}]})"), argument_error);
}
