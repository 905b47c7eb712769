#include "berezin/transfer.hpp"

#include <set>

#include <json.hpp>

#include "berezin/errors.hpp"
#include "berezin/rng.hpp"

namespace berezin {

void LayeredGraph::validate() const {
    if (layer_size < 0) throw shape_error("layered graph: negative layer size");
    for (const auto& layer : layers) {
        if (layer.n_vertices != layer_size)
            throw shape_error("layered graph: layer vertex count != N");
        layer.validate();
    }
}

ChainedGraph chain_graph(const LayeredGraph& lg) {
    lg.validate();
    ChainedGraph cg;
    cg.layer_size = lg.layer_size;
    cg.n_layers = lg.n_layers();
    cg.flat.n_vertices = lg.layer_size * lg.n_layers();
    for (int m = 1; m <= cg.n_layers; ++m)
        for (const auto& e : lg.layers[static_cast<size_t>(m - 1)].edges)
            cg.flat.add_edge(cg.flat_id(e.from, m), cg.flat_id(e.to, m), e.weight);
    for (int m = 1; m < cg.n_layers; ++m)
        for (int i = 1; i <= cg.layer_size; ++i)
            cg.flat.add_edge(cg.flat_id(i, m), cg.flat_id(i, m + 1), MultiPoly(1));
    return cg;
}

LayeredGraph layered_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw argument_error(std::string("layered JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("N") || !j["N"].is_number_integer())
        throw argument_error("layered JSON: missing integer field 'N'");
    LayeredGraph lg;
    lg.layer_size = j["N"].get<int>();
    if (!j.contains("layers") || !j["layers"].is_array())
        throw argument_error("layered JSON: missing array field 'layers'");
    for (const auto& layer : j["layers"]) {
        nlohmann::json one = layer;
        one["n"] = lg.layer_size;
        lg.layers.push_back(graph_from_json(one.dump()));
    }
    lg.validate();
    return lg;
}

namespace {

std::vector<std::string> layered_weight_variables(const LayeredGraph& lg) {
    std::set<std::string> names;
    for (const auto& layer : lg.layers)
        for (const auto& e : layer.edges)
            for (const auto& v : e.weight.vars()) names.insert(v);
    std::vector<std::string> out(names.begin(), names.end());
    std::sort(out.begin(), out.end(), variable_less);
    return out;
}

RationalMatrix eval_matrix(const PolyMatrix& m,
                           const std::map<std::string, Rational>& point) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(point);
    return r;
}

} // namespace

std::string TransferReport::str() const {
    std::string s;
    s += "flow polynomial: " + flow_polynomial.str() + "\n";
    s += "flows: " + std::to_string(flow_count) + "\n";
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        s += "point " + std::to_string(i + 1) + ": " + render_point(p.point) +
             " | lhs=" + rational_str(p.lhs_value) +
             " rhs=" + rational_str(p.rhs_value) + " " +
             (p.pass ? "PASS" : "FAIL") + "\n";
    }
    s += pass ? "PASS\n" : "FAIL\n";
    return s;
}

TransferReport transfer_check(const LayeredGraph& lg, const std::vector<int>& A,
                              const std::vector<int>& B, int trials,
                              std::uint64_t seed, bool reverse_product) {
    lg.validate();
    if (lg.n_layers() == 0) throw shape_error("transfer_check: no layers");
    if (A.size() != B.size()) throw argument_error("transfer_check: |A| != |B|");
    const int n = lg.n_layers();
    const int N = lg.layer_size;

    ChainedGraph cg = chain_graph(lg);
    std::vector<int> flatA, flatB;
    for (int v : A) flatA.push_back(cg.flat_id(v, 1));
    for (int v : B) flatB.push_back(cg.flat_id(v, n));

    TransferReport rep;
    auto flows = enum_self_avoiding_flows(cg.flat, flatA, flatB);
    rep.flow_polynomial = flow_sum(cg.flat, flows);
    rep.flow_count = flows.size();

    std::vector<PolyMatrix> adj;
    for (const auto& layer : lg.layers) adj.push_back(weighted_adjacency(layer));
    auto vars = layered_weight_variables(lg);

    Rng rng(seed);
    rep.pass = true;
    const int max_attempts = vars.empty() ? 1 : 1000;
    for (int t = 0; t < trials; ++t) {
        std::map<std::string, Rational> pt;
        std::vector<RationalMatrix> one_minus(static_cast<size_t>(n));
        int attempts = 0;
        for (;;) {
            pt = rng.sample_point(vars);
            bool ok = true;
            for (int m = 0; m < n; ++m) {
                one_minus[static_cast<size_t>(m)] =
                    RationalMatrix::identity(N) - eval_matrix(adj[static_cast<size_t>(m)], pt);
                if (one_minus[static_cast<size_t>(m)].det() == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
            if (++attempts >= max_attempts)
                throw singular_error("transfer_check: could not find a non-singular point");
        }

        Rational detprod(1);
        RationalMatrix prod = RationalMatrix::identity(N);
        if (!reverse_product) {
            // Layer 1 acts first. With A_ij = weight of the edge i -> j the
            // path matrix of the chain factors as
            // (1-A_1)^{-1} (1-A_2)^{-1} ... (1-A_n)^{-1}, rows = sources.
            for (int m = 0; m < n; ++m)
                prod = prod * one_minus[static_cast<size_t>(m)].inverse();
        } else {
            for (int m = n - 1; m >= 0; --m)
                prod = prod * one_minus[static_cast<size_t>(m)].inverse();
        }
        for (int m = 0; m < n; ++m) detprod *= one_minus[static_cast<size_t>(m)].det();

        std::vector<int> rows, cols;
        for (int v : A) rows.push_back(v - 1);
        for (int v : B) cols.push_back(v - 1);

        TransferPointCheck pc;
        pc.point = pt;
        pc.lhs_value = rep.flow_polynomial.eval(pt);
        pc.rhs_value = detprod * prod.select(rows, cols).det();
        pc.pass = (pc.lhs_value == pc.rhs_value);
        if (!pc.pass) rep.pass = false;
        rep.points.push_back(std::move(pc));
    }
    return rep;
}

} // namespace berezin
