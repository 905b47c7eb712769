#include "berezin/flows.hpp"

#include <algorithm>
#include <functional>

#include "berezin/errors.hpp"
#include "berezin/rng.hpp"

namespace berezin {

namespace {

constexpr int kMaxVertices = 64; // vertex sets live in uint64_t bitmasks

std::uint64_t vbit(int v) { return std::uint64_t{1} << (v - 1); }

std::vector<std::vector<int>> out_edges(const DirectedMultigraph& g) {
    std::vector<std::vector<int>> out(static_cast<size_t>(g.n_vertices) + 1);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        out[g.edges[i].from].push_back(i);
    for (auto& v : out)
        std::sort(v.begin(), v.end(), [&g](int a, int b) {
            if (g.edges[a].to != g.edges[b].to) return g.edges[a].to < g.edges[b].to;
            return a < b;
        });
    return out;
}

std::uint64_t cycle_mask(const DirectedMultigraph& g, const Cycle& c) {
    std::uint64_t m = 0;
    for (int e : c.edge_ids) m |= vbit(g.edges[e].from);
    return m;
}

void check_enumeration_size(const DirectedMultigraph& g) {
    if (g.n_vertices > kMaxVertices)
        throw argument_error("enumeration supports at most 64 vertices");
}

void check_terminals(const DirectedMultigraph& g, const std::vector<int>& A,
                     const std::vector<int>& B) {
    if (A.size() != B.size()) throw argument_error("|A| != |B|");
    auto chk = [&g](const std::vector<int>& v, const char* name) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > g.n_vertices)
                throw argument_error(std::string(name) + ": vertex out of range");
            if (i > 0 && v[i] <= v[i - 1])
                throw argument_error(std::string(name) + ": must be strictly increasing");
        }
    };
    chk(A, "sources");
    chk(B, "sinks");
}

} // namespace

int PPath::sign() const {
    int inv = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

MultiPoly cycle_weight(const DirectedMultigraph& g, const Cycle& c) {
    MultiPoly w(1);
    for (int e : c.edge_ids) w *= g.edges[e].weight;
    return w;
}

MultiPoly collection_weight(const DirectedMultigraph& g, const CycleCollection& col) {
    MultiPoly w(1);
    for (const auto& c : col.cycles) w *= cycle_weight(g, c);
    return w;
}

MultiPoly ppath_weight(const DirectedMultigraph& g, const PPath& p) {
    MultiPoly w(1);
    for (const auto& path : p.paths)
        for (int e : path.edge_ids) w *= g.edges[e].weight;
    return w;
}

MultiPoly flow_weight(const DirectedMultigraph& g, const SelfAvoidingFlow& f) {
    return ppath_weight(g, f.ppath) * collection_weight(g, f.cycles);
}

std::vector<Cycle> enum_cycles(const DirectedMultigraph& g) {
    g.validate();
    check_enumeration_size(g);
    auto out = out_edges(g);
    std::vector<Cycle> cycles;
    std::vector<int> walk;
    std::vector<char> used(static_cast<size_t>(g.n_vertices) + 1, 0);

    // anchor each cycle at its minimal vertex: internal vertices stay > s
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int e : out[v]) {
            int u = g.edges[e].to;
            if (u == s) {
                walk.push_back(e);
                cycles.push_back({walk});
                walk.pop_back();
            } else if (u > s && !used[u]) {
                used[u] = 1;
                walk.push_back(e);
                dfs(s, u);
                walk.pop_back();
                used[u] = 0;
            }
        }
    };
    for (int s = 1; s <= g.n_vertices; ++s) dfs(s, s);
    return cycles;
}

std::vector<CycleCollection> enum_cycle_collections(const DirectedMultigraph& g) {
    auto cycles = enum_cycles(g);
    std::vector<std::uint64_t> masks(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) masks[i] = cycle_mask(g, cycles[i]);

    std::vector<CycleCollection> result;
    std::vector<size_t> chosen;
    std::function<void(size_t, std::uint64_t)> rec = [&](size_t idx, std::uint64_t used) {
        CycleCollection col;
        for (size_t i : chosen) col.cycles.push_back(cycles[i]);
        result.push_back(std::move(col));
        for (size_t i = idx; i < cycles.size(); ++i) {
            if (masks[i] & used) continue;
            chosen.push_back(i);
            rec(i + 1, used | masks[i]);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return result;
}

MultiPoly cycle_partition_function(const DirectedMultigraph& g) {
    MultiPoly acc;
    for (const auto& col : enum_cycle_collections(g)) {
        MultiPoly w = collection_weight(g, col);
        if (col.sign() < 0)
            acc -= w;
        else
            acc += w;
    }
    return acc;
}

std::vector<PPath> enum_ppaths(const DirectedMultigraph& g, const std::vector<int>& A,
                               const std::vector<int>& B) {
    g.validate();
    check_enumeration_size(g);
    check_terminals(g, A, B);
    const int p = static_cast<int>(A.size());
    auto out = out_edges(g);

    std::vector<int> bindex(static_cast<size_t>(g.n_vertices) + 1, -1);
    std::uint64_t amask = 0;
    for (size_t i = 0; i < B.size(); ++i) bindex[B[i]] = static_cast<int>(i);
    for (int a : A) amask |= vbit(a);

    std::vector<PPath> result;
    std::vector<FlowPath> cur(static_cast<size_t>(p));
    std::vector<int> sigma(static_cast<size_t>(p), -1);
    std::uint64_t used = 0;

    std::function<void(int)> route;
    std::function<void(int, int)> walk;

    route = [&](int i) {
        if (i == p) {
            PPath pp;
            pp.sources = A;
            pp.sinks = B;
            pp.paths = cur;
            pp.sigma = sigma;
            result.push_back(std::move(pp));
            return;
        }
        int s = A[static_cast<size_t>(i)];
        if (used & vbit(s)) return; // source consumed by an earlier path
        cur[static_cast<size_t>(i)] = {s, {}};
        used |= vbit(s);
        if (bindex[s] >= 0) {
            // source sits on a sink: the only completion is the length-0 path
            // (every sink must terminate some path, and this vertex is taken)
            sigma[static_cast<size_t>(i)] = bindex[s];
            route(i + 1);
        } else {
            walk(i, s);
        }
        used &= ~vbit(s);
    };

    walk = [&](int i, int v) {
        for (int e : out[v]) {
            int u = g.edges[e].to;
            if (used & vbit(u)) continue;
            if (amask & vbit(u)) continue; // future sources are reserved
            if (bindex[u] >= 0) {
                // reached a free sink: stop here (continuing would strand it)
                cur[static_cast<size_t>(i)].edge_ids.push_back(e);
                sigma[static_cast<size_t>(i)] = bindex[u];
                used |= vbit(u);
                route(i + 1);
                used &= ~vbit(u);
                cur[static_cast<size_t>(i)].edge_ids.pop_back();
            } else {
                used |= vbit(u);
                cur[static_cast<size_t>(i)].edge_ids.push_back(e);
                walk(i, u);
                cur[static_cast<size_t>(i)].edge_ids.pop_back();
                used &= ~vbit(u);
            }
        }
    };

    route(0);
    return result;
}

std::vector<SelfAvoidingFlow> enum_self_avoiding_flows(const DirectedMultigraph& g,
                                                       const std::vector<int>& A,
                                                       const std::vector<int>& B) {
    auto ppaths = enum_ppaths(g, A, B);
    auto cycles = enum_cycles(g);
    std::vector<std::uint64_t> masks(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) masks[i] = cycle_mask(g, cycles[i]);

    std::vector<SelfAvoidingFlow> flows;
    for (const auto& pp : ppaths) {
        std::uint64_t pmask = 0;
        for (const auto& path : pp.paths) {
            pmask |= vbit(path.start_vertex);
            for (int e : path.edge_ids) pmask |= vbit(g.edges[e].to);
        }
        std::vector<size_t> chosen;
        std::function<void(size_t, std::uint64_t)> rec = [&](size_t idx,
                                                             std::uint64_t used) {
            SelfAvoidingFlow f;
            f.ppath = pp;
            for (size_t i : chosen) f.cycles.cycles.push_back(cycles[i]);
            flows.push_back(std::move(f));
            for (size_t i = idx; i < cycles.size(); ++i) {
                if (masks[i] & used) continue;
                chosen.push_back(i);
                rec(i + 1, used | masks[i]);
                chosen.pop_back();
            }
        };
        rec(0, pmask);
    }
    return flows;
}

std::pair<MultiPoly, MultiPoly> lgv_rhs(const DirectedMultigraph& g,
                                        const std::vector<int>& A,
                                        const std::vector<int>& B) {
    MultiPoly num;
    for (const auto& f : enum_self_avoiding_flows(g, A, B)) {
        MultiPoly w = flow_weight(g, f);
        if (f.sign() < 0)
            num -= w;
        else
            num += w;
    }
    return {num, cycle_partition_function(g)};
}

MultiPoly flow_sum(const DirectedMultigraph& g,
                   const std::vector<SelfAvoidingFlow>& flows) {
    MultiPoly num;
    for (const auto& f : flows) {
        MultiPoly w = flow_weight(g, f);
        if (f.sign() < 0)
            num -= w;
        else
            num += w;
    }
    return num;
}

namespace {

RationalMatrix eval_matrix(const PolyMatrix& m,
                           const std::map<std::string, Rational>& point) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(point);
    return r;
}

} // namespace

Rational lgv_lhs_eval(const DirectedMultigraph& g, const std::vector<int>& A,
                      const std::vector<int>& B,
                      const std::map<std::string, Rational>& point) {
    check_terminals(g, A, B);
    PolyMatrix a = weighted_adjacency(g);
    RationalMatrix ia = RationalMatrix::identity(g.n_vertices) - eval_matrix(a, point);
    RationalMatrix m = ia.inverse(); // throws singular_error at bad points
    std::vector<int> rows, cols;
    for (int v : A) rows.push_back(v - 1);
    for (int v : B) cols.push_back(v - 1);
    return m.select(rows, cols).det();
}

std::string render_point(const std::map<std::string, Rational>& point) {
    std::vector<std::string> names;
    for (const auto& [k, v] : point) names.push_back(k);
    std::sort(names.begin(), names.end(), variable_less);
    std::string s;
    for (const auto& n : names) {
        if (!s.empty()) s += " ";
        s += n + "=" + rational_str(point.at(n));
    }
    return s.empty() ? "(no variables)" : s;
}

std::string LgvReport::str() const {
    std::string s;
    s += "numerator: " + numerator.str() + "\n";
    s += "denominator: " + denominator.str() + "\n";
    s += "flows: " + std::to_string(flow_count) + "\n";
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        s += "point " + std::to_string(i + 1) + ": " + render_point(p.point) +
             " | minor=" + rational_str(p.minor_value) +
             " numerator=" + rational_str(p.numerator_value) +
             " denominator=" + rational_str(p.denominator_value) + " " +
             (p.pass ? "PASS" : "FAIL") + "\n";
    }
    s += pass ? "PASS\n" : "FAIL\n";
    return s;
}

LgvReport lgv_check(const DirectedMultigraph& g, const std::vector<int>& A,
                    const std::vector<int>& B, int trials, std::uint64_t seed) {
    LgvReport rep;
    auto flows = enum_self_avoiding_flows(g, A, B);
    MultiPoly num = flow_sum(g, flows);
    MultiPoly den = cycle_partition_function(g);
    rep.numerator = num;
    rep.denominator = den;
    rep.flow_count = flows.size();

    auto vars = weight_variables(g);
    PolyMatrix a = weighted_adjacency(g);
    Rng rng(seed);
    rep.pass = true;
    const int max_attempts = vars.empty() ? 1 : 1000;
    for (int t = 0; t < trials; ++t) {
        std::map<std::string, Rational> pt;
        Rational idet;
        int attempts = 0;
        for (;;) {
            pt = rng.sample_point(vars);
            idet = (RationalMatrix::identity(g.n_vertices) - eval_matrix(a, pt)).det();
            if (idet != 0) break;
            if (++attempts >= max_attempts)
                throw singular_error("lgv_check: could not find a non-singular point");
        }
        LgvPointCheck pc;
        pc.point = pt;
        pc.minor_value = lgv_lhs_eval(g, A, B, pt);
        pc.numerator_value = num.eval(pt);
        pc.denominator_value = den.eval(pt);
        pc.pass = (pc.numerator_value == pc.minor_value * pc.denominator_value);
        if (!pc.pass) rep.pass = false;
        rep.points.push_back(std::move(pc));
    }
    return rep;
}

} // namespace berezin
