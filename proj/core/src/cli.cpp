#include "berezin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "berezin/flows.hpp"
#include "berezin/grassmann.hpp"
#include "berezin/rng.hpp"
#include "berezin/schur.hpp"
#include "berezin/suite.hpp"
#include "berezin/transfer.hpp"

namespace berezin {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw argument_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        if (!std::all_of(item.begin(), item.end(), ::isdigit))
            throw argument_error("bad vertex list entry: '" + item + "'");
        out.push_back(std::stoi(item));
    }
    return out;
}

ordered_json point_json(const std::map<std::string, Rational>& pt) {
    ordered_json j = ordered_json::object();
    std::vector<std::string> names;
    for (const auto& [k, v] : pt) names.push_back(k);
    std::sort(names.begin(), names.end(), variable_less);
    for (const auto& n : names) j[n] = rational_str(pt.at(n));
    return j;
}

ordered_json lgv_json(const LgvReport& rep) {
    ordered_json j;
    j["numerator"] = rep.numerator.str();
    j["denominator"] = rep.denominator.str();
    j["flows"] = rep.flow_count;
    j["points"] = ordered_json::array();
    for (const auto& p : rep.points) {
        ordered_json pj;
        pj["point"] = point_json(p.point);
        pj["minor"] = rational_str(p.minor_value);
        pj["numerator"] = rational_str(p.numerator_value);
        pj["denominator"] = rational_str(p.denominator_value);
        pj["pass"] = p.pass;
        j["points"].push_back(pj);
    }
    j["pass"] = rep.pass;
    return j;
}

ordered_json transfer_json(const TransferReport& rep) {
    ordered_json j;
    j["flow_polynomial"] = rep.flow_polynomial.str();
    j["flows"] = rep.flow_count;
    j["points"] = ordered_json::array();
    for (const auto& p : rep.points) {
        ordered_json pj;
        pj["point"] = point_json(p.point);
        pj["lhs"] = rational_str(p.lhs_value);
        pj["rhs"] = rational_str(p.rhs_value);
        pj["pass"] = p.pass;
        j["points"].push_back(pj);
    }
    j["pass"] = rep.pass;
    return j;
}

void emit_result(std::ostream& out, bool json, const std::string& poly,
                 ordered_json checks = ordered_json::array()) {
    if (json) {
        ordered_json j;
        j["result"] = poly;
        j["checks"] = std::move(checks);
        out << j.dump() << "\n";
    } else {
        out << poly << "\n";
    }
}

void emit_check(std::ostream& out, bool json, const std::string& name, bool pass,
                const std::string& text_report, ordered_json detail) {
    if (json) {
        ordered_json j;
        j["result"] = nullptr;
        ordered_json c;
        c["check"] = name;
        c["pass"] = pass;
        c["report"] = std::move(detail);
        j["checks"] = ordered_json::array({c});
        out << j.dump() << "\n";
    } else {
        out << text_report;
    }
}

struct CommonOpts {
    std::string shape;
    int nvars = 0;
    std::string param_a;
    bool symbolic_a = false;
    std::string graph_file;
    std::string layers_file;
    std::string sources;
    std::string sinks;
    int trials = 3;
    std::uint64_t seed = 0;
    bool json = false;
    int size = 2;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Grassmann calculus, signed path sums, and Schur polynomials"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_shape = [&](CLI::App* c, bool need_nvars = true) {
        c->add_option("--shape", o.shape, "partition or skew shape, e.g. \"(2,1)/(1)\"")
            ->required();
        if (need_nvars)
            c->add_option("--nvars", o.nvars, "number of variables x1..xn")->required();
    };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
    auto add_seeded = [&](CLI::App* c) {
        c->add_option("--trials", o.trials, "number of evaluation points")->required();
        c->add_option("--seed", o.seed, "RNG seed (mandatory wherever sampling occurs)")
            ->required();
    };

    auto* c_schur = app.add_subcommand("schur", "skew Schur polynomial via tableaux");
    add_shape(c_schur);
    add_json(c_schur);

    auto* c_ext = app.add_subcommand("schur-ext",
                                     "one-parameter Schur polynomial (determinant form)");
    add_shape(c_ext);
    c_ext->add_option("--param-a", o.param_a, "rational value for the parameter");
    c_ext->add_flag("--symbolic-a", o.symbolic_a, "keep the parameter symbolic");
    add_json(c_ext);

    auto* c_ssyt = app.add_subcommand("ssyt", "enumerate semistandard tableaux");
    add_shape(c_ssyt);
    add_json(c_ssyt);

    auto* c_lgv = app.add_subcommand("lgv-check", "verify the path-sum identity on a graph");
    c_lgv->add_option("--graph", o.graph_file, "graph JSON file")->required();
    c_lgv->add_option("--sources", o.sources, "comma list, e.g. 1,3");
    c_lgv->add_option("--sinks", o.sinks, "comma list");
    add_seeded(c_lgv);
    add_json(c_lgv);

    auto* c_lemma = app.add_subcommand("lemma1-check",
                                       "cycle partition function vs det(I - A), symbolic");
    c_lemma->add_option("--graph", o.graph_file, "graph JSON file")->required();
    add_json(c_lemma);

    auto* c_tr = app.add_subcommand("transfer-check", "verify the transfer identity");
    c_tr->add_option("--layers", o.layers_file, "layered-graph JSON file")->required();
    c_tr->add_option("--sources", o.sources, "layer-1 vertices, comma list");
    c_tr->add_option("--sinks", o.sinks, "layer-n vertices, comma list");
    add_seeded(c_tr);
    add_json(c_tr);

    auto* c_gdet = app.add_subcommand("grassmann-det",
                                      "det(I - A) via a Gaussian Grassmann integral");
    c_gdet->add_option("--graph", o.graph_file, "graph JSON file")->required();
    add_json(c_gdet);

    auto* c_minor = app.add_subcommand("minor-check",
                                       "Grassmann minor vs delete-then-determinant on I - A");
    c_minor->add_option("--graph", o.graph_file, "graph JSON file")->required();
    c_minor->add_option("--sources", o.sources, "rows I, comma list");
    c_minor->add_option("--sinks", o.sinks, "columns J, comma list");
    add_json(c_minor);

    auto* c_gauss = app.add_subcommand("gaussian-check",
                                       "two-sided Gaussian integral formula check");
    c_gauss->add_option("--size", o.size, "matrix size N (N=1 runs the symbolic case)")
        ->required();
    add_seeded(c_gauss);
    add_json(c_gauss);

    auto* c_conv = app.add_subcommand("convolve-check", "convolution identity in a and b");
    add_shape(c_conv);
    add_json(c_conv);

    auto* c_conj = app.add_subcommand("conjugate-check", "conjugate-diagram identity");
    add_shape(c_conj);
    add_json(c_conj);

    auto* c_sweep = app.add_subcommand("sweep", "run the full identity-check suite");
    c_sweep->add_option("--seed", o.seed, "RNG seed")->required();
    add_json(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (c_schur->parsed()) {
            auto shape = SkewShape::parse(o.shape);
            emit_result(out, o.json, schur_ssyt(shape, o.nvars).str());
            return 0;
        }

        if (c_ext->parsed()) {
            auto shape = SkewShape::parse(o.shape);
            if (o.symbolic_a && !o.param_a.empty())
                throw argument_error("give either --param-a or --symbolic-a, not both");
            if (!o.symbolic_a && o.param_a.empty())
                throw argument_error("schur-ext needs --param-a <rational> or --symbolic-a");
            MultiPoly param = o.symbolic_a ? MultiPoly::variable("a")
                                           : MultiPoly(parse_rational(o.param_a));
            emit_result(out, o.json, jacobi_trudi_ext(shape, param, o.nvars).str());
            return 0;
        }

        if (c_ssyt->parsed()) {
            auto shape = SkewShape::parse(o.shape);
            auto tabs = enum_ssyt(shape, o.nvars);
            if (o.json) {
                ordered_json j;
                j["result"] = std::to_string(tabs.size());
                j["checks"] = ordered_json::array();
                j["tableaux"] = ordered_json::array();
                for (const auto& t : tabs) j["tableaux"].push_back(t.entries);
                out << j.dump() << "\n";
            } else {
                out << tabs.size() << " tableaux\n";
                for (const auto& t : tabs) {
                    std::string line;
                    for (size_t i = 0; i < t.entries.size(); ++i) {
                        if (i) line += " / ";
                        for (int skip = 0; skip < shape.inner.part(static_cast<int>(i) + 1);
                             ++skip)
                            line += ". ";
                        for (size_t k = 0; k < t.entries[i].size(); ++k) {
                            if (k) line += " ";
                            line += std::to_string(t.entries[i][k]);
                        }
                    }
                    out << line << "\n";
                }
            }
            return 0;
        }

        if (c_lgv->parsed()) {
            auto g = graph_from_json(slurp(o.graph_file));
            auto rep = lgv_check(g, parse_vertex_list(o.sources),
                                 parse_vertex_list(o.sinks), o.trials, o.seed);
            emit_check(out, o.json, "lgv", rep.pass, rep.str(), lgv_json(rep));
            if (!rep.pass) err << "lgv-check: identity failed\n";
            return rep.pass ? 0 : 1;
        }

        if (c_lemma->parsed()) {
            auto g = graph_from_json(slurp(o.graph_file));
            MultiPoly lhs = cycle_partition_function(g);
            MultiPoly rhs = det_poly(PolyMatrix::identity(g.n_vertices) -
                                     weighted_adjacency(g));
            bool pass = (lhs == rhs);
            std::string text = "cycle partition function: " + lhs.str() +
                               "\ndet(I - A): " + rhs.str() + "\n" +
                               (pass ? "PASS\n" : "FAIL\n");
            ordered_json detail;
            detail["cycle_partition_function"] = lhs.str();
            detail["det"] = rhs.str();
            emit_check(out, o.json, "lemma1", pass, text, detail);
            if (!pass) err << "lemma1-check: identity failed\n";
            return pass ? 0 : 1;
        }

        if (c_tr->parsed()) {
            auto lg = layered_from_json(slurp(o.layers_file));
            auto rep = transfer_check(lg, parse_vertex_list(o.sources),
                                      parse_vertex_list(o.sinks), o.trials, o.seed);
            emit_check(out, o.json, "transfer", rep.pass, rep.str(), transfer_json(rep));
            if (!rep.pass) err << "transfer-check: identity failed\n";
            return rep.pass ? 0 : 1;
        }

        if (c_gdet->parsed()) {
            auto g = graph_from_json(slurp(o.graph_file));
            PolyMatrix m = PolyMatrix::identity(g.n_vertices) - weighted_adjacency(g);
            MultiPoly viaGrassmann = berezin_det(m);
            bool pass = (viaGrassmann == det_poly(m));
            if (o.json) {
                ordered_json checks = ordered_json::array();
                ordered_json c;
                c["check"] = "grassmann-det equals determinant";
                c["pass"] = pass;
                checks.push_back(c);
                ordered_json j;
                j["result"] = viaGrassmann.str();
                j["checks"] = checks;
                out << j.dump() << "\n";
            } else {
                out << viaGrassmann.str() << "\n";
            }
            if (!pass) err << "grassmann-det: routes disagree\n";
            return pass ? 0 : 1;
        }

        if (c_minor->parsed()) {
            auto g = graph_from_json(slurp(o.graph_file));
            auto I = parse_vertex_list(o.sources);
            auto J = parse_vertex_list(o.sinks);
            PolyMatrix m = PolyMatrix::identity(g.n_vertices) - weighted_adjacency(g);
            MultiPoly lhs = berezin_minor(m, I, J);
            std::vector<int> I0, J0;
            for (int v : I) I0.push_back(v - 1);
            for (int v : J) J0.push_back(v - 1);
            MultiPoly rhs = det_poly(m.without(I0, J0));
            bool pass = (lhs == rhs);
            std::string text = "grassmann minor: " + lhs.str() +
                               "\ndeleted-submatrix determinant: " + rhs.str() + "\n" +
                               (pass ? "PASS\n" : "FAIL\n");
            ordered_json detail;
            detail["grassmann_minor"] = lhs.str();
            detail["deleted_determinant"] = rhs.str();
            emit_check(out, o.json, "minor", pass, text, detail);
            if (!pass) err << "minor-check: identity failed\n";
            return pass ? 0 : 1;
        }

        if (c_gauss->parsed()) {
            bool pass = true;
            std::ostringstream text;
            ordered_json cases = ordered_json::array();
            auto run_case = [&](const std::string& name, const PolyMatrix& m) {
                auto rep = gaussian_identity_check(m);
                pass = pass && rep.equal;
                text << name << ": " << (rep.equal ? "PASS" : "FAIL") << "\n";
                ordered_json c;
                c["case"] = name;
                c["pass"] = rep.equal;
                cases.push_back(c);
            };
            if (o.size == 1) {
                PolyMatrix m(1, 1);
                m.at(0, 0) = MultiPoly::variable("m_1_1");
                run_case("symbolic 1x1", m);
            } else {
                run_case("identity " + std::to_string(o.size) + "x" + std::to_string(o.size),
                         PolyMatrix::identity(o.size));
                Rng rng(o.seed);
                for (int t = 0; t < o.trials; ++t) {
                    PolyMatrix m(o.size, o.size);
                    do {
                        for (int i = 0; i < o.size; ++i)
                            for (int j = 0; j < o.size; ++j)
                                m.at(i, j) = MultiPoly(rng.sample_weight_value());
                    } while (det_poly(m).is_zero());
                    run_case("random invertible " + std::to_string(t + 1), m);
                }
            }
            text << (pass ? "PASS\n" : "FAIL\n");
            emit_check(out, o.json, "gaussian", pass, text.str(), cases);
            if (!pass) err << "gaussian-check: identity failed\n";
            return pass ? 0 : 1;
        }

        if (c_conv->parsed()) {
            auto rep = convolution_check(SkewShape::parse(o.shape), o.nvars);
            std::string text = rep.detail + "\n" + (rep.pass ? "PASS\n" : "FAIL\n");
            ordered_json detail;
            detail["detail"] = rep.detail;
            emit_check(out, o.json, "convolution", rep.pass, text, detail);
            if (!rep.pass) err << "convolve-check: identity failed\n";
            return rep.pass ? 0 : 1;
        }

        if (c_conj->parsed()) {
            auto rep = conjugate_check(SkewShape::parse(o.shape), o.nvars);
            std::string text = rep.detail + "\n" + (rep.pass ? "PASS\n" : "FAIL\n");
            ordered_json detail;
            detail["detail"] = rep.detail;
            emit_check(out, o.json, "conjugate", rep.pass, text, detail);
            if (!rep.pass) err << "conjugate-check: identity failed\n";
            return rep.pass ? 0 : 1;
        }

        if (c_sweep->parsed()) {
            auto results = run_acceptance(o.seed);
            bool pass = true;
            for (const auto& r : results) pass = pass && r.pass;
            if (o.json) {
                ordered_json j;
                j["result"] = nullptr;
                j["checks"] = ordered_json::array();
                for (const auto& r : results) {
                    ordered_json c;
                    c["id"] = r.id;
                    c["check"] = r.title;
                    c["pass"] = r.pass;
                    c["detail"] = r.detail;
                    j["checks"].push_back(c);
                }
                out << j.dump() << "\n";
            } else {
                out << render_acceptance(results);
            }
            if (!pass) err << "sweep: some criteria failed\n";
            return pass ? 0 : 1;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "no subcommand handled\n";
    return 2;
}

} // namespace berezin
