#ifndef BEREZIN_GRAPH_HPP
#define BEREZIN_GRAPH_HPP

#include <string>
#include <vector>

#include "berezin/matrix.hpp"

namespace berezin {

// Weighted directed multigraph on vertices 1..n_vertices. Loops and
// parallel edges are allowed; each edge carries a nonzero MultiPoly weight.
struct GraphEdge {
    int from = 0;
    int to = 0;
    MultiPoly weight;
};

struct DirectedMultigraph {
    int n_vertices = 0;
    std::vector<GraphEdge> edges;

    void add_edge(int from, int to, MultiPoly weight);
    // Throws argument_error when an invariant is broken.
    void validate() const;
    bool is_acyclic() const;
};

// Entry (i,j) sums the weights of all parallel edges i -> j.
PolyMatrix weighted_adjacency(const DirectedMultigraph& g);

// Union of the variables appearing in edge weights, canonically ordered.
std::vector<std::string> weight_variables(const DirectedMultigraph& g);

// Fixed naming convention for generated edge weights: w_<from>_<to>_<mult>.
std::string auto_weight_name(int from, int to, int multiplicity);

// {"n": N, "edges": [{"from": i, "to": j, "weight": "<rational-or-name>"}]}
DirectedMultigraph graph_from_json(const std::string& text);
std::string graph_to_json(const DirectedMultigraph& g);

} // namespace berezin

#endif
