#ifndef BEREZIN_TRANSFER_HPP
#define BEREZIN_TRANSFER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "berezin/flows.hpp"

namespace berezin {

// A sequence of layer graphs, all on the same N vertices. Chaining them
// adds a unit-weight edge from (i, m) to (i, m+1) for every vertex i and
// consecutive layers m, m+1.
struct LayeredGraph {
    int layer_size = 0; // N
    std::vector<DirectedMultigraph> layers;

    int n_layers() const { return static_cast<int>(layers.size()); }
    void validate() const;
};

struct ChainedGraph {
    DirectedMultigraph flat; // N * n vertices
    int layer_size = 0;
    int n_layers = 0;

    // (i, m) -> flat vertex id, both 1-based
    int flat_id(int i, int m) const { return (m - 1) * layer_size + i; }
};

ChainedGraph chain_graph(const LayeredGraph& lg);

// {"N": n, "layers": [{"edges": [...]}, ...]}
LayeredGraph layered_from_json(const std::string& text);

struct TransferPointCheck {
    std::map<std::string, Rational> point;
    Rational lhs_value; // flow sum over the chained graph
    Rational rhs_value; // prod_m det(1-A_m) * minor of the inverse product
    bool pass = false;
};

struct TransferReport {
    bool pass = false;
    MultiPoly flow_polynomial;
    std::size_t flow_count = 0;
    std::vector<TransferPointCheck> points;

    std::string str() const;
};

// Verifies the transfer identity: the signed weighted sum over
// self-avoiding flows from A (layer-1 vertices) to B (layer-n vertices) in
// the chained graph equals
//   prod_m det(1 - A_m) * det[(1 - A_1)^{-1} (1 - A_2)^{-1} ... (1 - A_n)^{-1}]_{A,B}
// at `trials` seeded rational points (re-sampling when some 1 - A_m is
// singular). The product applies layer 1 first; with the adjacency
// convention A_ij = weight of i -> j this ascending order is forced: the
// block structure of the chain gives exactly this factorization of the
// corner block of (1 - A_flat)^{-1}. `reverse_product` flips the order; it
// exists so tests can show the order matters on non-commuting layers.
TransferReport transfer_check(const LayeredGraph& lg, const std::vector<int>& A,
                              const std::vector<int>& B, int trials,
                              std::uint64_t seed, bool reverse_product = false);

} // namespace berezin

#endif
