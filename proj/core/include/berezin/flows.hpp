#ifndef BEREZIN_FLOWS_HPP
#define BEREZIN_FLOWS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "berezin/graph.hpp"

namespace berezin {

// A self-avoiding directed cycle, stored as the edge-id sequence of a walk
// that starts (and ends) at its minimal vertex.
struct Cycle {
    std::vector<int> edge_ids;
};

// Pairwise vertex-disjoint cycles; empty collection allowed (weight 1,
// sign +1 by convention).
struct CycleCollection {
    std::vector<Cycle> cycles;
    int sign() const { return cycles.size() % 2 == 0 ? 1 : -1; }
};

// One path of a path system: starts at `start_vertex`, follows `edge_ids`
// (empty = length-0 path sitting on its vertex).
struct FlowPath {
    int start_vertex = 0;
    std::vector<int> edge_ids;
};

// Vertex-disjoint system of self-avoiding paths joining the source set to
// the sink set through the permutation sigma: paths[i] runs from sources[i]
// to sinks[sigma[i]].
struct PPath {
    std::vector<int> sources; // strictly increasing
    std::vector<int> sinks;   // strictly increasing
    std::vector<FlowPath> paths;
    std::vector<int> sigma;
    int sign() const;
};

struct SelfAvoidingFlow {
    PPath ppath;
    CycleCollection cycles;
    int sign() const { return ppath.sign() * cycles.sign(); }
};

MultiPoly cycle_weight(const DirectedMultigraph& g, const Cycle& c);
MultiPoly collection_weight(const DirectedMultigraph& g, const CycleCollection& c);
MultiPoly ppath_weight(const DirectedMultigraph& g, const PPath& p);
MultiPoly flow_weight(const DirectedMultigraph& g, const SelfAvoidingFlow& f);

// All self-avoiding cycles, each anchored at its minimal vertex, in
// canonical order.
std::vector<Cycle> enum_cycles(const DirectedMultigraph& g);

// All collections of pairwise vertex-disjoint cycles, including the empty
// one (always first), duplicate-free, canonical order.
std::vector<CycleCollection> enum_cycle_collections(const DirectedMultigraph& g);

// sum over collections of sign * weight; equals det(I - A) (tested).
MultiPoly cycle_partition_function(const DirectedMultigraph& g);

// All self-avoiding p-path systems from A to B (both strictly increasing,
// equal size). Paths are pairwise vertex-disjoint; length-0 paths appear
// when a source equals its matched sink.
std::vector<PPath> enum_ppaths(const DirectedMultigraph& g, const std::vector<int>& A,
                               const std::vector<int>& B);

// All vertex-disjoint pairs (p-path system, cycle collection).
std::vector<SelfAvoidingFlow> enum_self_avoiding_flows(const DirectedMultigraph& g,
                                                       const std::vector<int>& A,
                                                       const std::vector<int>& B);

// sum of sign * weight over an enumerated flow list.
MultiPoly flow_sum(const DirectedMultigraph& g,
                   const std::vector<SelfAvoidingFlow>& flows);

// (numerator, denominator) of the path-sum side: numerator sums
// sign * weight over self-avoiding flows, denominator is the cycle
// partition function (1 for acyclic graphs).
std::pair<MultiPoly, MultiPoly> lgv_rhs(const DirectedMultigraph& g,
                                        const std::vector<int>& A,
                                        const std::vector<int>& B);

// det(M_{A,B}) with M = (I - A(point))^{-1}, rows A, columns B, computed
// exactly at the evaluation point. Throws singular_error when I - A is
// singular there.
Rational lgv_lhs_eval(const DirectedMultigraph& g, const std::vector<int>& A,
                      const std::vector<int>& B,
                      const std::map<std::string, Rational>& point);

struct LgvPointCheck {
    std::map<std::string, Rational> point;
    Rational minor_value;       // det(M_{A,B}) at the point
    Rational numerator_value;   // flow sum at the point
    Rational denominator_value; // cycle sum at the point
    bool pass = false;
};

struct LgvReport {
    bool pass = false;
    MultiPoly numerator;
    MultiPoly denominator;
    std::size_t flow_count = 0;
    std::vector<LgvPointCheck> points;

    // Deterministic multi-line text rendering (one line per point).
    std::string str() const;
};

// "x=1/2 y=-3/10 ..." in canonical variable order.
std::string render_point(const std::map<std::string, Rational>& point);

// Verifies numerator = minor * denominator exactly at `trials` seeded
// rational points, re-sampling any point where I - A is singular.
// Failures are reported, never thrown.
LgvReport lgv_check(const DirectedMultigraph& g, const std::vector<int>& A,
                    const std::vector<int>& B, int trials, std::uint64_t seed);

} // namespace berezin

#endif
