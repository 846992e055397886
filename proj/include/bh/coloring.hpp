#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bh/cover.hpp"

namespace bh {

// color(x_i) = rho(c_i); fiber colors are its cycles, one per preimage
struct ColorData {
    int branch_index = 0; // 1-based
    Perm color_of_point;
    CycleSet fiber_colors;
};

ColorData color(const MonodromyCover& cover, int i);

// Loopless bipartite multigraph on the fiber cycles over x_i and x_j, one
// edge per sheet joining the cycles containing it. Vertex degrees equal the
// ramification numbers.
struct GammaGraph {
    int i = 0, j = 0; // 1-based branch indices
    std::vector<std::vector<int>> left_cycles;  // cycles of rho(c_i)
    std::vector<std::vector<int>> right_cycles; // cycles of rho(c_j)
    struct Edge {
        int sheet;
        int left;  // index into left_cycles
        int right; // index into right_cycles
    };
    std::vector<Edge> edges;
};

GammaGraph gamma_graph(const MonodromyCover& cover, int i, int j);

// acyclic as a multigraph (parallel edges count as a circuit)
bool is_forest(const GammaGraph& g);

// Cross-oracle: when Gamma_{i,i+1} is a forest, the curve around x_i and
// x_{i+1} must lift to all-inessential components per the region analysis.
struct ForestCheckReport {
    bool applicable = false; // Gamma is a forest
    bool forest = false;
    bool all_inessential = false; // region-graph result (valid when applicable)
    bool agree = true;            // forest => all_inessential; disagreement is a bug
    std::string detail;
};

ForestCheckReport forest_implies_trivial_lift_check(const MonodromyCover& cover, int i, int j);

// Witness for the simple-cover obstruction: a class in the orbit with two
// adjacent branch points of distinct colors, whose Gamma graph is a forest.
struct SimpleCertificate {
    std::vector<int> transversal;  // indices into the generator list
    std::string transversal_word;  // labels, space-joined
    int i = 0, j = 0;              // adjacent branch indices, 1-based
    GammaGraph gamma;
    bool forest = false;
    bool best_effort = false; // no witness found with the supplied generators
};

// Requires a simple cover with n >= 3, k >= 2 and not the thrice-marked
// sphere. For genus 0 a witness always exists; otherwise the search may
// exhaust and return a best-effort certificate.
SimpleCertificate simple_certificate(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                                     std::size_t limit);

} // namespace bh
