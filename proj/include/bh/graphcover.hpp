#pragma once

#include <utility>
#include <vector>

#include "bh/cover.hpp"

namespace bh {

// A finite connected graph; multi-edges allowed, a loop adds 2 to its
// vertex's degree.
struct CoverGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

CoverGraph path_graph(int vertices);

// From a connected graph G, the 2|E|-fold cover of the torus with two branch
// points: one cyclic piece per vertex (the degree-d_v cover of the one-holed
// torus unwinding the first handle loop), boundary circles glued in pairs
// per edge, both branch-point monodromies pairing the glued circles.
//
// The output satisfies: valid cover of (g=1, k=2); both c-images are
// fixed-point-free involutions; each fiber has |E| preimages, all of
// ramification number 2; chi = -2|E| (genus |E|+1); property NU; the
// <rho(a)>-orbit sizes are the vertex degrees.
MonodromyCover build_cover(const CoverGraph& g);

// the path-graph instance on four vertices: a 6-fold cover by the closed
// genus-4 surface
MonodromyCover fig2_example();

} // namespace bh
