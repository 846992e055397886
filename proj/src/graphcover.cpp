#include "bh/graphcover.hpp"

#include <numeric>

#include "bh/union_find.hpp"

namespace bh {

CoverGraph path_graph(int vertices) {
    CoverGraph g;
    g.vertices = vertices;
    for (int v = 0; v + 1 < vertices; ++v) g.edges.emplace_back(v, v + 1);
    return g;
}

MonodromyCover build_cover(const CoverGraph& g) {
    if (g.vertices < 1) throw Error(errc::bad_input, "graph needs at least one vertex");
    if (g.edges.empty()) throw Error(errc::bad_input, "graph needs at least one edge");
    for (auto [u, v] : g.edges)
        if (u < 0 || u >= g.vertices || v < 0 || v >= g.vertices)
            throw Error(errc::bad_input, "edge endpoint out of range");

    std::vector<int> degree(static_cast<size_t>(g.vertices), 0);
    for (auto [u, v] : g.edges) {
        degree[static_cast<size_t>(u)] += 1;
        degree[static_cast<size_t>(v)] += 1; // a loop contributes twice to its vertex
    }
    for (int v = 0; v < g.vertices; ++v)
        if (degree[static_cast<size_t>(v)] == 0)
            throw Error(errc::bad_input, "vertex " + std::to_string(v) + " is isolated");

    UnionFind uf(g.vertices);
    for (auto [u, v] : g.edges) uf.unite(u, v);
    if (uf.count() != 1) throw Error(errc::bad_input, "graph is disconnected");

    // sheets: one per (vertex, residue) with residues 0..d_v-1, numbered by
    // vertex blocks
    std::vector<int> offset(static_cast<size_t>(g.vertices), 0);
    int n = 0;
    for (int v = 0; v < g.vertices; ++v) {
        offset[static_cast<size_t>(v)] = n;
        n += degree[static_cast<size_t>(v)];
    }

    // rho(a): rotate each piece by one residue; rho(b): trivial on each piece
    std::vector<int> a_im(static_cast<size_t>(n));
    for (int v = 0; v < g.vertices; ++v) {
        int d = degree[static_cast<size_t>(v)], off = offset[static_cast<size_t>(v)];
        for (int r = 0; r < d; ++r) a_im[static_cast<size_t>(off + r)] = off + (r + 1) % d;
    }

    // each edge pairs one fresh boundary circle (= residue) of each endpoint;
    // both branch points fold the glued pair, so both c-monodromies swap the
    // paired sheets
    std::vector<int> next_residue(static_cast<size_t>(g.vertices), 0);
    std::vector<int> c_im(static_cast<size_t>(n));
    std::iota(c_im.begin(), c_im.end(), 0);
    for (auto [u, v] : g.edges) {
        int su = offset[static_cast<size_t>(u)] + next_residue[static_cast<size_t>(u)]++;
        int sv = offset[static_cast<size_t>(v)] + next_residue[static_cast<size_t>(v)]++;
        c_im[static_cast<size_t>(su)] = sv;
        c_im[static_cast<size_t>(sv)] = su;
    }

    Signature sig{1, 2};
    std::vector<Perm> images;
    images.emplace_back(a_im);                 // a_1
    images.push_back(Perm::identity(n));       // b_1
    images.emplace_back(c_im);                 // c_1
    images.emplace_back(std::move(c_im));      // c_2
    return MonodromyCover::validate(sig, n, std::move(images));
}

MonodromyCover fig2_example() { return build_cover(path_graph(4)); }

} // namespace bh
