#include "bh/coloring.hpp"

#include "bh/lifting.hpp"
#include "bh/orbit.hpp"
#include "bh/union_find.hpp"

namespace bh {

ColorData color(const MonodromyCover& cover, int i) {
    if (i < 1 || i > cover.sig().branch_count) throw Error(errc::index_out_of_range, "branch index");
    ColorData cd;
    cd.branch_index = i;
    cd.color_of_point = cover.c_image(i);
    cd.fiber_colors = cover.fiber(i).fiber_cycles;
    return cd;
}

GammaGraph gamma_graph(const MonodromyCover& cover, int i, int j) {
    if (i == j) throw Error(errc::bad_input, "Gamma graph needs two distinct branch points");
    if (i < 1 || i > cover.sig().branch_count || j < 1 || j > cover.sig().branch_count)
        throw Error(errc::index_out_of_range, "branch index");
    GammaGraph g;
    g.i = i;
    g.j = j;
    g.left_cycles = cover.fiber(i).fiber_cycles.cycles;
    g.right_cycles = cover.fiber(j).fiber_cycles.cycles;

    int n = cover.degree();
    std::vector<int> left_of(static_cast<size_t>(n)), right_of(static_cast<size_t>(n));
    for (size_t c = 0; c < g.left_cycles.size(); ++c)
        for (int s : g.left_cycles[c]) left_of[static_cast<size_t>(s)] = static_cast<int>(c);
    for (size_t c = 0; c < g.right_cycles.size(); ++c)
        for (int s : g.right_cycles[c]) right_of[static_cast<size_t>(s)] = static_cast<int>(c);
    for (int s = 0; s < n; ++s)
        g.edges.push_back({s, left_of[static_cast<size_t>(s)], right_of[static_cast<size_t>(s)]});
    return g;
}

bool is_forest(const GammaGraph& g) {
    UnionFind uf(static_cast<int>(g.left_cycles.size() + g.right_cycles.size()));
    int right_offset = static_cast<int>(g.left_cycles.size());
    for (const auto& e : g.edges)
        if (!uf.unite(e.left, right_offset + e.right)) return false; // edge closes a circuit
    return true;
}

ForestCheckReport forest_implies_trivial_lift_check(const MonodromyCover& cover, int i, int j) {
    if (j != i + 1)
        throw Error(errc::bad_input,
                    "the check needs adjacent branch indices; conjugate by braid moves first");
    ForestCheckReport report;
    GammaGraph g = gamma_graph(cover, i, j);
    report.forest = is_forest(g);
    if (!report.forest) {
        report.applicable = false;
        report.detail = "criterion not applicable: Gamma_{i,j} has a circuit";
        return report;
    }
    report.applicable = true;
    LiftedMulticurve flags = essential_flags(cover, range_cut(cover.sig(), i, j));
    report.all_inessential = flags.all_inessential();
    report.agree = report.all_inessential;
    report.detail = report.agree
                        ? "forest criterion and region analysis agree: all components inessential"
                        : "DISAGREEMENT: Gamma is a forest but some component is flagged essential";
    return report;
}

namespace {

std::optional<int> first_adjacent_distinct_pair(const MonodromyCover& cover) {
    for (int i = 1; i < cover.sig().branch_count; ++i)
        if (!(cover.c_image(i) == cover.c_image(i + 1))) return i;
    return std::nullopt;
}

} // namespace

SimpleCertificate simple_certificate(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                                     std::size_t limit) {
    const Signature& sig = cover.sig();
    if (!is_simple_cover(cover) || cover.degree() < 3 || sig.branch_count < 2 ||
        (sig.genus == 0 && sig.branch_count == 3))
        throw Error(errc::hypotheses_unmet,
                    "simple certificate needs a simple cover, degree >= 3, at least two branch "
                    "points, and not the thrice-marked sphere");

    SimpleCertificate cert;
    // the base class usually has an adjacent pair of distinct colors already
    if (auto i = first_adjacent_distinct_pair(cover)) {
        cert.i = *i;
        cert.j = *i + 1;
        cert.gamma = gamma_graph(cover, cert.i, cert.j);
        cert.forest = is_forest(cert.gamma);
        return cert;
    }
    try {
        OrbitTable orbit = mcg_orbit(cover, gens, limit);
        for (size_t ci = 1; ci < orbit.classes.size(); ++ci) {
            const MonodromyCover& rep = orbit.classes[ci].canonical;
            if (auto i = first_adjacent_distinct_pair(rep)) {
                cert.transversal = orbit.transversal[ci];
                cert.transversal_word = orbit.transversal_words[ci];
                cert.i = *i;
                cert.j = *i + 1;
                cert.gamma = gamma_graph(rep, cert.i, cert.j);
                cert.forest = is_forest(cert.gamma);
                return cert;
            }
        }
    } catch (const Error&) {
        // exhausted the limit or an unusable generator set: fall through
    }
    cert.best_effort = true;
    return cert;
}

} // namespace bh
