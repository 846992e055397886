#include "bh/lifting.hpp"

#include <algorithm>
#include <thread>

#include "bh/union_find.hpp"

namespace bh {

StandardCurve standard_curve(const Signature& sig, int m) {
    if (sig.genus != 0) throw Error(errc::unsupported_signature, "standard curves live on the genus-0 base");
    if (m < 2 || m > sig.branch_count - 2)
        throw Error(errc::hypotheses_unmet,
                    "standard curve needs 2 <= m <= k-2 to be essential on the marked sphere");
    StandardCurve sc;
    sc.m = m;
    for (int i = 1; i <= m; ++i) sc.word.letters.push_back(gen_c(sig, i) + 1);
    return sc;
}

CutPresentation range_cut(const Signature& sig, int i, int j) {
    if (i < 1 || j > sig.branch_count || i > j) throw Error(errc::index_out_of_range, "branch range");
    int enclosed = j - i + 1;
    if (enclosed < 2)
        throw Error(errc::hypotheses_unmet, "a curve around fewer than two branch points is inessential");
    if (sig.genus == 0 && sig.branch_count - enclosed < 2)
        throw Error(errc::hypotheses_unmet,
                    "the complementary side needs two marked points on a genus-0 base");
    CutPresentation cut;
    cut.sig = sig;
    cut.chi_a = 1;                      // disk holding the enclosed branch points
    cut.chi_b = 1 - 2 * sig.genus;      // complement: genus-g piece with one boundary
    for (int t = i; t <= j; ++t) cut.side_a.push_back(gen_c(sig, t));
    for (int t = 0; t < sig.num_generators(); ++t)
        if (std::find(cut.side_a.begin(), cut.side_a.end(), t) == cut.side_a.end())
            cut.side_b.push_back(t);
    for (int t = i; t <= j; ++t) cut.boundary_word.letters.push_back(gen_c(sig, t) + 1);
    cut.name = "c" + std::to_string(i) + "..c" + std::to_string(j);
    return cut;
}

CutPresentation standard_cut(const Signature& sig, int m) {
    CutPresentation cut = range_cut(sig, 1, m);
    cut.name = "gamma_" + std::to_string(m);
    return cut;
}

bool LiftedMulticurve::all_inessential() const {
    for (const auto& c : components)
        if (!c.essential.has_value() || *c.essential) return false;
    return !components.empty();
}

namespace {

void check_cut(const MonodromyCover& cover, const CutPresentation& cut) {
    if (!(cut.sig == cover.sig())) throw Error(errc::malformed_cut, "cut signature does not match the cover");
    std::vector<char> seen(static_cast<size_t>(cut.sig.num_generators()), 0);
    for (int t : cut.side_a) {
        if (t < 0 || t >= cut.sig.num_generators() || seen[static_cast<size_t>(t)])
            throw Error(errc::malformed_cut, "side A is not a set of generator ids");
        seen[static_cast<size_t>(t)] = 1;
    }
    for (int t : cut.side_b) {
        if (t < 0 || t >= cut.sig.num_generators() || seen[static_cast<size_t>(t)])
            throw Error(errc::malformed_cut, "sides overlap or repeat a generator");
        seen[static_cast<size_t>(t)] = 2;
    }
    for (char s : seen)
        if (!s) throw Error(errc::malformed_cut, "sides do not cover the generating set");
    if (cut.chi_a + cut.chi_b != 2 - 2 * cut.sig.genus)
        throw Error(errc::malformed_cut, "side Euler characteristics do not sum to chi of the base");
    for (int x : cut.boundary_word.letters) {
        int id = std::abs(x) - 1;
        if (std::find(cut.side_a.begin(), cut.side_a.end(), id) == cut.side_a.end())
            throw Error(errc::malformed_cut,
                        "boundary word leaves the side-A subgroup's permutation image span");
    }
}

std::vector<Perm> side_images(const MonodromyCover& cover, const std::vector<int>& side) {
    std::vector<Perm> out;
    out.reserve(side.size());
    for (int t : side) out.push_back(cover.image(t));
    return out;
}

// chi of the region covering one side over the orbit O, by Riemann-Hurwitz:
// |O| * chi_side  minus  (|O| - l_j(O)) for each branch point on that side
int region_chi(const MonodromyCover& cover, const std::vector<int>& side, int chi_side,
               const std::vector<int>& orbit) {
    int chi = static_cast<int>(orbit.size()) * chi_side;
    for (int t : side) {
        if (!is_branch_generator(cover.sig(), t)) continue;
        const Perm& p = cover.image(t);
        std::vector<char> visited(orbit.size(), 0);
        int cycles_in_orbit = 0;
        for (size_t s = 0; s < orbit.size(); ++s) {
            if (visited[s]) continue;
            ++cycles_in_orbit;
            int x = orbit[s];
            do {
                auto it = std::lower_bound(orbit.begin(), orbit.end(), x);
                visited[static_cast<size_t>(it - orbit.begin())] = 1;
                x = p(x);
            } while (x != orbit[s]);
        }
        chi -= static_cast<int>(orbit.size()) - cycles_in_orbit;
    }
    return chi;
}

} // namespace

LiftedMulticurve lift_components(const MonodromyCover& cover, const CutPresentation& cut) {
    check_cut(cover, cut);
    Perm boundary = cover.eval(cut.boundary_word);
    LiftedMulticurve mc;
    for (const auto& cyc : cycles(boundary).cycles) {
        LiftedComponent comp;
        comp.sheets = cyc;
        comp.degree = static_cast<int>(cyc.size());
        mc.components.push_back(std::move(comp));
    }
    return mc;
}

RegionGraph region_graph(const MonodromyCover& cover, const CutPresentation& cut) {
    check_cut(cover, cut);
    int n = cover.degree();
    RegionGraph rg;

    std::vector<Perm> a_images = side_images(cover, cut.side_a);
    std::vector<Perm> b_images = side_images(cover, cut.side_b);
    auto a_orbits = orbits(a_images, n);
    auto b_orbits = orbits(b_images, n);

    std::vector<int> a_node_of(static_cast<size_t>(n)), b_node_of(static_cast<size_t>(n));
    for (size_t o = 0; o < a_orbits.size(); ++o) {
        for (int s : a_orbits[o]) a_node_of[static_cast<size_t>(s)] = static_cast<int>(o);
        rg.nodes.push_back({'A', a_orbits[o], region_chi(cover, cut.side_a, cut.chi_a, a_orbits[o])});
    }
    int b_offset = static_cast<int>(a_orbits.size());
    for (size_t o = 0; o < b_orbits.size(); ++o) {
        for (int s : b_orbits[o]) b_node_of[static_cast<size_t>(s)] = b_offset + static_cast<int>(o);
        rg.nodes.push_back({'B', b_orbits[o], region_chi(cover, cut.side_b, cut.chi_b, b_orbits[o])});
    }

    LiftedMulticurve mc = lift_components(cover, cut);
    for (size_t ci = 0; ci < mc.components.size(); ++ci) {
        const auto& sheets = mc.components[ci].sheets;
        int a_node = a_node_of[static_cast<size_t>(sheets.front())];
        int b_node = b_node_of[static_cast<size_t>(sheets.front())];
        for (int s : sheets)
            if (a_node_of[static_cast<size_t>(s)] != a_node || b_node_of[static_cast<size_t>(s)] != b_node)
                throw Error(errc::malformed_cut,
                            "a lifted component straddles two regions; boundary word is inconsistent "
                            "with the declared sides");
        rg.edges.push_back({static_cast<int>(ci), a_node, b_node});
    }
    return rg;
}

LiftedMulticurve essential_flags(const MonodromyCover& cover, const CutPresentation& cut) {
    RegionGraph rg = region_graph(cover, cut);
    LiftedMulticurve mc = lift_components(cover, cut);

    for (size_t e = 0; e < rg.edges.size(); ++e) {
        UnionFind uf(static_cast<int>(rg.nodes.size()));
        for (size_t f = 0; f < rg.edges.size(); ++f)
            if (f != e) uf.unite(rg.edges[f].a_node, rg.edges[f].b_node);
        if (uf.same(rg.edges[e].a_node, rg.edges[e].b_node)) {
            mc.components[e].essential = true; // nonseparating upstairs
            continue;
        }
        int chi_a_side = 0, chi_b_side = 0;
        for (size_t v = 0; v < rg.nodes.size(); ++v) {
            if (uf.same(static_cast<int>(v), rg.edges[e].a_node))
                chi_a_side += rg.nodes[v].chi;
            else if (uf.same(static_cast<int>(v), rg.edges[e].b_node))
                chi_b_side += rg.nodes[v].chi;
        }
        // a side assembling to chi = 1 is a disk bounded by this component
        mc.components[e].essential = !(chi_a_side == 1 || chi_b_side == 1);
    }
    return mc;
}

WclResult wcl_decision(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                       std::size_t limit, int threads) {
    if (cover.sig().genus != 0)
        throw Error(errc::unsupported_signature,
                    "built-in curve catalog covers genus 0 only; supply cut presentations");
    if (cover.sig().branch_count < 4)
        throw Error(errc::hypotheses_unmet,
                    "no essential curves exist on a sphere with fewer than four marked points");
    std::vector<CutPresentation> cuts;
    for (int m = 2; m <= cover.sig().branch_count / 2; ++m) cuts.push_back(standard_cut(cover.sig(), m));
    return wcl_decision(cover, gens, cuts, limit, threads);
}

WclResult wcl_decision(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                       const std::vector<CutPresentation>& cuts, std::size_t limit, int threads) {
    if (cuts.empty()) throw Error(errc::bad_input, "empty cut catalog");
    OrbitTable orbit = mcg_orbit(cover, gens, limit, threads);

    WclResult result;
    result.classes_searched = orbit.classes.size();

    // deterministic scan order: classes in BFS discovery order, cuts inner;
    // the first all-inessential pair is the certificate
    size_t njobs = orbit.classes.size();
    std::vector<std::pair<size_t, size_t>> found; // (class index, cut index)
    auto scan_class = [&](size_t ci) -> std::optional<std::pair<size_t, size_t>> {
        for (size_t mi = 0; mi < cuts.size(); ++mi) {
            LiftedMulticurve flags = essential_flags(orbit.classes[ci].canonical, cuts[mi]);
            if (flags.all_inessential()) return std::make_pair(ci, mi);
        }
        return std::nullopt;
    };

    std::optional<std::pair<size_t, size_t>> hit;
    if (threads > 1 && njobs > 1) {
        std::vector<std::optional<std::pair<size_t, size_t>>> local(static_cast<size_t>(threads));
        std::vector<std::thread> pool;
        size_t nt = std::min<size_t>(static_cast<size_t>(threads), njobs);
        size_t chunk = (njobs + nt - 1) / nt;
        for (size_t t = 0; t < nt; ++t) {
            pool.emplace_back([&, t]() {
                for (size_t ci = t * chunk; ci < std::min(njobs, (t + 1) * chunk); ++ci) {
                    auto r = scan_class(ci);
                    if (r) {
                        local[t] = r;
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& r : local)
            if (r && (!hit || *r < *hit)) hit = r;
    } else {
        for (size_t ci = 0; ci < njobs && !hit; ++ci) hit = scan_class(ci);
    }

    if (!hit) {
        result.holds = true;
        return result;
    }
    auto [ci, mi] = *hit;
    WclCertificate cert;
    cert.transversal = orbit.transversal[ci];
    cert.transversal_word = orbit.transversal_words[ci];
    int m = 0;
    for (int t : cuts[mi].side_a)
        if (is_branch_generator(cover.sig(), t)) ++m;
    cert.m = m;
    cert.components = essential_flags(orbit.classes[ci].canonical, cuts[mi]);
    result.holds = false;
    result.certificate = std::move(cert);
    return result;
}

const char* to_string(BHStatus s) {
    switch (s) {
        case BHStatus::HOLDS: return "BH_HOLDS";
        case BHStatus::FAILS: return "BH_FAILS";
        case BHStatus::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

Verdict bh_verdict(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                   std::size_t limit, int threads) {
    if (euler_characteristic_total(cover) >= 0)
        throw Error(errc::chi_nonnegative,
                    "the implemented criteria require a total space with negative Euler characteristic");
    Verdict v;
    const Signature& sig = cover.sig();

    if (has_property_NU(cover)) {
        v.status = BHStatus::HOLDS;
        v.rule = "NU";
        v.note = "no branch point has an unramified preimage";
        std::vector<FiberData> fibers;
        for (int i = 1; i <= sig.branch_count; ++i) fibers.push_back(cover.fiber(i));
        v.nu_certificate = std::move(fibers);
        return v;
    }
    if (is_regular(cover)) {
        v.status = BHStatus::HOLDS;
        v.rule = "regular";
        v.note = "the deck group acts transitively on fibers";
        return v;
    }

    bool wcl_available = sig.genus == 0 && sig.branch_count >= 4 && !gens.empty();

    if (is_simple_cover(cover) && cover.degree() >= 3 && sig.branch_count >= 2 &&
        !(sig.genus == 0 && sig.branch_count == 3)) {
        v.status = BHStatus::FAILS;
        v.rule = "simple-cover";
        v.note = "simple cover of degree >= 3 with at least two branch points";
        v.simple_cert = simple_certificate(cover, gens, limit);
        if (wcl_available) {
            WclResult w = wcl_decision(cover, gens, limit, threads);
            v.wcl_holds = w.holds;
            if (!w.holds) v.wcl_certificate = std::move(w.certificate);
        }
        return v;
    }

    if (wcl_available) {
        WclResult w = wcl_decision(cover, gens, limit, threads);
        v.wcl_holds = w.holds;
        if (!w.holds) {
            v.status = BHStatus::FAILS;
            v.rule = "WCL";
            v.note = "an essential curve lifts to an all-inessential multicurve";
            v.wcl_certificate = std::move(w.certificate);
            return v;
        }
        v.status = BHStatus::INCONCLUSIVE;
        v.rule = "none";
        v.note = "weak curve lifting holds, which is necessary but not known sufficient";
        return v;
    }

    v.status = BHStatus::INCONCLUSIVE;
    v.rule = "none";
    v.note = sig.genus == 0 ? "no essential curves to test on this base"
                            : "positive-genus base: no automorphism set / cut catalog available";
    return v;
}

bool verify_wcl_certificate(const MonodromyCover& base, const std::vector<Automorphism>& gens,
                            const WclCertificate& cert) {
    MonodromyCover moved = base;
    for (int gi : cert.transversal) {
        if (gi < 0 || gi >= static_cast<int>(gens.size()))
            throw Error(errc::bad_input, "certificate references a generator outside the supplied set");
        moved = act(moved, gens[static_cast<size_t>(gi)]);
    }
    LiftedMulticurve flags = essential_flags(moved, standard_cut(base.sig(), cert.m));
    return flags.all_inessential() && flags.components.size() == cert.components.components.size();
}

} // namespace bh
