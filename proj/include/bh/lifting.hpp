#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bh/coloring.hpp"
#include "bh/cover.hpp"
#include "bh/orbit.hpp"

namespace bh {

// The boundary of a disk containing branch points x_1..x_m; essential on a
// k-marked sphere when 2 <= m <= k-2.
struct StandardCurve {
    int m = 0;
    GroupWord word; // c_1 ... c_m
};

StandardCurve standard_curve(const Signature& sig, int m);

// A separating simple closed curve presented by the two complementary
// subsurfaces: generator ids on each side, the Euler characteristic of each
// closed-up side, and the boundary word (a word in side A's generators).
struct CutPresentation {
    Signature sig;
    std::vector<int> side_a; // generator ids
    int chi_a = 0;
    std::vector<int> side_b;
    int chi_b = 0;
    GroupWord boundary_word;
    std::string name;
};

// Curve around the contiguous branch points x_i..x_j (1-based, i <= j):
// side A is a disk holding those branch points, side B everything else.
CutPresentation range_cut(const Signature& sig, int i, int j);
// standard curve [1..m]
CutPresentation standard_cut(const Signature& sig, int m);

// One component of the preimage multicurve: a cycle of rho(boundary word).
struct LiftedComponent {
    std::vector<int> sheets; // the cycle, least sheet first
    int degree = 0;
    std::optional<bool> essential;
};

struct LiftedMulticurve {
    std::vector<LiftedComponent> components; // ordered by least sheet
    bool all_inessential() const;
};

LiftedMulticurve lift_components(const MonodromyCover& cover, const CutPresentation& cut);

// Complementary regions of the lifted multicurve: one node per orbit of each
// side's generator images, chi per region by Riemann-Hurwitz; one edge per
// component joining its A-region and B-region.
struct RegionGraph {
    struct Node {
        char side;               // 'A' or 'B'
        std::vector<int> sheets; // the orbit
        int chi;
    };
    struct Edge {
        int component; // index into the multicurve
        int a_node;
        int b_node;
    };
    std::vector<Node> nodes; // A-nodes first, then B-nodes
    std::vector<Edge> edges;
};

RegionGraph region_graph(const MonodromyCover& cover, const CutPresentation& cut);

// A component is inessential iff cutting its edge splits the region graph
// and one side assembles to chi = 1 (a disk); nonseparating components are
// essential.
LiftedMulticurve essential_flags(const MonodromyCover& cover, const CutPresentation& cut);

struct WclCertificate {
    std::vector<int> transversal;
    std::string transversal_word;
    int m = 0;
    LiftedMulticurve components;
};

struct WclResult {
    bool holds = false;
    std::optional<WclCertificate> certificate;
    std::size_t classes_searched = 0;
};

// Decision procedure for the weak curve lifting property over the standard
// curve catalog m = 2..k/2, moved across the whole orbit by the pullback
// trick. Built-in support is genus 0 with k >= 4; positive genus requires a
// caller-supplied automorphism set and cut catalog (second overload).
WclResult wcl_decision(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                       std::size_t limit, int threads = 1);
WclResult wcl_decision(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                       const std::vector<CutPresentation>& cuts, std::size_t limit,
                       int threads = 1);

enum class BHStatus { HOLDS, FAILS, INCONCLUSIVE };

const char* to_string(BHStatus s);

struct Verdict {
    BHStatus status = BHStatus::INCONCLUSIVE;
    std::string rule; // "NU", "regular", "simple-cover", "WCL", "none"
    std::string note;
    std::optional<std::vector<FiberData>> nu_certificate;
    std::optional<SimpleCertificate> simple_cert;
    std::optional<WclCertificate> wcl_certificate;
    std::optional<bool> wcl_holds; // set when the WCL search ran
};

// Rule precedence: NU => holds; regular => holds; simple (n>=3, k>=2, not the
// thrice-marked sphere) => fails; WCL failure => fails; otherwise
// inconclusive. Requires chi(total space) < 0.
Verdict bh_verdict(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                   std::size_t limit, int threads = 1);

// Recompute the certificate's lift and confirm every component is
// inessential.
bool verify_wcl_certificate(const MonodromyCover& base, const std::vector<Automorphism>& gens,
                            const WclCertificate& cert);

} // namespace bh
