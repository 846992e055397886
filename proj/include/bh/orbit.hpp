#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bh/cover.hpp"

namespace bh {

// A cover up to relabeling of sheets: the lexicographically least
// concatenation of generator-image arrays over all relabelings, together
// with the relabeling that realizes it from the input representative.
struct CoverClass {
    MonodromyCover canonical;
    Perm witness; // conjugating every input image by witness yields canonical
};

CoverClass canonicalize(const MonodromyCover& cover);

// Flattened canonical key (all image arrays concatenated); total order on
// relabeling classes.
std::vector<int> canonical_key(const MonodromyCover& cover);

// The right action of a mapping class on covers: each generator image is
// replaced by the evaluation of its substituted word. Result is validated.
MonodromyCover act(const MonodromyCover& cover, const Automorphism& f);

// Orbit of a relabeling class under a generator set, with a BFS transversal.
struct OrbitTable {
    std::vector<CoverClass> classes;                 // discovery (BFS) order; base first
    std::vector<std::vector<int>> transversal;       // per class: indices into the generator list
    std::vector<std::string> transversal_words;      // same, rendered with labels, space-joined
};

// BFS over canonical classes; deterministic given generator order; parallel
// runs produce byte-identical tables. Throws orbit_limit_exceeded when more
// than `limit` classes appear.
OrbitTable mcg_orbit(const MonodromyCover& base, const std::vector<Automorphism>& gens,
                     std::size_t limit, int threads = 1);

// f stabilizes the relabeling class of the cover
bool in_liftable_subgroup(const MonodromyCover& cover, const Automorphism& f);

} // namespace bh
