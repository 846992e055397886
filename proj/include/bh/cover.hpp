#pragma once

#include <span>
#include <vector>

#include "bh/perm.hpp"
#include "bh/presentation.hpp"

namespace bh {

// Fiber over branch point x_i: the cycles of rho(c_i). Cycle lengths are the
// ramification numbers; fixed points are unramified preimages.
struct FiberData {
    int branch_index = 0; // 1-based
    CycleSet fiber_cycles;
    std::vector<int> ramification; // aligned with fiber_cycles.cycles
    int preimage_count = 0;
};

// A branched cover of the closed genus-g surface with k branch points,
// encoded by the monodromy images of the standard generators.
//
// Words act on sheets on the right: evaluating a word applies its letters
// left to right, so eval(uv) sends a sheet along u first, then v. The
// defining relation, transitivity and the branch condition are enforced at
// construction; instances are immutable afterwards.
class MonodromyCover {
public:
    static MonodromyCover validate(Signature sig, int degree, std::vector<Perm> images);

    const Signature& sig() const { return sig_; }
    int degree() const { return degree_; }
    const std::vector<Perm>& images() const { return images_; }
    const Perm& image(int gen_id) const { return images_[static_cast<size_t>(gen_id)]; }
    const Perm& c_image(int i) const { return image(gen_c(sig_, i)); } // 1-based

    Perm eval(const GroupWord& w) const;

    const FiberData& fiber(int i) const; // 1-based branch index

    friend bool operator==(const MonodromyCover&, const MonodromyCover&);

private:
    MonodromyCover(Signature sig, int degree, std::vector<Perm> images);

    Signature sig_;
    int degree_ = 1;
    std::vector<Perm> images_;
    std::vector<FiberData> fibers_; // precomputed at validation; WCL loops read these heavily
};

// chi of the total space: n(2-2g) - sum_i (n - l_i)
int euler_characteristic_total(const MonodromyCover& cover);
int total_genus(const MonodromyCover& cover);

// deck group acts transitively on fibers <=> centralizer has order n
bool is_regular(const MonodromyCover& cover);

// no rho(c_i) fixes a sheet (no unramified preimage of a branch point)
bool has_property_NU(const MonodromyCover& cover);

// within each fiber all ramification numbers agree
bool has_equal_ramification(const MonodromyCover& cover);

// every rho(c_i) is a transposition
bool is_simple_cover(const MonodromyCover& cover);

} // namespace bh
