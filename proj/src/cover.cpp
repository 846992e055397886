#include "bh/cover.hpp"

#include <algorithm>

namespace bh {

MonodromyCover::MonodromyCover(Signature sig, int degree, std::vector<Perm> images)
    : sig_(sig), degree_(degree), images_(std::move(images)) {
    fibers_.reserve(static_cast<size_t>(sig_.branch_count));
    for (int i = 1; i <= sig_.branch_count; ++i) {
        FiberData fd;
        fd.branch_index = i;
        fd.fiber_cycles = cycles(c_image(i));
        for (const auto& cyc : fd.fiber_cycles.cycles) fd.ramification.push_back(static_cast<int>(cyc.size()));
        fd.preimage_count = static_cast<int>(fd.fiber_cycles.cycles.size());
        fibers_.push_back(std::move(fd));
    }
}

MonodromyCover MonodromyCover::validate(Signature sig, int degree, std::vector<Perm> images) {
    std::vector<std::string> violations;
    errc first = errc::bad_input;
    auto add = [&](errc code, const std::string& msg) {
        if (violations.empty()) first = code;
        violations.push_back(msg);
    };

    if (sig.genus < 0 || sig.branch_count < 0) add(errc::bad_input, "negative genus or branch count");
    if (degree < 1) add(errc::bad_input, "degree must be at least 1");
    if (static_cast<int>(images.size()) != sig.num_generators())
        add(errc::degree_mismatch,
            "expected " + std::to_string(sig.num_generators()) + " generator images, got " +
                std::to_string(images.size()));
    if (!violations.empty()) throw ValidationError(first, std::move(violations));

    for (int t = 0; t < sig.num_generators(); ++t)
        if (images[static_cast<size_t>(t)].degree() != degree)
            add(errc::degree_mismatch,
                "image of " + generator_name(sig, t) + " has degree " +
                    std::to_string(images[static_cast<size_t>(t)].degree()) + ", cover has degree " +
                    std::to_string(degree));
    if (!violations.empty()) throw ValidationError(first, std::move(violations));

    // relation: the relator word must act trivially on every sheet
    Perm rel = Perm::identity(degree);
    for (int x : relator(sig).letters) {
        const Perm& g = images[static_cast<size_t>(std::abs(x) - 1)];
        rel = (x > 0 ? g : g.inverse()) * rel;
    }
    if (!rel.is_identity())
        add(errc::relation_violated, "surface relation does not evaluate to the identity");

    if (!is_transitive(images, degree))
        add(errc::not_transitive, "generator images do not act transitively (total space disconnected)");

    for (int i = 1; i <= sig.branch_count; ++i)
        if (images[static_cast<size_t>(gen_c(sig, i))].is_identity())
            add(errc::trivial_branch_point,
                "branch point " + std::to_string(i) + " has identity monodromy (not a branch point)");

    if (!violations.empty()) throw ValidationError(first, std::move(violations));
    return MonodromyCover(sig, degree, std::move(images));
}

Perm MonodromyCover::eval(const GroupWord& w) const {
    Perm p = Perm::identity(degree_);
    for (int x : w.letters) {
        const Perm& g = images_[static_cast<size_t>(std::abs(x) - 1)];
        p = (x > 0 ? g : g.inverse()) * p; // leftmost letter acts first
    }
    return p;
}

const FiberData& MonodromyCover::fiber(int i) const {
    if (i < 1 || i > sig_.branch_count) throw Error(errc::index_out_of_range, "branch index");
    return fibers_[static_cast<size_t>(i - 1)];
}

bool operator==(const MonodromyCover& x, const MonodromyCover& y) {
    return x.sig_ == y.sig_ && x.degree_ == y.degree_ && x.images_ == y.images_;
}

int euler_characteristic_total(const MonodromyCover& cover) {
    int n = cover.degree();
    int chi = n * (2 - 2 * cover.sig().genus);
    for (int i = 1; i <= cover.sig().branch_count; ++i) chi -= n - cover.fiber(i).preimage_count;
    return chi;
}

int total_genus(const MonodromyCover& cover) {
    int chi = euler_characteristic_total(cover);
    if (chi % 2 != 0) throw Error(errc::bad_input, "odd total-space Euler characteristic");
    return (2 - chi) / 2;
}

bool is_regular(const MonodromyCover& cover) {
    return centralizer_order(cover.images(), cover.degree()) == cover.degree();
}

bool has_property_NU(const MonodromyCover& cover) {
    for (int i = 1; i <= cover.sig().branch_count; ++i) {
        const Perm& p = cover.c_image(i);
        for (int s = 0; s < cover.degree(); ++s)
            if (p(s) == s) return false;
    }
    return true;
}

bool has_equal_ramification(const MonodromyCover& cover) {
    for (int i = 1; i <= cover.sig().branch_count; ++i) {
        const auto& ram = cover.fiber(i).ramification;
        if (!std::all_of(ram.begin(), ram.end(), [&](int m) { return m == ram.front(); })) return false;
    }
    return true;
}

bool is_simple_cover(const MonodromyCover& cover) {
    for (int i = 1; i <= cover.sig().branch_count; ++i) {
        const auto& ram = cover.fiber(i).ramification;
        int twos = 0;
        for (int m : ram) {
            if (m == 2)
                ++twos;
            else if (m != 1)
                return false;
        }
        if (twos != 1) return false;
    }
    return true;
}

} // namespace bh
