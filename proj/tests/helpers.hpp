#pragma once

// Shared test utilities: cover builders, exhaustive enumeration of small
// covers, and independent oracles that deliberately avoid the library code
// paths they cross-check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "bh/cover.hpp"
#include "bh/perm.hpp"

namespace bhtest {

inline bh::MonodromyCover make_cover(int genus, int branch_count, int degree,
                                     std::vector<std::vector<int>> ab,
                                     std::vector<std::vector<int>> c) {
    bh::Signature sig{genus, branch_count};
    std::vector<bh::Perm> images;
    for (auto& im : ab) images.emplace_back(std::move(im));
    for (auto& im : c) images.emplace_back(std::move(im));
    return bh::MonodromyCover::validate(sig, degree, std::move(images));
}

// sphere cover from a list of c-image arrays
inline bh::MonodromyCover sphere_cover(int degree, std::vector<std::vector<int>> c) {
    return make_cover(0, static_cast<int>(c.size()), degree, {}, std::move(c));
}

inline bh::MonodromyCover cover_f5() {
    std::vector<std::vector<int>> c{{1, 0, 2}, {1, 0, 2}};
    for (int i = 0; i < 8; ++i) c.push_back({0, 2, 1});
    return sphere_cover(3, std::move(c));
}

inline bh::MonodromyCover hyperelliptic_cover() {
    std::vector<std::vector<int>> c(6, std::vector<int>{1, 0});
    return sphere_cover(2, std::move(c));
}

inline std::vector<std::vector<int>> all_perm_arrays(int n) {
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// --- local permutation arithmetic, independent of bh::Perm internals -------

inline std::vector<int> p_id(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

inline std::vector<int> p_mul(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
    return r;
}

inline std::vector<int> p_inv(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return r;
}

inline bool p_is_id(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

inline int p_cycle_count(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int count = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(p[j]);
        }
    }
    return count;
}

inline bool tuple_transitive(const std::vector<std::vector<int>>& perms, int n) {
    if (n == 1) return true;
    std::vector<int> parent = p_id(n);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); };
    for (const auto& p : perms)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(p[static_cast<size_t>(i)]);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

// ---------------------------------------------------------------------------

// Every valid cover of the given signature and degree, built by choosing the
// images of a free basis and solving the relation for the last c-image.
// Word convention matches the library: letters act on sheets left to right.
inline void for_each_valid_cover(int genus, int branch_count, int degree,
                                 const std::function<void(const bh::MonodromyCover&)>& fn) {
    const auto perms = all_perm_arrays(degree);
    const int free_slots = 2 * genus + std::max(branch_count - 1, 0);
    std::vector<size_t> odo(static_cast<size_t>(free_slots), 0);

    auto run = [&](const std::vector<size_t>& pick) {
        std::vector<std::vector<int>> chosen;
        chosen.reserve(pick.size());
        for (size_t idx : pick) chosen.push_back(perms[idx]);

        // accumulated permutation of the relator prefix (letters applied
        // left to right: acc = P_letter * acc)
        std::vector<int> acc = p_id(degree);
        for (int h = 0; h < genus; ++h) {
            const auto& a = chosen[static_cast<size_t>(2 * h)];
            const auto& b = chosen[static_cast<size_t>(2 * h + 1)];
            acc = p_mul(a, acc);
            acc = p_mul(b, acc);
            acc = p_mul(p_inv(a), acc);
            acc = p_mul(p_inv(b), acc);
        }
        std::vector<std::vector<int>> c_images;
        for (int i = 0; i < branch_count - 1; ++i) {
            const auto& ci = chosen[static_cast<size_t>(2 * genus + i)];
            c_images.push_back(ci);
            acc = p_mul(ci, acc);
        }
        if (branch_count >= 1)
            c_images.push_back(p_inv(acc)); // forced by the relation
        else if (!p_is_id(acc))
            return;

        for (const auto& ci : c_images)
            if (p_is_id(ci)) return; // branch condition
        std::vector<std::vector<int>> everything;
        for (int h = 0; h < genus; ++h) {
            everything.push_back(chosen[static_cast<size_t>(2 * h)]);
            everything.push_back(chosen[static_cast<size_t>(2 * h + 1)]);
        }
        for (const auto& ci : c_images) everything.push_back(ci);
        if (!tuple_transitive(everything, degree)) return;

        std::vector<std::vector<int>> ab(everything.begin(), everything.begin() + 2 * genus);
        fn(make_cover(genus, branch_count, degree, std::move(ab), std::move(c_images)));
    };

    if (free_slots == 0) {
        run(odo);
        return;
    }
    while (true) {
        run(odo);
        int pos = free_slots - 1;
        while (pos >= 0) {
            if (++odo[static_cast<size_t>(pos)] < perms.size()) break;
            odo[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

// independent Euler characteristic: cover of the wedge on a free basis
// (all a,b plus c_1..c_{k-1}), chi = V - E of the covering graph, then fill
// one point per puncture preimage
inline int schreier_chi_oracle(const bh::MonodromyCover& cover) {
    int n = cover.degree();
    int g = cover.sig().genus, k = cover.sig().branch_count;
    if (k == 0) return n * (2 - 2 * g); // closed base: multiplicativity
    int rank = 2 * g + k - 1;
    long vertices = n;
    long edges = 0;
    for (int r = 0; r < rank; ++r) edges += n; // one lifted edge per sheet per basis loop
    long chi_graph = vertices - edges;
    long filled = 0;
    for (int i = 1; i <= k; ++i) filled += p_cycle_count(cover.c_image(i).images());
    return static_cast<int>(chi_graph + filled);
}

// relabeling-class key computed from scratch: minimum over all conjugations
// of the concatenated image arrays
inline std::vector<int> brute_class_key(const std::vector<std::vector<int>>& images, int n) {
    auto flatten = [](const std::vector<std::vector<int>>& ims) {
        std::vector<int> key;
        for (const auto& im : ims) key.insert(key.end(), im.begin(), im.end());
        return key;
    };
    std::vector<int> r = p_id(n);
    std::vector<int> best;
    bool have = false;
    do {
        std::vector<std::vector<int>> conj;
        for (const auto& im : images) {
            std::vector<int> q(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) q[static_cast<size_t>(r[static_cast<size_t>(i)])] = r[static_cast<size_t>(im[static_cast<size_t>(i)])];
            conj.push_back(std::move(q));
        }
        std::vector<int> key = flatten(conj);
        if (!have || key < best) {
            best = std::move(key);
            have = true;
        }
    } while (std::next_permutation(r.begin(), r.end()));
    return best;
}

} // namespace bhtest
