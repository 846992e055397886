#include "bh/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace bh {

namespace {

std::vector<int> flatten_images(const std::vector<Perm>& images) {
    std::vector<int> key;
    for (const Perm& p : images) key.insert(key.end(), p.images().begin(), p.images().end());
    return key;
}

// key of the cover conjugated by r, compared lazily against `best`;
// returns <0/0/>0 like a three-way comparison, writing the key when smaller
int compare_conjugated(const std::vector<Perm>& images, const std::vector<int>& r,
                       const std::vector<int>& rinv, const std::vector<int>& best,
                       std::vector<int>& out) {
    size_t pos = 0;
    int verdict = 0;
    out.clear();
    for (const Perm& p : images) {
        int n = p.degree();
        for (int j = 0; j < n; ++j, ++pos) {
            int v = r[static_cast<size_t>(p(rinv[static_cast<size_t>(j)]))];
            if (verdict == 0) {
                if (v < best[pos])
                    verdict = -1;
                else if (v > best[pos])
                    return 1;
            }
            out.push_back(v);
        }
    }
    return verdict;
}

} // namespace

std::vector<int> canonical_key(const MonodromyCover& cover) {
    int n = cover.degree();
    const auto& images = cover.images();
    std::vector<int> best = flatten_images(images);
    std::vector<int> r(static_cast<size_t>(n)), rinv(static_cast<size_t>(n)), candidate;
    std::iota(r.begin(), r.end(), 0);
    do {
        for (int i = 0; i < n; ++i) rinv[static_cast<size_t>(r[static_cast<size_t>(i)])] = i;
        if (compare_conjugated(images, r, rinv, best, candidate) < 0) best = candidate;
    } while (std::next_permutation(r.begin(), r.end()));
    return best;
}

CoverClass canonicalize(const MonodromyCover& cover) {
    int n = cover.degree();
    const auto& images = cover.images();
    std::vector<int> best = flatten_images(images);
    std::vector<int> best_r(static_cast<size_t>(n));
    std::iota(best_r.begin(), best_r.end(), 0);

    std::vector<int> r = best_r, rinv(static_cast<size_t>(n)), candidate;
    do {
        for (int i = 0; i < n; ++i) rinv[static_cast<size_t>(r[static_cast<size_t>(i)])] = i;
        if (compare_conjugated(images, r, rinv, best, candidate) < 0) {
            best = candidate;
            best_r = r;
        }
    } while (std::next_permutation(r.begin(), r.end()));

    Perm witness{std::vector<int>(best_r)};
    std::vector<Perm> conj;
    conj.reserve(images.size());
    for (const Perm& p : images) conj.push_back(p.conjugate_by(witness));
    return CoverClass{MonodromyCover::validate(cover.sig(), n, std::move(conj)), witness};
}

MonodromyCover act(const MonodromyCover& cover, const Automorphism& f) {
    if (!(f.sig == cover.sig()))
        throw Error(errc::alphabet_mismatch, "automorphism signature does not match the cover");
    if (!relator_preserved(f, cover.sig()))
        throw Error(errc::relator_not_preserved, "automorphism '" + f.label + "' does not preserve the relator");
    std::vector<Perm> images;
    images.reserve(f.sub.size());
    for (const GroupWord& w : f.sub) images.push_back(cover.eval(w));
    return MonodromyCover::validate(cover.sig(), cover.degree(), std::move(images));
}

namespace {

struct Expansion {
    std::vector<int> key;
    std::optional<CoverClass> cls;
};

// expand one (class, generator) pair; act() revalidates, canonicalize quotients
Expansion expand(const MonodromyCover& rep, const Automorphism& gen) {
    Expansion e;
    e.cls = canonicalize(act(rep, gen));
    e.key = flatten_images(e.cls->canonical.images());
    return e;
}

} // namespace

OrbitTable mcg_orbit(const MonodromyCover& base, const std::vector<Automorphism>& gens,
                     std::size_t limit, int threads) {
    check_generator_set(gens, base.sig());

    OrbitTable table;
    std::map<std::vector<int>, size_t> index_of;

    CoverClass base_class = canonicalize(base);
    index_of[flatten_images(base_class.canonical.images())] = 0;
    table.classes.push_back(std::move(base_class));
    table.transversal.emplace_back();
    table.transversal_words.emplace_back();

    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        // expand the whole frontier, then insert in deterministic order
        std::vector<Expansion> results(frontier.size() * gens.size());
        auto work = [&](size_t lo, size_t hi) {
            for (size_t idx = lo; idx < hi; ++idx) {
                size_t ci = frontier[idx / gens.size()];
                size_t gi = idx % gens.size();
                results[idx] = expand(table.classes[ci].canonical, gens[gi]);
            }
        };
        size_t jobs = results.size();
        if (threads > 1 && jobs > 1) {
            std::vector<std::thread> pool;
            size_t nt = std::min<size_t>(static_cast<size_t>(threads), jobs);
            size_t chunk = (jobs + nt - 1) / nt;
            for (size_t t = 0; t < nt; ++t)
                pool.emplace_back(work, t * chunk, std::min(jobs, (t + 1) * chunk));
            for (auto& th : pool) th.join();
        } else {
            work(0, jobs);
        }

        std::vector<size_t> next;
        for (size_t idx = 0; idx < jobs; ++idx) {
            Expansion& e = results[idx];
            auto [it, inserted] = index_of.try_emplace(e.key, table.classes.size());
            if (!inserted) continue;
            if (table.classes.size() >= limit)
                throw Error(errc::orbit_limit_exceeded,
                            "orbit exceeds the class limit of " + std::to_string(limit));
            size_t parent = frontier[idx / gens.size()];
            size_t gi = idx % gens.size();
            next.push_back(table.classes.size());
            table.classes.push_back(std::move(*e.cls));
            std::vector<int> word = table.transversal[parent];
            word.push_back(static_cast<int>(gi));
            std::string word_str = table.transversal_words[parent];
            if (!word_str.empty()) word_str += " ";
            word_str += gens[gi].label;
            table.transversal.push_back(std::move(word));
            table.transversal_words.push_back(std::move(word_str));
        }
        frontier = std::move(next);
    }
    return table;
}

bool in_liftable_subgroup(const MonodromyCover& cover, const Automorphism& f) {
    return canonical_key(act(cover, f)) == canonical_key(cover);
}

} // namespace bh
