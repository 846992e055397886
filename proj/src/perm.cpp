#include "bh/perm.hpp"

#include <algorithm>
#include <numeric>

#include "bh/union_find.hpp"

namespace bh {

const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_input: return "bad_input";
        case errc::degree_mismatch: return "degree_mismatch";
        case errc::relation_violated: return "relation_violated";
        case errc::not_transitive: return "not_transitive";
        case errc::trivial_branch_point: return "trivial_branch_point";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::alphabet_mismatch: return "alphabet_mismatch";
        case errc::relator_not_preserved: return "relator_not_preserved";
        case errc::not_closed_under_inverses: return "not_closed_under_inverses";
        case errc::orbit_limit_exceeded: return "orbit_limit_exceeded";
        case errc::unsupported_signature: return "unsupported_signature";
        case errc::malformed_cut: return "malformed_cut";
        case errc::chi_nonnegative: return "chi_nonnegative";
        case errc::hypotheses_unmet: return "hypotheses_unmet";
    }
    return "unknown";
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
            throw Error(errc::bad_input, "image array is not a bijection of {0,...,n-1}");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p = identity(n);
    std::swap(p.images_[static_cast<size_t>(i)], p.images_[static_cast<size_t>(j)]);
    return p;
}

Perm Perm::inverse() const {
    Perm q = identity(degree());
    for (int i = 0; i < degree(); ++i) q.images_[static_cast<size_t>((*this)(i))] = i;
    return q;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Perm Perm::conjugate_by(const Perm& r) const {
    if (r.degree() != degree()) throw Error(errc::degree_mismatch, "conjugation degree mismatch");
    Perm q = identity(degree());
    for (int i = 0; i < degree(); ++i) q.images_[static_cast<size_t>(r(i))] = r((*this)(i));
    return q;
}

Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw Error(errc::degree_mismatch, "compose degree mismatch");
    std::vector<int> im(static_cast<size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) im[static_cast<size_t>(i)] = p(q(i));
    return Perm(std::move(im));
}

std::string to_cycle_string(const Perm& p) {
    CycleSet cs = cycles(p);
    std::string s;
    bool nontrivial = false;
    for (const auto& cyc : cs.cycles) {
        if (cyc.size() == 1) continue;
        nontrivial = true;
        s += "(";
        for (size_t t = 0; t < cyc.size(); ++t) {
            if (t) s += " ";
            s += std::to_string(cyc[t]);
        }
        s += ")";
    }
    if (!nontrivial) return "id";
    return s;
}

CycleSet cycles(const Perm& p) {
    CycleSet cs;
    cs.degree = p.degree();
    std::vector<char> seen(static_cast<size_t>(p.degree()), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[static_cast<size_t>(j)] = 1;
            cyc.push_back(j);
            j = p(j);
        } while (j != i);
        cs.cycles.push_back(std::move(cyc));
    }
    return cs;
}

Perm from_cycle_set(const CycleSet& cs) {
    std::vector<int> im(static_cast<size_t>(cs.degree), -1);
    size_t total = 0;
    for (const auto& cyc : cs.cycles) {
        total += cyc.size();
        for (size_t t = 0; t < cyc.size(); ++t) {
            int from = cyc[t];
            int to = cyc[(t + 1) % cyc.size()];
            if (from < 0 || from >= cs.degree || im[static_cast<size_t>(from)] != -1)
                throw Error(errc::bad_input, "cycles are not disjoint or out of range");
            im[static_cast<size_t>(from)] = to;
        }
    }
    if (total != static_cast<size_t>(cs.degree))
        throw Error(errc::bad_input, "cycles do not cover the sheet set");
    return Perm(std::move(im));
}

std::vector<std::vector<int>> orbits(std::span<const Perm> generators, int degree) {
    if (degree <= 0 && generators.empty())
        throw Error(errc::bad_input, "orbits of an empty generator list need a positive degree");
    for (const Perm& g : generators)
        if (g.degree() != degree) throw Error(errc::degree_mismatch, "generator degree mismatch");
    UnionFind uf(degree);
    for (const Perm& g : generators)
        for (int i = 0; i < degree; ++i) uf.unite(i, g(i));
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(static_cast<size_t>(degree), -1);
    for (int i = 0; i < degree; ++i) {
        int r = uf.find(i);
        if (block_of[static_cast<size_t>(r)] == -1) {
            block_of[static_cast<size_t>(r)] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<size_t>(block_of[static_cast<size_t>(r)])].push_back(i);
    }
    return blocks;
}

bool is_transitive(std::span<const Perm> generators, int degree) {
    return orbits(generators, degree).size() == 1;
}

namespace {

// Count sheets t such that 0 |-> t extends to a bijection commuting with all
// generators; extension is forced along the (transitive) action.
long deck_count_by_extension(std::span<const Perm> gens, int n) {
    long count = 0;
    std::vector<int> phi(static_cast<size_t>(n));
    std::vector<int> stack;
    for (int t = 0; t < n; ++t) {
        std::fill(phi.begin(), phi.end(), -1);
        phi[0] = t;
        stack.assign(1, 0);
        bool ok = true;
        while (ok && !stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const Perm& g : gens) {
                int y = g(x);
                int want = g(phi[static_cast<size_t>(x)]);
                int& slot = phi[static_cast<size_t>(y)];
                if (slot == -1) {
                    slot = want;
                    stack.push_back(y);
                } else if (slot != want) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;
    }
    return count;
}

} // namespace

long centralizer_order(std::span<const Perm> generators, int degree) {
    if (!is_transitive(generators, degree))
        throw Error(errc::not_transitive, "centralizer_order requires a transitive action");
    if (degree <= 10) {
        // brute force over Sym(n)
        std::vector<int> im(static_cast<size_t>(degree));
        std::iota(im.begin(), im.end(), 0);
        long count = 0;
        do {
            bool commutes = true;
            for (const Perm& g : generators) {
                for (int i = 0; i < degree && commutes; ++i)
                    if (im[static_cast<size_t>(g(i))] != g(im[static_cast<size_t>(i)])) commutes = false;
                if (!commutes) break;
            }
            if (commutes) ++count;
        } while (std::next_permutation(im.begin(), im.end()));
        return count;
    }
    return deck_count_by_extension(generators, degree);
}

} // namespace bh
