#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "bh/error.hpp"

namespace bh {

// A permutation of the sheet set {0,...,n-1}, stored as its image array:
// images()[i] is where sheet i goes.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    static Perm transposition(int n, int i, int j);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;
    bool is_identity() const;

    // r * this * r^-1: the same permutation after renaming sheet i to r(i)
    Perm conjugate_by(const Perm& r) const;

    friend bool operator==(const Perm&, const Perm&) = default;
    auto operator<=>(const Perm& other) const { return images_ <=> other.images_; }

private:
    std::vector<int> images_;
};

// (p * q)(i) = p(q(i)) -- q acts first
Perm operator*(const Perm& p, const Perm& q);

std::string to_cycle_string(const Perm& p);

// Disjoint cycles covering {0,...,n-1}; fixed points kept as length-1 cycles.
// Each cycle starts at its least element; cycles sorted by least element.
struct CycleSet {
    int degree = 0;
    std::vector<std::vector<int>> cycles;
};

CycleSet cycles(const Perm& p);
Perm from_cycle_set(const CycleSet& cs);

// Finest partition of {0,...,n-1} closed under all generators.
// Blocks listed in increasing order of their least element, each block sorted.
std::vector<std::vector<int>> orbits(std::span<const Perm> generators, int degree);

bool is_transitive(std::span<const Perm> generators, int degree);

// Order of the centralizer of <generators> in Sym(n); for a transitive action
// this is the size of the deck group of the associated cover.
long centralizer_order(std::span<const Perm> generators, int degree);

} // namespace bh
