#pragma once

#include <numeric>
#include <vector>

namespace bh {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    // returns false if already in the same set
    bool unite(int i, int j) {
        int ri = find(i), rj = find(j);
        if (ri == rj) return false;
        parent_[ri] = rj;
        --count_;
        return true;
    }

    bool same(int i, int j) { return find(i) == find(j); }
    int count() const { return count_; }

private:
    std::vector<int> parent_;
    int count_;
};

} // namespace bh
