#pragma once

#include <initializer_list>
#include <map>
#include <vector>

#include "dlq/cartan.hpp"

namespace dlq {

using RootIndex = int;

// Subset of the simple indices {0..rank-1}, stored as a bit mask.
struct SimpleSubset {
    unsigned mask = 0;

    static SimpleSubset full(int rank) { return {rank >= 32 ? ~0u : (1u << rank) - 1u}; }
    static SimpleSubset of(std::initializer_list<int> is) {
        SimpleSubset s;
        for (int i : is) s.add(i);
        return s;
    }

    bool contains(int i) const { return (mask >> i) & 1u; }
    SimpleSubset& add(int i) {
        mask |= 1u << i;
        return *this;
    }
    int count() const { return __builtin_popcount(mask); }
    bool empty() const { return mask == 0; }
    bool subset_of(SimpleSubset o) const { return (mask & ~o.mask) == 0; }
    SimpleSubset intersect(SimpleSubset o) const { return {mask & o.mask}; }
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < 32; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(SimpleSubset, SimpleSubset) = default;
    friend auto operator<=>(SimpleSubset, SimpleSubset) = default;
};

// Finite crystallographic root system built from a CartanDatum by reflection
// closure. Roots are integer vectors in the simple-root basis, indexed in a
// canonical order (by height, then lexicographically), so equal inputs give
// identical indexings. Negative roots occupy [0, numPositive), positive
// roots [numPositive, numRoots).
class RootSystem {
public:
    explicit RootSystem(CartanDatum datum);  // throws InvalidInput, incl. "not finite type"

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }

    const std::vector<int>& root(RootIndex r) const { return roots_[r]; }
    int height(RootIndex r) const { return heights_[r]; }
    bool positive(RootIndex r) const { return r >= num_positive(); }
    RootIndex negation(RootIndex r) const { return negation_[r]; }
    RootIndex simple_root(int i) const { return simple_[i]; }

    // Index of s_i(roots[r]).
    RootIndex reflect(int i, RootIndex r) const { return reflection_[i][r]; }

    // -1 when v is not a root.
    RootIndex index_of(const std::vector<int>& v) const;

    // Diagram automorphism acting on roots / simple indices.
    RootIndex twist_root(RootIndex r) const { return fperm_[r]; }
    int twist_simple(int i) const { return datum_.twist[i]; }
    bool split() const { return datum_.split(); }

    // Membership in Phi_I (support contained in I).
    bool in_parabolic(RootIndex r, SimpleSubset I) const;
    // Phi_I as a sorted index list.
    std::vector<RootIndex> parabolic_roots(SimpleSubset I) const;

    void check_simple_index(int i) const {
        if (i < 0 || i >= rank()) throw InvalidInput("invalid simple index");
    }

private:
    CartanDatum datum_;
    std::vector<std::vector<int>> roots_;
    std::vector<int> heights_;
    std::vector<RootIndex> negation_;
    std::vector<RootIndex> simple_;
    std::vector<std::vector<RootIndex>> reflection_;  // [i][r]
    std::vector<RootIndex> fperm_;
    std::map<std::vector<int>, RootIndex> index_;
};

}  // namespace dlq
