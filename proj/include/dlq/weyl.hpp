#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dlq/rootsys.hpp"

namespace dlq {

// Weyl group element stored as the induced permutation of root indices,
// with the length cached. Permutation storage gives cheap equality and a
// canonical form regardless of the word the element came from.
class WeylElt {
public:
    WeylElt() = default;

    static WeylElt identity(const RootSystem& rs);
    static WeylElt simple(const RootSystem& rs, int i);
    // Product of simple reflections, left to right.
    static WeylElt from_word(const RootSystem& rs, std::span<const int> word);

    bool valid() const { return rs_ != nullptr; }
    const RootSystem& system() const { return *rs_; }
    int length() const { return len_; }
    bool is_identity() const { return len_ == 0; }

    RootIndex act(RootIndex r) const { return perm_[r]; }
    WeylElt inverse() const;

    friend WeylElt operator*(const WeylElt& a, const WeylElt& b);  // throws on mixed parents
    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.perm_ == b.perm_; }
    friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }

    const std::vector<std::int16_t>& perm() const { return perm_; }

    // Deterministic total order: (length, perm lexicographic).
    friend bool operator<(const WeylElt& a, const WeylElt& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        return a.perm_ < b.perm_;
    }

private:
    const RootSystem* rs_ = nullptr;
    std::vector<std::int16_t> perm_;
    int len_ = 0;

    WeylElt(const RootSystem& rs, std::vector<std::int16_t> perm);
};

struct WeylEltHash {
    std::size_t operator()(const WeylElt& w) const;
};

enum class Side { Left, Right };

// i is a left descent of w iff l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0.
bool is_left_descent(const WeylElt& w, int i);
bool is_right_descent(const WeylElt& w, int i);
std::vector<int> left_descents(const WeylElt& w);

// Deterministic reduced word: repeatedly peel the smallest left descent.
std::vector<int> reduced_word(const WeylElt& w);

// All reduced words (test-scale utility).
std::vector<std::vector<int>> all_reduced_words(const WeylElt& w);

// Bruhat order via the lifting property.
bool bruhat_leq(const WeylElt& u, const WeylElt& w);

// Longest element of the standard parabolic W_I.
WeylElt longest_element(const RootSystem& rs, SimpleSubset I);

// Image under the diagram automorphism phi (the combinatorial action of F).
WeylElt apply_F(const WeylElt& w);
SimpleSubset apply_F_subset(const RootSystem& rs, SimpleSubset I);

// Left: l(s_i w) > l(w) for all i in I. Right: l(w s_i) > l(w).
bool is_I_reduced(const WeylElt& w, SimpleSubset I, Side side);

// True iff conjugation by w (composed with phi when withF) maps the simple
// set I bijectively onto I at the level of simple roots.
bool normalizes(const WeylElt& w, SimpleSubset I, bool withF);

// Simple indices occurring in a reduced word of w.
SimpleSubset support(const WeylElt& w);
// Membership in the standard parabolic subgroup W_J.
bool in_parabolic_subgroup(const WeylElt& w, SimpleSubset J);

// All elements of W_I, sorted by (length, perm lex).
std::vector<WeylElt> parabolic_elements(const RootSystem& rs, SimpleSubset I);

}  // namespace dlq
