#pragma once

#include <span>
#include <vector>

#include "dlq/weyl.hpp"

namespace dlq {

// x(alpha_i) > 0 for all i in I and x^{-1}(alpha_j) > 0 for all j in J.
bool is_double_reduced(const WeylElt& x, SimpleSubset J, SimpleSubset I);

// The complete set of minimal-length (W_J, W_I) double coset representatives,
// sorted by (length, lexicographic reduced word).
std::vector<WeylElt> double_coset_min_reps(const RootSystem& rs, SimpleSubset J, SimpleSubset I);

// K_x = J ∩ ˣΦ_I, as simple indices: { j in J : x^{-1}(alpha_j) in Phi_I }.
// Requires x J-reduced-I.
SimpleSubset K_of(const WeylElt& x, SimpleSubset J, SimpleSubset I);

// A region of roots cut out of Phi: the negative roots, the image w(Phi+),
// or the pullback x^{-1}(Phi+ \ Phi_J) of the unipotent-radical roots of P_J.
struct RootRegion {
    enum class Kind { NegativeRoots, ImageOfPositive, UnipotentRadicalPullback };

    Kind kind = Kind::NegativeRoots;
    WeylElt w;        // ImageOfPositive / UnipotentRadicalPullback
    SimpleSubset J;   // UnipotentRadicalPullback only

    static RootRegion negative() { return {}; }
    static RootRegion image_of_positive(WeylElt w) {
        return {Kind::ImageOfPositive, std::move(w), {}};
    }
    static RootRegion unipotent_pullback(WeylElt x, SimpleSubset J) {
        return {Kind::UnipotentRadicalPullback, std::move(x), J};
    }
};

// Cardinality of the intersection of the given root regions; unipotent
// dimensions equal root-set cardinalities.
int unipotent_intersection_dim(const RootSystem& rs, std::span<const RootRegion> regions);

// e = dim(U_J^x ∩ ʷU ∩ U⁻) = #( x^{-1}(Phi+ \ Phi_J) ∩ w(Phi+) ∩ Phi- ).
int case1_affine_dim(const RootSystem& rs, const WeylElt& x, const WeylElt& w, SimpleSubset J);

}  // namespace dlq
