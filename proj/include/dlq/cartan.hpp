#pragma once

#include <string>
#include <vector>

#include "dlq/error.hpp"

namespace dlq {

// Integer Cartan matrix together with a diagram automorphism (the
// combinatorial shadow of a Frobenius twist; identity for split groups).
//
// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so the simple
// reflection acts by s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i.
struct CartanDatum {
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<int> twist;  // 0-based permutation; twist[i] = phi(i)

    // "A3", "B4", "G2", twisted labels like "2A3" (order-2 flip) or "3D4",
    // and reducible unions joined with 'x', e.g. "A2xA1".
    static CartanDatum named(const std::string& label);

    // Throws InvalidInput when an invariant fails (diagonal, sign pattern,
    // zero symmetry, twist not preserving the matrix). Finite type is
    // checked later by the reflection closure.
    void validate() const;

    bool split() const;
};

}  // namespace dlq
