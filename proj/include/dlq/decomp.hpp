#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlq/deodhar.hpp"

namespace dlq {

enum class PieceStatus { Empty, Case1, Case2, Unclassified };

// Witness data attached to an Unclassified piece: the distinguished
// subexpressions of y·w whose product lands in x^{-1} W_J F(x).
struct CellSummary {
    std::vector<int> y_word;
    std::vector<int> word;
    std::vector<std::uint8_t> mask;
    int n_gamma = 0;
    int m_gamma = 0;
    std::vector<int> product_word;
};

struct PieceClassification {
    WeylElt x;
    PieceStatus status = PieceStatus::Unclassified;
    SimpleSubset K;

    std::optional<WeylElt> v;       // Case1 / Case2
    std::optional<int> e;           // Case1: dim(U_J^x ∩ ʷU ∩ U⁻)
    std::optional<int> s;           // Case2: the chosen simple index
    std::optional<WeylElt> wPrime;  // Case2: w = s·wPrime

    // Case1 holds and some left descent also satisfies the Case2 conditions
    // (provably impossible; evaluated anyway and reported, never resolved).
    bool case2_also = false;
    std::optional<int> case2_also_s;

    std::string note;                 // e.g. Case1 v not W_K-reduced downgrade
    std::vector<CellSummary> cells;   // attached when Unclassified
};

// One entry per minimal double-coset representative x, with the emptiness
// verdict. Preconditions (reported by name): w I-reduced, ^{wF}I = I,
// phi(J) = J.
std::vector<std::pair<WeylElt, bool>> enumerate_pieces(const RootSystem& rs, SimpleSubset I,
                                                       const WeylElt& w, SimpleSubset J);

PieceClassification classify_piece(const RootSystem& rs, SimpleSubset I, const WeylElt& w,
                                   SimpleSubset J, const WeylElt& x);

// Coxeter-element report: the unique nonempty piece x = w_J w_0, the induced
// v (a Coxeter element of W_J) and the G_m exponent |S| - |J|.
struct CoxeterReport {
    WeylElt x;
    WeylElt v;
    int gm_exponent = 0;
};
CoxeterReport coxeter_report(const RootSystem& rs, const WeylElt& w, SimpleSubset J);

// Chain data for braid-monoid elements presented as a sequence of
// W-elements: I_{i+1} is conjugated onto I_i by w_i, with I_{r+1} = phi(I_1),
// an optional minimal degeneration gamma_i per term, and a tuple of
// same-length J-reduced-I_i representatives x_i (x_{r+1} := phi(x_1)).
struct ChainTerm {
    SimpleSubset I;
    WeylElt w;
    std::optional<int> gamma;
};
struct ChainSpec {
    std::vector<ChainTerm> terms;
    std::vector<WeylElt> xs;
};

struct ChainCheck {
    int index;         // 1-based term index; 0 for structural checks
    std::string name;  // violated or verified hypothesis
    bool ok;
    std::string detail;
    bool required = true;  // K-compatibility is reported but never enforced
};

std::vector<ChainCheck> validate_chain(const RootSystem& rs, const ChainSpec& spec,
                                       SimpleSubset J);
bool chain_valid(const std::vector<ChainCheck>& checks);

struct ChainSummary {
    int d = 0;  // #{ i : gamma_i present } — dimension of the torus factor
    int e = 0;  // sum of dim(U_J^{x_i} ∩ ^{z_i}U ∩ U⁻)
    std::vector<WeylElt> v_parts;
    WeylElt v_product;
};
ChainSummary chain_summary(const RootSystem& rs, const ChainSpec& spec, SimpleSubset J);

}  // namespace dlq
