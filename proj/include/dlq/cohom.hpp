#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dlq/error.hpp"

namespace dlq {

// Pair of partitions labelling a type-B principal-series unipotent
// character; [n;-] is the trivial character, [-;1^n] the Steinberg.
struct Bipartition {
    std::vector<int> lambda;  // weakly decreasing positive parts
    std::vector<int> mu;

    int size() const;
    bool valid() const;
    std::string to_string() const;  // "[2,1;-]"
    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

// Character label: bipartitions for type-B principal series, partitions for
// type A, opaque tags otherwise (e.g. cuspidal placeholders). The tag "triv"
// is the label of unlabelled Kunneth factors.
class CharLabel {
public:
    enum class Kind { Opaque, Bipartition, Partition };

    static CharLabel trivial() { return opaque("triv"); }
    static CharLabel opaque(std::string tag);
    static CharLabel bipartition(Bipartition bp);
    static CharLabel partition(std::vector<int> parts);

    Kind kind() const { return kind_; }
    bool is_trivial() const { return kind_ == Kind::Opaque && tag_ == "triv"; }
    const Bipartition& as_bipartition() const { return bp_; }
    const std::vector<int>& as_partition() const { return parts_; }
    const std::string& tag() const { return tag_; }

    std::string to_string() const;
    friend auto operator<=>(const CharLabel&, const CharLabel&) = default;

private:
    Kind kind_ = Kind::Opaque;
    Bipartition bp_;
    std::vector<int> parts_;
    std::string tag_ = "triv";
};

// (cohomological degree, Frobenius eigenvalue exponent, character).
struct GMEntry {
    int degree = 0;
    int eig = 0;
    CharLabel chi;
    friend auto operator<=>(const GMEntry&, const GMEntry&) = default;
};

// Finite multiset of graded entries; multiplicities are repetition.
class GradedModule {
public:
    GradedModule() = default;
    explicit GradedModule(std::vector<GMEntry> entries);

    const std::vector<GMEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t total_multiplicity() const { return entries_.size(); }
    long long euler_characteristic() const;  // sum of (-1)^degree
    void add(GMEntry e);

    friend bool operator==(const GradedModule&, const GradedModule&) = default;

private:
    std::vector<GMEntry> entries_;  // kept sorted
};

// shift adds n to every degree; the complex shift [m] corresponds to
// shift(-m) under the convention (C[m])^k = C^{k+m}. twist adds e to every
// eigenvalue exponent, so the Tate twist (-e) corresponds to twist(+e).
GradedModule shift(const GradedModule& m, int n);
GradedModule twist(const GradedModule& m, int e);

// Kunneth d-th power of RGamma_c(G_m): entries (d+k, k, triv) with
// multiplicity binom(d,k).
GradedModule gm_cohomology(int d);

// Kunneth product; at most one operand may carry non-trivial labels.
GradedModule tensor(const GradedModule& a, const GradedModule& b);

// All bipartitions of n-1 obtained by removing one removable box.
std::vector<Bipartition> branch_restrict_B(const Bipartition& bp);

// Entry-wise Harish-Chandra restriction; labels must be bipartitions of a
// common n.
GradedModule hc_restrict_module(const GradedModule& m);

enum class BnCoefficient { Trivial, Steinberg };

// Principal-series contribution tables for the type-B_n variety X(I,w_n):
//   trivial coefficients: (n+k, k, [k-1; 2·1^{n-k-1}]) for 1 <= k <= n-1
//                         and (2n+2, n+1, [n;-]);
//   Steinberg:            (n+1, 0, [-;1^n]) and
//                         (n+k, k, [(k-1,1); 1^{n-k}]) for 2 <= k <= n.
GradedModule bn_table(int n, BnCoefficient coeff);

struct CancellationPair {
    GMEntry open_entry;    // degree k
    GMEntry closed_entry;  // degree k+1, same (char, eig)
};
struct ConsistencyReport {
    bool consistent = false;
    std::vector<CancellationPair> cancellations;
    std::vector<GMEntry> leftover;
};

// Decides whether target can arise from the long exact sequence of a
// two-piece decomposition: target = (open ⊎ closed) minus cancelling pairs,
// where a pair joins an open entry in degree k to a closed entry in degree
// k+1 with identical (char, eig).
ConsistencyReport check_les_consistency(const GradedModule& target, const GradedModule& open,
                                        const GradedModule& closed);

}  // namespace dlq
