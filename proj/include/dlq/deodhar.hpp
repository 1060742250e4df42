#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dlq/cosets.hpp"
#include "dlq/poly.hpp"

namespace dlq {

// A 0/1 mask over a fixed reduced word, with its product and the cell
// parameters: n_gamma counts the ascent positions of the running prefix
// x·gamma_1···gamma_{i-1}, m_gamma the zero positions. A nonempty cell is
// isomorphic to A^{n_gamma} x (G_m)^{m_gamma}.
struct Subexpression {
    std::vector<int> word;           // fixed reduced word, 0-based letters
    std::vector<std::uint8_t> mask;  // 1 = keep s_i
    WeylElt product;
    int n_gamma = 0;
    int m_gamma = 0;
};

// gamma_i = s_i whenever x gamma_1...gamma_{i-1} s_i > x gamma_1...gamma_{i-1}.
bool is_distinguished(const RootSystem& rs, std::span<const int> word,
                      std::span<const std::uint8_t> mask, const WeylElt& x);

// All x-distinguished subexpressions of the given reduced word (canonical
// word of w in the element overload), optionally filtered by product.
std::vector<Subexpression> enumerate_cells_word(const RootSystem& rs, std::span<const int> word,
                                                const WeylElt& x,
                                                const std::optional<WeylElt>& wPrime);
std::vector<Subexpression> enumerate_cells(const WeylElt& w, const WeylElt& x,
                                           const std::optional<WeylElt>& wPrime);

// Combinatorial emptiness test for the piece X_x of X(I,wF): nonempty iff
// some y in W_I admits an x-distinguished subexpression of y·w whose product
// p satisfies x·p·F(x)^{-1} in W_J. The word overload fixes the reduced word
// used for w (the y part is always prepended canonically).
bool piece_nonempty(SimpleSubset I, const WeylElt& w, SimpleSubset J, const WeylElt& x);
bool piece_nonempty_word(SimpleSubset I, const RootSystem& rs, std::span<const int> wordOfW,
                         SimpleSubset J, const WeylElt& x);

// Sum over all products w' and all x-distinguished gamma of q^{n}(q-1)^{m}.
// Always equals q^{l(w)} (the cells partition the Schubert cell BwB/B).
Poly deodhar_mass(const WeylElt& w, const WeylElt& x);
Poly deodhar_mass_word(const RootSystem& rs, std::span<const int> word, const WeylElt& x);

// Kazhdan-Lusztig R-polynomials by the standard recursion; independent of
// the cell enumeration, used as its counting oracle.
class RPolynomialTable {
public:
    explicit RPolynomialTable(const RootSystem& rs) : rs_(&rs) {}
    const Poly& get(const WeylElt& u, const WeylElt& w);

private:
    const RootSystem* rs_;
    std::map<std::pair<std::vector<std::int16_t>, std::vector<std::int16_t>>, Poly> memo_;
};

Poly r_polynomial(const WeylElt& u, const WeylElt& w);

}  // namespace dlq
