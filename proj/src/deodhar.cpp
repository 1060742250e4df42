#include "dlq/deodhar.hpp"

#include <algorithm>
#include <functional>

namespace dlq {

namespace {

// l(P s_i) > l(P) iff P(alpha_i) is positive.
bool ascent_at(const RootSystem& rs, const WeylElt& prefix, int letter) {
    return rs.positive(prefix.act(rs.simple_root(letter)));
}

void check_reduced(const RootSystem& rs, std::span<const int> word) {
    if (WeylElt::from_word(rs, word).length() != static_cast<int>(word.size()))
        throw PreconditionError("word not reduced");
}

}  // namespace

bool is_distinguished(const RootSystem& rs, std::span<const int> word,
                      std::span<const std::uint8_t> mask, const WeylElt& x) {
    if (mask.size() != word.size()) throw PreconditionError("mask length mismatch");
    check_reduced(rs, word);
    WeylElt prefix = x;
    for (std::size_t i = 0; i < word.size(); ++i) {
        bool forced = ascent_at(rs, prefix, word[i]);
        if (forced && !mask[i]) return false;
        if (mask[i]) prefix = prefix * WeylElt::simple(rs, word[i]);
    }
    return true;
}

std::vector<Subexpression> enumerate_cells_word(const RootSystem& rs, std::span<const int> word,
                                                const WeylElt& x,
                                                const std::optional<WeylElt>& wPrime) {
    check_reduced(rs, word);
    std::vector<Subexpression> out;
    std::vector<std::uint8_t> mask(word.size(), 0);

    std::function<void(std::size_t, const WeylElt&, int, int)> dfs =
        [&](std::size_t i, const WeylElt& prefix, int n, int m) {
            if (i == word.size()) {
                WeylElt product = x.inverse() * prefix;
                if (wPrime && !(product == *wPrime)) return;
                Subexpression sub;
                sub.word.assign(word.begin(), word.end());
                sub.mask = mask;
                sub.product = std::move(product);
                sub.n_gamma = n;
                sub.m_gamma = m;
                out.push_back(std::move(sub));
                return;
            }
            WeylElt step = prefix * WeylElt::simple(rs, word[i]);
            if (ascent_at(rs, prefix, word[i])) {
                mask[i] = 1;
                dfs(i + 1, step, n + 1, m);
            } else {
                mask[i] = 1;
                dfs(i + 1, step, n, m);
                mask[i] = 0;
                dfs(i + 1, prefix, n, m + 1);
            }
        };
    dfs(0, x, 0, 0);

    std::sort(out.begin(), out.end(),
              [](const Subexpression& a, const Subexpression& b) { return a.mask < b.mask; });
    return out;
}

std::vector<Subexpression> enumerate_cells(const WeylElt& w, const WeylElt& x,
                                           const std::optional<WeylElt>& wPrime) {
    std::vector<int> word = reduced_word(w);
    return enumerate_cells_word(w.system(), word, x, wPrime);
}

bool piece_nonempty_word(SimpleSubset I, const RootSystem& rs, std::span<const int> wordOfW,
                         SimpleSubset J, const WeylElt& x) {
    WeylElt w = WeylElt::from_word(rs, wordOfW);
    if (!is_I_reduced(w, I, Side::Left)) throw PreconditionError("w not I-reduced");
    if (!normalizes(w, I, true)) throw PreconditionError("wF does not normalize I");
    if (!is_double_reduced(x, J, I)) throw PreconditionError("x not J-reduced-I");
    check_reduced(rs, wordOfW);

    // With prefix = x·(partial product), the leaf product is p = x^{-1}·prefix
    // and the membership test x·p·F(x)^{-1} in W_J becomes prefix·F(x)^{-1}.
    WeylElt fxInv = apply_F(x).inverse();
    for (const WeylElt& y : parabolic_elements(rs, I)) {
        std::vector<int> word = reduced_word(y);
        word.insert(word.end(), wordOfW.begin(), wordOfW.end());
        // w is I-reduced, so the concatenation is a reduced word of y·w.
        std::function<bool(std::size_t, const WeylElt&)> dfs =
            [&](std::size_t i, const WeylElt& prefix) -> bool {
            if (i == word.size()) {
                WeylElt g = prefix * fxInv;  // = x p F(x)^{-1}
                return in_parabolic_subgroup(g, J);
            }
            WeylElt step = prefix * WeylElt::simple(rs, word[i]);
            if (ascent_at(rs, prefix, word[i])) return dfs(i + 1, step);
            return dfs(i + 1, step) || dfs(i + 1, prefix);
        };
        if (dfs(0, x)) return true;
    }
    return false;
}

bool piece_nonempty(SimpleSubset I, const WeylElt& w, SimpleSubset J, const WeylElt& x) {
    std::vector<int> word = reduced_word(w);
    return piece_nonempty_word(I, w.system(), word, J, x);
}

Poly deodhar_mass_word(const RootSystem& rs, std::span<const int> word, const WeylElt& x) {
    check_reduced(rs, word);
    static const Poly q = Poly::q_power(1);
    static const Poly qm1(std::vector<std::int64_t>{-1, 1});
    std::function<Poly(std::size_t, const WeylElt&)> dfs = [&](std::size_t i,
                                                               const WeylElt& prefix) -> Poly {
        if (i == word.size()) return Poly::one();
        WeylElt step = prefix * WeylElt::simple(rs, word[i]);
        if (ascent_at(rs, prefix, word[i])) return q * dfs(i + 1, step);
        return dfs(i + 1, step) + qm1 * dfs(i + 1, prefix);
    };
    return dfs(0, x);
}

Poly deodhar_mass(const WeylElt& w, const WeylElt& x) {
    std::vector<int> word = reduced_word(w);
    return deodhar_mass_word(w.system(), word, x);
}

const Poly& RPolynomialTable::get(const WeylElt& u, const WeylElt& w) {
    auto key = std::make_pair(u.perm(), w.perm());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Poly value;
    if (u == w) {
        value = Poly::one();
    } else if (!bruhat_leq(u, w)) {
        value = Poly::zero();
    } else {
        int s = left_descents(w).front();
        WeylElt se = WeylElt::simple(*rs_, s);
        WeylElt su = se * u;
        WeylElt sw = se * w;
        if (su.length() < u.length()) {
            value = get(su, sw);
        } else {
            static const Poly q = Poly::q_power(1);
            static const Poly qm1(std::vector<std::int64_t>{-1, 1});
            value = q * get(su, sw) + qm1 * get(u, sw);
        }
    }
    return memo_.emplace(std::move(key), std::move(value)).first->second;
}

Poly r_polynomial(const WeylElt& u, const WeylElt& w) {
    RPolynomialTable table(u.system());
    return table.get(u, w);
}

}  // namespace dlq
