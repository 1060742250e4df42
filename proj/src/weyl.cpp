#include "dlq/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace dlq {

namespace {
void require_same_parent(const WeylElt& a, const WeylElt& b) {
    if (&a.system() != &b.system()) throw PreconditionError("mixed parents");
}
}  // namespace

WeylElt::WeylElt(const RootSystem& rs, std::vector<std::int16_t> perm)
    : rs_(&rs), perm_(std::move(perm)) {
    len_ = 0;
    for (int r = rs.num_positive(); r < rs.num_roots(); ++r)
        if (!rs.positive(perm_[r])) ++len_;
}

WeylElt WeylElt::identity(const RootSystem& rs) {
    std::vector<std::int16_t> p(rs.num_roots());
    for (int r = 0; r < rs.num_roots(); ++r) p[r] = static_cast<std::int16_t>(r);
    return WeylElt(rs, std::move(p));
}

WeylElt WeylElt::simple(const RootSystem& rs, int i) {
    rs.check_simple_index(i);
    std::vector<std::int16_t> p(rs.num_roots());
    for (int r = 0; r < rs.num_roots(); ++r) p[r] = static_cast<std::int16_t>(rs.reflect(i, r));
    return WeylElt(rs, std::move(p));
}

WeylElt WeylElt::from_word(const RootSystem& rs, std::span<const int> word) {
    // Left-to-right product; apply the rightmost letter first to a root.
    std::vector<std::int16_t> p(rs.num_roots());
    for (int r = 0; r < rs.num_roots(); ++r) {
        int cur = r;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            rs.check_simple_index(*it);
            cur = rs.reflect(*it, cur);
        }
        p[r] = static_cast<std::int16_t>(cur);
    }
    return WeylElt(rs, std::move(p));
}

WeylElt WeylElt::inverse() const {
    std::vector<std::int16_t> p(perm_.size());
    for (std::size_t r = 0; r < perm_.size(); ++r) p[perm_[r]] = static_cast<std::int16_t>(r);
    return WeylElt(*rs_, std::move(p));
}

WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    require_same_parent(a, b);
    std::vector<std::int16_t> p(a.perm_.size());
    for (std::size_t r = 0; r < p.size(); ++r) p[r] = a.perm_[b.perm_[r]];
    return WeylElt(a.system(), std::move(p));
}

std::size_t WeylEltHash::operator()(const WeylElt& w) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int16_t v : w.perm()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

bool is_left_descent(const WeylElt& w, int i) {
    // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0 iff alpha_i = w(beta), beta < 0.
    const RootSystem& rs = w.system();
    rs.check_simple_index(i);
    RootIndex target = rs.simple_root(i);
    for (int r = 0; r < rs.num_positive(); ++r)
        if (w.act(r) == target) return true;
    return false;
}

bool is_right_descent(const WeylElt& w, int i) {
    const RootSystem& rs = w.system();
    rs.check_simple_index(i);
    return !rs.positive(w.act(rs.simple_root(i)));
}

std::vector<int> left_descents(const WeylElt& w) {
    const RootSystem& rs = w.system();
    std::vector<int> out;
    WeylElt winv = w.inverse();
    for (int i = 0; i < rs.rank(); ++i)
        if (!rs.positive(winv.act(rs.simple_root(i)))) out.push_back(i);
    return out;
}

std::vector<int> reduced_word(const WeylElt& w) {
    const RootSystem& rs = w.system();
    std::vector<int> word;
    WeylElt cur = w;
    WeylElt inv = w.inverse();
    while (cur.length() > 0) {
        int i = 0;
        for (; i < rs.rank(); ++i)
            if (!rs.positive(inv.act(rs.simple_root(i)))) break;
        word.push_back(i);
        WeylElt s = WeylElt::simple(rs, i);
        cur = s * cur;
        inv = inv * s;
    }
    return word;
}

std::vector<std::vector<int>> all_reduced_words(const WeylElt& w) {
    if (w.length() == 0) return {{}};
    std::vector<std::vector<int>> out;
    const RootSystem& rs = w.system();
    for (int i : left_descents(w)) {
        WeylElt rest = WeylElt::simple(rs, i) * w;
        for (auto& tail : all_reduced_words(rest)) {
            std::vector<int> word;
            word.reserve(tail.size() + 1);
            word.push_back(i);
            word.insert(word.end(), tail.begin(), tail.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

bool bruhat_leq(const WeylElt& u, const WeylElt& w) {
    require_same_parent(u, w);
    if (u.length() > w.length()) return false;
    if (u == w) return true;
    if (w.length() == 0) return false;
    // Lifting property along any left descent s of w:
    // u <= w iff (su <= sw when su < u) else (u <= sw).
    const RootSystem& rs = w.system();
    int s = left_descents(w).front();
    WeylElt se = WeylElt::simple(rs, s);
    WeylElt sw = se * w;
    WeylElt su = se * u;
    if (su.length() < u.length()) return bruhat_leq(su, sw);
    return bruhat_leq(u, sw);
}

WeylElt longest_element(const RootSystem& rs, SimpleSubset I) {
    WeylElt w = WeylElt::identity(rs);
    bool extended = true;
    while (extended) {
        extended = false;
        for (int i = 0; i < rs.rank(); ++i) {
            if (!I.contains(i)) continue;
            if (rs.positive(w.act(rs.simple_root(i)))) {
                w = w * WeylElt::simple(rs, i);
                extended = true;
            }
        }
    }
    return w;
}

WeylElt apply_F(const WeylElt& w) {
    // phi is a diagram automorphism, so F(s_{i_1}...s_{i_k}) = s_{phi(i_1)}...s_{phi(i_k)}.
    const RootSystem& rs = w.system();
    WeylElt out = WeylElt::identity(rs);
    for (int i : reduced_word(w)) out = out * WeylElt::simple(rs, rs.twist_simple(i));
    return out;
}

SimpleSubset apply_F_subset(const RootSystem& rs, SimpleSubset I) {
    SimpleSubset out;
    for (int i = 0; i < rs.rank(); ++i)
        if (I.contains(i)) out.add(rs.twist_simple(i));
    return out;
}

bool is_I_reduced(const WeylElt& w, SimpleSubset I, Side side) {
    const RootSystem& rs = w.system();
    if (side == Side::Right) {
        for (int i : I.indices())
            if (!rs.positive(w.act(rs.simple_root(i)))) return false;
        return true;
    }
    WeylElt winv = w.inverse();
    for (int i : I.indices())
        if (!rs.positive(winv.act(rs.simple_root(i)))) return false;
    return true;
}

bool normalizes(const WeylElt& w, SimpleSubset I, bool withF) {
    const RootSystem& rs = w.system();
    SimpleSubset image;
    for (int i : I.indices()) {
        RootIndex r = rs.simple_root(i);
        if (withF) r = rs.twist_root(r);
        RootIndex img = w.act(r);
        // must land on a positive simple root inside I
        int target = -1;
        for (int j = 0; j < rs.rank(); ++j)
            if (rs.simple_root(j) == img) target = j;
        if (target < 0 || !I.contains(target)) return false;
        image.add(target);
    }
    return image == I;
}

SimpleSubset support(const WeylElt& w) {
    SimpleSubset out;
    for (int i : reduced_word(w)) out.add(i);
    return out;
}

bool in_parabolic_subgroup(const WeylElt& w, SimpleSubset J) {
    return support(w).subset_of(J);
}

std::vector<WeylElt> parabolic_elements(const RootSystem& rs, SimpleSubset I) {
    std::vector<WeylElt> out{WeylElt::identity(rs)};
    std::unordered_set<WeylElt, WeylEltHash> seen{out.front()};
    for (std::size_t head = 0; head < out.size(); ++head) {
        WeylElt cur = out[head];
        for (int i : I.indices()) {
            WeylElt next = cur * WeylElt::simple(rs, i);
            if (seen.insert(next).second) out.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dlq
