#include "dlq/cosets.hpp"

#include <algorithm>
#include <unordered_set>

namespace dlq {

bool is_double_reduced(const WeylElt& x, SimpleSubset J, SimpleSubset I) {
    return is_I_reduced(x, J, Side::Left) && is_I_reduced(x, I, Side::Right);
}

std::vector<WeylElt> double_coset_min_reps(const RootSystem& rs, SimpleSubset J, SimpleSubset I) {
    // The left-J-reduced elements are closed under length-decreasing right
    // truncation, so a BFS over right extensions that stay left-J-reduced
    // reaches all of them; filter the right-I-reduced survivors.
    std::vector<WeylElt> frontier{WeylElt::identity(rs)};
    std::unordered_set<WeylElt, WeylEltHash> seen{frontier.front()};
    std::vector<WeylElt> reps;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        WeylElt cur = frontier[head];
        if (is_I_reduced(cur, I, Side::Right)) reps.push_back(cur);
        for (int i = 0; i < rs.rank(); ++i) {
            if (is_right_descent(cur, i)) continue;
            WeylElt next = cur * WeylElt::simple(rs, i);
            if (!is_I_reduced(next, J, Side::Left)) continue;
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    std::sort(reps.begin(), reps.end(), [](const WeylElt& a, const WeylElt& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return reduced_word(a) < reduced_word(b);
    });
    return reps;
}

SimpleSubset K_of(const WeylElt& x, SimpleSubset J, SimpleSubset I) {
    if (!is_double_reduced(x, J, I)) throw PreconditionError("x not J-reduced-I");
    const RootSystem& rs = x.system();
    WeylElt xinv = x.inverse();
    SimpleSubset K;
    for (int j : J.indices())
        if (rs.in_parabolic(xinv.act(rs.simple_root(j)), I)) K.add(j);
    return K;
}

namespace {
std::vector<char> region_roots(const RootSystem& rs, const RootRegion& reg) {
    std::vector<char> in(rs.num_roots(), 0);
    switch (reg.kind) {
        case RootRegion::Kind::NegativeRoots:
            for (int r = 0; r < rs.num_positive(); ++r) in[r] = 1;
            break;
        case RootRegion::Kind::ImageOfPositive:
            for (int r = rs.num_positive(); r < rs.num_roots(); ++r) in[reg.w.act(r)] = 1;
            break;
        case RootRegion::Kind::UnipotentRadicalPullback: {
            WeylElt xinv = reg.w.inverse();
            for (int r = rs.num_positive(); r < rs.num_roots(); ++r)
                if (!rs.in_parabolic(r, reg.J)) in[xinv.act(r)] = 1;
            break;
        }
    }
    return in;
}
}  // namespace

int unipotent_intersection_dim(const RootSystem& rs, std::span<const RootRegion> regions) {
    std::vector<char> acc(rs.num_roots(), 1);
    for (const RootRegion& reg : regions) {
        std::vector<char> cur = region_roots(rs, reg);
        for (int r = 0; r < rs.num_roots(); ++r) acc[r] &= cur[r];
    }
    int count = 0;
    for (char c : acc) count += c;
    return count;
}

int case1_affine_dim(const RootSystem& rs, const WeylElt& x, const WeylElt& w, SimpleSubset J) {
    RootRegion regs[3] = {RootRegion::unipotent_pullback(x, J), RootRegion::image_of_positive(w),
                          RootRegion::negative()};
    return unipotent_intersection_dim(rs, regs);
}

}  // namespace dlq
