#include "dlq/rootsys.hpp"

#include <algorithm>
#include <numeric>

namespace dlq {

namespace {
constexpr std::size_t kClosureBound = 10000;

// s_i(v) = v - <v, alpha_i^vee> alpha_i; only coordinate i changes.
std::vector<int> reflect_vector(const CartanDatum& d, int i, const std::vector<int>& v) {
    int pairing = 0;
    for (int j = 0; j < d.rank; ++j) pairing += d.cartan[i][j] * v[j];
    std::vector<int> out = v;
    out[i] -= pairing;
    return out;
}

int height_of(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}
}  // namespace

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
    datum_.validate();
    const int n = datum_.rank;

    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> work;
    for (int i = 0; i < n; ++i) {
        std::vector<int> alpha(n, 0);
        alpha[i] = 1;
        if (seen.emplace(alpha, 0).second) work.push_back(alpha);
    }
    for (std::size_t head = 0; head < work.size(); ++head) {
        std::vector<int> cur = work[head];
        for (int i = 0; i < n; ++i) {
            std::vector<int> img = reflect_vector(datum_, i, cur);
            if (seen.emplace(img, 0).second) {
                work.push_back(std::move(img));
                if (work.size() > kClosureBound) throw InvalidInput("not finite type");
            }
        }
    }

    roots_.assign(work.begin(), work.end());
    std::sort(roots_.begin(), roots_.end(), [](const auto& a, const auto& b) {
        int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    const int total = static_cast<int>(roots_.size());
    heights_.resize(total);
    for (int r = 0; r < total; ++r) {
        heights_[r] = height_of(roots_[r]);
        index_[roots_[r]] = r;
    }

    // Phi = Phi+ ⊔ -Phi+, negatives first in the height ordering.
    if (total % 2 != 0) throw InvalidInput("invalid Cartan matrix");
    negation_.resize(total);
    for (int r = 0; r < total; ++r) {
        std::vector<int> neg = roots_[r];
        for (int& c : neg) c = -c;
        auto it = index_.find(neg);
        if (it == index_.end()) throw InvalidInput("invalid Cartan matrix");
        negation_[r] = it->second;
        bool sgn = heights_[r] > 0;
        for (int c : roots_[r])
            if ((c > 0) != sgn && c != 0) throw InvalidInput("invalid Cartan matrix");
    }

    simple_.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> alpha(n, 0);
        alpha[i] = 1;
        simple_[i] = index_.at(alpha);
    }

    reflection_.assign(n, std::vector<RootIndex>(total));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < total; ++r)
            reflection_[i][r] = index_.at(reflect_vector(datum_, i, roots_[r]));

    fperm_.resize(total);
    for (int r = 0; r < total; ++r) {
        std::vector<int> img(n, 0);
        for (int j = 0; j < n; ++j) img[datum_.twist[j]] = roots_[r][j];
        fperm_[r] = index_.at(img);
    }
}

RootIndex RootSystem::index_of(const std::vector<int>& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::in_parabolic(RootIndex r, SimpleSubset I) const {
    const auto& v = roots_[r];
    for (int j = 0; j < rank(); ++j)
        if (v[j] != 0 && !I.contains(j)) return false;
    return true;
}

std::vector<RootIndex> RootSystem::parabolic_roots(SimpleSubset I) const {
    std::vector<RootIndex> out;
    for (int r = 0; r < num_roots(); ++r)
        if (in_parabolic(r, I)) out.push_back(r);
    return out;
}

}  // namespace dlq
