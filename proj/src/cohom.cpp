#include "dlq/cohom.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dlq {

namespace {
std::string partition_to_string(const std::vector<int>& parts) {
    if (parts.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

bool weakly_decreasing_positive(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i && parts[i] > parts[i - 1]) return false;
    }
    return true;
}
}  // namespace

int Bipartition::size() const {
    return std::accumulate(lambda.begin(), lambda.end(), 0) +
           std::accumulate(mu.begin(), mu.end(), 0);
}

bool Bipartition::valid() const {
    return weakly_decreasing_positive(lambda) && weakly_decreasing_positive(mu);
}

std::string Bipartition::to_string() const {
    return "[" + partition_to_string(lambda) + ";" + partition_to_string(mu) + "]";
}

CharLabel CharLabel::opaque(std::string tag) {
    CharLabel c;
    c.kind_ = Kind::Opaque;
    c.tag_ = std::move(tag);
    return c;
}

CharLabel CharLabel::bipartition(Bipartition bp) {
    if (!bp.valid()) throw InvalidInput("invalid bipartition");
    CharLabel c;
    c.kind_ = Kind::Bipartition;
    c.bp_ = std::move(bp);
    c.tag_.clear();
    return c;
}

CharLabel CharLabel::partition(std::vector<int> parts) {
    if (!weakly_decreasing_positive(parts)) throw InvalidInput("invalid partition");
    CharLabel c;
    c.kind_ = Kind::Partition;
    c.parts_ = std::move(parts);
    c.tag_.clear();
    return c;
}

std::string CharLabel::to_string() const {
    switch (kind_) {
        case Kind::Bipartition:
            return bp_.to_string();
        case Kind::Partition:
            return partition_to_string(parts_);
        case Kind::Opaque:
            return tag_;
    }
    return {};
}

GradedModule::GradedModule(std::vector<GMEntry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
}

void GradedModule::add(GMEntry e) {
    entries_.insert(std::upper_bound(entries_.begin(), entries_.end(), e), std::move(e));
}

long long GradedModule::euler_characteristic() const {
    long long out = 0;
    for (const GMEntry& e : entries_) out += (e.degree % 2 == 0) ? 1 : -1;
    return out;
}

GradedModule shift(const GradedModule& m, int n) {
    std::vector<GMEntry> out = m.entries();
    for (GMEntry& e : out) e.degree += n;
    return GradedModule(std::move(out));
}

GradedModule twist(const GradedModule& m, int e) {
    std::vector<GMEntry> out = m.entries();
    for (GMEntry& en : out) en.eig += e;
    return GradedModule(std::move(out));
}

GradedModule gm_cohomology(int d) {
    if (d < 0) throw InvalidInput("negative torus dimension");
    // Kunneth power of H_c(G_m) = {(1,0), (2,1)}: binom(d,k) copies of (d+k, k).
    std::vector<GMEntry> out;
    long long binom = 1;
    for (int k = 0; k <= d; ++k) {
        for (long long c = 0; c < binom; ++c)
            out.push_back(GMEntry{d + k, k, CharLabel::trivial()});
        binom = binom * (d - k) / (k + 1);
    }
    return GradedModule(std::move(out));
}

GradedModule tensor(const GradedModule& a, const GradedModule& b) {
    auto labelled = [](const GradedModule& m) {
        for (const GMEntry& e : m.entries())
            if (!e.chi.is_trivial()) return true;
        return false;
    };
    if (labelled(a) && labelled(b)) throw InvalidInput("ambiguous character product");
    std::vector<GMEntry> out;
    out.reserve(a.entries().size() * b.entries().size());
    for (const GMEntry& ea : a.entries())
        for (const GMEntry& eb : b.entries())
            out.push_back(GMEntry{ea.degree + eb.degree, ea.eig + eb.eig,
                                  ea.chi.is_trivial() ? eb.chi : ea.chi});
    return GradedModule(std::move(out));
}

namespace {
std::vector<std::vector<int>> remove_one_box(const std::vector<int>& parts) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;  // not removable
        std::vector<int> next = parts;
        if (--next[i] == 0) next.erase(next.begin() + i);
        out.push_back(std::move(next));
    }
    return out;
}
}  // namespace

std::vector<Bipartition> branch_restrict_B(const Bipartition& bp) {
    if (!bp.valid()) throw InvalidInput("invalid bipartition");
    if (bp.size() == 0) throw InvalidInput("cannot branch the empty bipartition");
    std::vector<Bipartition> out;
    for (auto& l : remove_one_box(bp.lambda)) out.push_back(Bipartition{std::move(l), bp.mu});
    for (auto& m : remove_one_box(bp.mu)) out.push_back(Bipartition{bp.lambda, std::move(m)});
    return out;
}

GradedModule hc_restrict_module(const GradedModule& m) {
    int n = -1;
    for (const GMEntry& e : m.entries()) {
        if (e.chi.kind() != CharLabel::Kind::Bipartition)
            throw InvalidInput("mixed label kinds");
        int sz = e.chi.as_bipartition().size();
        if (n < 0) n = sz;
        if (sz != n) throw InvalidInput("mixed label kinds");
    }
    std::vector<GMEntry> out;
    for (const GMEntry& e : m.entries())
        for (Bipartition& b : branch_restrict_B(e.chi.as_bipartition()))
            out.push_back(GMEntry{e.degree, e.eig, CharLabel::bipartition(std::move(b))});
    return GradedModule(std::move(out));
}

GradedModule bn_table(int n, BnCoefficient coeff) {
    if (n < 2) throw InvalidInput("n must be at least 2");
    std::vector<GMEntry> out;
    if (coeff == BnCoefficient::Trivial) {
        for (int k = 1; k <= n - 1; ++k) {
            Bipartition bp;
            if (k - 1 > 0) bp.lambda = {k - 1};
            bp.mu.assign(1, 2);
            bp.mu.insert(bp.mu.end(), n - k - 1, 1);
            out.push_back(GMEntry{n + k, k, CharLabel::bipartition(std::move(bp))});
        }
        out.push_back(GMEntry{2 * n + 2, n + 1, CharLabel::bipartition(Bipartition{{n}, {}})});
    } else {
        Bipartition st;
        st.mu.assign(n, 1);
        out.push_back(GMEntry{n + 1, 0, CharLabel::bipartition(std::move(st))});
        for (int k = 2; k <= n; ++k) {
            Bipartition bp;
            bp.lambda = {k - 1, 1};
            bp.mu.assign(n - k, 1);
            out.push_back(GMEntry{n + k, k, CharLabel::bipartition(std::move(bp))});
        }
    }
    return GradedModule(std::move(out));
}

ConsistencyReport check_les_consistency(const GradedModule& target, const GradedModule& open,
                                        const GradedModule& closed) {
    // Per (char, eig) class, with multiplicities t/o/c per degree, look for
    // cancellation counts x[k] (an open entry in degree k against a closed
    // entry in degree k+1) with t[k] = (o[k] - x[k]) + (c[k] - x[k-1]).
    struct Line {
        std::map<int, int> t, o, c;
    };
    std::map<std::pair<CharLabel, int>, Line> classes;
    for (const GMEntry& e : target.entries()) classes[{e.chi, e.eig}].t[e.degree]++;
    for (const GMEntry& e : open.entries()) classes[{e.chi, e.eig}].o[e.degree]++;
    for (const GMEntry& e : closed.entries()) classes[{e.chi, e.eig}].c[e.degree]++;

    ConsistencyReport rep;
    rep.consistent = true;
    for (auto& kv : classes) {
        const CharLabel& chi = kv.first.first;
        const int eig = kv.first.second;
        Line& line = kv.second;
        int lo = 1 << 30, hi = -(1 << 30);
        auto widen = [&](const std::map<int, int>& m) {
            if (!m.empty()) {
                lo = std::min(lo, m.begin()->first);
                hi = std::max(hi, m.rbegin()->first);
            }
        };
        widen(line.t);
        widen(line.o);
        widen(line.c);

        int prev = 0;  // x[k-1]
        for (int k = lo; k <= hi + 1; ++k) {
            auto at = [&](const std::map<int, int>& m) {
                auto it = m.find(k);
                return it == m.end() ? 0 : it->second;
            };
            int t = at(line.t), o = at(line.o), c = at(line.c);
            int x = o + c - prev - t;  // forced cancellation count at degree k
            auto nextIt = line.c.find(k + 1);
            int cNext = nextIt == line.c.end() ? 0 : nextIt->second;
            if (x < 0 || x > o || c - prev < 0 || x > cNext) {
                rep.consistent = false;
                // Unaccountable multiplicity at this degree; report one
                // representative entry and stop this class.
                rep.leftover.push_back(GMEntry{k, eig, chi});
                break;
            }
            for (int i = 0; i < x; ++i)
                rep.cancellations.push_back(
                    CancellationPair{GMEntry{k, eig, chi}, GMEntry{k + 1, eig, chi}});
            prev = x;
        }
    }
    if (!rep.consistent) rep.cancellations.clear();
    return rep;
}

}  // namespace dlq
