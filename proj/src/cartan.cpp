#include "dlq/cartan.hpp"

#include <cctype>
#include <numeric>

namespace dlq {

namespace {

std::vector<std::vector<int>> identity_free_matrix(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    return m;
}

void bond(std::vector<std::vector<int>>& m, int i, int j, int aij = -1, int aji = -1) {
    m[i][j] = aij;
    m[j][i] = aji;
}

// Simple roots are numbered so that, for types B/C/D, {t_2,...,t_n} spans the
// A_{n-1} chain and t_1 carries the distinguished node.
CartanDatum irreducible(char type, int n, int twistOrder) {
    CartanDatum d;
    d.rank = n;
    d.cartan = identity_free_matrix(n);
    auto& m = d.cartan;
    switch (type) {
        case 'A':
            if (n < 1) throw InvalidInput("invalid rank for type A");
            for (int i = 0; i + 1 < n; ++i) bond(m, i, i + 1);
            break;
        case 'B':
            if (n < 2) throw InvalidInput("invalid rank for type B");
            bond(m, 0, 1, -2, -1);  // alpha_1 short
            for (int i = 1; i + 1 < n; ++i) bond(m, i, i + 1);
            break;
        case 'C':
            if (n < 2) throw InvalidInput("invalid rank for type C");
            bond(m, 0, 1, -1, -2);  // alpha_1 long
            for (int i = 1; i + 1 < n; ++i) bond(m, i, i + 1);
            break;
        case 'D':
            if (n < 3) throw InvalidInput("invalid rank for type D");
            bond(m, 0, 2);
            bond(m, 1, 2);
            for (int i = 2; i + 1 < n; ++i) bond(m, i, i + 1);
            break;
        case 'E': {
            if (n < 6 || n > 8) throw InvalidInput("invalid rank for type E");
            // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to 4.
            bond(m, 0, 2);
            bond(m, 1, 3);
            for (int i = 2; i + 1 < n; ++i) bond(m, i, i + 1);
            break;
        }
        case 'F':
            if (n != 4) throw InvalidInput("invalid rank for type F");
            bond(m, 0, 1);
            bond(m, 1, 2, -1, -2);
            bond(m, 2, 3);
            break;
        case 'G':
            if (n != 2) throw InvalidInput("invalid rank for type G");
            bond(m, 0, 1, -3, -1);  // alpha_1 short
            break;
        default:
            throw InvalidInput("unknown type label");
    }

    d.twist.resize(n);
    std::iota(d.twist.begin(), d.twist.end(), 0);
    if (twistOrder == 1) return d;

    if (twistOrder == 2) {
        if (type == 'A') {
            for (int i = 0; i < n; ++i) d.twist[i] = n - 1 - i;
        } else if (type == 'D') {
            std::swap(d.twist[0], d.twist[1]);
        } else if (type == 'E' && n == 6) {
            d.twist = {5, 1, 4, 3, 2, 0};
        } else {
            throw InvalidInput("type has no order-2 diagram automorphism");
        }
    } else if (twistOrder == 3) {
        if (type != 'D' || n != 4) throw InvalidInput("type has no order-3 diagram automorphism");
        d.twist = {1, 3, 2, 0};  // rotate the three outer nodes around node 3
    } else {
        throw InvalidInput("unknown twist order");
    }
    return d;
}

CartanDatum parse_factor(const std::string& s) {
    std::size_t pos = 0;
    int twistOrder = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) &&
        pos + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[pos + 1]))) {
        twistOrder = s[pos] - '0';
        ++pos;
    }
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
        throw InvalidInput("unknown type label");
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    ++pos;
    if (pos >= s.size()) throw InvalidInput("missing rank in type label");
    int n = 0;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
            throw InvalidInput("malformed type label");
        n = n * 10 + (s[pos] - '0');
    }
    return irreducible(type, n, twistOrder);
}

CartanDatum direct_sum(const CartanDatum& a, const CartanDatum& b) {
    CartanDatum d;
    d.rank = a.rank + b.rank;
    d.cartan = identity_free_matrix(d.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) d.cartan[i][j] = a.cartan[i][j];
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) d.cartan[a.rank + i][a.rank + j] = b.cartan[i][j];
    d.twist.resize(d.rank);
    for (int i = 0; i < a.rank; ++i) d.twist[i] = a.twist[i];
    for (int i = 0; i < b.rank; ++i) d.twist[a.rank + i] = a.rank + b.twist[i];
    return d;
}

}  // namespace

CartanDatum CartanDatum::named(const std::string& label) {
    if (label.empty()) throw InvalidInput("unknown type label");
    CartanDatum out;
    std::size_t start = 0;
    bool first = true;
    while (start <= label.size()) {
        std::size_t sep = label.find('x', start);
        std::string piece = label.substr(start, sep == std::string::npos ? sep : sep - start);
        if (piece.empty()) throw InvalidInput("malformed type label");
        CartanDatum f = parse_factor(piece);
        out = first ? f : direct_sum(out, f);
        first = false;
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    out.validate();
    return out;
}

void CartanDatum::validate() const {
    if (rank <= 0) throw InvalidInput("invalid Cartan matrix");
    if (static_cast<int>(cartan.size()) != rank) throw InvalidInput("invalid Cartan matrix");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(cartan[i].size()) != rank) throw InvalidInput("invalid Cartan matrix");
        if (cartan[i][i] != 2) throw InvalidInput("invalid Cartan matrix");
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw InvalidInput("invalid Cartan matrix");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw InvalidInput("invalid Cartan matrix");
        }
    }
    if (static_cast<int>(twist.size()) != rank) throw InvalidInput("invalid twist");
    std::vector<char> seen(rank, 0);
    for (int i = 0; i < rank; ++i) {
        if (twist[i] < 0 || twist[i] >= rank || seen[twist[i]]) throw InvalidInput("invalid twist");
        seen[twist[i]] = 1;
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (cartan[twist[i]][twist[j]] != cartan[i][j])
                throw InvalidInput("twist does not preserve Cartan matrix");
}

bool CartanDatum::split() const {
    for (int i = 0; i < rank; ++i)
        if (twist[i] != i) return false;
    return true;
}

}  // namespace dlq
