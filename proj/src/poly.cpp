#include "dlq/poly.hpp"

#include <algorithm>

namespace dlq {

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::q_power(int n) {
    std::vector<std::int64_t> c(n + 1, 0);
    c[n] = 1;
    return Poly(std::move(c));
}

Poly Poly::q_minus_one_power(int n) {
    Poly base({-1, 1});
    Poly out = Poly::one();
    for (int i = 0; i < n; ++i) out = out * base;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

std::int64_t Poly::eval(std::int64_t q) const {
    std::int64_t out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * q + *it;
    return out;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        std::int64_t a = c_[i];
        if (a == 0) continue;
        if (!out.empty()) {
            out += a > 0 ? " + " : " - ";
            a = a > 0 ? a : -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        if (i == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a);
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace dlq
