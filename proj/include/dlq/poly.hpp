#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dlq {

// Dense univariate polynomial in q with exact 64-bit integer coefficients.
// Coefficients stay tiny here (point counts of cells in rank <= 8 groups).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{{1}}; }
    // q^n
    static Poly q_power(int n);
    // (q-1)^n
    static Poly q_minus_one_power(int n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    std::int64_t eval(std::int64_t q) const;
    std::string to_string() const;  // "q^3 - 2q + 1"

private:
    std::vector<std::int64_t> c_;  // c_[i] multiplies q^i; no trailing zeros
    void normalize();
};

}  // namespace dlq
