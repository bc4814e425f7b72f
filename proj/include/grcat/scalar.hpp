#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace grcat {

// The root of unity exp(2*pi*i * num/den), stored as a reduced fraction in Q/Z.
// Multiplication of roots is addition of fractions modulo 1.
class UnityScalar {
public:
    constexpr UnityScalar() = default;
    // Any integer pair with den >= 1; reduced into [0, 1) in lowest terms.
    UnityScalar(std::int64_t num, std::int64_t den);

    static UnityScalar one() { return {}; }
    // zeta_m = exp(2*pi*i/m), m >= 1.
    static UnityScalar primitive(std::int64_t m);
    // zeta_m^k.
    static UnityScalar root(std::int64_t m, std::int64_t k) { return UnityScalar(k, m); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_one() const { return num_ == 0; }

    // Multiplicative order; always equal to den().
    std::int64_t order() const { return den_; }

    UnityScalar inv() const;
    UnityScalar pow(std::int64_t k) const;
    // The fixed k-th root num/(den*k), k >= 1.
    UnityScalar canonical_root(std::int64_t k) const;

    friend UnityScalar operator*(const UnityScalar& a, const UnityScalar& b);
    friend UnityScalar operator/(const UnityScalar& a, const UnityScalar& b) { return a * b.inv(); }
    UnityScalar& operator*=(const UnityScalar& b) { return *this = *this * b; }

    friend bool operator==(const UnityScalar&, const UnityScalar&) = default;
    friend std::strong_ordering operator<=>(const UnityScalar& a, const UnityScalar& b);

    std::string to_string() const;  // "num/den"
    static UnityScalar parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline UnityScalar mul(const UnityScalar& a, const UnityScalar& b) { return a * b; }
inline UnityScalar inv(const UnityScalar& a) { return a.inv(); }
inline UnityScalar pow(const UnityScalar& a, std::int64_t k) { return a.pow(k); }
inline std::int64_t order(const UnityScalar& a) { return a.order(); }
inline UnityScalar canonical_root(const UnityScalar& a, std::int64_t k) { return a.canonical_root(k); }

std::ostream& operator<<(std::ostream& os, const UnityScalar& a);

}  // namespace grcat
