#include "grcat/scalar.hpp"

#include "grcat/errors.hpp"

#include <charconv>
#include <tuple>
#include <limits>
#include <numeric>

namespace grcat {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduce num/den (den > 0) modulo 1 and into lowest terms.
std::pair<std::int64_t, std::int64_t> normalize(i128 num, i128 den) {
    num %= den;
    if (num < 0)
        num += den;
    if (num == 0)
        return {0, 1};
    auto g = gcd128(num, den);
    num /= g;
    den /= g;
    if (den > std::numeric_limits<std::int64_t>::max())
        throw InvalidArgument("root of unity order exceeds 64-bit range");
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

UnityScalar::UnityScalar(std::int64_t num, std::int64_t den) {
    if (den < 1)
        throw InvalidArgument("root of unity denominator must be >= 1");
    std::tie(num_, den_) = normalize(num, den);
}

UnityScalar UnityScalar::primitive(std::int64_t m) {
    if (m < 1)
        throw InvalidArgument("primitive root needs m >= 1");
    return UnityScalar(1, m);
}

UnityScalar UnityScalar::inv() const {
    UnityScalar r;
    std::tie(r.num_, r.den_) = normalize(-static_cast<i128>(num_), den_);
    return r;
}

UnityScalar UnityScalar::pow(std::int64_t k) const {
    UnityScalar r;
    // reduce k first so the product stays in 128 bits
    auto kk = k % den_;
    std::tie(r.num_, r.den_) = normalize(static_cast<i128>(num_) * kk, den_);
    return r;
}

UnityScalar UnityScalar::canonical_root(std::int64_t k) const {
    if (k < 1)
        throw InvalidArgument("canonical_root needs k >= 1");
    UnityScalar r;
    std::tie(r.num_, r.den_) = normalize(num_, static_cast<i128>(den_) * k);
    return r;
}

UnityScalar operator*(const UnityScalar& a, const UnityScalar& b) {
    auto g = std::gcd(a.den_, b.den_);
    auto lcm = static_cast<i128>(a.den_ / g) * b.den_;
    auto num = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
    UnityScalar r;
    std::tie(r.num_, r.den_) = normalize(num, lcm);
    return r;
}

std::strong_ordering operator<=>(const UnityScalar& a, const UnityScalar& b) {
    // compare as rationals in [0, 1)
    auto lhs = static_cast<i128>(a.num_) * b.den_;
    auto rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs != rhs)
        return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.den_ <=> b.den_;
}

std::string UnityScalar::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

UnityScalar UnityScalar::parse(std::string_view text) {
    auto slash = text.find('/');
    auto read = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || s.empty())
            throw InvalidArgument("malformed root of unity \"" + std::string(text) +
                                  "\", expected \"p/q\"");
        return v;
    };
    if (slash == std::string_view::npos)
        throw InvalidArgument("malformed root of unity \"" + std::string(text) +
                              "\", expected \"p/q\"");
    auto num = read(text.substr(0, slash));
    auto den = read(text.substr(slash + 1));
    if (den < 1)
        throw InvalidArgument("root of unity denominator must be >= 1 in \"" +
                              std::string(text) + "\"");
    return UnityScalar(num, den);
}

std::ostream& operator<<(std::ostream& os, const UnityScalar& a) { return os << a.to_string(); }

}  // namespace grcat
