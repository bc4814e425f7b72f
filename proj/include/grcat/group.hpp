#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grcat {

// A finite abelian group Z_{m_1} x ... x Z_{m_n} in a fixed factor order.
// The order of factors is significant and never canonicalized.
class CyclicFactorization {
public:
    explicit CyclicFactorization(std::vector<std::int64_t> orders);

    std::size_t rank() const { return orders_->size(); }
    std::int64_t order(std::size_t l) const { return (*orders_)[l]; }
    std::span<const std::int64_t> orders() const { return *orders_; }
    std::int64_t group_order() const { return group_order_; }

    friend bool operator==(const CyclicFactorization& a, const CyclicFactorization& b) {
        return a.orders_ == b.orders_ || *a.orders_ == *b.orders_;
    }

    std::string to_string() const;  // "Z4xZ2"

private:
    std::shared_ptr<const std::vector<std::int64_t>> orders_;
    std::int64_t group_order_ = 1;
};

class GroupElement {
public:
    // Exponents are reduced modulo their orders.
    GroupElement(const CyclicFactorization& group, std::vector<std::int64_t> exps);

    const CyclicFactorization& group() const { return group_; }
    std::span<const std::int64_t> exps() const { return exps_; }
    std::int64_t exp(std::size_t l) const { return exps_[l]; }
    bool is_identity() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.group_ == b.group_ && a.exps_ == b.exps_;
    }
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
        return a.exps_ <=> b.exps_;
    }

    std::string to_string() const;  // "(3,1)"

private:
    CyclicFactorization group_;
    std::vector<std::int64_t> exps_;
};

GroupElement identity(const CyclicFactorization& group);
// The fixed generator g_l (unit exponent vector), l is 0-based.
GroupElement generator(const CyclicFactorization& group, std::size_t l);

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement power(const GroupElement& x, std::int64_t k);
GroupElement inverse(const GroupElement& x);

inline GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return multiply(x, y);
}

// All elements in lexicographic order of exponent vectors.
std::vector<GroupElement> enumerate(const CyclicFactorization& group);

// Lexicographic rank in enumerate(), and its inverse.
std::int64_t element_index(const GroupElement& x);
GroupElement from_index(const CyclicFactorization& group, std::int64_t index);

// floor((i + j) / m) for 0 <= i, j < m; always 0 or 1.
std::int64_t carry(std::int64_t i, std::int64_t j, std::int64_t m);

// Least non-negative residue of s modulo t (t >= 1).
std::int64_t remainder(std::int64_t s, std::int64_t t);

// Floor division for t >= 1.
std::int64_t floor_div(std::int64_t s, std::int64_t t);

// Throws InvalidArgument unless both elements belong to the same group.
void require_same_group(const GroupElement& x, const GroupElement& y);

}  // namespace grcat
