#pragma once

#include "grcat/group.hpp"
#include "grcat/scalar.hpp"
#include "grcat/verdict.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace grcat {

inline constexpr std::int64_t kDefaultMaxCells = 1'000'000;

// Index pairs i<j and triples r<s<t (0-based) in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n);
std::vector<std::array<std::size_t, 3>> index_triples(std::size_t n);

// Slot of (i, j) in index_pairs(n), resp. of (r, s, t) in index_triples(n).
std::size_t pair_position(std::size_t n, std::size_t i, std::size_t j);
std::size_t triple_position(std::size_t n, std::size_t r, std::size_t s, std::size_t t);

std::int64_t gcd_of(std::int64_t a, std::int64_t b);
std::int64_t gcd_of(std::int64_t a, std::int64_t b, std::int64_t c);

// A point of the parameter set: a_l in [0, m_l), a_ij in [0, (m_i, m_j)),
// a_rst in [0, (m_r, m_s, m_t)). Pairs and triples are stored in
// lexicographic order and always present, including those whose range is {0}.
class CocycleParams {
public:
    CocycleParams(const CyclicFactorization& group, std::vector<std::int64_t> singles,
                  std::vector<std::int64_t> pairs, std::vector<std::int64_t> triples);

    static CocycleParams zero(const CyclicFactorization& group);

    const CyclicFactorization& group() const { return group_; }

    // 0-based accessors.
    std::int64_t single(std::size_t l) const { return singles_[l]; }
    std::int64_t pair(std::size_t i, std::size_t j) const;
    std::int64_t triple(std::size_t r, std::size_t s, std::size_t t) const;

    std::span<const std::int64_t> singles() const { return singles_; }
    std::span<const std::int64_t> pairs() const { return pairs_; }
    std::span<const std::int64_t> triples() const { return triples_; }

    bool is_zero() const;

    friend bool operator==(const CocycleParams& a, const CocycleParams& b) {
        return a.group_ == b.group_ && a.singles_ == b.singles_ && a.pairs_ == b.pairs_ &&
               a.triples_ == b.triples_;
    }

    std::string to_string() const;  // "1,0;1;"

private:
    CyclicFactorization group_;
    std::vector<std::int64_t> singles_;
    std::vector<std::int64_t> pairs_;
    std::vector<std::int64_t> triples_;
};

// Every parameter tuple, lexicographically by the flattened sequence.
std::vector<CocycleParams> enumerate_params(const CyclicFactorization& group);

// The canonical normalized 3-cocycle omega_a at (x, y, z).
UnityScalar eval_omega(const CocycleParams& a, const GroupElement& x, const GroupElement& y,
                       const GroupElement& z);

// A function G^3 -> roots of unity, stored densely by element index.
class CocycleTable {
public:
    explicit CocycleTable(const CyclicFactorization& group, std::int64_t max_cells = kDefaultMaxCells);

    const CyclicFactorization& group() const { return group_; }
    std::int64_t group_order() const { return order_; }

    const UnityScalar& at(std::int64_t x, std::int64_t y, std::int64_t z) const {
        return values_[static_cast<std::size_t>((x * order_ + y) * order_ + z)];
    }
    UnityScalar& at(std::int64_t x, std::int64_t y, std::int64_t z) {
        return values_[static_cast<std::size_t>((x * order_ + y) * order_ + z)];
    }
    const UnityScalar& operator()(const GroupElement& x, const GroupElement& y,
                                  const GroupElement& z) const;
    void set(const GroupElement& x, const GroupElement& y, const GroupElement& z, UnityScalar w);

    std::span<const UnityScalar> values() const { return values_; }

    friend bool operator==(const CocycleTable& a, const CocycleTable& b) {
        return a.group_ == b.group_ && a.values_ == b.values_;
    }
    // Pointwise product and inverse.
    friend CocycleTable operator*(const CocycleTable& a, const CocycleTable& b);
    CocycleTable inv() const;

private:
    CyclicFactorization group_;
    std::int64_t order_;
    std::vector<UnityScalar> values_;
};

CocycleTable build_table(const CocycleParams& a, std::int64_t max_cells = kDefaultMaxCells);

// omega(ef,g,h) omega(e,f,gh) = omega(e,f,g) omega(e,fg,h) omega(f,g,h) on G^4.
Verdict verify_pentagon(const CocycleTable& t);
// omega(x,y,z) = 1 whenever an argument is the identity.
Verdict verify_normalized(const CocycleTable& t);
// omega(x,y,z) = omega(x,z,y) on G^3.
Verdict verify_symmetry_last_two(const CocycleTable& t);

// Element multiplication by index: product[x * |G| + y].
std::vector<std::int64_t> multiplication_table(const CyclicFactorization& group);

}  // namespace grcat
