#pragma once

#include "grcat/cocycle.hpp"
#include "grcat/group.hpp"
#include "grcat/tensor_cochain.hpp"
#include "grcat/verdict.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace grcat {

// Element of the integral group ring ZG. Keys are element indices (see
// element_index); zero coefficients are never stored.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement of(std::int64_t element, std::int64_t coeff = 1);

    void add(std::int64_t element, std::int64_t coeff);
    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    GroupRingElement operator-() const;
    GroupRingElement scaled(std::int64_t k) const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
    // Augmentation: sum of coefficients.
    std::int64_t augmentation() const;

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    std::map<std::int64_t, std::int64_t> terms_;
};

// Generator [h_1 | ... | h_m] of the normalized bar resolution. A symbol with
// an identity entry is zero there and is stored as the Zero marker.
class BarGenerator {
public:
    static BarGenerator make(std::vector<std::int64_t> entries);
    static BarGenerator make(const std::vector<GroupElement>& entries);
    static BarGenerator make(std::initializer_list<std::int64_t> entries) {
        return make(std::vector<std::int64_t>(entries));
    }

    bool is_zero() const { return zero_; }
    int degree() const { return degree_; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    friend auto operator<=>(const BarGenerator&, const BarGenerator&) = default;
    friend bool operator==(const BarGenerator&, const BarGenerator&) = default;

private:
    bool zero_ = false;
    int degree_ = 0;
    std::vector<std::int64_t> entries_;
};

// Formal sum of generators of one complex with ZG coefficients.
template <class Gen>
class ChainVector {
public:
    void add(const Gen& g, const GroupRingElement& coeff) {
        if constexpr (std::is_same_v<Gen, BarGenerator>)
            if (g.is_zero())
                return;
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(g, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    void add(const Gen& g, std::int64_t element, std::int64_t coeff) {
        add(g, GroupRingElement::of(element, coeff));
    }
    ChainVector& operator+=(const ChainVector& o) {
        for (const auto& [g, c] : o.terms_)
            add(g, c);
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Gen, GroupRingElement>& terms() const { return terms_; }

    friend bool operator==(const ChainVector&, const ChainVector&) = default;

private:
    std::map<Gen, GroupRingElement> terms_;
};

using BarChain = ChainVector<BarGenerator>;
using TensorChain = ChainVector<TensorGenerator>;

std::string to_string(const CyclicFactorization& group, const TensorChain& v);
std::string to_string(const CyclicFactorization& group, const BarChain& v);

// The normalized bar resolution B (degrees 0..3), the tensor resolution K
// (degrees 0..4) and the chain maps F_1, F_2, F_3 : B -> K for one group.
class Resolutions {
public:
    explicit Resolutions(const CyclicFactorization& group);

    const CyclicFactorization& group() const { return group_; }
    std::int64_t mul(std::int64_t x, std::int64_t y) const { return prod_[x * order_ + y]; }

    // T_i = g_i - 1 and N_i = 1 + g_i + ... + g_i^{m_i - 1}.
    GroupRingElement t_elem(std::size_t i) const;
    GroupRingElement n_elem(std::size_t i) const;
    GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b) const;
    GroupRingElement translate(std::int64_t h, const GroupRingElement& a) const;

    BarChain bar_differential(const BarChain& v) const;
    TensorChain tensor_differential(const TensorChain& v) const;

    // F_m on a degree-m generator (m = 1, 2, 3); zero generators map to zero.
    TensorChain chain_map(const BarGenerator& g) const;
    // ZG-linear extension of chain_map; degree 0 is the identity B_0 = K_0.
    TensorChain chain_map(const BarChain& v) const;

    // Evaluate f on F_3[x|y|z] with G acting trivially on k*.
    UnityScalar pullback(const TensorCochain3& f, std::int64_t x, std::int64_t y,
                         std::int64_t z) const;

    // Normalized generators of B_m: all m-tuples of non-identity elements.
    std::vector<BarGenerator> bar_generators(int m) const;
    // All generators Phi(a) of K_m.
    std::vector<TensorGenerator> tensor_generators(int m) const;

private:
    std::int64_t element_of(const std::vector<std::int64_t>& exps) const;
    std::int64_t prefix(std::int64_t x, std::size_t s) const;
    std::int64_t gen_power(std::size_t s, std::int64_t k) const;

    CyclicFactorization group_;
    std::int64_t order_;
    std::vector<std::vector<std::int64_t>> exps_;
    std::vector<std::int64_t> prod_;
    std::vector<std::vector<std::int64_t>> prefix_;
};

BarChain bar_differential(const CyclicFactorization& group, const BarChain& v);
TensorChain tensor_differential(const CyclicFactorization& group, const TensorChain& v);
TensorChain chain_map_F(const CyclicFactorization& group, const BarGenerator& g);

struct ChainMapReport {
    // Squares d F_1 = del_1, d F_2 = F_1 del_2, d F_3 = F_2 del_3.
    std::array<Verdict, 3> squares;
    std::array<std::int64_t, 3> generators_checked{};

    bool holds() const { return squares[0].holds && squares[1].holds && squares[2].holds; }
};

ChainMapReport verify_chain_map(const CyclicFactorization& group,
                                std::int64_t max_generators = kDefaultMaxCells);

// Table of (x, y, z) -> f(F_3[x|y|z]).
CocycleTable pullback_3cochain(const TensorCochain3& f, std::int64_t max_cells = kDefaultMaxCells);

}  // namespace grcat
