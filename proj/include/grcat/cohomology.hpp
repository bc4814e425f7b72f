#pragma once

#include "grcat/cocycle.hpp"
#include "grcat/tensor_cochain.hpp"
#include "grcat/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace grcat {

// 2-cochain on the tensor resolution restricted to Phi_{i,j}, i < j.
class CoboundaryWitness2 {
public:
    explicit CoboundaryWitness2(const CyclicFactorization& group);  // all ones

    const CyclicFactorization& group() const { return group_; }
    const UnityScalar& at(std::size_t i, std::size_t j) const;
    UnityScalar& at(std::size_t i, std::size_t j);
    bool is_trivial() const;

    friend bool operator==(const CoboundaryWitness2&, const CoboundaryWitness2&) = default;

private:
    CyclicFactorization group_;
    std::vector<UnityScalar> values_;
};

// d*(g): f_{i,i,j} = g_{i,j}^{m_i}, f_{i,j,j} = g_{i,j}^{-m_j}, all other values 1.
TensorCochain3 tensor_coboundary(const CoboundaryWitness2& g);

// f_{l,l,l}^{m_l} = 1, f_{i,j,j}^{m_i} f_{i,i,j}^{m_j} = 1,
// f_{r,s,t}^{m_r} = f_{r,s,t}^{m_s} = f_{r,s,t}^{m_t} = 1.
Verdict is_tensor_cocycle(const TensorCochain3& f);

std::optional<CoboundaryWitness2> is_tensor_coboundary(const TensorCochain3& f);

// prod m_i * prod_{i<j} (m_i, m_j) * prod_{i<j<k} (m_i, m_j, m_k).
std::int64_t h3_order(const CyclicFactorization& group);

// f_{l,l,l} = zeta_{m_l}^{a_l}, f_{i,i,j} = zeta_{m_j}^{a_ij}, f_{i,j,j} = 1,
// f_{r,s,t} = zeta_{(m_r,m_s,m_t)}^{a_rst}.
TensorCochain3 representative_cochain(const CocycleParams& a);

struct NormalForm {
    CocycleParams params;
    // f = representative_cochain(params) * tensor_coboundary(witness)
    CoboundaryWitness2 witness;
};

NormalForm reduce_to_normal_form(const TensorCochain3& f);

// ---- bar side --------------------------------------------------------------

inline constexpr std::int64_t kDefaultMaxBarOrder = 12;

// A function G^2 -> roots of unity, stored by element index.
class CochainTable2 {
public:
    explicit CochainTable2(const CyclicFactorization& group);  // all ones

    const CyclicFactorization& group() const { return group_; }
    std::int64_t group_order() const { return order_; }
    const UnityScalar& at(std::int64_t x, std::int64_t y) const { return values_[x * order_ + y]; }
    UnityScalar& at(std::int64_t x, std::int64_t y) { return values_[x * order_ + y]; }

    friend bool operator==(const CochainTable2&, const CochainTable2&) = default;

private:
    CyclicFactorization group_;
    std::int64_t order_;
    std::vector<UnityScalar> values_;
};

// (db)(x,y,z) = b(y,z) b(xy,z)^{-1} b(x,yz) b(x,y)^{-1}.
CocycleTable bar_coboundary(const CochainTable2& b);

// A normalized b with db = t, or nullopt. Requires t to be a normalized
// 3-cocycle (checked) and |G| <= max_order.
std::optional<CochainTable2> is_bar_coboundary(const CocycleTable& t,
                                               std::int64_t max_order = kDefaultMaxBarOrder);

struct ClassifyOptions {
    // Keep scanning after the first match to confirm no second class matches.
    bool check_unique = false;
    std::int64_t max_order = kDefaultMaxBarOrder;
};

struct Classification {
    CocycleParams params;
    std::optional<bool> unique;  // set when check_unique was requested
};

// The unique a with t / omega_a a coboundary. Throws NotACocycle when t is
// not a normalized 3-cocycle or no parameter matches.
Classification classify(const CocycleTable& t, const ClassifyOptions& options = {});

}  // namespace grcat
