#pragma once

#include "grcat/cocycle.hpp"
#include "grcat/cohomology.hpp"
#include "grcat/verdict.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grcat {

// R(g_i, g_j) = r_ij for the fixed generators; R on all of G x G is the
// product R(x, y) = prod_{s,t} r_st^{x_s y_t} on reduced exponents.
class QuasiBicharacter {
public:
    QuasiBicharacter(const CyclicFactorization& group, std::vector<UnityScalar> r);

    const CyclicFactorization& group() const { return group_; }
    const UnityScalar& r(std::size_t i, std::size_t j) const { return r_[i * group_.rank() + j]; }
    std::span<const UnityScalar> entries() const { return r_; }

    friend bool operator==(const QuasiBicharacter& a, const QuasiBicharacter& b) {
        return a.group_ == b.group_ && a.r_ == b.r_;
    }
    friend auto operator<=>(const QuasiBicharacter& a, const QuasiBicharacter& b) {
        return a.r_ <=> b.r_;
    }

private:
    CyclicFactorization group_;
    std::vector<UnityScalar> r_;
};

// A full function R : G x G -> k*, indexed by element indices.
using BraidingTable = CochainTable2;

UnityScalar eval_R(const QuasiBicharacter& R, const GroupElement& x, const GroupElement& y);
BraidingTable to_table(const QuasiBicharacter& R);

struct BraidingCheck {
    bool exists = true;
    std::string reason;  // first blocking parameter when !exists
};

// 2 a_l = 0 mod m_l for every l, the off-diagonal power equations are
// solvable (a_ij = 0 within its range), and a_rst = 0.
BraidingCheck braiding_exists(const CocycleParams& a);

// All quasi-bicharacters with respect to omega_a. Diagonal cells vary
// slowest, then off-diagonal cells in lexicographic order.
std::vector<QuasiBicharacter> enumerate_braidings(const CocycleParams& a);

// Closed-form count prod m_l * prod_{i != j} (m_i, m_j), or 0.
std::int64_t braiding_count(const CocycleParams& a);

// R(xy,z) = R(x,z) R(y,z) omega(z,x,y) omega(x,y,z) / omega(x,z,y) and
// R(x,yz) = R(x,y) R(x,z) omega(y,x,z) / (omega(y,z,x) omega(x,y,z)) on G^3.
Verdict verify_hexagons(const CocycleParams& a, const QuasiBicharacter& R);
Verdict verify_hexagons(const CocycleTable& omega, const BraidingTable& R);

// Oracle: every matrix with r_ij in mu_{m_i m_j}, kept when the product-form
// R passes both hexagons. Sorted.
std::vector<QuasiBicharacter> brute_force_braidings(const CocycleParams& a,
                                                    std::int64_t max_candidates = kDefaultMaxCells);

inline constexpr std::int64_t kDefaultMaxFunctionSpace = 1'000'000'000;

// Oracle: every function R : G x G -> mu_N passing both hexagons, found by an
// exhaustive depth-first search that rejects a partial assignment as soon as
// one hexagon equation among its assigned cells fails.
std::vector<BraidingTable> brute_force_full_function_space(
    const CocycleParams& a, std::int64_t N, std::int64_t max_candidates = kDefaultMaxFunctionSpace);

}  // namespace grcat
