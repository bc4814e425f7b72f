#pragma once

#include "grcat/group.hpp"
#include "grcat/scalar.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace grcat {

// Free generator Phi(a_1, ..., a_n) of the tensor resolution, degree sum(a_l).
struct TensorGenerator {
    std::vector<int> a;

    int degree() const;
    std::string to_string() const;  // "Phi(1,0,2)"

    friend auto operator<=>(const TensorGenerator&, const TensorGenerator&) = default;
    friend bool operator==(const TensorGenerator&, const TensorGenerator&) = default;
};

// Phi with a 1 added at each listed position (0-based); phi(n, i, i) is Phi_{i,i}.
TensorGenerator phi(std::size_t n, std::initializer_list<std::size_t> positions);

// A cochain Hom(K_3, k*) given by its values on Phi_{l,l,l}, Phi_{i,i,j},
// Phi_{i,j,j} (i < j) and Phi_{r,s,t} (r < s < t). Indices are 0-based.
class TensorCochain3 {
public:
    explicit TensorCochain3(const CyclicFactorization& group);  // all ones

    const CyclicFactorization& group() const { return group_; }

    const UnityScalar& lll(std::size_t l) const { return diag_[l]; }
    const UnityScalar& iij(std::size_t i, std::size_t j) const;
    const UnityScalar& ijj(std::size_t i, std::size_t j) const;
    const UnityScalar& rst(std::size_t r, std::size_t s, std::size_t t) const;
    UnityScalar& lll(std::size_t l) { return diag_[l]; }
    UnityScalar& iij(std::size_t i, std::size_t j);
    UnityScalar& ijj(std::size_t i, std::size_t j);
    UnityScalar& rst(std::size_t r, std::size_t s, std::size_t t);

    // Value on an arbitrary degree-3 generator.
    const UnityScalar& on(const TensorGenerator& g) const;

    friend bool operator==(const TensorCochain3&, const TensorCochain3&) = default;
    friend TensorCochain3 operator*(const TensorCochain3& a, const TensorCochain3& b);
    TensorCochain3 inv() const;

private:
    std::size_t pair_slot(std::size_t i, std::size_t j) const;
    std::size_t triple_slot(std::size_t r, std::size_t s, std::size_t t) const;

    CyclicFactorization group_;
    std::vector<UnityScalar> diag_;
    std::vector<UnityScalar> iij_;
    std::vector<UnityScalar> ijj_;
    std::vector<UnityScalar> rst_;
};

}  // namespace grcat
