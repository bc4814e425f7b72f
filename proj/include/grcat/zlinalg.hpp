#pragma once

#include "grcat/scalar.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grcat {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all >= 0.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::vector<mpz_class> diagonal() const;
    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Determinant by fraction-free elimination (Bareiss).
mpz_class determinant(const IntMatrix& m);

// Find x over Q/Z with M x = v (mod 1). Returns nullopt when no solution exists.
std::optional<std::vector<UnityScalar>> solve_mod1(const IntMatrix& m, std::span<const UnityScalar> v);

// M x evaluated over Q/Z; integer entries act by powers.
std::vector<UnityScalar> apply_mod1(const IntMatrix& m, std::span<const UnityScalar> x);

}  // namespace grcat
