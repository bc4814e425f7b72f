#include "grcat/zlinalg.hpp"

#include "grcat/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace grcat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw InvalidArgument("ragged matrix literal");
        for (long v : row)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw InvalidArgument("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<mpz_class> SmithDecomposition::diagonal() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        d.push_back(D(i, i));
    return d;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal())
        if (sgn(d) != 0)
            ++r;
    return r;
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Diagonalizes a working copy by unimodular row/column operations. Row
// operations are mirrored into U (when tracked) and into a Q/Z vector (when
// given); column operations are mirrored into V.
class SmithEngine {
public:
    SmithEngine(const IntMatrix& m, bool track_left, std::vector<UnityScalar>* rhs)
        : a_(m), v_(IntMatrix::identity(m.cols())), rhs_(rhs), track_left_(track_left) {
        if (track_left_)
            u_ = IntMatrix::identity(m.rows());
    }

    void run() {
        const std::size_t n = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < n; ++t) {
            auto pivot = smallest_in_block(t);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            for (;;) {
                if (!clear_row_and_column(t))
                    continue;
                auto bad = non_divisible(t);
                if (!bad)
                    break;
                add_row(t, *bad, mpz_class(1));
            }
            if (sgn(a_(t, t)) < 0)
                negate_row(t);
        }
    }

    IntMatrix& a() { return a_; }
    IntMatrix& u() { return u_; }
    IntMatrix& v() { return v_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const auto& x = a_(i, j);
                if (sgn(x) == 0)
                    continue;
                if (!best || cmpabs(x, a_(best->first, best->second)) < 0) {
                    best = {i, j};
                    if (abs(x) == 1)
                        return best;
                }
            }
        return best;
    }

    // One sweep of division steps along row t and column t. Returns true when
    // both are cleared; otherwise moves the smallest remainder to (t, t).
    bool clear_row_and_column(std::size_t t) {
        bool cleared = true;
        mpz_class q;
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
            if (sgn(a_(i, t)) == 0)
                continue;
            mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
            if (sgn(q) != 0)
                add_row(i, t, -q);
            if (sgn(a_(i, t)) != 0)
                cleared = false;
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            if (sgn(a_(t, j)) == 0)
                continue;
            mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
            if (sgn(q) != 0)
                add_col(j, t, -q);
            if (sgn(a_(t, j)) != 0)
                cleared = false;
        }
        if (cleared)
            return true;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (sgn(a_(i, t)) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0)
                bi = i, bj = t;
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (sgn(a_(t, j)) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0)
                bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return false;
    }

    // A row below t holding an entry not divisible by the pivot, if any.
    std::optional<std::size_t> non_divisible(std::size_t t) const {
        const auto& p = a_(t, t);
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t()))
                    return i;
        return std::nullopt;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < a_.cols(); ++k)
            std::swap(a_(i, k), a_(j, k));
        if (track_left_)
            for (std::size_t k = 0; k < u_.cols(); ++k)
                std::swap(u_(i, k), u_(j, k));
        if (rhs_)
            std::swap((*rhs_)[i], (*rhs_)[j]);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < a_.rows(); ++k)
            std::swap(a_(k, i), a_(k, j));
        for (std::size_t k = 0; k < v_.rows(); ++k)
            std::swap(v_(k, i), v_(k, j));
    }

    // row dst += k * row src
    void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            if (sgn(a_(src, c)) != 0)
                a_(dst, c) += k * a_(src, c);
        if (track_left_)
            for (std::size_t c = 0; c < u_.cols(); ++c)
                if (sgn(u_(src, c)) != 0)
                    u_(dst, c) += k * u_(src, c);
        if (rhs_) {
            auto& src_v = (*rhs_)[src];
            mpz_class r = k % src_v.den();
            (*rhs_)[dst] *= src_v.pow(r.get_si());
        }
    }

    // col dst += k * col src
    void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
        for (std::size_t r = 0; r < a_.rows(); ++r)
            if (sgn(a_(r, src)) != 0)
                a_(r, dst) += k * a_(r, src);
        for (std::size_t r = 0; r < v_.rows(); ++r)
            if (sgn(v_(r, src)) != 0)
                v_(r, dst) += k * v_(r, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            a_(i, c) = -a_(i, c);
        if (track_left_)
            for (std::size_t c = 0; c < u_.cols(); ++c)
                u_(i, c) = -u_(i, c);
        if (rhs_)
            (*rhs_)[i] = (*rhs_)[i].inv();
    }

    IntMatrix a_;
    IntMatrix u_;
    IntMatrix v_;
    std::vector<UnityScalar>* rhs_;
    bool track_left_;
};

UnityScalar scale(const UnityScalar& s, const mpz_class& k) {
    if (s.is_one())
        return s;
    mpz_class r = k % s.den();
    return s.pow(r.get_si());
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SmithEngine engine(m, true, nullptr);
    engine.run();
    SmithDecomposition out{std::move(engine.u()), std::move(engine.a()), std::move(engine.v())};
    if (!(out.U * m * out.V == out.D))
        throw std::logic_error("smith_normal_form: U*M*V != D");
    return out;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<UnityScalar> apply_mod1(const IntMatrix& m, std::span<const UnityScalar> x) {
    if (x.size() != m.cols())
        throw InvalidArgument("apply_mod1: vector length does not match column count");
    std::vector<UnityScalar> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0)
                out[i] *= scale(x[j], m(i, j));
    return out;
}

std::optional<std::vector<UnityScalar>> solve_mod1(const IntMatrix& m, std::span<const UnityScalar> v) {
    if (v.size() != m.rows())
        throw InvalidArgument("solve_mod1: right-hand side length does not match row count");
    std::vector<UnityScalar> w(v.begin(), v.end());
    SmithEngine engine(m, false, &w);
    engine.run();
    const auto& d = engine.a();

    // D y = w, one scalar equation per row
    std::vector<UnityScalar> y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const bool has_pivot = i < m.cols() && sgn(d(i, i)) != 0;
        if (!has_pivot) {
            if (!w[i].is_one())
                return std::nullopt;
            continue;
        }
        if (!d(i, i).fits_slong_p())
            throw GuardExceeded("solve_mod1: invariant factor exceeds 64-bit range");
        y[i] = w[i].canonical_root(d(i, i).get_si());
    }

    auto x = apply_mod1(engine.v(), y);
    auto check = apply_mod1(m, x);
    if (!std::equal(check.begin(), check.end(), v.begin()))
        throw std::logic_error("solve_mod1: substitution check failed");
    return x;
}

}  // namespace grcat
