#include "grcat/braiding.hpp"

#include "grcat/errors.hpp"
#include "grcat/parallel.hpp"

#include <limits>
#include <numeric>

namespace grcat {

QuasiBicharacter::QuasiBicharacter(const CyclicFactorization& group, std::vector<UnityScalar> r)
    : group_(group), r_(std::move(r)) {
    if (r_.size() != group_.rank() * group_.rank())
        throw InvalidArgument("quasi-bicharacter for " + group_.to_string() + " needs " +
                              std::to_string(group_.rank() * group_.rank()) + " entries");
}

UnityScalar eval_R(const QuasiBicharacter& R, const GroupElement& x, const GroupElement& y) {
    if (!(x.group() == R.group()) || !(y.group() == R.group()))
        throw InvalidArgument("eval_R: arguments do not belong to " + R.group().to_string());
    const auto n = R.group().rank();
    UnityScalar w;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (x.exp(s) && y.exp(t))
                w *= R.r(s, t).pow(x.exp(s) * y.exp(t));
    return w;
}

BraidingTable to_table(const QuasiBicharacter& R) {
    BraidingTable table(R.group());
    const auto elems = enumerate(R.group());
    const auto n = static_cast<std::int64_t>(elems.size());
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            table.at(x, y) = eval_R(R, elems[x], elems[y]);
    return table;
}

BraidingCheck braiding_exists(const CocycleParams& a) {
    const auto& G = a.group();
    const auto n = G.rank();
    for (std::size_t l = 0; l < n; ++l)
        if ((2 * a.single(l)) % G.order(l) != 0)
            return {false, "a_" + std::to_string(l + 1) + " = " + std::to_string(a.single(l)) +
                               ": r^m = zeta^a = zeta^-a needs 2*a_" + std::to_string(l + 1) +
                               " = 0 mod " + std::to_string(G.order(l))};
    for (auto [i, j] : index_pairs(n)) {
        // r^{m_j} = 1 and r^{m_i} = zeta_{m_j}^{-a_ij}: u*m_i = -a_ij mod m_j
        const auto d = gcd_of(G.order(i), G.order(j));
        if (a.pair(i, j) % d != 0)
            return {false, "a_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                               std::to_string(a.pair(i, j)) + ": r^m_" + std::to_string(i + 1) +
                               " = zeta^-a with r^m_" + std::to_string(j + 1) +
                               " = 1 has no solution"};
    }
    std::size_t k = 0;
    for (auto [r, s, t] : index_triples(n)) {
        if (a.triples()[k] != 0)
            return {false, "a_" + std::to_string(r + 1) + std::to_string(s + 1) + std::to_string(t + 1) +
                               " = " + std::to_string(a.triples()[k]) + " must be 0"};
        ++k;
    }
    return {};
}

namespace {

// Solutions of one cell's equations, ordered by exponent.
std::vector<UnityScalar> cell_solutions(const CocycleParams& a, std::size_t i, std::size_t j) {
    const auto& G = a.group();
    const auto mi = G.order(i), mj = G.order(j);
    std::vector<UnityScalar> out;
    if (i == j) {
        // r^{m_i} = zeta_{m_i}^{a_i}: r = zeta_{m_i^2}^{a_i + m_i t}
        for (std::int64_t t = 0; t < mi; ++t)
            out.emplace_back(a.single(i) + mi * t, mi * mi);
        return out;
    }
    // i < j: r = zeta_{m_j}^u with u m_i = -a_ij (mod m_j)
    // i > j: r = zeta_{m_i}^u with u m_j = a_ji (mod m_i)
    const auto m_fixed = i < j ? mj : mi;   // r^{m_fixed} = 1
    const auto m_power = i < j ? mi : mj;   // r^{m_power} = value
    const auto target = i < j ? -a.pair(i, j) : a.pair(j, i);
    for (std::int64_t u = 0; u < m_fixed; ++u)
        if (remainder(u * m_power - target, m_fixed) == 0)
            out.emplace_back(u, m_fixed);
    std::sort(out.begin(), out.end(), [&](const UnityScalar& x, const UnityScalar& y) {
        return x.num() * (m_fixed / x.den()) < y.num() * (m_fixed / y.den());
    });
    return out;
}

// Cells in enumeration order: diagonal first, then off-diagonal lexicographic.
std::vector<std::pair<std::size_t, std::size_t>> cell_order(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        cells.emplace_back(i, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                cells.emplace_back(i, j);
    return cells;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    const auto g = std::gcd(a, b);
    if (a / g > std::numeric_limits<std::int64_t>::max() / b)
        throw GuardExceeded("common root-of-unity order overflows 64-bit integers");
    return a / g * b;
}

// Both hexagon families as exponent equations mod L over element indices.
class HexagonSystem {
public:
    HexagonSystem(const CocycleTable& omega, std::int64_t extra_modulus)
        : n_(omega.group_order()), prod_(multiplication_table(omega.group())) {
        L_ = extra_modulus;
        for (const auto& w : omega.values())
            L_ = checked_lcm(L_, w.den());
        omega_.reserve(omega.values().size());
        for (const auto& w : omega.values())
            omega_.push_back(w.num() * (L_ / w.den()));
    }

    std::int64_t modulus() const { return L_; }
    std::int64_t order() const { return n_; }
    std::int64_t mul(std::int64_t x, std::int64_t y) const { return prod_[x * n_ + y]; }
    std::int64_t omega(std::int64_t x, std::int64_t y, std::int64_t z) const {
        return omega_[(x * n_ + y) * n_ + z];
    }

    // Constant term of each hexagon at (x, y, z).
    std::int64_t first_constant(std::int64_t x, std::int64_t y, std::int64_t z) const {
        return omega(z, x, y) + omega(x, y, z) - omega(x, z, y);
    }
    std::int64_t second_constant(std::int64_t x, std::int64_t y, std::int64_t z) const {
        return omega(y, x, z) - omega(y, z, x) - omega(x, y, z);
    }

    bool holds(const std::vector<std::int64_t>& R) const {
        for (std::int64_t x = 0; x < n_; ++x)
            for (std::int64_t y = 0; y < n_; ++y)
                for (std::int64_t z = 0; z < n_; ++z) {
                    auto e1 = R[mul(x, y) * n_ + z] - R[x * n_ + z] - R[y * n_ + z] - first_constant(x, y, z);
                    if (remainder(e1, L_) != 0)
                        return false;
                    auto e2 = R[x * n_ + mul(y, z)] - R[x * n_ + y] - R[x * n_ + z] - second_constant(x, y, z);
                    if (remainder(e2, L_) != 0)
                        return false;
                }
        return true;
    }

private:
    std::int64_t n_;
    std::int64_t L_ = 1;
    std::vector<std::int64_t> prod_;
    std::vector<std::int64_t> omega_;
};

}  // namespace

std::vector<QuasiBicharacter> enumerate_braidings(const CocycleParams& a) {
    if (!braiding_exists(a).exists)
        return {};
    const auto& G = a.group();
    const auto n = G.rank();
    const auto cells = cell_order(n);
    std::vector<std::vector<UnityScalar>> choices;
    for (auto [i, j] : cells) {
        choices.push_back(cell_solutions(a, i, j));
        if (choices.back().empty())
            return {};
    }
    std::vector<QuasiBicharacter> out;
    std::vector<std::size_t> digit(cells.size(), 0);
    for (;;) {
        std::vector<UnityScalar> r(n * n);
        for (std::size_t c = 0; c < cells.size(); ++c)
            r[cells[c].first * n + cells[c].second] = choices[c][digit[c]];
        out.emplace_back(G, std::move(r));
        std::size_t c = cells.size();
        for (;;) {
            if (c == 0)
                return out;
            --c;
            if (++digit[c] < choices[c].size())
                break;
            digit[c] = 0;
        }
    }
}

std::int64_t braiding_count(const CocycleParams& a) {
    if (!braiding_exists(a).exists)
        return 0;
    const auto& G = a.group();
    std::int64_t count = 1;
    for (std::size_t i = 0; i < G.rank(); ++i)
        for (std::size_t j = 0; j < G.rank(); ++j)
            count *= i == j ? G.order(i) : gcd_of(G.order(i), G.order(j));
    return count;
}

Verdict verify_hexagons(const CocycleTable& omega, const BraidingTable& R) {
    if (!(omega.group() == R.group()))
        throw InvalidArgument("verify_hexagons: cocycle and braiding live on different groups");
    const auto& G = omega.group();
    const auto n = omega.group_order();
    const auto prod = multiplication_table(G);
    auto m = [&](std::int64_t x, std::int64_t y) { return prod[x * n + y]; };
    auto w = [&](std::int64_t x, std::int64_t y, std::int64_t z) { return omega.at(x, y, z); };
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (std::int64_t z = 0; z < n; ++z) {
                auto triple = [&] {
                    return std::vector<GroupElement>{from_index(G, x), from_index(G, y), from_index(G, z)};
                };
                auto where = [&](const std::vector<GroupElement>& t) {
                    return " at (x,y,z) = (" + t[0].to_string() + "," + t[1].to_string() + "," +
                           t[2].to_string() + ")";
                };
                auto rhs1 = R.at(x, z) * R.at(y, z) * w(z, x, y) * w(x, y, z) / w(x, z, y);
                if (R.at(m(x, y), z) != rhs1) {
                    auto t = triple();
                    return Verdict::fail(t, "first hexagon R(xy,z) fails" + where(t));
                }
                auto rhs2 = R.at(x, y) * R.at(x, z) * w(y, x, z) / (w(y, z, x) * w(x, y, z));
                if (R.at(x, m(y, z)) != rhs2) {
                    auto t = triple();
                    return Verdict::fail(t, "second hexagon R(x,yz) fails" + where(t));
                }
            }
    return Verdict::ok();
}

Verdict verify_hexagons(const CocycleParams& a, const QuasiBicharacter& R) {
    if (!(a.group() == R.group()))
        throw InvalidArgument("verify_hexagons: parameters and braiding live on different groups");
    return verify_hexagons(build_table(a), to_table(R));
}

std::vector<QuasiBicharacter> brute_force_braidings(const CocycleParams& a, std::int64_t max_candidates) {
    const auto& G = a.group();
    const auto n = G.rank();
    std::vector<std::int64_t> grid;  // row-major cells, mu_{m_i m_j}
    std::int64_t candidates = 1;
    std::int64_t L = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto size = G.order(i) * G.order(j);
            grid.push_back(size);
            if (candidates > max_candidates / size)
                throw GuardExceeded("braiding oracle on " + G.to_string() +
                                    " exceeds the candidate limit " + std::to_string(max_candidates));
            candidates *= size;
            L = checked_lcm(L, size);
        }

    const HexagonSystem system(build_table(a), L);
    const auto order = system.order();
    const auto M = system.modulus();
    std::vector<std::vector<std::int64_t>> exps(static_cast<std::size_t>(order));
    for (std::int64_t x = 0; x < order; ++x) {
        auto e = from_index(G, x);
        exps[x].assign(e.exps().begin(), e.exps().end());
    }

    auto decode = [&](std::uint64_t index) {
        std::vector<std::int64_t> digit(grid.size());
        for (std::size_t c = grid.size(); c-- > 0;) {
            digit[c] = static_cast<std::int64_t>(index % grid[c]);
            index /= grid[c];
        }
        return digit;
    };

    // Generators and products of two generators. Most candidates already fail a
    // hexagon on these, so they are tried before building the whole table; the
    // survivors still go through the full check.
    std::vector<std::int64_t> probes;
    for (std::size_t i = 0; i < n; ++i)
        probes.push_back(element_index(generator(G, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            probes.push_back(element_index(generator(G, i) * generator(G, j)));

    auto keep = [&](std::uint64_t index) {
        const auto digit = decode(index);
        std::vector<std::int64_t> r(digit.size());
        for (std::size_t c = 0; c < digit.size(); ++c)
            r[c] = digit[c] * (M / grid[c]);
        auto value = [&](std::int64_t x, std::int64_t y) {
            std::int64_t v = 0;
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t)
                    v = (v + r[s * n + t] * (exps[x][s] * exps[y][t] % M)) % M;
            return v;
        };
        for (auto x : probes)
            for (auto y : probes)
                for (auto z : probes) {
                    auto e1 = value(system.mul(x, y), z) - value(x, z) - value(y, z) -
                              system.first_constant(x, y, z);
                    auto e2 = value(x, system.mul(y, z)) - value(x, y) - value(x, z) -
                              system.second_constant(x, y, z);
                    if (remainder(e1, M) != 0 || remainder(e2, M) != 0)
                        return false;
                }
        std::vector<std::int64_t> R(static_cast<std::size_t>(order * order));
        for (std::int64_t x = 0; x < order; ++x)
            for (std::int64_t y = 0; y < order; ++y)
                R[x * order + y] = value(x, y);
        return system.holds(R);
    };

    std::vector<QuasiBicharacter> out;
    for (auto index : parallel_collect(static_cast<std::uint64_t>(candidates), keep)) {
        const auto digit = decode(index);
        std::vector<UnityScalar> r;
        for (std::size_t c = 0; c < digit.size(); ++c)
            r.emplace_back(digit[c], grid[c]);
        out.emplace_back(G, std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BraidingTable> brute_force_full_function_space(const CocycleParams& a, std::int64_t N,
                                                           std::int64_t max_candidates) {
    if (N < 1)
        throw InvalidArgument("full-space oracle needs N >= 1");
    const auto& G = a.group();
    const auto order = G.group_order();
    const auto cells = order * order;
    std::int64_t candidates = 1;
    for (std::int64_t c = 0; c < cells; ++c) {
        if (candidates > max_candidates / N)
            throw GuardExceeded("full function space mu_" + std::to_string(N) + "^(|G|^2) on " +
                                G.to_string() + " exceeds the candidate limit " +
                                std::to_string(max_candidates));
        candidates *= N;
    }

    const HexagonSystem system(build_table(a), N);
    const auto M = system.modulus();
    const auto step = M / N;

    // Each equation is R[c0] - R[c1] - R[c2] = constant; it is checked at the
    // largest of its three cells.
    struct Equation {
        std::int64_t c0, c1, c2, constant;
    };
    std::vector<std::vector<Equation>> at_cell(static_cast<std::size_t>(cells));
    for (std::int64_t x = 0; x < order; ++x)
        for (std::int64_t y = 0; y < order; ++y)
            for (std::int64_t z = 0; z < order; ++z) {
                Equation e1{system.mul(x, y) * order + z, x * order + z, y * order + z,
                            system.first_constant(x, y, z)};
                Equation e2{x * order + system.mul(y, z), x * order + y, x * order + z,
                            system.second_constant(x, y, z)};
                for (const auto& e : {e1, e2})
                    at_cell[std::max({e.c0, e.c1, e.c2})].push_back(e);
            }

    std::vector<BraidingTable> out;
    std::vector<std::int64_t> R(static_cast<std::size_t>(cells), 0);
    auto search = [&](auto&& self, std::int64_t cell) -> void {
        if (cell == cells) {
            BraidingTable table(G);
            for (std::int64_t c = 0; c < cells; ++c)
                table.at(c / order, c % order) = UnityScalar(R[c], M);
            out.push_back(std::move(table));
            return;
        }
        for (std::int64_t v = 0; v < N; ++v) {
            R[cell] = v * step;
            bool ok = true;
            for (const auto& e : at_cell[cell])
                if (remainder(R[e.c0] - R[e.c1] - R[e.c2] - e.constant, M) != 0) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, cell + 1);
        }
    };
    search(search, 0);
    return out;
}

}  // namespace grcat
