#include "grcat/cohomology.hpp"

#include "grcat/errors.hpp"
#include "grcat/zlinalg.hpp"

#include <limits>
#include <stdexcept>

namespace grcat {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
        throw GuardExceeded("H^3 order overflows 64-bit integers");
    return a * b;
}

// Inverse of a modulo m, gcd(a, m) = 1, m >= 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    if (m == 1)
        return 0;
    std::int64_t old_r = remainder(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        auto q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1)
        throw std::logic_error("inverse_mod: arguments not coprime");
    return remainder(old_s, m);
}

// Exponent e with w = zeta_m^e, or throw when w is not an m-th root of unity.
std::int64_t exponent_in(const UnityScalar& w, std::int64_t m, const std::string& what) {
    if (m % w.den() != 0)
        throw NotACocycle(what + " = " + w.to_string() + " is not a " + std::to_string(m) +
                          "-th root of unity");
    return w.num() * (m / w.den());
}

}  // namespace

// ---- CoboundaryWitness2 ----------------------------------------------------

CoboundaryWitness2::CoboundaryWitness2(const CyclicFactorization& group)
    : group_(group), values_(index_pairs(group.rank()).size()) {}

const UnityScalar& CoboundaryWitness2::at(std::size_t i, std::size_t j) const {
    return values_[pair_position(group_.rank(), i, j)];
}

UnityScalar& CoboundaryWitness2::at(std::size_t i, std::size_t j) {
    return values_[pair_position(group_.rank(), i, j)];
}

bool CoboundaryWitness2::is_trivial() const {
    for (const auto& v : values_)
        if (!v.is_one())
            return false;
    return true;
}

TensorCochain3 tensor_coboundary(const CoboundaryWitness2& g) {
    const auto& G = g.group();
    TensorCochain3 f(G);
    for (auto [i, j] : index_pairs(G.rank())) {
        f.iij(i, j) = g.at(i, j).pow(G.order(i));
        f.ijj(i, j) = g.at(i, j).pow(-G.order(j));
    }
    return f;
}

// ---- tensor side -----------------------------------------------------------

Verdict is_tensor_cocycle(const TensorCochain3& f) {
    const auto& G = f.group();
    const auto n = G.rank();
    auto name = [](std::string s, std::initializer_list<std::size_t> idx) {
        s += "_{";
        bool first = true;
        for (auto k : idx) {
            s += (first ? "" : ",") + std::to_string(k + 1);
            first = false;
        }
        return s + "}";
    };
    for (std::size_t l = 0; l < n; ++l)
        if (!f.lll(l).pow(G.order(l)).is_one())
            return Verdict::fail({}, name("f", {l, l, l}) + "^m_" + std::to_string(l + 1) + " != 1 (f = " +
                                         f.lll(l).to_string() + ")");
    for (auto [i, j] : index_pairs(n))
        if (!(f.ijj(i, j).pow(G.order(i)) * f.iij(i, j).pow(G.order(j))).is_one())
            return Verdict::fail({}, name("f", {i, j, j}) + "^m_" + std::to_string(i + 1) + " * " +
                                         name("f", {i, i, j}) + "^m_" + std::to_string(j + 1) + " != 1");
    for (auto [r, s, t] : index_triples(n))
        for (auto l : {r, s, t})
            if (!f.rst(r, s, t).pow(G.order(l)).is_one())
                return Verdict::fail({}, name("f", {r, s, t}) + "^m_" + std::to_string(l + 1) + " != 1");
    return Verdict::ok();
}

std::optional<CoboundaryWitness2> is_tensor_coboundary(const TensorCochain3& f) {
    const auto& G = f.group();
    const auto n = G.rank();
    for (std::size_t l = 0; l < n; ++l)
        if (!f.lll(l).is_one())
            return std::nullopt;
    for (auto [r, s, t] : index_triples(n))
        if (!f.rst(r, s, t).is_one())
            return std::nullopt;
    CoboundaryWitness2 w(G);
    for (auto [i, j] : index_pairs(n)) {
        // g^{m_i} = f_{i,i,j} and g^{-m_j} = f_{i,j,j}, one unknown over Q/Z
        IntMatrix m{{static_cast<long>(G.order(i))}, {-static_cast<long>(G.order(j))}};
        std::vector<UnityScalar> rhs{f.iij(i, j), f.ijj(i, j)};
        auto sol = solve_mod1(m, rhs);
        if (!sol)
            return std::nullopt;
        w.at(i, j) = (*sol)[0];
    }
    return w;
}

std::int64_t h3_order(const CyclicFactorization& group) {
    const auto n = group.rank();
    std::int64_t order = 1;
    for (std::size_t l = 0; l < n; ++l)
        order = checked_mul(order, group.order(l));
    for (auto [i, j] : index_pairs(n))
        order = checked_mul(order, gcd_of(group.order(i), group.order(j)));
    for (auto [r, s, t] : index_triples(n))
        order = checked_mul(order, gcd_of(group.order(r), group.order(s), group.order(t)));
    return order;
}

TensorCochain3 representative_cochain(const CocycleParams& a) {
    const auto& G = a.group();
    const auto n = G.rank();
    TensorCochain3 f(G);
    for (std::size_t l = 0; l < n; ++l)
        f.lll(l) = UnityScalar::root(G.order(l), a.single(l));
    for (auto [i, j] : index_pairs(n))
        f.iij(i, j) = UnityScalar::root(G.order(j), a.pair(i, j));
    for (auto [r, s, t] : index_triples(n))
        f.rst(r, s, t) = UnityScalar::root(gcd_of(G.order(r), G.order(s), G.order(t)), a.triple(r, s, t));
    return f;
}

NormalForm reduce_to_normal_form(const TensorCochain3& f) {
    if (auto v = is_tensor_cocycle(f); !v)
        throw NotACocycle("not a tensor 3-cocycle: " + v.detail);
    const auto& G = f.group();
    const auto n = G.rank();

    std::vector<std::int64_t> singles(n), pairs, triples;
    for (std::size_t l = 0; l < n; ++l)
        singles[l] = exponent_in(f.lll(l), G.order(l), "f_lll");

    CoboundaryWitness2 witness(G);
    for (auto [i, j] : index_pairs(n)) {
        const auto mi = G.order(i), mj = G.order(j);
        // clear f_{i,j,j}: w1^{-m_j} = f_{i,j,j}
        const auto w1 = f.ijj(i, j).inv().canonical_root(mj);
        const auto fiij = f.iij(i, j) * w1.pow(-mi);
        // now fiij^{m_j} = 1; reduce its exponent modulo (m_i, m_j) with w2 in mu_{m_j}
        const auto e = exponent_in(fiij, mj, "reduced f_iij");
        const auto d = gcd_of(mi, mj);
        const auto q = (e - e % d) / d;
        const auto u = remainder(q * inverse_mod(mi / d, mj / d), mj / d);
        const auto w2 = UnityScalar::root(mj, u);
        pairs.push_back(e % d);
        witness.at(i, j) = w1 * w2;
    }
    for (auto [r, s, t] : index_triples(n))
        triples.push_back(exponent_in(f.rst(r, s, t), gcd_of(G.order(r), G.order(s), G.order(t)), "f_rst"));

    NormalForm out{CocycleParams(G, std::move(singles), std::move(pairs), std::move(triples)), witness};
    if (!(representative_cochain(out.params) * tensor_coboundary(out.witness) == f))
        throw std::logic_error("reduce_to_normal_form: witness does not reproduce the input");
    return out;
}

// ---- bar side --------------------------------------------------------------

CochainTable2::CochainTable2(const CyclicFactorization& group)
    : group_(group), order_(group.group_order()),
      values_(static_cast<std::size_t>(order_ * order_)) {}

CocycleTable bar_coboundary(const CochainTable2& b) {
    const auto& G = b.group();
    const auto prod = multiplication_table(G);
    CocycleTable t(G);
    const auto n = t.group_order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (std::int64_t z = 0; z < n; ++z)
                t.at(x, y, z) = b.at(y, z) / b.at(prod[x * n + y], z) * b.at(x, prod[y * n + z]) / b.at(x, y);
    return t;
}

std::optional<CochainTable2> is_bar_coboundary(const CocycleTable& t, std::int64_t max_order) {
    const auto& G = t.group();
    const auto n = t.group_order();
    if (n > max_order)
        throw GuardExceeded("bar coboundary test on " + G.to_string() + " (|G| = " +
                            std::to_string(n) + ") exceeds the limit |G| <= " + std::to_string(max_order));
    if (auto v = verify_normalized(t); !v)
        throw NotACocycle("table is not normalized: " + v.detail);
    if (auto v = verify_pentagon(t); !v)
        throw NotACocycle("table is not a 3-cocycle: " + v.detail);

    // unknowns b(u, v) for u, v != 1; one equation per triple of non-identity elements
    const auto k = n - 1;
    auto col = [&](std::int64_t u, std::int64_t v) { return static_cast<std::size_t>((u - 1) * k + (v - 1)); };
    const auto prod = multiplication_table(G);
    IntMatrix m(static_cast<std::size_t>(k * k * k), static_cast<std::size_t>(k * k));
    std::vector<UnityScalar> rhs;
    rhs.reserve(m.rows());
    std::size_t row = 0;
    for (std::int64_t x = 1; x < n; ++x)
        for (std::int64_t y = 1; y < n; ++y)
            for (std::int64_t z = 1; z < n; ++z, ++row) {
                const auto xy = prod[x * n + y], yz = prod[y * n + z];
                m(row, col(y, z)) += 1;
                if (xy != 0)
                    m(row, col(xy, z)) -= 1;
                if (yz != 0)
                    m(row, col(x, yz)) += 1;
                m(row, col(x, y)) -= 1;
                rhs.push_back(t.at(x, y, z));
            }
    auto sol = solve_mod1(m, rhs);
    if (!sol)
        return std::nullopt;
    CochainTable2 b(G);
    for (std::int64_t u = 1; u < n; ++u)
        for (std::int64_t v = 1; v < n; ++v)
            b.at(u, v) = (*sol)[col(u, v)];
    if (!(bar_coboundary(b) == t))
        throw std::logic_error("is_bar_coboundary: witness does not reproduce the table");
    return b;
}

Classification classify(const CocycleTable& t, const ClassifyOptions& options) {
    std::optional<CocycleParams> found;
    bool unique = true;
    for (const auto& a : enumerate_params(t.group())) {
        if (!is_bar_coboundary(t * build_table(a).inv(), options.max_order))
            continue;
        if (!found) {
            found = a;
            if (!options.check_unique)
                break;
        } else {
            unique = false;
            break;
        }
    }
    if (!found)
        throw NotACocycle("no canonical cocycle is cohomologous to the table");
    Classification out{*found, std::nullopt};
    if (options.check_unique)
        out.unique = unique;
    return out;
}

}  // namespace grcat
