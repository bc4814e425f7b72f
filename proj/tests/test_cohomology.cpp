#include "grcat/cohomology.hpp"
#include "grcat/errors.hpp"
#include "grcat/resolutions.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace grcat;

namespace {

const std::vector<std::vector<std::int64_t>> kGroups = {{2}, {2, 2}, {4, 2}, {2, 2, 2}, {6, 4}, {3, 3}, {2, 6, 4}};

UnityScalar random_root(std::mt19937_64& rng, std::int64_t n) {
    return UnityScalar(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)), n);
}

CoboundaryWitness2 random_witness(std::mt19937_64& rng, const CyclicFactorization& G) {
    CoboundaryWitness2 w(G);
    for (auto [i, j] : index_pairs(G.rank()))
        w.at(i, j) = random_root(rng, G.order(i) * G.order(j) * (1 + static_cast<std::int64_t>(rng() % 3)));
    return w;
}

// g with g^{m_i} = u and g^{-m_j} = v, searched over (1/L)Z with L = lcm(m_i den u, m_j den v).
bool pair_solvable(const UnityScalar& u, const UnityScalar& v, std::int64_t mi, std::int64_t mj) {
    const auto L = std::lcm(mi * u.den(), mj * v.den());
    for (std::int64_t k = 0; k < L; ++k) {
        const UnityScalar g(k, L);
        if (g.pow(mi) == u && g.pow(-mj) == v)
            return true;
    }
    return false;
}

// Random tensor 3-cocycle: each value drawn from the roots satisfying its own condition.
TensorCochain3 random_cocycle(std::mt19937_64& rng, const CyclicFactorization& G) {
    TensorCochain3 f(G);
    const auto n = G.rank();
    for (std::size_t l = 0; l < n; ++l)
        f.lll(l) = random_root(rng, G.order(l));
    for (auto [i, j] : index_pairs(n)) {
        // f_iij^{m_j} f_ijj^{m_i} = 1: pick f_ijj freely, then f_iij from the m_j-th roots of f_ijj^{-m_i}.
        f.ijj(i, j) = random_root(rng, 12);
        const auto target = f.ijj(i, j).pow(-G.order(i));
        f.iij(i, j) = target.canonical_root(G.order(j)) * random_root(rng, G.order(j));
    }
    for (auto t : index_triples(n))
        f.rst(t[0], t[1], t[2]) = random_root(rng, std::gcd(std::gcd(G.order(t[0]), G.order(t[1])), G.order(t[2])));
    return f;
}

CochainTable2 random_normalized_2cochain(std::mt19937_64& rng, const CyclicFactorization& G, std::int64_t n) {
    CochainTable2 b(G);
    for (std::int64_t x = 1; x < G.group_order(); ++x)
        for (std::int64_t y = 1; y < G.group_order(); ++y)
            b.at(x, y) = random_root(rng, n);
    return b;
}

}  // namespace

TEST_CASE("h3_order") {
    CHECK(h3_order(CyclicFactorization({2})) == 2);
    CHECK(h3_order(CyclicFactorization({2, 2})) == 8);
    CHECK(h3_order(CyclicFactorization({4, 2})) == 16);
    CHECK(h3_order(CyclicFactorization({2, 2, 2})) == 128);
    CHECK(h3_order(CyclicFactorization({6, 4})) == 48);
    CHECK(h3_order(CyclicFactorization({3, 3})) == 27);
    CHECK_THROWS_AS(h3_order(CyclicFactorization(std::vector<std::int64_t>(12, 1LL << 5))), GuardExceeded);
}

TEST_CASE("representatives") {
    CyclicFactorization v4({2, 2});
    CHECK(representative_cochain(CocycleParams::zero(v4)) == TensorCochain3(v4));
    const auto f = representative_cochain(CocycleParams(v4, {1, 0}, {1}, {}));
    CHECK(f.lll(0) == UnityScalar(1, 2));
    CHECK(f.lll(1).is_one());
    CHECK(f.iij(0, 1) == UnityScalar(1, 2));
    CHECK(f.ijj(0, 1).is_one());
    CyclicFactorization g64({6, 4});
    CHECK(representative_cochain(CocycleParams(g64, {0, 0}, {1}, {})).iij(0, 1) == UnityScalar(1, 4));
}

TEST_CASE("is_tensor_cocycle") {
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        for (const auto& a : enumerate_params(G))
            CHECK(is_tensor_cocycle(representative_cochain(a)).holds);
    }
    CyclicFactorization v4({2, 2});
    CHECK(is_tensor_cocycle(TensorCochain3(v4)).holds);
    TensorCochain3 bad(v4);
    bad.lll(0) = UnityScalar(1, 3);
    const auto v = is_tensor_cocycle(bad);
    CHECK_FALSE(v.holds);
    CHECK(v.detail.find("f_{1,1,1}") != std::string::npos);
    TensorCochain3 bad2(v4);
    bad2.iij(0, 1) = UnityScalar(1, 4);
    CHECK_FALSE(is_tensor_cocycle(bad2).holds);
    bad2.ijj(0, 1) = UnityScalar(3, 4);
    CHECK(is_tensor_cocycle(bad2).holds);
    CyclicFactorization z222({2, 2, 2});
    TensorCochain3 bad3(z222);
    bad3.rst(0, 1, 2) = UnityScalar(1, 4);
    CHECK_FALSE(is_tensor_cocycle(bad3).holds);
}

TEST_CASE("is_tensor_coboundary") {
    CyclicFactorization v4({2, 2});
    auto w = is_tensor_coboundary(TensorCochain3(v4));
    REQUIRE(w);
    CHECK(w->is_trivial());

    TensorCochain3 f(v4);
    f.iij(0, 1) = UnityScalar(1, 4);
    f.ijj(0, 1) = UnityScalar(3, 4);
    w = is_tensor_coboundary(f);
    REQUIRE(w);
    CHECK(w->at(0, 1).pow(2) == UnityScalar(1, 4));
    CHECK(tensor_coboundary(*w) == f);

    TensorCochain3 h(v4);
    h.iij(0, 1) = UnityScalar(1, 2);
    CHECK_FALSE(is_tensor_coboundary(h));
    TensorCochain3 diag(v4);
    diag.lll(1) = UnityScalar(1, 2);
    CHECK_FALSE(is_tensor_coboundary(diag));
}

TEST_CASE("is_tensor_coboundary agrees with a per-pair search") {
    std::mt19937_64 rng(29);
    for (const auto& o : std::vector<std::vector<std::int64_t>>{{2, 2}, {4, 2}, {6, 4}, {3, 9}, {2, 6, 4}}) {
        CyclicFactorization G(o);
        for (int trial = 0; trial < 60; ++trial) {
            TensorCochain3 f(G);
            bool expected = true;
            for (auto [i, j] : index_pairs(G.rank())) {
                f.iij(i, j) = random_root(rng, 2 * G.order(j));
                f.ijj(i, j) = random_root(rng, 2 * G.order(i));
                if (trial % 3 == 0) {
                    // force the consistent case half the time
                    const auto g = random_root(rng, 4 * G.order(i) * G.order(j));
                    f.iij(i, j) = g.pow(G.order(i));
                    f.ijj(i, j) = g.pow(-G.order(j));
                }
                expected = expected && pair_solvable(f.iij(i, j), f.ijj(i, j), G.order(i), G.order(j));
            }
            const auto w = is_tensor_coboundary(f);
            CHECK(w.has_value() == expected);
            if (w)
                CHECK(tensor_coboundary(*w) == f);
        }
    }
}

TEST_CASE("normal form of representatives is the identity") {
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        for (const auto& a : enumerate_params(G)) {
            const auto nf = reduce_to_normal_form(representative_cochain(a));
            CHECK(nf.params == a);
            CHECK(nf.witness.is_trivial());
        }
    }
}

TEST_CASE("normal form is invariant under coboundaries") {
    std::mt19937_64 rng(31);
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        const auto all = enumerate_params(G);
        for (int trial = 0; trial < 40; ++trial) {
            const auto& a = all[rng() % all.size()];
            const auto f = representative_cochain(a) * tensor_coboundary(random_witness(rng, G));
            REQUIRE(is_tensor_cocycle(f).holds);
            const auto nf = reduce_to_normal_form(f);
            CHECK(nf.params == a);
            CHECK(representative_cochain(nf.params) * tensor_coboundary(nf.witness) == f);
        }
    }
    CyclicFactorization v4({2, 2});
    TensorCochain3 f(v4);
    f.iij(0, 1) = UnityScalar(1, 4);
    f.ijj(0, 1) = UnityScalar(3, 4);
    CHECK(reduce_to_normal_form(f).params.is_zero());
}

TEST_CASE("normal form of random cocycles") {
    std::mt19937_64 rng(37);
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = random_cocycle(rng, G);
            REQUIRE(is_tensor_cocycle(f).holds);
            const auto nf = reduce_to_normal_form(f);
            CHECK(representative_cochain(nf.params) * tensor_coboundary(nf.witness) == f);
            // two cocycles are cohomologous iff their quotient is a tensor coboundary
            CHECK(is_tensor_coboundary(f * representative_cochain(nf.params).inv()).has_value());
        }
    }
    CyclicFactorization v4({2, 2});
    TensorCochain3 bad(v4);
    bad.lll(0) = UnityScalar(1, 3);
    CHECK_THROWS_AS(reduce_to_normal_form(bad), NotACocycle);
}

TEST_CASE("bar coboundaries") {
    CyclicFactorization z2({2});
    auto w = is_bar_coboundary(CocycleTable(z2));
    REQUIRE(w);
    CHECK(*w == CochainTable2(z2));
    CHECK_FALSE(is_bar_coboundary(build_table(CocycleParams(z2, {1}, {}, {}))));

    std::mt19937_64 rng(41);
    for (const auto& o : std::vector<std::vector<std::int64_t>>{{2, 2}, {4}, {3, 2}, {2, 2, 2}}) {
        CyclicFactorization G(o);
        for (int trial = 0; trial < 5; ++trial) {
            const auto b = random_normalized_2cochain(rng, G, 8);
            const auto t = bar_coboundary(b);
            CHECK(verify_normalized(t).holds);
            CHECK(verify_pentagon(t).holds);
            const auto found = is_bar_coboundary(t);
            REQUIRE(found);
            CHECK(bar_coboundary(*found) == t);
        }
    }
    CyclicFactorization v4({2, 2});
    CocycleTable bad(v4);
    bad.at(1, 2, 3) = UnityScalar(1, 2);
    CHECK_THROWS_AS(is_bar_coboundary(bad), NotACocycle);
    CHECK_THROWS_AS(is_bar_coboundary(CocycleTable(CyclicFactorization({13}))), GuardExceeded);
}

TEST_CASE("classify") {
    for (const auto& o : std::vector<std::vector<std::int64_t>>{{2}, {3}, {2, 2}, {4, 2}}) {
        CyclicFactorization G(o);
        for (const auto& a : enumerate_params(G))
            CHECK(classify(build_table(a)).params == a);
    }
    CyclicFactorization v4({2, 2});
    CHECK(classify(CocycleTable(v4)).params.is_zero());
    ClassifyOptions opts;
    opts.check_unique = true;
    const auto c = classify(build_table(enumerate_params(v4)[5]), opts);
    CHECK(c.params == enumerate_params(v4)[5]);
    REQUIRE(c.unique);
    CHECK(*c.unique);
    CHECK_FALSE(classify(CocycleTable(v4)).unique);

    std::mt19937_64 rng(43);
    const auto all = enumerate_params(v4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& a = all[rng() % all.size()];
        const auto t = build_table(a) * bar_coboundary(random_normalized_2cochain(rng, v4, 8));
        CHECK(classify(t).params == a);
    }
    CocycleTable bad(v4);
    bad.at(3, 3, 3) = UnityScalar(1, 3);
    CHECK_THROWS_AS(classify(bad), NotACocycle);
}

TEST_CASE("tensor normal form and bar classification agree") {
    std::mt19937_64 rng(47);
    for (const auto& o : std::vector<std::vector<std::int64_t>>{{2, 2}, {4, 2}, {2, 2, 2}, {3, 3}}) {
        CyclicFactorization G(o);
        for (int trial = 0; trial < 6; ++trial) {
            const auto f = random_cocycle(rng, G);
            CHECK(classify(pullback_3cochain(f)).params == reduce_to_normal_form(f).params);
        }
    }
}
