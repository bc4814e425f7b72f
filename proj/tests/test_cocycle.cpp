#include "grcat/cocycle.hpp"
#include "grcat/cohomology.hpp"
#include "grcat/errors.hpp"
#include "grcat/parallel.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

using namespace grcat;

namespace {

// Angle p/q in [0,1), kept reduced; the test's own arithmetic, separate from UnityScalar.
struct Angle {
    std::int64_t p = 0, q = 1;
    Angle() = default;
    Angle(std::int64_t p_, std::int64_t q_) {
        p = ((p_ % q_) + q_) % q_;
        q = q_;
        auto g = std::gcd(p, q);
        if (p == 0)
            g = q;
        p /= g;
        q /= g;
    }
    Angle operator+(Angle o) const {
        auto l = std::lcm(q, o.q);
        return Angle(p * (l / q) + o.p * (l / o.q), l);
    }
    Angle operator-() const { return Angle(-p, q); }
    bool matches(const UnityScalar& s) const { return s.num() == p && s.den() == q; }
};

std::int64_t fl(std::int64_t s, std::int64_t t) { return s >= 0 ? s / t : -((-s + t - 1) / t); }

// Direct transcription of the canonical cocycle with x=(i), y=(j), z=(k).
Angle omega_ref(const CocycleParams& a, const std::vector<std::int64_t>& i, const std::vector<std::int64_t>& j,
                const std::vector<std::int64_t>& k) {
    const auto& G = a.group();
    const auto n = G.rank();
    Angle total;
    for (std::size_t l = 0; l < n; ++l) {
        const auto m = G.order(l);
        total = total + Angle(a.single(l) * i[l] * fl(j[l] + k[l], m), m);
    }
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t)
            total = total + Angle(a.pair(s, t) * i[t] * fl(j[s] + k[s], G.order(s)), G.order(t));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
            for (std::size_t t = s + 1; t < n; ++t) {
                const auto g = std::gcd(std::gcd(G.order(r), G.order(s)), G.order(t));
                total = total + Angle(-a.triple(r, s, t) * k[r] * j[s] * i[t], g);
            }
    return total;
}

std::vector<std::int64_t> vec(const GroupElement& x) { return {x.exps().begin(), x.exps().end()}; }

// Sequential scan for the first failing pentagon 4-tuple, or -1.
std::int64_t first_pentagon_failure(const CocycleTable& t) {
    const auto n = t.group_order();
    const auto mult = multiplication_table(t.group());
    auto m = [&](std::int64_t x, std::int64_t y) { return mult[x * n + y]; };
    for (std::int64_t e = 0; e < n; ++e)
        for (std::int64_t f = 0; f < n; ++f)
            for (std::int64_t g = 0; g < n; ++g)
                for (std::int64_t h = 0; h < n; ++h) {
                    auto lhs = t.at(m(e, f), g, h) * t.at(e, f, m(g, h));
                    auto rhs = t.at(e, f, g) * t.at(e, m(f, g), h) * t.at(f, g, h);
                    if (!(lhs == rhs))
                        return ((e * n + f) * n + g) * n + h;
                }
    return -1;
}

CocycleParams params(const CyclicFactorization& G, std::vector<std::int64_t> s, std::vector<std::int64_t> p = {},
                     std::vector<std::int64_t> t = {}) {
    if (p.empty())
        p.assign(index_pairs(G.rank()).size(), 0);
    if (t.empty())
        t.assign(index_triples(G.rank()).size(), 0);
    return CocycleParams(G, std::move(s), std::move(p), std::move(t));
}

const std::vector<std::vector<std::int64_t>> kGroups = {{2}, {3}, {4}, {2, 2}, {4, 2}, {3, 3}, {3, 2}, {2, 2, 2}};

}  // namespace

TEST_CASE("index helpers") {
    CHECK(index_pairs(3) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(index_triples(4).size() == 4);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto ps = index_pairs(n);
        for (std::size_t k = 0; k < ps.size(); ++k)
            CHECK(pair_position(n, ps[k].first, ps[k].second) == k);
        const auto ts = index_triples(n);
        for (std::size_t k = 0; k < ts.size(); ++k)
            CHECK(triple_position(n, ts[k][0], ts[k][1], ts[k][2]) == k);
    }
}

TEST_CASE("parameter ranges") {
    CyclicFactorization G({6, 4});
    CHECK_NOTHROW(params(G, {5, 3}, {1}));
    CHECK_THROWS_AS(params(G, {6, 0}, {0}), InvalidArgument);
    CHECK_THROWS_AS(params(G, {0, 0}, {2}), InvalidArgument);
    CHECK_THROWS_AS(params(G, {0, -1}, {0}), InvalidArgument);
    CHECK_THROWS_AS(CocycleParams(G, {0}, {0}, {}), InvalidArgument);
    CHECK_THROWS_AS(CocycleParams(G, {0, 0}, {}, {}), InvalidArgument);
    CyclicFactorization H({3, 2});
    CHECK_THROWS_AS(params(H, {0, 0}, {1}), InvalidArgument);
    CHECK(params(G, {5, 3}, {1}).to_string() == "5,3;1;");
    CHECK(CocycleParams::zero(G).is_zero());
}

TEST_CASE("enumerate_params") {
    CHECK(enumerate_params(CyclicFactorization({2})).size() == 2);
    CHECK(enumerate_params(CyclicFactorization({2, 2})).size() == 8);
    const auto z32 = enumerate_params(CyclicFactorization({3, 2}));
    CHECK(z32.size() == 6);
    for (const auto& a : z32)
        CHECK(a.pair(0, 1) == 0);
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        const auto all = enumerate_params(G);
        CHECK(static_cast<std::int64_t>(all.size()) == h3_order(G));
        CHECK(all.front().is_zero());
        for (std::size_t k = 1; k < all.size(); ++k)
            CHECK_FALSE(all[k] == all[k - 1]);
    }
}

TEST_CASE("documented values of omega") {
    CyclicFactorization z2({2});
    const GroupElement g(z2, {1});
    CHECK(eval_omega(params(z2, {1}), g, g, g) == UnityScalar(1, 2));
    CyclicFactorization v4({2, 2});
    const GroupElement g1(v4, {1, 0}), g2(v4, {0, 1});
    CHECK(eval_omega(params(v4, {0, 0}, {1}), g2, g1, g1) == UnityScalar(1, 2));

    auto t0 = build_table(params(z2, {0}));
    for (auto w : t0.values())
        CHECK(w.is_one());
    auto t1 = build_table(params(z2, {1}));
    int non_identity = 0;
    for (auto w : t1.values())
        non_identity += !w.is_one();
    CHECK(non_identity == 1);
    CHECK(t1(g, g, g) == UnityScalar(1, 2));

    CyclicFactorization z3({3});
    const GroupElement h2(z3, {2});
    CHECK(build_table(params(z3, {1}))(h2, h2, h2) == UnityScalar(2, 3));
}

TEST_CASE("omega matches the reference transcription") {
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        const auto els = enumerate(G);
        for (const auto& a : enumerate_params(G)) {
            const auto t = build_table(a);
            for (const auto& x : els)
                for (const auto& y : els)
                    for (const auto& z : els) {
                        CHECK(omega_ref(a, vec(x), vec(y), vec(z)).matches(t(x, y, z)));
                        if (y.is_identity())
                            CHECK(t(x, y, z).is_one());
                    }
        }
    }
}

TEST_CASE("pentagon and normalization hold for every canonical cocycle") {
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        for (const auto& a : enumerate_params(G)) {
            CAPTURE(G.to_string());
            CAPTURE(a.to_string());
            const auto t = build_table(a);
            CHECK(verify_pentagon(t).holds);
            CHECK(verify_normalized(t).holds);
            CHECK(first_pentagon_failure(t) == -1);
        }
    }
    CHECK(verify_pentagon(CocycleTable(CyclicFactorization({3, 2}))).holds);
}

TEST_CASE("pentagon reports the first failing tuple") {
    CyclicFactorization z2({2});
    const GroupElement g(z2, {1});
    // Resetting the single nontrivial entry to 1 yields the trivial cocycle, which passes;
    // at (g,g,g,g) the pentagon reads c^2 = 1, so a value of order 4 breaks it.
    auto t = build_table(params(z2, {1}));
    t.set(g, g, g, UnityScalar::one());
    CHECK(verify_pentagon(t).holds);
    t.set(g, g, g, UnityScalar(1, 4));
    const auto v = verify_pentagon(t);
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness == std::vector<GroupElement>(4, g));

    std::mt19937_64 rng(17);
    CyclicFactorization G({4, 2});
    const auto all = enumerate_params(G);
    for (int trial = 0; trial < 30; ++trial) {
        auto tab = build_table(all[rng() % all.size()]);
        const auto x = 1 + static_cast<std::int64_t>(rng() % 7), y = 1 + static_cast<std::int64_t>(rng() % 7),
                   z = 1 + static_cast<std::int64_t>(rng() % 7);
        tab.at(x, y, z) = tab.at(x, y, z) * UnityScalar(1, 4);
        const auto expected = first_pentagon_failure(tab);
        const auto got = verify_pentagon(tab);
        REQUIRE(expected >= 0);
        REQUIRE_FALSE(got.holds);
        std::int64_t idx = 0;
        for (const auto& w : got.witness)
            idx = idx * 8 + element_index(w);
        CHECK(idx == expected);
    }
}

TEST_CASE("normalization failures") {
    CyclicFactorization z2({2});
    const GroupElement e(z2, {0}), g(z2, {1});
    CocycleTable t(z2);
    CHECK(verify_normalized(t).holds);
    t.set(e, g, g, UnityScalar(1, 2));
    const auto v = verify_normalized(t);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == std::vector<GroupElement>{e, g, g});
    CHECK(verify_normalized(build_table(params(CyclicFactorization({2}), {0}))).holds);
}

TEST_CASE("symmetry in the last two arguments") {
    // Holds whenever no triple parameter is active.
    for (const auto& o : kGroups) {
        CyclicFactorization G(o);
        for (const auto& a : enumerate_params(G)) {
            bool has_triple = false;
            for (auto v : a.triples())
                has_triple |= v != 0;
            CAPTURE(a.to_string());
            CHECK(verify_symmetry_last_two(build_table(a)).holds == !has_triple);
        }
    }
    // The triple factor zeta^{-a k_1 j_2 i_3} is not symmetric under y <-> z.
    CyclicFactorization G({2, 2, 2});
    auto a = params(G, {0, 0, 0}, {0, 0, 0}, {1});
    const GroupElement x(G, {0, 0, 1}), y(G, {0, 1, 0}), z(G, {1, 0, 0});
    const auto t = build_table(a);
    CHECK(t(x, y, z) == UnityScalar(1, 2));
    CHECK(t(x, z, y).is_one());
    CHECK_FALSE(verify_symmetry_last_two(t).holds);

    CyclicFactorization z3({3});
    CocycleTable asym(z3);
    CHECK(verify_symmetry_last_two(asym).holds);
    asym.set(GroupElement(z3, {1}), GroupElement(z3, {1}), GroupElement(z3, {2}), UnityScalar(1, 3));
    CHECK_FALSE(verify_symmetry_last_two(asym).holds);
}

TEST_CASE("table guard and pointwise operations") {
    CHECK_THROWS_AS(CocycleTable(CyclicFactorization({128}), 1000), GuardExceeded);
    CHECK_NOTHROW(CocycleTable(CyclicFactorization({10}), 1000));
    CyclicFactorization G({4, 2});
    const auto all = enumerate_params(G);
    const auto t = build_table(all[5]);
    CHECK(t * t.inv() == CocycleTable(G));
    CHECK(multiplication_table(G)[element_index(GroupElement(G, {3, 1})) * 8 + element_index(GroupElement(G, {1, 1}))] ==
          element_index(GroupElement(G, {0, 0})));
}

TEST_CASE("parallel searches do not depend on the worker count") {
    const char* saved = std::getenv("GRCAT_THREADS");
    const std::string restore = saved ? saved : "";
    std::mt19937_64 rng(59);
    for (const char* threads : {"1", "3", "8"}) {
        setenv("GRCAT_THREADS", threads, 1);
        CHECK(worker_count() == static_cast<unsigned>(std::atoi(threads)));
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint64_t count = 200'000;
            const std::uint64_t a = rng() % count, b = rng() % count;
            auto first = first_failure(count, [&](std::uint64_t i) { return i == a || i == b || i % 99'991 == 7; });
            REQUIRE(first);
            CHECK(*first == std::min({a, b, std::uint64_t{7}}));
            auto kept = parallel_collect(count, [&](std::uint64_t i) { return i % 1000 == a % 1000; });
            CHECK(kept.size() == 200);
            CHECK(std::is_sorted(kept.begin(), kept.end()));
        }
        CHECK_FALSE(first_failure(100'000, [](std::uint64_t) { return false; }));

        CyclicFactorization G({4, 4});
        auto tab = build_table(enumerate_params(G)[7]);
        tab.at(9, 10, 11) = tab.at(9, 10, 11) * UnityScalar(1, 8);
        const auto v = verify_pentagon(tab);
        REQUIRE_FALSE(v.holds);
        std::int64_t idx = 0;
        for (const auto& w : v.witness)
            idx = idx * 16 + element_index(w);
        CHECK(idx == first_pentagon_failure(tab));
    }
    if (saved)
        setenv("GRCAT_THREADS", restore.c_str(), 1);
    else
        unsetenv("GRCAT_THREADS");
}
