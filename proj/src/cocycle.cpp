#include "grcat/cocycle.hpp"

#include "grcat/errors.hpp"
#include "grcat/parallel.hpp"

#include <numeric>

namespace grcat {

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

std::vector<std::array<std::size_t, 3>> index_triples(std::size_t n) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
            for (std::size_t t = s + 1; t < n; ++t)
                out.push_back({r, s, t});
    return out;
}

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t gcd_of(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

std::size_t pair_position(std::size_t n, std::size_t i, std::size_t j) {
    if (!(i < j && j < n))
        throw InvalidArgument("pair index must satisfy i < j < n");
    // pairs starting before i: sum_{k<i} (n - 1 - k)
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::size_t triple_position(std::size_t n, std::size_t r, std::size_t s, std::size_t t) {
    if (!(r < s && s < t && t < n))
        throw InvalidArgument("triple index must satisfy r < s < t < n");
    std::size_t slot = 0;
    for (const auto& tr : index_triples(n)) {
        if (tr[0] == r && tr[1] == s && tr[2] == t)
            return slot;
        ++slot;
    }
    return slot;  // unreachable
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

}  // namespace

CocycleParams::CocycleParams(const CyclicFactorization& group, std::vector<std::int64_t> singles,
                             std::vector<std::int64_t> pairs, std::vector<std::int64_t> triples)
    : group_(group), singles_(std::move(singles)), pairs_(std::move(pairs)),
      triples_(std::move(triples)) {
    const auto n = group_.rank();
    const auto ps = index_pairs(n);
    const auto ts = index_triples(n);
    if (singles_.size() != n || pairs_.size() != ps.size() || triples_.size() != ts.size())
        throw InvalidArgument("parameter tuple for " + group_.to_string() + " needs " +
                              std::to_string(n) + " singles, " + std::to_string(ps.size()) +
                              " pairs and " + std::to_string(ts.size()) + " triples");
    auto check = [](std::int64_t v, std::int64_t bound, const std::string& what) {
        if (v < 0 || v >= bound)
            throw InvalidArgument(what + " = " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(bound) + ")");
    };
    for (std::size_t l = 0; l < n; ++l)
        check(singles_[l], group_.order(l), "a_" + std::to_string(l + 1));
    for (std::size_t k = 0; k < ps.size(); ++k) {
        auto [i, j] = ps[k];
        check(pairs_[k], gcd_of(group_.order(i), group_.order(j)),
              "a_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
    for (std::size_t k = 0; k < ts.size(); ++k) {
        auto [r, s, t] = ts[k];
        check(triples_[k], gcd_of(group_.order(r), group_.order(s), group_.order(t)),
              "a_" + std::to_string(r + 1) + std::to_string(s + 1) + std::to_string(t + 1));
    }
}

CocycleParams CocycleParams::zero(const CyclicFactorization& group) {
    const auto n = group.rank();
    return CocycleParams(group, std::vector<std::int64_t>(n, 0),
                         std::vector<std::int64_t>(index_pairs(n).size(), 0),
                         std::vector<std::int64_t>(index_triples(n).size(), 0));
}

std::int64_t CocycleParams::pair(std::size_t i, std::size_t j) const {
    return pairs_[pair_position(group_.rank(), i, j)];
}

std::int64_t CocycleParams::triple(std::size_t r, std::size_t s, std::size_t t) const {
    return triples_[triple_position(group_.rank(), r, s, t)];
}

bool CocycleParams::is_zero() const {
    auto zero = [](std::span<const std::int64_t> v) {
        return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
    };
    return zero(singles_) && zero(pairs_) && zero(triples_);
}

std::string CocycleParams::to_string() const {
    auto join = [](std::span<const std::int64_t> v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k)
            s += (k ? "," : "") + std::to_string(v[k]);
        return s;
    };
    return join(singles_) + ";" + join(pairs_) + ";" + join(triples_);
}

std::vector<CocycleParams> enumerate_params(const CyclicFactorization& group) {
    const auto n = group.rank();
    const auto ps = index_pairs(n);
    const auto ts = index_triples(n);
    std::vector<std::int64_t> bounds;
    for (std::size_t l = 0; l < n; ++l)
        bounds.push_back(group.order(l));
    for (auto [i, j] : ps)
        bounds.push_back(gcd_of(group.order(i), group.order(j)));
    for (auto [r, s, t] : ts)
        bounds.push_back(gcd_of(group.order(r), group.order(s), group.order(t)));

    std::vector<CocycleParams> out;
    std::vector<std::int64_t> digits(bounds.size(), 0);
    for (;;) {
        out.emplace_back(group, std::vector<std::int64_t>(digits.begin(), digits.begin() + n),
                         std::vector<std::int64_t>(digits.begin() + n, digits.begin() + n + ps.size()),
                         std::vector<std::int64_t>(digits.begin() + n + ps.size(), digits.end()));
        // odometer, last position fastest
        std::size_t k = digits.size();
        while (k > 0) {
            --k;
            if (++digits[k] < bounds[k])
                break;
            digits[k] = 0;
            if (k == 0)
                return out;
        }
        if (digits.empty())
            return out;
    }
}

UnityScalar eval_omega(const CocycleParams& a, const GroupElement& x, const GroupElement& y,
                       const GroupElement& z) {
    const auto& g = a.group();
    if (!(x.group() == g) || !(y.group() == g) || !(z.group() == g))
        throw InvalidArgument("eval_omega: arguments do not belong to " + g.to_string());
    const auto n = g.rank();
    UnityScalar w;
    for (std::size_t l = 0; l < n; ++l) {
        const auto m = g.order(l);
        if (a.single(l) && carry(y.exp(l), z.exp(l), m))
            w *= UnityScalar::root(m, mulmod(a.single(l), x.exp(l), m));
    }
    std::size_t k = 0;
    for (auto [s, t] : index_pairs(n)) {
        const auto coeff = a.pairs()[k++];
        if (coeff && carry(y.exp(s), z.exp(s), g.order(s)))
            w *= UnityScalar::root(g.order(t), mulmod(coeff, x.exp(t), g.order(t)));
    }
    k = 0;
    for (auto [r, s, t] : index_triples(n)) {
        const auto coeff = a.triples()[k++];
        if (!coeff)
            continue;
        const auto d = gcd_of(g.order(r), g.order(s), g.order(t));
        auto e = mulmod(mulmod(coeff, z.exp(r), d), mulmod(y.exp(s), x.exp(t), d), d);
        w *= UnityScalar::root(d, -e);
    }
    return w;
}

CocycleTable::CocycleTable(const CyclicFactorization& group, std::int64_t max_cells)
    : group_(group), order_(group.group_order()) {
    if (order_ > 1'000'000 || order_ * order_ * order_ > max_cells)
        throw GuardExceeded("table for " + group.to_string() + " needs |G|^3 = " +
                            std::to_string(order_) + "^3 cells, limit is " +
                            std::to_string(max_cells));
    values_.assign(static_cast<std::size_t>(order_ * order_ * order_), UnityScalar::one());
}

const UnityScalar& CocycleTable::operator()(const GroupElement& x, const GroupElement& y,
                                            const GroupElement& z) const {
    return at(element_index(x), element_index(y), element_index(z));
}

void CocycleTable::set(const GroupElement& x, const GroupElement& y, const GroupElement& z,
                       UnityScalar w) {
    if (!(x.group() == group_) || !(y.group() == group_) || !(z.group() == group_))
        throw InvalidArgument("table entry does not belong to " + group_.to_string());
    at(element_index(x), element_index(y), element_index(z)) = w;
}

CocycleTable operator*(const CocycleTable& a, const CocycleTable& b) {
    if (!(a.group_ == b.group_))
        throw InvalidArgument("cannot multiply tables over different groups");
    CocycleTable c = a;
    for (std::size_t k = 0; k < c.values_.size(); ++k)
        c.values_[k] *= b.values_[k];
    return c;
}

CocycleTable CocycleTable::inv() const {
    CocycleTable c = *this;
    for (auto& v : c.values_)
        v = v.inv();
    return c;
}

CocycleTable build_table(const CocycleParams& a, std::int64_t max_cells) {
    CocycleTable t(a.group(), max_cells);
    const auto elems = enumerate(a.group());
    const auto n = static_cast<std::int64_t>(elems.size());
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (std::int64_t z = 0; z < n; ++z)
                t.at(x, y, z) = eval_omega(a, elems[x], elems[y], elems[z]);
    return t;
}

std::vector<std::int64_t> multiplication_table(const CyclicFactorization& group) {
    const auto elems = enumerate(group);
    const auto n = static_cast<std::int64_t>(elems.size());
    std::vector<std::int64_t> prod(static_cast<std::size_t>(n * n));
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            prod[x * n + y] = element_index(elems[x] * elems[y]);
    return prod;
}

Verdict verify_pentagon(const CocycleTable& t) {
    const auto n = t.group_order();
    const auto prod = multiplication_table(t.group());
    auto mul = [&](std::int64_t a, std::int64_t b) { return prod[a * n + b]; };
    const auto total = static_cast<std::uint64_t>(n * n * n * n);
    auto fails = [&](std::uint64_t idx) {
        const auto i = static_cast<std::int64_t>(idx);
        const auto h = i % n, g = (i / n) % n, f = (i / (n * n)) % n, e = i / (n * n * n);
        auto lhs = t.at(mul(e, f), g, h) * t.at(e, f, mul(g, h));
        auto rhs = t.at(e, f, g) * t.at(e, mul(f, g), h) * t.at(f, g, h);
        return lhs != rhs;
    };
    auto bad = first_failure(total, fails);
    if (!bad)
        return Verdict::ok();
    const auto i = static_cast<std::int64_t>(*bad);
    std::vector<GroupElement> w;
    for (auto k : {i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n})
        w.push_back(from_index(t.group(), k));
    return Verdict::fail(w, "pentagon fails at (e,f,g,h) = (" + w[0].to_string() + "," +
                                w[1].to_string() + "," + w[2].to_string() + "," +
                                w[3].to_string() + ")");
}

Verdict verify_normalized(const CocycleTable& t) {
    const auto n = t.group_order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (std::int64_t z = 0; z < n; ++z) {
                if (x != 0 && y != 0 && z != 0)
                    continue;
                if (!t.at(x, y, z).is_one()) {
                    std::vector<GroupElement> w{from_index(t.group(), x), from_index(t.group(), y),
                                                from_index(t.group(), z)};
                    return Verdict::fail(w, "value " + t.at(x, y, z).to_string() + " at (" +
                                                w[0].to_string() + "," + w[1].to_string() + "," +
                                                w[2].to_string() + ") with an identity argument");
                }
            }
    return Verdict::ok();
}

Verdict verify_symmetry_last_two(const CocycleTable& t) {
    const auto n = t.group_order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (std::int64_t z = 0; z < n; ++z)
                if (t.at(x, y, z) != t.at(x, z, y)) {
                    std::vector<GroupElement> w{from_index(t.group(), x), from_index(t.group(), y),
                                                from_index(t.group(), z)};
                    return Verdict::fail(w, "omega(x,y,z) = " + t.at(x, y, z).to_string() +
                                                " but omega(x,z,y) = " + t.at(x, z, y).to_string() +
                                                " at (" + w[0].to_string() + "," +
                                                w[1].to_string() + "," + w[2].to_string() + ")");
                }
    return Verdict::ok();
}

}  // namespace grcat
