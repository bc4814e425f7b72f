#include "grcat/resolutions.hpp"

#include "grcat/errors.hpp"
#include "grcat/parallel.hpp"

#include <sstream>

namespace grcat {

// ---- GroupRingElement ------------------------------------------------------

GroupRingElement GroupRingElement::of(std::int64_t element, std::int64_t coeff) {
    GroupRingElement r;
    r.add(element, coeff);
    return r;
}

void GroupRingElement::add(std::int64_t element, std::int64_t coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(element, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (auto [g, c] : o.terms_)
        add(g, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (auto [g, c] : o.terms_)
        add(g, -c);
    return *this;
}

GroupRingElement GroupRingElement::operator-() const { return scaled(-1); }

GroupRingElement GroupRingElement::scaled(std::int64_t k) const {
    GroupRingElement r;
    if (k == 0)
        return r;
    r.terms_ = terms_;
    for (auto& [g, c] : r.terms_)
        c *= k;
    return r;
}

std::int64_t GroupRingElement::augmentation() const {
    std::int64_t s = 0;
    for (auto [g, c] : terms_)
        s += c;
    return s;
}

// ---- BarGenerator ----------------------------------------------------------

BarGenerator BarGenerator::make(std::vector<std::int64_t> entries) {
    BarGenerator g;
    g.degree_ = static_cast<int>(entries.size());
    for (auto e : entries)
        if (e == 0) {
            g.zero_ = true;
            return g;
        }
    g.entries_ = std::move(entries);
    return g;
}

BarGenerator BarGenerator::make(const std::vector<GroupElement>& entries) {
    std::vector<std::int64_t> idx;
    for (const auto& e : entries)
        idx.push_back(element_index(e));
    return make(std::move(idx));
}

// ---- printing --------------------------------------------------------------

namespace {

std::string ring_to_string(const CyclicFactorization& group, const GroupRingElement& c) {
    std::ostringstream os;
    bool first = true;
    for (auto [g, k] : c.terms()) {
        os << (first ? "" : (k < 0 ? " - " : " + "));
        if (first && k < 0)
            os << "-";
        first = false;
        auto ak = k < 0 ? -k : k;
        if (ak != 1)
            os << ak << "*";
        os << from_index(group, g).to_string();
    }
    return os.str();
}

}  // namespace

std::string to_string(const CyclicFactorization& group, const TensorChain& v) {
    if (v.is_zero())
        return "0";
    std::string s;
    for (const auto& [g, c] : v.terms())
        s += (s.empty() ? "" : " + ") + std::string("(") + ring_to_string(group, c) + ")" +
             g.to_string();
    return s;
}

std::string to_string(const CyclicFactorization& group, const BarChain& v) {
    if (v.is_zero())
        return "0";
    std::string s;
    for (const auto& [g, c] : v.terms()) {
        std::string sym = "[";
        for (std::size_t k = 0; k < g.entries().size(); ++k)
            sym += (k ? "|" : "") + from_index(group, g.entries()[k]).to_string();
        s += (s.empty() ? "" : " + ") + std::string("(") + ring_to_string(group, c) + ")" + sym + "]";
    }
    return s;
}

// ---- Resolutions -----------------------------------------------------------

Resolutions::Resolutions(const CyclicFactorization& group)
    : group_(group), order_(group.group_order()) {
    const auto n = group.rank();
    exps_.resize(static_cast<std::size_t>(order_));
    for (std::int64_t x = 0; x < order_; ++x) {
        auto e = from_index(group, x);
        exps_[x].assign(e.exps().begin(), e.exps().end());
    }
    prod_.resize(static_cast<std::size_t>(order_ * order_));
    for (std::int64_t x = 0; x < order_; ++x)
        for (std::int64_t y = 0; y < order_; ++y) {
            std::vector<std::int64_t> e(n);
            for (std::size_t l = 0; l < n; ++l)
                e[l] = exps_[x][l] + exps_[y][l];
            prod_[x * order_ + y] = element_of(e);
        }
    prefix_.resize(static_cast<std::size_t>(order_));
    for (std::int64_t x = 0; x < order_; ++x)
        for (std::size_t s = 0; s <= n; ++s) {
            std::vector<std::int64_t> e(n, 0);
            for (std::size_t l = 0; l < s; ++l)
                e[l] = exps_[x][l];
            prefix_[x].push_back(element_of(e));
        }
}

std::int64_t Resolutions::element_of(const std::vector<std::int64_t>& exps) const {
    std::int64_t idx = 0;
    for (std::size_t l = 0; l < exps.size(); ++l)
        idx = idx * group_.order(l) + remainder(exps[l], group_.order(l));
    return idx;
}

std::int64_t Resolutions::prefix(std::int64_t x, std::size_t s) const { return prefix_[x][s]; }

std::int64_t Resolutions::gen_power(std::size_t s, std::int64_t k) const {
    std::vector<std::int64_t> e(group_.rank(), 0);
    e[s] = k;
    return element_of(e);
}

GroupRingElement Resolutions::t_elem(std::size_t i) const {
    GroupRingElement r = GroupRingElement::of(gen_power(i, 1));
    r.add(0, -1);
    return r;
}

GroupRingElement Resolutions::n_elem(std::size_t i) const {
    GroupRingElement r;
    for (std::int64_t k = 0; k < group_.order(i); ++k)
        r.add(gen_power(i, k), 1);
    return r;
}

GroupRingElement Resolutions::multiply(const GroupRingElement& a, const GroupRingElement& b) const {
    GroupRingElement r;
    for (auto [g, c] : a.terms())
        for (auto [h, d] : b.terms())
            r.add(mul(g, h), c * d);
    return r;
}

GroupRingElement Resolutions::translate(std::int64_t h, const GroupRingElement& a) const {
    GroupRingElement r;
    for (auto [g, c] : a.terms())
        r.add(mul(h, g), c);
    return r;
}

BarChain Resolutions::bar_differential(const BarChain& v) const {
    BarChain out;
    for (const auto& [gen, coeff] : v.terms()) {
        const auto& h = gen.entries();
        const int m = gen.degree();
        if (m < 1 || m > 3)
            throw InvalidArgument("bar differential defined on degrees 1..3, got " + std::to_string(m));
        // h_1 [h_2 | ... | h_m]
        out.add(BarGenerator::make(std::vector<std::int64_t>(h.begin() + 1, h.end())),
                translate(h[0], coeff));
        // sum (-1)^i [... | h_i h_{i+1} | ...]
        for (int i = 1; i < m; ++i) {
            std::vector<std::int64_t> e;
            for (int k = 0; k < m; ++k) {
                if (k == i)
                    continue;
                e.push_back(k == i - 1 ? mul(h[i - 1], h[i]) : h[k]);
            }
            out.add(BarGenerator::make(std::move(e)), i % 2 ? -coeff : coeff);
        }
        // (-1)^m [h_1 | ... | h_{m-1}]
        out.add(BarGenerator::make(std::vector<std::int64_t>(h.begin(), h.end() - 1)),
                m % 2 ? -coeff : coeff);
    }
    return out;
}

TensorChain Resolutions::tensor_differential(const TensorChain& v) const {
    TensorChain out;
    const auto n = group_.rank();
    for (const auto& [gen, coeff] : v.terms()) {
        if (gen.a.size() != n)
            throw InvalidArgument("tensor generator " + gen.to_string() + " has wrong rank");
        if (gen.degree() < 1 || gen.degree() > 4)
            throw InvalidArgument("tensor differential defined on degrees 1..4, got " +
                                  std::to_string(gen.degree()));
        int before = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int ai = gen.a[i];
            if (ai != 0) {
                TensorGenerator lower = gen;
                --lower.a[i];
                auto op = ai % 2 == 0 ? n_elem(i) : t_elem(i);
                auto c = multiply(op, coeff);
                out.add(lower, before % 2 ? -c : c);
            }
            before += ai;
        }
    }
    return out;
}

TensorChain Resolutions::chain_map(const BarGenerator& g) const {
    TensorChain out;
    if (g.is_zero())
        return out;
    const auto n = group_.rank();
    const auto& h = g.entries();
    const auto m = [&](std::size_t l) { return group_.order(l); };
    switch (g.degree()) {
    case 1: {
        const auto x = h[0];
        for (std::size_t s = 0; s < n; ++s)
            for (std::int64_t al = 0; al < exps_[x][s]; ++al)
                out.add(phi(n, {s}), mul(prefix(x, s), gen_power(s, al)), 1);
        break;
    }
    case 2: {
        const auto x = h[0], y = h[1];
        const auto xy = mul(x, y);
        for (std::size_t s = 0; s < n; ++s)
            if (auto c = carry(exps_[x][s], exps_[y][s], m(s)))
                out.add(phi(n, {s, s}), prefix(xy, s), c);
        for (auto [s, t] : index_pairs(n)) {
            const auto base = mul(prefix(x, t), prefix(y, s));
            for (std::int64_t al = 0; al < exps_[y][s]; ++al)
                for (std::int64_t be = 0; be < exps_[x][t]; ++be)
                    out.add(phi(n, {s, t}), mul(base, mul(gen_power(s, al), gen_power(t, be))), -1);
        }
        break;
    }
    case 3: {
        const auto x = h[0], y = h[1], z = h[2];
        const auto xy = mul(x, y), yz = mul(y, z);
        for (std::size_t r = 0; r < n; ++r)
            if (auto c = carry(exps_[y][r], exps_[z][r], m(r)))
                for (std::int64_t be = 0; be < exps_[x][r]; ++be)
                    out.add(phi(n, {r, r, r}),
                            mul(prefix(yz, r), mul(prefix(x, r), gen_power(r, be))), c);
        for (auto [r, t] : index_pairs(n)) {
            if (auto c = carry(exps_[y][r], exps_[z][r], m(r)))
                for (std::int64_t be = 0; be < exps_[x][t]; ++be)
                    out.add(phi(n, {r, r, t}),
                            mul(prefix(yz, r), mul(prefix(x, t), gen_power(t, be))), c);
            if (auto c = carry(exps_[x][t], exps_[y][t], m(t)))
                for (std::int64_t ga = 0; ga < exps_[z][r]; ++ga)
                    out.add(phi(n, {r, t, t}),
                            mul(prefix(xy, t), mul(prefix(z, r), gen_power(r, ga))), c);
        }
        for (auto [r, s, t] : index_triples(n))
            for (std::int64_t be = 0; be < exps_[x][t]; ++be) {
                const auto xt = mul(prefix(x, t), gen_power(t, be));
                for (std::int64_t al = 0; al < exps_[y][s]; ++al) {
                    const auto ys = mul(xt, mul(prefix(y, s), gen_power(s, al)));
                    for (std::int64_t ga = 0; ga < exps_[z][r]; ++ga)
                        out.add(phi(n, {r, s, t}), mul(ys, mul(prefix(z, r), gen_power(r, ga))), -1);
                }
            }
        break;
    }
    default:
        throw InvalidArgument("chain maps F_m exist for m = 1, 2, 3 only");
    }
    return out;
}

TensorChain Resolutions::chain_map(const BarChain& v) const {
    TensorChain out;
    for (const auto& [gen, coeff] : v.terms()) {
        if (gen.degree() == 0) {
            out.add(TensorGenerator{std::vector<int>(group_.rank(), 0)}, coeff);
            continue;
        }
        const auto image = chain_map(gen);
        for (const auto& [tg, tc] : image.terms())
            out.add(tg, multiply(coeff, tc));
    }
    return out;
}

UnityScalar Resolutions::pullback(const TensorCochain3& f, std::int64_t x, std::int64_t y,
                                  std::int64_t z) const {
    UnityScalar w;
    const auto image = chain_map(BarGenerator::make({x, y, z}));
    for (const auto& [gen, coeff] : image.terms())
        w *= f.on(gen).pow(coeff.augmentation());
    return w;
}

std::vector<BarGenerator> Resolutions::bar_generators(int m) const {
    std::vector<BarGenerator> out;
    std::vector<std::int64_t> e(static_cast<std::size_t>(m), 1);
    if (order_ < 2)
        return out;
    for (;;) {
        out.push_back(BarGenerator::make(e));
        int k = m - 1;
        while (k >= 0 && ++e[k] == order_) {
            e[k] = 1;
            --k;
        }
        if (k < 0)
            return out;
    }
}

std::vector<TensorGenerator> Resolutions::tensor_generators(int m) const {
    std::vector<TensorGenerator> out;
    const auto n = group_.rank();
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == n) {
            a[pos] = left;
            out.push_back(TensorGenerator{a});
            return;
        }
        for (int k = left; k >= 0; --k) {
            a[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, m);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- free functions --------------------------------------------------------

BarChain bar_differential(const CyclicFactorization& group, const BarChain& v) {
    return Resolutions(group).bar_differential(v);
}

TensorChain tensor_differential(const CyclicFactorization& group, const TensorChain& v) {
    return Resolutions(group).tensor_differential(v);
}

TensorChain chain_map_F(const CyclicFactorization& group, const BarGenerator& g) {
    return Resolutions(group).chain_map(g);
}

ChainMapReport verify_chain_map(const CyclicFactorization& group, std::int64_t max_generators) {
    const auto nonid = group.group_order() - 1;
    if (nonid * nonid * nonid > max_generators)
        throw GuardExceeded("chain-map check on " + group.to_string() + " needs " +
                            std::to_string(nonid * nonid * nonid) +
                            " degree-3 generators, limit is " + std::to_string(max_generators));
    const Resolutions res(group);
    ChainMapReport report;
    for (int m = 1; m <= 3; ++m) {
        const auto gens = res.bar_generators(m);
        report.generators_checked[m - 1] = static_cast<std::int64_t>(gens.size());
        auto sides = [&](const BarGenerator& g) {
            BarChain single;
            single.add(g, 0, 1);
            return std::pair{res.tensor_differential(res.chain_map(g)),
                             res.chain_map(res.bar_differential(single))};
        };
        auto bad = first_failure(gens.size(), [&](std::uint64_t k) {
            auto [lhs, rhs] = sides(gens[k]);
            return !(lhs == rhs);
        });
        if (!bad)
            continue;
        const auto& g = gens[*bad];
        std::vector<GroupElement> w;
        for (auto e : g.entries())
            w.push_back(from_index(group, e));
        auto [lhs, rhs] = sides(g);
        std::string sym;
        for (const auto& e : w)
            sym += (sym.empty() ? "" : "|") + e.to_string();
        report.squares[m - 1] =
            Verdict::fail(w, "square " + std::to_string(m) + " fails on [" + sym + "]: d F = " +
                                 to_string(group, lhs) + ", F del = " + to_string(group, rhs));
    }
    return report;
}

CocycleTable pullback_3cochain(const TensorCochain3& f, std::int64_t max_cells) {
    CocycleTable t(f.group(), max_cells);
    const Resolutions res(f.group());
    const auto n = t.group_order();
    for (std::int64_t x = 1; x < n; ++x)
        for (std::int64_t y = 1; y < n; ++y)
            for (std::int64_t z = 1; z < n; ++z)
                t.at(x, y, z) = res.pullback(f, x, y, z);
    return t;
}

}  // namespace grcat
