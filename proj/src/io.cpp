#include "grcat/io.hpp"

#include "grcat/errors.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace grcat::io {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw InvalidArgument("expected an integer in " + std::string(context) + ", got \"" +
                              std::string(s) + "\"");
    return v;
}

std::vector<std::int64_t> parse_list(std::string_view s, std::string_view context) {
    std::vector<std::int64_t> out;
    if (trim(s).empty())
        return out;
    for (auto part : split(s, ','))
        out.push_back(parse_int(part, context));
    return out;
}

std::vector<std::int64_t> int_array(const json& j, std::string_view what) {
    if (!j.is_array())
        throw InvalidArgument(std::string(what) + " must be a JSON array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw InvalidArgument(std::string(what) + " must contain integers only");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

std::string key_of(std::initializer_list<std::size_t> idx) {
    std::string k;
    for (auto i : idx)
        k += (k.empty() ? "" : ",") + std::to_string(i + 1);
    return k;
}

}  // namespace

CyclicFactorization parse_orders(std::string_view text) {
    auto v = parse_list(text, "--orders");
    if (v.empty())
        throw InvalidArgument("--orders needs at least one cyclic factor");
    return CyclicFactorization(std::move(v));
}

json to_json(const CyclicFactorization& group) {
    return json(std::vector<std::int64_t>(group.orders().begin(), group.orders().end()));
}

CyclicFactorization group_from_json(const json& j) { return CyclicFactorization(int_array(j, "orders")); }

json to_json(const GroupElement& x) {
    return json(std::vector<std::int64_t>(x.exps().begin(), x.exps().end()));
}

GroupElement element_from_json(const CyclicFactorization& group, const json& j) {
    auto e = int_array(j, "element");
    if (e.size() != group.rank())
        throw InvalidArgument("element " + j.dump() + " does not match " + group.to_string());
    for (std::size_t l = 0; l < e.size(); ++l)
        if (e[l] < 0 || e[l] >= group.order(l))
            throw InvalidArgument("element " + j.dump() + " has an unreduced exponent");
    return GroupElement(group, std::move(e));
}

GroupElement parse_element(const CyclicFactorization& group, std::string_view text) {
    auto e = parse_list(text, "element");
    json j = e;
    return element_from_json(group, j);
}

CocycleParams parse_params_literal(const CyclicFactorization& group, std::string_view text) {
    const auto n = group.rank();
    const std::size_t sizes[3] = {n, index_pairs(n).size(), index_triples(n).size()};
    auto parts = split(text, ';');
    if (parts.size() > 3)
        throw InvalidArgument("params literal has more than three ';'-separated groups");
    std::vector<std::int64_t> groups[3];
    const char* names[3] = {"a_l", "a_ij", "a_rst"};
    for (std::size_t k = 0; k < 3; ++k) {
        if (k < parts.size())
            groups[k] = parse_list(parts[k], names[k]);
        if (groups[k].empty())
            groups[k].assign(sizes[k], 0);
        if (groups[k].size() != sizes[k])
            throw InvalidArgument(std::string(names[k]) + " group needs " + std::to_string(sizes[k]) +
                                  " values for " + group.to_string() + ", got " +
                                  std::to_string(groups[k].size()));
    }
    return CocycleParams(group, std::move(groups[0]), std::move(groups[1]), std::move(groups[2]));
}

json to_json(const CocycleParams& a) {
    const auto n = a.group().rank();
    json j;
    j["orders"] = to_json(a.group());
    j["a"] = std::vector<std::int64_t>(a.singles().begin(), a.singles().end());
    j["a2"] = json::object();
    j["a3"] = json::object();
    std::size_t k = 0;
    for (auto [i, jj] : index_pairs(n))
        j["a2"][key_of({i, jj})] = a.pairs()[k++];
    k = 0;
    for (auto [r, s, t] : index_triples(n))
        j["a3"][key_of({r, s, t})] = a.triples()[k++];
    return j;
}

CocycleParams params_from_json(const json& j) {
    if (!j.is_object() || !j.contains("orders"))
        throw InvalidArgument("params JSON needs an \"orders\" field");
    auto group = group_from_json(j.at("orders"));
    const auto n = group.rank();
    std::vector<std::int64_t> singles(n, 0);
    if (j.contains("a"))
        singles = int_array(j.at("a"), "a");
    auto read_map = [&](const char* field, std::size_t count, auto key_for) {
        std::vector<std::int64_t> out(count, 0);
        if (!j.contains(field))
            return out;
        const auto& m = j.at(field);
        if (!m.is_object())
            throw InvalidArgument(std::string(field) + " must be an object");
        for (const auto& [key, value] : m.items()) {
            if (!value.is_number_integer())
                throw InvalidArgument(std::string(field) + "[" + key + "] must be an integer");
            bool matched = false;
            for (std::size_t slot = 0; slot < count; ++slot)
                if (key_for(slot) == key) {
                    out[slot] = value.template get<std::int64_t>();
                    matched = true;
                }
            if (!matched)
                throw InvalidArgument("unknown index key \"" + key + "\" in " + field);
        }
        return out;
    };
    const auto ps = index_pairs(n);
    const auto ts = index_triples(n);
    auto pairs = read_map("a2", ps.size(), [&](std::size_t k) { return key_of({ps[k].first, ps[k].second}); });
    auto triples = read_map("a3", ts.size(), [&](std::size_t k) {
        return key_of({ts[k][0], ts[k][1], ts[k][2]});
    });
    return CocycleParams(group, std::move(singles), std::move(pairs), std::move(triples));
}

json to_json(const CocycleTable& t) {
    json j;
    j["orders"] = to_json(t.group());
    j["entries"] = json::array();
    const auto n = t.group_order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (std::int64_t z = 0; z < n; ++z) {
                const auto& w = t.at(x, y, z);
                if (w.is_one())
                    continue;
                j["entries"].push_back({{"x", to_json(from_index(t.group(), x))},
                                        {"y", to_json(from_index(t.group(), y))},
                                        {"z", to_json(from_index(t.group(), z))},
                                        {"w", w.to_string()}});
            }
    return j;
}

CocycleTable table_from_json(const json& j, std::int64_t max_cells) {
    if (!j.is_object() || !j.contains("orders"))
        throw InvalidArgument("table JSON needs an \"orders\" field");
    auto group = group_from_json(j.at("orders"));
    CocycleTable t(group, max_cells);
    if (!j.contains("entries"))
        return t;
    if (!j.at("entries").is_array())
        throw InvalidArgument("table \"entries\" must be an array");
    for (const auto& e : j.at("entries")) {
        if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("z") || !e.contains("w"))
            throw InvalidArgument("table entry needs x, y, z and w: " + e.dump());
        if (!e.at("w").is_string())
            throw InvalidArgument("table entry value must be a \"p/q\" string: " + e.dump());
        t.set(element_from_json(group, e.at("x")), element_from_json(group, e.at("y")),
              element_from_json(group, e.at("z")), UnityScalar::parse(e.at("w").get<std::string>()));
    }
    return t;
}

json to_json(const QuasiBicharacter& R) {
    const auto n = R.group().rank();
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(R.r(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

QuasiBicharacter bicharacter_from_json(const CyclicFactorization& group, const json& j) {
    const auto n = group.rank();
    if (!j.is_array() || j.size() != n)
        throw InvalidArgument("r-matrix must be an array of " + std::to_string(n) + " rows");
    std::vector<UnityScalar> r;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw InvalidArgument("r-matrix rows must have " + std::to_string(n) + " entries");
        for (const auto& v : row) {
            if (!v.is_string())
                throw InvalidArgument("r-matrix entries must be \"p/q\" strings");
            r.push_back(UnityScalar::parse(v.get<std::string>()));
        }
    }
    return QuasiBicharacter(group, std::move(r));
}

json to_json(const BraidingTable& R) {
    json rows = json::array();
    for (std::int64_t x = 0; x < R.group_order(); ++x) {
        json row = json::array();
        for (std::int64_t y = 0; y < R.group_order(); ++y)
            row.push_back(R.at(x, y).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace grcat::io
