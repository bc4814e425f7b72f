#pragma once

#include "grcat/braiding.hpp"
#include "grcat/cocycle.hpp"
#include "grcat/group.hpp"

#include <json.hpp>

#include <string_view>

namespace grcat::io {

using nlohmann::json;

// "4,2" -> Z_4 x Z_2.
CyclicFactorization parse_orders(std::string_view text);

json to_json(const CyclicFactorization& group);
CyclicFactorization group_from_json(const json& j);

json to_json(const GroupElement& x);
GroupElement element_from_json(const CyclicFactorization& group, const json& j);
// "3,1" -> (3,1).
GroupElement parse_element(const CyclicFactorization& group, std::string_view text);

// "a_l list ; a_ij list ; a_rst list", each comma separated in lexicographic
// index order. An empty or missing group means all zeros.
CocycleParams parse_params_literal(const CyclicFactorization& group, std::string_view text);

// {"orders":[...], "a":[...], "a2":{"1,2":k,...}, "a3":{"1,2,3":k,...}}, 1-based keys.
json to_json(const CocycleParams& a);
CocycleParams params_from_json(const json& j);

// {"orders":[...], "entries":[{"x":[...],"y":[...],"z":[...],"w":"p/q"},...]};
// only entries different from "0/1" are written, omitted ones read as "0/1".
json to_json(const CocycleTable& t);
CocycleTable table_from_json(const json& j, std::int64_t max_cells = kDefaultMaxCells);

// [["p/q", ...], ...] row-major n x n.
json to_json(const QuasiBicharacter& R);
QuasiBicharacter bicharacter_from_json(const CyclicFactorization& group, const json& j);

// Full R table as a |G| x |G| matrix of "p/q".
json to_json(const BraidingTable& R);

}  // namespace grcat::io
