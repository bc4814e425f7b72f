#include "cli.hpp"

#include "grcat/braiding.hpp"
#include "grcat/cocycle.hpp"
#include "grcat/cohomology.hpp"
#include "grcat/errors.hpp"
#include "grcat/io.hpp"
#include "grcat/resolutions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace grcat::cli {

namespace {

using io::json;

struct Request {
    std::string format = "json";
    std::int64_t max_cells = kDefaultMaxCells;
    bool max_cells_given = false;
    std::string orders;
    std::string params;
    std::string table;
    std::string x, y, z;
    bool count = false;
    bool check_unique = false;
    std::int64_t max_order = kDefaultMaxBarOrder;
    std::int64_t mu = 8;
};

class Output {
public:
    Output(std::ostream& out, bool plain) : out_(out), plain_(plain) {}
    void emit(const json& j, const std::string& plain) {
        if (plain_)
            out_ << plain << '\n';
        else
            out_ << j.dump() << '\n';
    }
    bool plain() const { return plain_; }

private:
    std::ostream& out_;
    bool plain_;
};

std::string element_list(const std::vector<GroupElement>& xs) {
    std::string s;
    for (const auto& x : xs)
        s += (s.empty() ? "" : " ") + x.to_string();
    return s;
}

json verdict_json(const Verdict& v) {
    json j{{"verdict", v.holds ? "holds" : "fails"}};
    if (!v.holds) {
        j["witness"] = json::array();
        for (const auto& x : v.witness)
            j["witness"].push_back(io::to_json(x));
        j["detail"] = v.detail;
    }
    return j;
}

std::string verdict_plain(const Verdict& v) {
    if (v.holds)
        return "holds";
    return "fails at " + element_list(v.witness) + ": " + v.detail;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(what + " is not valid JSON: " + e.what());
    }
}

CyclicFactorization require_orders(const Request& r) {
    if (r.orders.empty())
        throw InvalidArgument("--orders is required");
    return io::parse_orders(r.orders);
}

// --params takes either the literal syntax (with --orders) or a params JSON object.
CocycleParams require_params(const Request& r) {
    if (r.params.empty())
        throw InvalidArgument("--params is required");
    const auto first = r.params.find_first_not_of(" \t");
    if (first != std::string::npos && r.params[first] == '{') {
        auto a = io::params_from_json(parse_json(r.params, "--params"));
        if (!r.orders.empty() && !(io::parse_orders(r.orders) == a.group()))
            throw InvalidArgument("--orders does not match the orders in --params");
        return a;
    }
    return io::parse_params_literal(require_orders(r), r.params);
}

CocycleTable load_table(const Request& r) {
    auto t = io::table_from_json(parse_json(read_file(r.table), r.table), r.max_cells);
    if (!r.orders.empty() && !(io::parse_orders(r.orders) == t.group()))
        throw InvalidArgument("--orders does not match the orders in " + r.table);
    return t;
}

// A table from --table, or built from --params.
CocycleTable table_source(const Request& r) {
    if (!r.table.empty()) {
        if (!r.params.empty())
            throw InvalidArgument("give either --params or --table, not both");
        return load_table(r);
    }
    return build_table(require_params(r), r.max_cells);
}

std::string params_plain(const CocycleParams& a) { return a.to_string(); }

std::string bicharacter_plain(const QuasiBicharacter& R) {
    const auto n = R.group().rank();
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        if (i)
            s += "; ";
        for (std::size_t j = 0; j < n; ++j)
            s += (j ? " " : "") + R.r(i, j).to_string();
    }
    return s;
}

std::string table_plain(const CocycleTable& t) {
    std::string s;
    const auto n = t.group_order();
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            for (std::int64_t z = 0; z < n; ++z) {
                const auto& w = t.at(x, y, z);
                if (w.is_one())
                    continue;
                if (!s.empty())
                    s += '\n';
                s += from_index(t.group(), x).to_string() + " " + from_index(t.group(), y).to_string() +
                     " " + from_index(t.group(), z).to_string() + " " + w.to_string();
            }
    return s;
}

std::string braiding_table_plain(const BraidingTable& R) {
    std::string s;
    for (std::int64_t x = 0; x < R.group_order(); ++x) {
        if (x)
            s += "; ";
        for (std::int64_t y = 0; y < R.group_order(); ++y)
            s += (y ? " " : "") + R.at(x, y).to_string();
    }
    return s;
}

int cmd_h3(const Request& r, Output& out) {
    const auto h = h3_order(require_orders(r));
    out.emit(json(h), std::to_string(h));
    return kOk;
}

int cmd_cocycle_list(const Request& r, Output& out) {
    json arr = json::array();
    std::string plain;
    for (const auto& a : enumerate_params(require_orders(r))) {
        arr.push_back(io::to_json(a));
        plain += (plain.empty() ? "" : "\n") + params_plain(a);
    }
    out.emit(arr, plain);
    return kOk;
}

int cmd_cocycle_eval(const Request& r, Output& out) {
    const auto a = require_params(r);
    if (r.x.empty() || r.y.empty() || r.z.empty())
        throw InvalidArgument("cocycle eval needs --x, --y and --z");
    const auto w = eval_omega(a, io::parse_element(a.group(), r.x), io::parse_element(a.group(), r.y),
                              io::parse_element(a.group(), r.z));
    out.emit(json(w.to_string()), w.to_string());
    return kOk;
}

int cmd_cocycle_table(const Request& r, Output& out) {
    const auto t = build_table(require_params(r), r.max_cells);
    out.emit(io::to_json(t), table_plain(t));
    return kOk;
}

int cmd_verify(const Request& r, Output& out, Verdict (*check)(const CocycleTable&)) {
    const auto v = check(table_source(r));
    out.emit(verdict_json(v), verdict_plain(v));
    return v.holds ? kOk : kFailed;
}

int cmd_verify_chain_map(const Request& r, Output& out) {
    const auto report = verify_chain_map(require_orders(r), r.max_cells);
    json j{{"verdict", report.holds() ? "holds" : "fails"}, {"squares", json::array()}};
    std::string plain = report.holds() ? "holds" : "fails";
    for (std::size_t k = 0; k < 3; ++k) {
        auto sq = verdict_json(report.squares[k]);
        sq["degree"] = k + 1;
        sq["generators"] = report.generators_checked[k];
        j["squares"].push_back(std::move(sq));
        plain += "\ndegree " + std::to_string(k + 1) + " (" + std::to_string(report.generators_checked[k]) +
                 " generators): " + verdict_plain(report.squares[k]);
    }
    out.emit(j, plain);
    return report.holds() ? kOk : kFailed;
}

int cmd_classify(const Request& r, Output& out) {
    if (r.table.empty())
        throw InvalidArgument("classify needs --table");
    const auto t = load_table(r);
    ClassifyOptions options;
    options.check_unique = r.check_unique;
    options.max_order = r.max_order;
    Classification c = [&] {
        try {
            return classify(t, options);
        } catch (const NotACocycle& e) {
            out.emit(json{{"error", e.what()}}, std::string("error: ") + e.what());
            throw;
        }
    }();
    auto j = io::to_json(c.params);
    std::string plain = params_plain(c.params);
    if (c.unique) {
        j["unique"] = *c.unique;
        plain += std::string("\nunique: ") + (*c.unique ? "true" : "false");
    }
    out.emit(j, plain);
    return kOk;
}

int emit_bicharacters(const std::vector<QuasiBicharacter>& rs, Output& out) {
    json arr = json::array();
    std::string plain;
    for (const auto& R : rs) {
        arr.push_back(io::to_json(R));
        plain += (plain.empty() ? "" : "\n") + bicharacter_plain(R);
    }
    out.emit(arr, plain);
    return kOk;
}

int cmd_braidings(const Request& r, Output& out) {
    const auto a = require_params(r);
    if (r.count) {
        const auto c = braiding_count(a);
        out.emit(json(c), std::to_string(c));
        return kOk;
    }
    return emit_bicharacters(enumerate_braidings(a), out);
}

int cmd_oracle_braidings(const Request& r, Output& out) {
    const auto a = require_params(r);
    const auto rs = brute_force_braidings(a, r.max_cells);
    if (r.count) {
        out.emit(json(rs.size()), std::to_string(rs.size()));
        return kOk;
    }
    return emit_bicharacters(rs, out);
}

int cmd_oracle_full_space(const Request& r, Output& out) {
    const auto a = require_params(r);
    const auto limit = r.max_cells_given ? r.max_cells : kDefaultMaxFunctionSpace;
    const auto tables = brute_force_full_function_space(a, r.mu, limit);
    if (r.count) {
        out.emit(json(tables.size()), std::to_string(tables.size()));
        return kOk;
    }
    json arr = json::array();
    std::string plain;
    for (const auto& R : tables) {
        arr.push_back(io::to_json(R));
        plain += (plain.empty() ? "" : "\n") + braiding_table_plain(R);
    }
    out.emit(arr, plain);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Request req;
    CLI::App app{"Monoidal and braided structures on Gr-categories over finite abelian groups", "grcat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
    app.add_option_function<std::int64_t>(
           "--max-cells",
           [&](std::int64_t v) {
               req.max_cells = v;
               req.max_cells_given = true;
           },
           "Raise the table/oracle size guard")
        ->check(CLI::PositiveNumber);

    auto orders = [&](CLI::App* c) { c->add_option("--orders", req.orders, "Cyclic orders, e.g. 4,2"); };
    auto params = [&](CLI::App* c) {
        c->add_option("--params", req.params, "Parameters \"a_l;a_ij;a_rst\" or a params JSON object");
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        auto* c = parent->add_subcommand(name, help);
        c->fallthrough();
        return c;
    };

    auto* h3 = leaf(&app, "h3", "Order of H^3(G, k*)");
    orders(h3);

    auto* cocycle = leaf(&app, "cocycle", "Canonical 3-cocycles");
    cocycle->require_subcommand(1);
    auto* c_list = leaf(cocycle, "list", "All parameter tuples");
    orders(c_list);
    auto* c_eval = leaf(cocycle, "eval", "Evaluate omega_a at one triple");
    orders(c_eval);
    params(c_eval);
    c_eval->add_option("--x", req.x, "First argument, e.g. 1,0");
    c_eval->add_option("--y", req.y, "Second argument");
    c_eval->add_option("--z", req.z, "Third argument");
    auto* c_table = leaf(cocycle, "table", "Full table of omega_a");
    orders(c_table);
    params(c_table);

    auto* verify = leaf(&app, "verify", "Exhaustive axiom checks");
    verify->require_subcommand(1);
    auto table_input = [&](CLI::App* c) {
        orders(c);
        params(c);
        c->add_option("--table", req.table, "Cocycle table JSON file");
    };
    auto* v_pent = leaf(verify, "pentagon", "Pentagon identity on G^4");
    table_input(v_pent);
    auto* v_norm = leaf(verify, "normalized", "Normalization on G^3");
    table_input(v_norm);
    auto* v_sym = leaf(verify, "symmetry", "omega(x,y,z) = omega(x,z,y) on G^3");
    table_input(v_sym);
    auto* v_chain = leaf(verify, "chain-map", "Bar to tensor chain map squares");
    orders(v_chain);

    auto* cls = leaf(&app, "classify", "Identify the class of a 3-cocycle table");
    orders(cls);
    cls->add_option("--table", req.table, "Cocycle table JSON file");
    cls->add_flag("--check-unique", req.check_unique, "Confirm no second class matches");
    cls->add_option("--max-order", req.max_order, "Largest |G| for the linear solve")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* br = leaf(&app, "braidings", "Quasi-bicharacters for omega_a");
    orders(br);
    params(br);
    br->add_flag("--count", req.count, "Print only the number of braidings");

    auto* oracle = leaf(&app, "oracle", "Brute-force oracles");
    oracle->require_subcommand(1);
    auto* o_br = leaf(oracle, "braidings", "Search r-matrices over mu_{m_i m_j}");
    orders(o_br);
    params(o_br);
    o_br->add_flag("--count", req.count, "Print only the number found");
    auto* o_full = leaf(oracle, "full-space", "Search all functions G x G -> mu_N");
    orders(o_full);
    params(o_full);
    o_full->add_option("--mu", req.mu, "N for the value group mu_N")->check(CLI::PositiveNumber)->capture_default_str();
    o_full->add_flag("--count", req.count, "Print only the number found");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Output output(out, req.format == "plain");
    try {
        if (*h3)
            return cmd_h3(req, output);
        if (*c_list)
            return cmd_cocycle_list(req, output);
        if (*c_eval)
            return cmd_cocycle_eval(req, output);
        if (*c_table)
            return cmd_cocycle_table(req, output);
        if (*v_pent)
            return cmd_verify(req, output, verify_pentagon);
        if (*v_norm)
            return cmd_verify(req, output, verify_normalized);
        if (*v_sym)
            return cmd_verify(req, output, verify_symmetry_last_two);
        if (*v_chain)
            return cmd_verify_chain_map(req, output);
        if (*cls)
            return cmd_classify(req, output);
        if (*br)
            return cmd_braidings(req, output);
        if (*o_br)
            return cmd_oracle_braidings(req, output);
        if (*o_full)
            return cmd_oracle_full_space(req, output);
    } catch (const NotACocycle& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << " (raise the limit with --max-cells, or --max-order for classify)\n";
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no command given\n";
    return kUsage;
}

}  // namespace grcat::cli
