// Command-line front end: factor, count, lattice, generator, closure,
// member, verify. Exit codes: 0 ok, 2 domain error, 3 guard violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "linclo/json_io.hpp"
#include "linclo/lattice.hpp"
#include "linclo/verify.hpp"

using nlohmann::json;
using namespace linclo;

namespace {

struct CliConfig {
    int p = 0;
    int q = 0;
    std::string format = "text";
    bool force = false;
    std::uint64_t seed = 0;
    int arity = 2;
    std::string clonoid_id;
    std::string file;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("FileNotFound", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("ParseError", path + ": " + e.what());
    }
}

std::vector<FnTable> read_tables(const std::string& path) {
    json j = read_json_file(path);
    std::vector<FnTable> out;
    if (j.is_array()) {
        for (const auto& item : j) out.push_back(fn_from_json(item));
    } else {
        out.push_back(fn_from_json(j));
    }
    return out;
}

json parse_clonoid_id(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError("ParseError", std::string("--clonoid: ") + e.what());
    }
}

int run_factor(const CliConfig& cfg) {
    auto p_field = Field::make(cfg.p);
    auto q_field = Field::make(cfg.q);
    Factorization f = factor(target_poly(p_field, q_field));
    if (cfg.format == "json")
        std::cout << factorization_to_json(f).dump() << "\n";
    else
        std::cout << factorization_to_text(f) << "\n";
    return 0;
}

int run_count(const CliConfig& cfg) {
    auto p_field = Field::make(cfg.p);
    auto q_field = Field::make(cfg.q);
    long long n = count_clonoids(p_field, q_field);
    if (cfg.format == "json")
        std::cout << json{{"count", n}}.dump() << "\n";
    else
        std::cout << n << "\n";
    return 0;
}

int run_lattice(const CliConfig& cfg) {
    auto p_field = Field::make(cfg.p);
    auto q_field = Field::make(cfg.q);
    auto clonoids = enumerate_clonoids(p_field, q_field, cfg.force);
    FiniteLattice l = build_lattice(clonoids);
    if (cfg.format == "dot") {
        std::cout << lattice_to_dot(l, clonoids);
    } else if (cfg.format == "json") {
        std::cout << lattice_to_json(l, clonoids).dump() << "\n";
    } else {
        for (const auto& c : clonoids)
            std::cout << clonoid_label(c) << "  " << clonoid_id_to_json(c).dump() << "\n";
    }
    return 0;
}

int run_generator(const CliConfig& cfg) {
    auto p_field = Field::make(cfg.p);
    auto q_field = Field::make(cfg.q);
    auto clonoids = enumerate_clonoids(p_field, q_field, cfg.force);
    const Clonoid& c = clonoid_by_id(clonoids, parse_clonoid_id(cfg.clonoid_id));
    FnTable g = unary_generator(c);
    if (cfg.format == "json") {
        std::cout << fn_to_json(g).dump() << "\n";
    } else {
        std::cout << "[";
        for (size_t i = 0; i < g.values.size(); ++i)
            std::cout << (i ? "," : "") << g.values[i];
        std::cout << "]\n";
    }
    return 0;
}

int run_closure(const CliConfig& cfg) {
    auto tables = read_tables(cfg.file);
    if (tables.empty()) throw DomainError("ParseError", "no function tables in " + cfg.file);
    for (const auto& t : tables) {
        if (t.p_field->order() != cfg.p || t.q_field->order() != cfg.q)
            throw DomainError("FieldMismatch", "table fields do not match -p/-q");
    }
    Subspace s = clonoid_closure_at_arity(tables, cfg.arity, cfg.force);
    if (cfg.format == "json")
        std::cout << subspace_to_json(s).dump() << "\n";
    else
        std::cout << "dim " << s.dim() << " of " << s.ambient() << "\n";
    return 0;
}

int run_member(const CliConfig& cfg) {
    auto p_field = Field::make(cfg.p);
    auto q_field = Field::make(cfg.q);
    auto clonoids = enumerate_clonoids(p_field, q_field, cfg.force);
    const Clonoid& c = clonoid_by_id(clonoids, parse_clonoid_id(cfg.clonoid_id));
    auto tables = read_tables(cfg.file);
    bool all = true;
    json results = json::array();
    for (const auto& t : tables) {
        bool m = membership(t, c);
        all = all && m;
        results.push_back(m);
    }
    if (cfg.format == "json")
        std::cout << json{{"member", tables.size() == 1 ? json(all) : results}}.dump() << "\n";
    else
        std::cout << (all ? "true" : "false") << "\n";
    return 0;
}

int run_verify(const CliConfig& cfg) {
    auto p_field = Field::make(cfg.p);
    auto q_field = Field::make(cfg.q);
    VerifyReport report = run_verification(p_field, q_field, cfg.force, cfg.seed);
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& c : report.checks)
            out.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << json{{"p", cfg.p}, {"q", cfg.q}, {"checks", out},
                          {"all_pass", report.all_pass()}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& c : report.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with linearly closed clonoids over finite fields"};
    app.require_subcommand(1);

    CliConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_q = true) {
        sub->add_option("-p", cfg.p, "order of the target field F_p")->required();
        if (needs_q) sub->add_option("-q", cfg.q, "order of the source field F_q")->required();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_flag("--force", cfg.force, "override desk-scale guards");
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    };

    auto* factor_cmd = app.add_subcommand("factor", "factor x^(q-1) - 1 over F_p");
    add_common(factor_cmd);
    auto* count_cmd = app.add_subcommand("count", "number of linearly closed clonoids");
    add_common(count_cmd);
    auto* lattice_cmd = app.add_subcommand("lattice", "the full clonoid lattice");
    add_common(lattice_cmd);
    auto* generator_cmd = app.add_subcommand("generator", "single unary generator of a clonoid");
    add_common(generator_cmd);
    generator_cmd->add_option("--clonoid", cfg.clonoid_id, "clonoid identifier JSON")->required();
    auto* closure_cmd = app.add_subcommand("closure", "clonoid closure of tables at an arity");
    add_common(closure_cmd);
    closure_cmd->add_option("--arity", cfg.arity, "target arity")->required();
    closure_cmd->add_option("--file", cfg.file, "FnTable JSON input")->required();
    auto* member_cmd = app.add_subcommand("member", "membership of tables in a clonoid");
    add_common(member_cmd);
    member_cmd->add_option("--clonoid", cfg.clonoid_id, "clonoid identifier JSON")->required();
    member_cmd->add_option("--file", cfg.file, "FnTable JSON input")->required();
    auto* verify_cmd = app.add_subcommand("verify", "run the structure-theorem checks");
    add_common(verify_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (factor_cmd->parsed()) return run_factor(cfg);
        if (count_cmd->parsed()) return run_count(cfg);
        if (lattice_cmd->parsed()) return run_lattice(cfg);
        if (generator_cmd->parsed()) return run_generator(cfg);
        if (closure_cmd->parsed()) return run_closure(cfg);
        if (member_cmd->parsed()) return run_member(cfg);
        if (verify_cmd->parsed()) return run_verify(cfg);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
