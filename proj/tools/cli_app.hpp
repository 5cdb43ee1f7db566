/*
   Copyright 2026 The elimcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELIMCERT_CLI_APP_HPP
#define ELIMCERT_CLI_APP_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elimcert/report_json.hpp"

namespace elimcert::cli {

// exit statuses
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResource = 3;

inline int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Budget:
    case ErrorKind::Genericity:
        return kExitResource;
    case ErrorKind::BoundViolation:
    case ErrorKind::Internal:
        return kExitVerifyFailed;
    default:
        return kExitInputError;
    }
}

// A system file: one polynomial per line, '#' comments, blank lines ignored,
// optional headers "field: q" / "field: fp 65537" and "vars: <n>".
struct SystemText {
    std::optional<FieldDesc> header_field;
    std::optional<int> header_vars;
    std::vector<std::pair<std::size_t, std::string>> polys; // (line number, text)
};

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline SystemText read_system_text(const std::string& text) {
    SystemText sys;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.rfind("field:", 0) == 0) {
            std::istringstream hs(line.substr(6));
            std::string kind;
            hs >> kind;
            if (kind == "q") {
                sys.header_field = FieldDesc::rationals();
            } else if (kind == "fp") {
                std::uint64_t p = 0;
                if (!(hs >> p))
                    throw ParseError(lineno, 1, "expected a modulus after 'field: fp'");
                sys.header_field = FieldDesc::prime_field(p);
            } else {
                throw ParseError(lineno, 1, "unknown field '" + kind + "'");
            }
            continue;
        }
        if (line.rfind("vars:", 0) == 0) {
            std::istringstream hs(line.substr(5));
            int n = 0;
            if (!(hs >> n) || n < 1)
                throw ParseError(lineno, 1, "expected a positive variable count after 'vars:'");
            sys.header_vars = n;
            continue;
        }
        sys.polys.emplace_back(lineno, line);
    }
    return sys;
}

inline FieldDesc parse_field_flag(const std::string& flag) {
    if (flag == "q")
        return FieldDesc::rationals();
    if (flag.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(flag.substr(3));
        } catch (const std::exception&) {
            throw StructuralError("bad --field value '" + flag + "'");
        }
        return FieldDesc::prime_field(p);
    }
    throw StructuralError("bad --field value '" + flag + "' (expected q or fp:<prime>)");
}

struct CliConfig {
    std::string input_path;
    std::string inline_system;
    std::string field_flag;
    std::string cert_path;
    std::uint64_t seed = 0;
    std::string mode = "generic";
    bool json = false;
    std::size_t budget = 0; // 0: default
    int retries = 5;
    bool allow_empty_variety = false;
    bool bound_only = false;
    int nvars = 0; // 0: infer
    int noether_q = std::numeric_limits<int>::min();
};

inline std::string load_input(const CliConfig& cfg) {
    if (!cfg.inline_system.empty()) {
        std::string s = cfg.inline_system;
        std::replace(s.begin(), s.end(), ';', '\n');
        return s;
    }
    if (cfg.input_path.empty())
        throw StructuralError("no input: pass a system file or --system");
    std::ifstream in(cfg.input_path);
    if (!in)
        throw StructuralError("cannot open '" + cfg.input_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class K>
struct ParsedSystem {
    FieldDesc desc;
    int n = 0;
    std::vector<MPoly<K>> gens;
};

template <class K>
ParsedSystem<K> parse_system(const SystemText& sys, const FieldDesc& desc, const CliConfig& cfg) {
    ParsedSystem<K> out;
    out.desc = desc;
    int n = 0;
    for (const auto& [line, text] : sys.polys)
        n = std::max(n, scan_max_var_index(text));
    if (sys.header_vars)
        n = std::max(n, *sys.header_vars);
    if (cfg.nvars > 0)
        n = std::max(n, cfg.nvars);
    out.n = std::max(n, 1);
    if (sys.polys.empty())
        throw StructuralError("the system is empty");
    const TermOrder grev = TermOrder::grevlex();
    for (const auto& [line, text] : sys.polys)
        out.gens.push_back(parse_poly<K>(text, desc, out.n, grev, line));
    return out;
}

inline void print_items_text(std::ostream& out, const VerifyReport& rep) {
    for (const auto& it : rep.items) {
        out << "item " << it.name << ": " << (it.pass ? "pass" : "FAIL");
        if (!it.detail.empty())
            out << " (" << it.detail << ")";
        out << "\n";
    }
}

template <class K>
int cmd_dim(const ParsedSystem<K>& sys, const CliConfig& cfg, std::ostream& out) {
    GBOptions gb;
    if (cfg.budget)
        gb.max_total_terms = cfg.budget;
    DimensionReport rep = dimension(sys.gens, gb);
    nlohmann::json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = "dim";
    j["field"] = field_to_json(sys.desc);
    j["n"] = sys.n;
    j["s"] = sys.gens.size();
    j["q"] = rep.q;
    j["witnessIndependentSet"] = rep.witness_independent_set;
    nlohmann::json lt = nlohmann::json::array();
    for (const auto& m : rep.leading_term_ideal)
        lt.push_back(m.str());
    j["leadingTermIdeal"] = std::move(lt);
    j["basisSizes"] = nlohmann::json{{"dimension", rep.basis_size}};
    if (cfg.json) {
        out << j.dump(2) << "\n";
    } else {
        out << "command: dim\nfield: " << sys.desc.str() << "\nn: " << sys.n << "\ns: " << sys.gens.size()
            << "\nq: " << rep.q << "\nwitnessIndependentSet:";
        for (int v : rep.witness_independent_set)
            out << " x" << v;
        out << "\nleadingTermIdeal:";
        for (const auto& m : rep.leading_term_ideal)
            out << " " << m.str();
        out << "\n";
    }
    return kExitOk;
}

template <class K>
int cmd_noether(const ParsedSystem<K>& sys, const CliConfig& cfg, std::ostream& out) {
    GBOptions gb;
    if (cfg.budget)
        gb.max_total_terms = cfg.budget;
    DimensionReport rep = dimension(sys.gens, gb);
    const int q = (cfg.noether_q == std::numeric_limits<int>::min()) ? rep.q : cfg.noether_q;
    const bool ok = check_noether_position(sys.gens, q, gb);
    if (cfg.json) {
        nlohmann::json j;
        j["schemaVersion"] = kSchemaVersion;
        j["command"] = "noether";
        j["field"] = field_to_json(sys.desc);
        j["n"] = sys.n;
        j["s"] = sys.gens.size();
        j["q"] = q;
        j["noether"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "command: noether\nfield: " << sys.desc.str() << "\nn: " << sys.n << "\nq: " << q
            << "\nnoether: " << (ok ? "true" : "false") << "\n";
    }
    return kExitOk;
}

template <class K>
int cmd_eliminate(const ParsedSystem<K>& sys, const CliConfig& cfg, std::ostream& out) {
    EngineOptions opts;
    if (cfg.budget)
        opts.gb.max_total_terms = cfg.budget;
    opts.retries = cfg.retries;
    opts.allow_empty_variety = cfg.allow_empty_variety;
    const PipelineMode mode = (cfg.mode == "original") ? PipelineMode::OriginalCoords : PipelineMode::GenericCoords;

    if (cfg.bound_only) {
        DimensionReport rep = dimension(sys.gens, opts.gb);
        std::vector<long> ds;
        for (const auto& g : sys.gens)
            if (!g.is_zero())
                ds.push_back(*g.total_degree());
        std::sort(ds.rbegin(), ds.rend());
        const long bound = certificate_bound(ds, sys.n, rep.q);
        nlohmann::json j;
        j["schemaVersion"] = kSchemaVersion;
        j["command"] = "eliminate";
        j["boundOnly"] = true;
        j["field"] = field_to_json(sys.desc);
        j["n"] = sys.n;
        j["s"] = sys.gens.size();
        j["q"] = rep.q;
        j["degrees"] = ds;
        j["bound"] = bound;
        if (cfg.json)
            out << j.dump(2) << "\n";
        else
            out << "command: eliminate (bound only)\nfield: " << sys.desc.str() << "\nn: " << sys.n
                << "\ns: " << sys.gens.size() << "\nq: " << rep.q << "\nbound: " << bound << "\n";
        return kExitOk;
    }

    Certificate<K> cert = eliminate_with_bound(sys.gens, cfg.seed, mode, opts);
    VerifyReport rep = verify_certificate(cert, sys.gens);
    nlohmann::json j = certificate_to_json(cert, sys.gens, rep);
    if (cfg.json) {
        out << j.dump(2) << "\n";
    } else {
        out << "command: eliminate\nfield: " << sys.desc.str() << "\nn: " << j["n"] << "\ns: " << j["s"]
            << "\nq: " << cert.q << "\ndegrees:";
        for (const auto& d : j["degrees"])
            out << " " << d;
        out << "\nbound: " << cert.bound << "\nseed: " << cert.seed << "\nmode: " << mode_name(cert.mode)
            << "\ndegPhi: " << rep.deg_phi << "\nmaxCofactorProductDegree: " << rep.max_product_degree
            << "\nphi: " << render_poly(cert.phi) << "\n";
        for (std::size_t i = 0; i < cert.cofactors.size(); ++i)
            out << "cofactor " << (i + 1) << ": " << render_poly(cert.cofactors[i]) << "\n";
        out << "verified: " << (rep.verdict ? "true" : "false") << "\n";
        print_items_text(out, rep);
    }
    return rep.verdict ? kExitOk : kExitVerifyFailed;
}

template <class K>
int cmd_certify_check(const ParsedSystem<K>& sys, const CliConfig& cfg, std::ostream& out) {
    if (cfg.cert_path.empty())
        throw StructuralError("certify-check needs --cert <file>");
    std::ifstream in(cfg.cert_path);
    if (!in)
        throw StructuralError("cannot open '" + cfg.cert_path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("bad certificate JSON: ") + e.what());
    }
    const FieldDesc cert_field = field_from_json(j.at("field"));
    if (cert_field != sys.desc)
        throw StructuralError("certificate field (" + cert_field.str() + ") differs from the system field (" +
                              sys.desc.str() + ")");
    const int n = j.at("n").get<int>();
    if (n != sys.n)
        throw StructuralError("certificate is over " + std::to_string(n) + " variables, system over " +
                              std::to_string(sys.n));
    Certificate<K> cert = certificate_from_json<K>(j, sys.desc, n);
    VerifyReport rep = verify_certificate(cert, sys.gens);
    if (cfg.json) {
        nlohmann::json o;
        o["schemaVersion"] = kSchemaVersion;
        o["command"] = "certify-check";
        o["field"] = field_to_json(sys.desc);
        o["n"] = n;
        o["q"] = cert.q;
        o["bound"] = cert.bound;
        o["degPhi"] = rep.deg_phi;
        o["maxCofactorProductDegree"] = rep.max_product_degree;
        o["verified"] = rep.verdict;
        o["items"] = items_to_json(rep);
        out << o.dump(2) << "\n";
    } else {
        out << "command: certify-check\nq: " << cert.q << "\nbound: " << cert.bound
            << "\nverified: " << (rep.verdict ? "true" : "false") << "\n";
        print_items_text(out, rep);
    }
    return rep.verdict ? kExitOk : kExitVerifyFailed;
}

template <class K>
int cmd_perron(const ParsedSystem<K>& sys, const CliConfig& cfg, std::ostream& out) {
    GBOptions gb;
    if (cfg.budget)
        gb.max_total_terms = cfg.budget;
    PerronRelation<K> rel = perron_relation(sys.gens, gb);
    // relation variables render as x1..x{n+1}, standing for T_1..T_{n+1}
    if (cfg.json) {
        nlohmann::json j;
        j["schemaVersion"] = kSchemaVersion;
        j["command"] = "perron";
        j["field"] = field_to_json(sys.desc);
        j["n"] = sys.n;
        j["degrees"] = rel.weights;
        j["weights"] = rel.weights;
        j["bound"] = rel.bound;
        j["weightedDegree"] = rel.weighted_deg;
        j["relation"] = render_poly(rel.W);
        j["verified"] = true;
        j["items"] = nlohmann::json::array(
            {nlohmann::json{{"name", "relation_annihilates_map"}, {"pass", true}},
             nlohmann::json{{"name", "weighted_degree_bound"}, {"pass", true}}});
        out << j.dump(2) << "\n";
    } else {
        out << "command: perron\nfield: " << sys.desc.str() << "\nn: " << sys.n << "\nweights:";
        for (long w : rel.weights)
            out << " " << w;
        out << "\nbound: " << rel.bound << "\nweightedDegree: " << rel.weighted_deg
            << "\nrelation: " << render_poly(rel.W) << "\nverified: true\n";
    }
    return kExitOk;
}

template <class K>
int run_typed(const std::string& command, const SystemText& sys_text, const FieldDesc& desc, const CliConfig& cfg,
              std::ostream& out) {
    ParsedSystem<K> sys = parse_system<K>(sys_text, desc, cfg);
    if (command == "dim")
        return cmd_dim(sys, cfg, out);
    if (command == "noether")
        return cmd_noether(sys, cfg, out);
    if (command == "eliminate")
        return cmd_eliminate(sys, cfg, out);
    if (command == "certify-check")
        return cmd_certify_check(sys, cfg, out);
    if (command == "perron")
        return cmd_perron(sys, cfg, out);
    throw StructuralError("unknown command '" + command + "'");
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact elimination certificates for polynomial ideals"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input_path, "system file (one polynomial per line, # comments)");
        sub->add_option("--system", cfg.inline_system, "inline system; polynomials separated by ';'");
        sub->add_option("--field", cfg.field_flag, "coefficient field: q or fp:<prime>");
        sub->add_option("--nvars", cfg.nvars, "ambient variable count (default: inferred)");
        sub->add_option("--budget", cfg.budget, "term-count budget for basis computations");
        sub->add_flag("--json", cfg.json, "machine-readable output");
    };

    CLI::App* dim = app.add_subcommand("dim", "dimension of V(I)");
    add_common(dim);
    CLI::App* noe = app.add_subcommand("noether", "finiteness of the projection onto x1..xq");
    add_common(noe);
    noe->add_option("--q", cfg.noether_q, "claimed dimension (default: computed)");
    CLI::App* eli = app.add_subcommand("eliminate", "eliminant with membership certificate and degree bound");
    add_common(eli);
    eli->add_option("--seed", cfg.seed, "random seed (default 0)");
    eli->add_option("--mode", cfg.mode, "generic | original")
        ->check(CLI::IsMember({"generic", "original"}));
    eli->add_option("--retries", cfg.retries, "genericity retry budget (default 5)");
    eli->add_flag("--allow-empty-variety", cfg.allow_empty_variety,
                  "certify a nonzero constant when V(I) is empty");
    eli->add_flag("--bound-only", cfg.bound_only, "print the degree bound without eliminating");
    CLI::App* chk = app.add_subcommand("certify-check", "re-verify a certificate emitted by eliminate");
    add_common(chk);
    chk->add_option("--cert", cfg.cert_path, "certificate JSON file")->required();
    CLI::App* per = app.add_subcommand("perron", "algebraic relation among n+1 polynomials in n variables");
    add_common(per);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        const SystemText sys_text = read_system_text(load_input(cfg));

        FieldDesc desc = FieldDesc::rationals();
        if (!cfg.field_flag.empty())
            desc = parse_field_flag(cfg.field_flag);
        else if (sys_text.header_field)
            desc = *sys_text.header_field;

        if (desc.kind == FieldKind::Rationals)
            return run_typed<Rational>(command, sys_text, desc, cfg, out);
        return run_typed<Fp>(command, sys_text, desc, cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace elimcert::cli

#endif
