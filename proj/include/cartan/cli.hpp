#pragma once

// Command dispatch for the cartan tool.  run_command is the whole CLI; the
// binary in tools/ is a two-line wrapper, which keeps every fixture testable
// in-process.
//
// Exit codes: 0 success, 1 parse error, 2 precondition/domain error,
// 3 resource cap exceeded.  verify-harmonic returns 2 when a check fails.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cartan/names.hpp"
#include "cartan/tensor.hpp"
#include "cartan/verify.hpp"

namespace cartan {

enum class OutputFormat { Text, Machine };

namespace detail {

struct CliRequest {
    std::string command;
    std::vector<std::string> positional;
    OutputFormat format = OutputFormat::Text;
    int resolution = 12;
    long long cap = default_dim_cap;
    long long orbit_cap = default_orbit_cap;
    std::string method = "weight-sum";
};

inline CliRequest parse_cli(const std::vector<std::string>& args) {
    CliRequest req;
    std::size_t i = 0;
    auto flag_value = [&](const std::string& flag) {
        if (i + 1 >= args.size()) throw ParseError("flag " + flag + " needs a value");
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format") {
            std::string v = flag_value(a);
            if (v == "text")
                req.format = OutputFormat::Text;
            else if (v == "machine")
                req.format = OutputFormat::Machine;
            else
                throw ParseError("unknown format '" + v + "' (expected text or machine)");
        } else if (a == "--resolution") {
            try {
                req.resolution = std::stoi(flag_value(a));
            } catch (const std::exception&) {
                throw ParseError("--resolution needs an integer value");
            }
            if (req.resolution < 1) throw ParseError("--resolution must be >= 1");
        } else if (a == "--cap") {
            try {
                req.cap = std::stoll(flag_value(a));
            } catch (const std::exception&) {
                throw ParseError("--cap needs an integer value");
            }
            req.orbit_cap = req.cap;
            if (req.cap < 1) throw ParseError("--cap must be >= 1");
        } else if (a == "--method") {
            std::string v = flag_value(a);
            if (v != "weight-sum" && v != "weyl-quotient")
                throw ParseError("unknown method '" + v + "'");
            req.method = v;
        } else if (a.rfind("--", 0) == 0) {
            throw ParseError("unknown flag '" + a + "'");
        } else if (req.command.empty()) {
            req.command = a;
        } else {
            req.positional.push_back(a);
        }
    }
    if (req.command.empty()) throw ParseError("no command given");
    return req;
}

inline std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void expect_arity(const CliRequest& req, std::size_t n) {
    if (req.positional.size() != n)
        throw ParseError("command '" + req.command + "' expects " + std::to_string(n) +
                         " argument(s), got " + std::to_string(req.positional.size()));
}

inline Weight checked_weight(const RootSystem& rs, const GroupSpec& spec, const std::string& text,
                             bool require_lattice) {
    Weight w = parse_weight(text);
    if (w.rank() != static_cast<std::size_t>(rs.rank()))
        throw DomainError("weight " + to_string(w) + " has rank " + std::to_string(w.rank()) +
                          " but " + canonical_name(spec) + " has rank " +
                          std::to_string(rs.rank()));
    if (require_lattice && !spec.lattice.contains(weight_class(rs, w)))
        throw DomainError("weight " + to_string(w) + " is not in the character lattice of " +
                          canonical_name(spec) +
                          ": the representation does not factor through this form");
    return w;
}

inline std::string machine_weight_line(const Weight& w, long long mult) {
    std::string line = "w " + std::to_string(mult);
    for (long long c : w.coords) line += " " + std::to_string(c);
    return line + "\n";
}

} // namespace detail

inline const char* cli_usage() {
    return
        "usage: cartan <command> [arguments] [flags]\n"
        "\n"
        "commands:\n"
        "  dim <group> <weight>             dimension of L(weight)\n"
        "  weights <group> <weight>         weight diagram with multiplicities\n"
        "  char-eval <group> <weight> <angles>   character value at a torus point\n"
        "  tensor <group> <weight> <weight> tensor product decomposition\n"
        "  center <group>                   center of the simply-connected form\n"
        "  lattices <group>                 all character lattices between Q and P\n"
        "  weyl-order <group>               order of the Weyl group\n"
        "  roots <group>                    positive roots\n"
        "  verify-harmonic                  run the harmonic-analysis battery\n"
        "\n"
        "groups: Dynkin names (A3, G2) or classical names (SU(4), Spin(7), Sp(3),\n"
        "SO(5), PSU(3)); bare Dynkin names denote the simply-connected form.\n"
        "weights: [c1,c2,...] in fundamental-weight coordinates.\n"
        "\n"
        "flags:\n"
        "  --format text|machine   output format (default text)\n"
        "  --resolution N          quadrature resolution (default 12)\n"
        "  --cap N                 resource cap for dimensions and orbits\n"
        "  --method weight-sum|weyl-quotient   char-eval method (default weight-sum)\n";
}

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    try {
        if (args.empty() || args[0] == "--help" || args[0] == "help") {
            out << cli_usage();
            return args.empty() ? 1 : 0;
        }
        detail::CliRequest req = detail::parse_cli(args);
        const bool machine = req.format == OutputFormat::Machine;

        auto group_of = [&](const std::string& s) { return parse_group(s); };

        if (req.command == "dim") {
            detail::expect_arity(req, 2);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            Weight w = detail::checked_weight(rs, spec, req.positional[1], true);
            long long d = weyl_dim(rs, w);
            if (machine)
                out << "dim " << d << "\n";
            else
                out << "dim L" << to_string(w) << " = " << d << "\n";
            return 0;
        }
        if (req.command == "weights") {
            detail::expect_arity(req, 2);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            Weight w = detail::checked_weight(rs, spec, req.positional[1], true);
            FormalCharacter chi = formal_character(rs, w, req.cap);
            if (machine) {
                out << "weights " << chi.terms.size() << " " << chi.total_mass() << "\n";
                for (const auto& [mu, m] : chi.terms) out << detail::machine_weight_line(mu, m);
            } else {
                out << "character of L" << to_string(w) << ": " << chi.terms.size()
                    << " weights, total multiplicity " << chi.total_mass() << "\n";
                out << format_character(chi);
            }
            return 0;
        }
        if (req.command == "char-eval") {
            detail::expect_arity(req, 3);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            // character evaluation is defined on the simply-connected torus
            // regardless of the chosen form; no lattice membership check
            Weight w = detail::checked_weight(rs, spec, req.positional[1], false);
            std::vector<double> t = parse_angles(req.positional[2]);
            if (t.size() != static_cast<std::size_t>(rs.rank()))
                throw DomainError("angle list has length " + std::to_string(t.size()) +
                                  " but the rank is " + std::to_string(rs.rank()));
            CharacterMethod m = req.method == "weight-sum" ? CharacterMethod::WeightSum
                                                           : CharacterMethod::WeylQuotient;
            Complex v = eval_character(rs, w, t, m, req.cap);
            if (machine)
                out << "char-eval " << detail::fmt_double(v.real()) << " "
                    << detail::fmt_double(v.imag()) << "\n";
            else
                out << "chi" << to_string(w) << " = " << detail::fmt_double(v.real()) << " + "
                    << detail::fmt_double(v.imag()) << "i   (" << req.method << ")\n";
            return 0;
        }
        if (req.command == "tensor") {
            detail::expect_arity(req, 3);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            Weight a = detail::checked_weight(rs, spec, req.positional[1], true);
            Weight b = detail::checked_weight(rs, spec, req.positional[2], true);
            Decomposition d = tensor_decompose(rs, a, b, req.cap);
            if (machine) {
                out << "tensor " << d.terms.size() << "\n";
                for (const auto& [nu, m] : d.terms) out << detail::machine_weight_line(nu, m);
            } else {
                out << "L" << to_string(a) << " (x) L" << to_string(b) << " = "
                    << d.terms.size() << " irreducible class(es)\n";
                out << format_decomposition(d);
            }
            return 0;
        }
        if (req.command == "center") {
            detail::expect_arity(req, 1);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            IntVec factors = center_structure(rs);
            if (machine) {
                out << "center";
                for (long long f : factors) out << " " << f;
                out << "\n";
            } else {
                out << "center = ";
                if (factors.empty()) {
                    out << "trivial\n";
                } else {
                    for (std::size_t i = 0; i < factors.size(); ++i)
                        out << (i ? " x " : "") << "Z" << factors[i];
                    out << "\n";
                }
            }
            return 0;
        }
        if (req.command == "lattices") {
            detail::expect_arity(req, 1);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            std::vector<LatticeClass> all = enumerate_character_lattices(rs);
            if (machine) {
                out << "lattices " << all.size() << "\n";
                for (const LatticeClass& lc : all) {
                    out << "l " << lc.order;
                    for (const IntVec& g : lc.generators)
                        for (long long c : g) out << " " << c;
                    out << "\n";
                }
            } else {
                out << all.size() << " character lattice(s) between Q and P\n";
                long long full = 1;
                for (long long m : rs.class_mods) full *= m;
                for (const LatticeClass& lc : all) {
                    out << "  X(T)/Q of order " << lc.order;
                    if (lc.order == 1) out << "  (adjoint group)";
                    if (lc.order == full) out << "  (simply-connected group)";
                    if (!lc.generators.empty()) {
                        out << "  generated by";
                        for (const IntVec& g : lc.generators) {
                            out << " (";
                            for (std::size_t i = 0; i < g.size(); ++i)
                                out << (i ? "," : "") << g[i];
                            out << ")";
                        }
                    }
                    out << "\n";
                }
            }
            return 0;
        }
        if (req.command == "weyl-order") {
            detail::expect_arity(req, 1);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            unsigned long long w = weyl_order(rs, req.orbit_cap);
            if (machine)
                out << "weyl-order " << w << "\n";
            else
                out << "|W| = " << w << "\n";
            return 0;
        }
        if (req.command == "roots") {
            detail::expect_arity(req, 1);
            GroupSpec spec = group_of(req.positional[0]);
            RootSystem rs = build_root_system(spec.type);
            if (machine) {
                out << "roots " << rs.positive_roots.size() << "\n";
                for (const IntVec& r : rs.positive_roots) {
                    out << "r";
                    for (long long c : r) out << " " << c;
                    Weight w = weight_of_root(rs, r);
                    for (long long c : w.coords) out << " " << c;
                    out << "\n";
                }
            } else {
                out << rs.positive_roots.size() << " positive roots of " << spec.type.name()
                    << " (simple-root coords -> weight coords)\n";
                for (const IntVec& r : rs.positive_roots) {
                    out << "  (";
                    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
                    out << ") -> " << to_string(weight_of_root(rs, r)) << "\n";
                }
            }
            return 0;
        }
        if (req.command == "verify-harmonic") {
            detail::expect_arity(req, 0);
            std::vector<CheckResult> checks = run_harmonic_battery(req.resolution);
            std::size_t passed = 0;
            for (const CheckResult& c : checks) {
                if (c.pass) ++passed;
                if (machine)
                    out << "check " << c.name << " " << (c.pass ? 1 : 0) << " "
                        << detail::fmt_double(c.observed) << " " << detail::fmt_double(c.tolerance)
                        << "\n";
                else {
                    char line[160];
                    std::snprintf(line, sizeof line, "%-34s %s   observed %.3e   tolerance %.0e\n",
                                  c.name.c_str(), c.pass ? "PASS" : "FAIL", c.observed,
                                  c.tolerance);
                    out << line;
                }
            }
            if (machine)
                out << "result " << passed << " " << checks.size() << "\n";
            else
                out << passed << "/" << checks.size() << " checks passed\n";
            return passed == checks.size() ? 0 : 2;
        }
        throw ParseError("unknown command '" + req.command + "'");
    } catch (const ParseError& e) {
        err << "error (parse): " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        err << "error (resource): " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error (domain): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace cartan
