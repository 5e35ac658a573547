#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kron/fib3.hpp"
#include "kron/grsym.hpp"
#include "kron/oracle.hpp"
#include "kron/repkit.hpp"
#include "kron/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitBudget = 3;  // distinct code: retry with larger budgets

kron::DimVec parse_dim(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw kron::ParseError("expected a,b: " + s);
    try {
        return kron::DimVec{kron::Int(s.substr(0, comma)), kron::Int(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw kron::ParseError("expected integers a,b: " + s);
    }
}

json dim_json(const kron::DimVec& v) { return json::array({v.a.str(), v.b.str()}); }

json measure_json(const kron::GrMeasure& m) {
    json a = json::array();
    for (const auto& e : m.entries()) a.push_back(e.str());
    return a;
}

int cmd_roots(int n, int max_length, bool as_json) {
    kron::KroneckerContext ctx(n);
    json rows = json::array();
    for (int a = 0; a <= max_length; ++a)
        for (int b = 0; a + b <= max_length; ++b) {
            if (a == 0 && b == 0) continue;
            kron::DimVec v{a, b};
            kron::RootClass rc = ctx.classify_root(v);
            if (rc == kron::RootClass::NotRoot) continue;
            std::string kind = rc == kron::RootClass::RealRoot ? "Real" : "Imaginary";
            std::string pos = ctx.classify_position(v).to_string();
            if (as_json)
                rows.push_back({{"dim", dim_json(v)}, {"class", kind}, {"position", pos}});
            else
                std::cout << v.to_string() << '\t' << kind << '\t' << pos << '\n';
        }
    if (as_json) std::cout << rows.dump(2) << '\n';
    return 0;
}

int cmd_orbit(int n, const kron::DimVec& dim, long k_lo, long k_hi, bool as_json) {
    kron::KroneckerContext ctx(n);
    json rows = json::array();
    for (long k = k_lo; k <= k_hi; ++k) {
        std::string value;
        try {
            value = ctx.coxeter_apply(dim, k).to_string();
        } catch (const kron::OrbitEscape&) {
            value = "escaped";
        }
        if (as_json) {
            json row;
            row["k"] = k;
            if (value == "escaped")
                row["dim"] = nullptr;
            else
                row["dim"] = dim_json(ctx.coxeter_apply(dim, k));
            rows.push_back(std::move(row));
        } else {
            std::cout << k << '\t' << value << '\n';
        }
    }
    if (as_json) std::cout << rows.dump(2) << '\n';
    return 0;
}

int cmd_measure(int n, int c, int i, int j, bool as_json) {
    kron::KroneckerContext ctx(n);
    kron::GrSymbolic sym(ctx);
    kron::GrDescriptor d = sym.descriptor({c, i, j});
    std::string sub = std::holds_alternative<kron::PositionClass>(d.gr_submodule)
                          ? std::get<kron::PositionClass>(d.gr_submodule).to_string()
                          : std::get<kron::RegularCoord>(d.gr_submodule).to_string();
    if (as_json) {
        json out;
        out["coord"] = {{"c", c}, {"i", i}, {"j", j}};
        out["dim"] = dim_json(d.dim);
        out["length"] = kron::length(d.dim).str();
        out["measure"] = measure_json(d.measure);
        out["gr_submodule"] = sub;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << d.coord.to_string() << "\tdim " << d.dim.to_string() << "\tmeasure "
                  << d.measure.to_string() << "\tGR submodule " << sub << '\n';
    }
    return 0;
}

int cmd_oracle(int n, int p, const std::string& builtin, const std::string& file,
               unsigned long long budget_lattice, unsigned long long budget_end,
               bool as_json) {
    kron::KroneckerContext ctx(n);
    kron::Rep R;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw kron::Error("cannot open " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        R = kron::rep_from_json(buf.str());
    } else if (builtin == "P1") {
        R = kron::build_canonical(ctx, p, kron::CanonicalKind::P1);
    } else if (builtin == "P2") {
        R = kron::build_canonical(ctx, p, kron::CanonicalKind::P2);
    } else if (builtin == "Q0") {
        R = kron::build_canonical(ctx, p, kron::CanonicalKind::Q0);
    } else if (builtin == "Q1") {
        R = kron::build_canonical(ctx, p, kron::CanonicalKind::Q1);
    } else {
        throw kron::PreconditionError("oracle: give --file or --builtin P1|P2|Q0|Q1");
    }
    kron::GrOracle o(R, budget_lattice, budget_end);
    kron::GrCertificate cert = o.certificate();
    if (as_json) {
        std::cout << kron::certificate_to_json(cert) << '\n';
    } else {
        std::cout << "measure " << cert.measure.to_string() << '\n';
        for (const auto& s : cert.chain)
            std::cout << "  chain dim " << s.dim().to_string() << '\n';
        std::cout << "GR submodule class: "
                  << (cert.gr_submodule_class ? cert.gr_submodule_class->to_string() : "Unknown")
                  << '\n';
    }
    return 0;
}

int cmd_grid(const kron::DimVec& anchor, int radius, int ql, bool as_json) {
    kron::fib3::ComponentGrid grid(anchor, radius, ql);
    if (as_json) {
        json rows = json::array();
        for (int j = 1; j <= ql; ++j) {
            json row = json::array();
            for (int t = -radius; t <= radius; ++t) row.push_back(dim_json(grid.at(j, t)));
            rows.push_back(std::move(row));
        }
        json out;
        out["anchor"] = dim_json(anchor);
        out["radius"] = radius;
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << '\n';
    } else {
        for (int j = ql; j >= 1; --j) {
            std::cout << j;
            for (int t = -radius; t <= radius; ++t) std::cout << '\t' << grid.at(j, t).to_string();
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, const kron::VerifyOptions& opts, bool as_json) {
    kron::VerifyReport rep = kron::run_suite(suite, opts);
    if (as_json) {
        std::cout << kron::report_to_json(rep) << '\n';
    } else {
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << '\t' << c.id << '\t' << c.actual << '\n';
        std::cout << "suite " << rep.suite << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
                  << rep.seconds << " s)\n";
    }
    return rep.pass ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabriel-Roiter measures over wild n-Kronecker quivers"};
    app.require_subcommand(1);

    int n = 3, p = 2, c = 1, i = 0, j = 1;
    int max_length = 8, radius = 4, ql = 5;
    std::string dim_str = "1,1", k_str = "0", builtin, file, suite = "all";
    std::uint64_t seed = 1;
    unsigned long long budget_lattice = 1'000'000, budget_end = 1ull << 20;
    bool as_json = false;

    app.add_flag("--json", as_json, "machine-readable output (big integers as decimal strings)");
    app.fallthrough();  // lets subcommands accept the global --json anywhere

    auto* roots = app.add_subcommand("roots", "positive roots up to a length bound, classified");
    roots->add_option("--n", n, "arrow count (>= 3)");
    roots->add_option("--max-length", max_length, "list roots with a+b <= this");

    auto* orbit = app.add_subcommand("orbit", "tau-orbit of a dimension vector");
    orbit->add_option("--n", n, "arrow count (>= 3)");
    orbit->add_option("--dim", dim_str, "dimension vector a,b");
    orbit->add_option("--k", k_str, "power of tau: an integer or a range lo..hi");

    auto* measure = app.add_subcommand("measure", "closed-form GR measure of tau^{-i}X[j], dim X=(1,c)");
    measure->add_option("--n", n, "arrow count (>= 3)");
    measure->add_option("--c", c, "dim X = (1,c)");
    measure->add_option("--i", i, "tau^{-i} translate");
    measure->add_option("--j", j, "quasi-length");

    auto* oracle = app.add_subcommand("oracle", "GR measure with witness chain, from an explicit representation");
    oracle->add_option("--n", n, "arrow count (>= 3)");
    oracle->add_option("--p", p, "field characteristic (prime)");
    oracle->add_option("--builtin", builtin, "P1, P2, Q0 or Q1");
    oracle->add_option("--file", file, "representation JSON file");
    oracle->add_option("--budget-lattice", budget_lattice, "max subrepresentations to visit");
    oracle->add_option("--budget-end", budget_end, "max endomorphisms to enumerate");

    auto* grid = app.add_subcommand("grid", "regular component window for n = 3");
    grid->add_option("--dim", dim_str, "anchor a,b (quasi-simple)");
    grid->add_option("--radius", radius, "orbit offsets |t| <= radius");
    grid->add_option("--ql", ql, "quasi-lengths 1..ql");

    auto* verify = app.add_subcommand("verify", "acceptance suites: symbolic engine vs oracle");
    verify->add_option("--suite", suite, "one of the named suites, or 'all'");
    verify->add_option("--seed", seed, "base seed for sampled instances");
    verify->add_option("--budget-lattice", budget_lattice, "max subrepresentations to visit");
    verify->add_option("--budget-end", budget_end, "max endomorphisms to enumerate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots->parsed()) return cmd_roots(n, max_length, as_json);
        if (orbit->parsed()) {
            long lo, hi;
            auto dots = k_str.find("..");
            if (dots == std::string::npos) {
                lo = hi = std::stol(k_str);
            } else {
                lo = std::stol(k_str.substr(0, dots));
                hi = std::stol(k_str.substr(dots + 2));
            }
            return cmd_orbit(n, parse_dim(dim_str), lo, hi, as_json);
        }
        if (measure->parsed()) return cmd_measure(n, c, i, j, as_json);
        if (oracle->parsed())
            return cmd_oracle(n, p, builtin, file, budget_lattice, budget_end, as_json);
        if (grid->parsed()) return cmd_grid(parse_dim(dim_str), radius, ql, as_json);
        if (verify->parsed()) {
            kron::VerifyOptions opts;
            opts.seed = seed;
            opts.budget_lattice = budget_lattice;
            opts.budget_end = budget_end;
            return cmd_verify(suite, opts, as_json);
        }
    } catch (const kron::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (estimate " << e.estimate << ")\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
