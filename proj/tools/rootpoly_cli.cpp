// Command-line front end: constructions, verification, degree searches, and
// coefficient-run checks with reproducible JSON/text/csv output.
//
// Exit codes: 0 ok, 2 precondition, 3 parse, 4 search-space cap, 5 internal
// consistency failure (must never happen; highest-severity bug if it does).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootpoly/format.hpp"
#include "rootpoly/roots.hpp"
#include "rootpoly/search.hpp"
#include "rootpoly/zero_run.hpp"

using njson = nlohmann::ordered_json;
using namespace rootpoly;

namespace {

struct OutputOptions {
    std::string format = "json"; // json | text | csv
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string scalar_to_text(const njson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Arrays flatten to ';'-joined entries so csv stays one row per run.
std::string value_to_text(const njson& v) {
    if (!v.is_array()) return scalar_to_text(v);
    std::string out;
    for (const auto& item : v) {
        if (!out.empty()) out += ';';
        out += scalar_to_text(item);
    }
    return out;
}

void emit(const njson& j, const OutputOptions& opt) {
    if (opt.format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    if (opt.format == "csv") {
        std::string header, row;
        for (const auto& [key, value] : j.items()) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += csv_escape(key);
            row += csv_escape(value_to_text(value));
        }
        std::cout << header << "\n" << row << "\n";
        return;
    }
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << value_to_text(value) << "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Env override for the assignment-space cap used by the searches.
SearchLimits limits_from_env() {
    SearchLimits limits;
    if (const char* cap = std::getenv("ROOTPOLY_SEARCH_CAP")) {
        try {
            limits.max_assignments = std::stoull(cap);
        } catch (const std::exception&) {
            throw ParseError("ROOTPOLY_SEARCH_CAP must be an unsigned integer");
        }
    }
    return limits;
}

njson bound_fields(const DegreeBound& b) {
    return njson{{"bound", b.value}, {"bound_name", b.name}, {"bound_equality", b.equality}};
}

int run(int argc, char** argv) {
    CLI::App app{"finite-field root polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // --format after the subcommand reaches the parent
    OutputOptions out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();

    u64 p = 0;
    unsigned t_root = 2;
    unsigned e = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    u64 seed = 0;
    std::string poly_arg;

    auto* construct = app.add_subcommand("construct", "emit a closed-form root polynomial");
    std::string variant;
    construct->add_option("-p,--prime", p, "odd prime modulus")->required();
    construct->add_option("--variant", variant, "construction family")
        ->check(CLI::IsMember({"3mod4", "5mod8", "tth"}))
        ->required();
    construct->add_option("-t,--t", t_root, "root order (tth variant)");

    auto* verify = app.add_subcommand("verify", "count verification errors of a polynomial");
    verify->add_option("-p,--prime", p, "odd prime modulus")->required();
    verify->add_option("-f,--f", poly_arg, "coefficients c0,c1,... or @file")->required();
    verify->add_option("-t,--t", t_root, "root order");

    auto* mindeg = app.add_subcommand("mindeg", "exhaustive minimal interpolant degree");
    mindeg->add_option("-p,--prime", p, "odd prime modulus")->required();
    mindeg->add_option("-t,--t", t_root, "root order");
    mindeg->add_option("-e,--errors", e, "tolerated node drops (t = 2 only)");
    mindeg->add_option("--threads", threads, "worker threads");

    auto* kernel = app.add_subcommand("kernel", "sign vectors zeroing leading coefficients");
    std::string strategy = "exhaustive";
    u64 budget = 0;
    unsigned depth = 1;
    kernel->add_option("-p,--prime", p, "odd prime modulus")->required();
    kernel->add_option("-t,--depth", depth, "leading coefficients to zero");
    kernel->add_option("--strategy", strategy, "search strategy")
        ->check(CLI::IsMember({"exhaustive", "meet_in_middle", "random_flip"}));
    kernel->add_option("--budget", budget, "assignment budget (0 = default)");
    kernel->add_option("--seed", seed, "rng seed (random_flip)");

    auto* zerorun = app.add_subcommand("zerorun", "interior zero runs of a polynomial power");
    unsigned t_pow = 1;
    zerorun->add_option("-p,--prime", p, "odd prime modulus")->required();
    zerorun->add_option("-f,--f", poly_arg, "coefficients c0,c1,... or @file")->required();
    zerorun->add_option("--t-pow", t_pow, "power to expand")->required();

    auto* equidist = app.add_subcommand("equidist", "value distribution of odd sign sums");
    std::string signs_arg;
    unsigned buckets = 10;
    unsigned sign_len = 0;
    equidist->add_option("-p,--prime", p, "odd prime modulus")->required();
    equidist->add_option("-k,--buckets", buckets, "bucket count");
    auto* signs_opt = equidist->add_option("--signs", signs_arg, "explicit +/- pattern");
    equidist->add_option("--len", sign_len, "random pattern length")->excludes(signs_opt);
    equidist->add_option("--seed", seed, "rng seed for --len");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help); // prints usage, exits 0
    } catch (const CLI::ParseError& pe) {
        app.exit(pe);
        return 3;
    }
    const auto t0 = std::chrono::steady_clock::now();

    njson j;
    j["schema"] = "v1";

    if (*construct) {
        j["command"] = "construct";
        j["p"] = p;
        j["variant"] = variant;
        DensePoly f(2);
        unsigned t_eff = 2;
        if (variant == "3mod4") {
            f = construct_3mod4(p);
        } else if (variant == "5mod8") {
            f = construct_5mod8(p);
        } else {
            t_eff = t_root;
            f = construct_tth_special(p, t_root);
        }
        j["t"] = t_eff;
        j["coefficients"] = poly_to_text(f);
        j["degree"] = f.degree().value(); // constructions are never zero
        j["constant_term"] = f.coeff(0);
        j["errors"] = verify_root_poly(f, RootTask(p, t_eff));
        if (variant == "5mod8") {
            // exact identity: f^2 folded onto the subgroup relation is X itself
            DensePoly sq = (f * f).mod_cyclic((p - 1) / 2);
            j["identity_ok"] = sq == DensePoly::monomial(p, 1);
        }
    } else if (*verify) {
        j["command"] = "verify";
        j["p"] = p;
        j["t"] = t_root;
        DensePoly f = parse_poly_text(resolve_arg(poly_arg), p);
        RootTask task(p, t_root);
        const u64 errors = verify_root_poly(f, task);
        j["coefficients"] = poly_to_text(f);
        if (f.degree())
            j["degree"] = *f.degree();
        else
            j["degree"] = nullptr;
        j["errors"] = errors;
        // a polynomial erring on at most e nodes can never beat the e-robust
        // degree floor; report the floor for the measured error count
        constexpr u64 kMaxE = std::numeric_limits<unsigned>::max();
        DegreeBound b = errors <= kMaxE
                            ? degree_bound(p, t_root, static_cast<unsigned>(errors))
                            : DegreeBound{0, "trivial", false};
        j.update(bound_fields(b));
        const u64 deg = f.degree().value_or(0);
        const bool holds = deg >= b.value;
        j["bound_ok"] = holds;
        if (!holds)
            throw TheoremViolation("degree " + std::to_string(deg) + " with " +
                                   std::to_string(errors) + " errors undercuts the floor " +
                                   std::to_string(b.value));
    } else if (*mindeg) {
        j["command"] = "mindeg";
        j["p"] = p;
        j["t"] = t_root;
        j["e"] = e;
        if (e > 0 && t_root != 2)
            throw InvalidOrder("error tolerance is only supported for square roots");
        SearchLimits limits = limits_from_env();
        SearchReport rep = e > 0 ? min_degree_robust(p, e, threads, limits)
                                 : min_degree_exhaustive(p, t_root, threads, limits);
        j["min_degree"] = rep.min_degree;
        j["witness"] = rep.witness;
        j["dropped"] = rep.dropped;
        j["vectors"] = rep.vectors;
        j.update(bound_fields(rep.bound));
        j["bound_ok"] = rep.bound_ok;
        j["cap"] = limits.max_assignments;
    } else if (*kernel) {
        j["command"] = "kernel";
        j["p"] = p;
        j["depth"] = depth;
        j["strategy"] = strategy;
        KernelStrategy s = strategy == "exhaustive"     ? KernelStrategy::exhaustive
                           : strategy == "meet_in_middle" ? KernelStrategy::meet_in_middle
                                                          : KernelStrategy::random_flip;
        if (budget == 0 && s != KernelStrategy::random_flip)
            budget = limits_from_env().max_assignments;
        KernelReport rep = kernel_sign_search(p, depth, s, budget, seed);
        j["found"] = rep.found;
        j["witness"] = rep.witness;
        j["degree"] = rep.degree;
        j["errors"] = rep.errors;
        j["examined"] = rep.examined;
        j["budget"] = budget;
    } else if (*zerorun) {
        j["command"] = "zerorun";
        j["p"] = p;
        j["t_pow"] = t_pow;
        DensePoly f = parse_poly_text(resolve_arg(poly_arg), p);
        ZeroRunReport rep = check_power_run(f, t_pow);
        j["f"] = poly_to_text(f);
        j["d"] = rep.d.value();
        j["max_run"] = rep.max_run;
        j["b"] = rep.b;
        j["l"] = rep.l;
        njson gaps = njson::array();
        for (const Gap& g : rep.gaps) gaps.push_back(njson{{"b", g.b}, {"l", g.l}});
        j["gap_count"] = rep.gaps.size();
        j["gaps"] = gaps;
        j["hypothesis_ok"] = rep.hypothesis_ok;
        j["bound_ok"] = rep.bound_ok;
    } else if (*equidist) {
        j["command"] = "equidist";
        j["p"] = p;
        j["k"] = buckets;
        std::vector<int> signs;
        if (!signs_arg.empty()) {
            for (char c : signs_arg) {
                if (c == '+') signs.push_back(1);
                else if (c == '-') signs.push_back(-1);
                else throw ParseError("--signs: expected '+' or '-'");
            }
        } else if (sign_len > 0) {
            std::mt19937_64 rng(seed);
            for (unsigned i = 0; i < sign_len; ++i) signs.push_back(rng() & 1 ? -1 : 1);
        } else {
            throw ParseError("equidist needs --signs or --len");
        }
        std::string pattern;
        for (int s : signs) pattern += s == 1 ? '+' : '-';
        EquidistReport rep = equidist_stats(p, signs, buckets);
        j["signs"] = pattern;
        j["counts"] = rep.counts;
        j["max_dev"] = rep.max_dev;
        j["bound"] = rep.bound;
        j["ok"] = rep.ok;
    }

    j["seed"] = seed;
    j["threads"] = *mindeg ? std::max(1u, threads) : 1; // only mindeg parallelizes
    j["ms"] = elapsed_ms(t0);
    emit(j, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 5;
    } catch (const SearchSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
