// radcount: count commuting pairs in the radical of quiver path algebras
// over small finite fields, reduce quivers to closed-form leaves, fit count
// polynomials, and run verification suites.
//
// Exit codes: 0 success, 1 verification failure or internal error, 2 parse or
// validation error, 3 budget exceeded, 4 insufficient sample points.

#include "radcount/cache.hpp"
#include "radcount/canonical.hpp"
#include "radcount/count.hpp"
#include "radcount/errors.hpp"
#include "radcount/field.hpp"
#include "radcount/interpolate.hpp"
#include "radcount/polynomial.hpp"
#include "radcount/quiver.hpp"
#include "radcount/rewrite.hpp"
#include "radcount/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace radcount;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct CountArgs {
    std::string quiver_file;
    int q = 0;
    std::string mode = "radical";
    int l = 1, m = 0;
    std::string engine = "brute";
    int jobs = 0;
    long long budget = 1LL << 34;
    std::string cache_file;
};

int cmd_count(const CountArgs& args) {
    auto [quiver, d] = parse_quiver(read_file(args.quiver_file));
    CountOptions opts;
    opts.jobs = args.jobs;
    opts.budget = args.budget;

    std::string mode = args.mode;
    if (mode == "weakened")
        mode = "weakened(" + std::to_string(args.l) + "," + std::to_string(args.m) + ")";

    std::string cache_path = args.cache_file;
    if (cache_path.empty())
        if (const char* env = std::getenv("RADCOUNT_CACHE")) cache_path = env;

    ResultCache cache(cache_path);
    std::string key;
    if (!cache_path.empty()) {
        cache.load();
        key = ResultCache::make_key(quiver, d, mode, args.q);
        if (auto hit = cache.lookup(key)) {
            std::cout << *hit << "\n";
            return 0;
        }
    }

    CountResult res;
    if (args.mode == "radical") {
        if (args.engine == "brute")
            res = count_commuting(quiver, d, args.q, opts);
        else if (args.engine == "dispatch")
            res = dispatch_count(quiver, d, args.q, opts);
        else if (args.engine == "naive")
            res = naive_pair_count(quiver, d, args.q, opts);
        else
            throw std::invalid_argument("unknown engine: " + args.engine);
    } else if (args.mode == "overline") {
        if (args.engine != "brute")
            throw std::invalid_argument("mode overline supports only --engine brute");
        res = count_overline(quiver, d, args.q, opts);
    } else if (args.mode == "weakened") {
        if (args.engine != "brute")
            throw std::invalid_argument("mode weakened supports only --engine brute");
        res = count_weakened(quiver, d, args.q, args.l, args.m, opts);
    } else {
        throw std::invalid_argument("unknown mode: " + args.mode);
    }

    if (!cache_path.empty()) {
        CacheRecord rec;
        rec.key = key;
        rec.value = res.value.get_str();
        rec.version = kVersion;
        rec.timestamp = utc_timestamp();
        rec.elapsed_seconds = res.elapsed_seconds;
        rec.input_json = to_json(quiver, d);
        rec.mode = mode;
        rec.q = args.q;
        cache.append(rec);
    }

    std::cout << res.value.get_str() << "\n";
    return 0;
}

struct ReduceArgs {
    std::string quiver_file;
    bool show_steps = false;
    bool json = false;
};

int cmd_reduce(const ReduceArgs& args) {
    auto [quiver, d] = parse_quiver(read_file(args.quiver_file));
    ReductionTrace trace = normalize(quiver, d);

    if (args.json) {
        nlohmann::ordered_json out;
        out["steps"] = nlohmann::ordered_json::array();
        for (const ReductionStep& s : trace.steps) {
            nlohmann::ordered_json js;
            js["rule"] = s.rule;
            js["detail"] = s.detail;
            js["before"] = nlohmann::ordered_json::parse(s.before_json);
            js["after"] = nlohmann::ordered_json::array();
            for (const std::string& a : s.after_json)
                js["after"].push_back(nlohmann::ordered_json::parse(a));
            out["steps"].push_back(std::move(js));
        }
        out["leaves"] = nlohmann::ordered_json::array();
        for (const Leaf& leaf : trace.leaves) {
            nlohmann::ordered_json jl;
            jl["classification"] = leaf.cls.label();
            jl["quiver"] = nlohmann::ordered_json::parse(to_json(leaf.quiver, leaf.d));
            out["leaves"].push_back(std::move(jl));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (args.show_steps) {
        int n = 0;
        for (const ReductionStep& s : trace.steps) {
            std::cout << "step " << ++n << ": " << s.rule;
            if (!s.detail.empty()) std::cout << " " << s.detail;
            if (s.after_json.size() > 1) std::cout << " -> " << s.after_json.size() << " parts";
            std::cout << "\n";
        }
    }

    // Group identical leaves (same classification and isomorphism class).
    std::vector<std::pair<std::string, int>> groups; // label -> count, first-seen order
    std::map<std::string, std::size_t> pos;
    for (const Leaf& leaf : trace.leaves) {
        std::string key = leaf.cls.label() + "|" + canonical_hash(leaf.quiver, leaf.d);
        auto it = pos.find(key);
        if (it == pos.end()) {
            pos[key] = groups.size();
            groups.emplace_back(leaf.cls.label(), 1);
        } else {
            ++groups[it->second].second;
        }
    }
    std::cout << "leaves:";
    if (groups.empty()) std::cout << " none (empty quiver)";
    std::cout << "\n";
    for (const auto& [label, count] : groups)
        std::cout << "  " << count << " x " << label << "\n";
    return 0;
}

struct PolyArgs {
    std::string quiver_file;
    std::string mode = "radical";
    int l = 1, m = 0;
    std::vector<int> qs;
    int jobs = 0;
    long long budget = 1LL << 34;
    bool json = false;
};

int cmd_poly(const PolyArgs& args) {
    auto [quiver, d] = parse_quiver(read_file(args.quiver_file));
    CountOptions opts;
    opts.jobs = args.jobs;
    opts.budget = args.budget;

    CountMode mode;
    if (args.mode == "radical")
        mode = CountMode::radical;
    else if (args.mode == "overline")
        mode = CountMode::overline;
    else if (args.mode == "weakened")
        mode = CountMode::weakened;
    else
        throw std::invalid_argument("unknown mode: " + args.mode);

    std::vector<int> qs = args.qs;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    if (qs.size() != args.qs.size())
        throw std::invalid_argument("--qs values must be distinct");
    for (int fq : qs)
        if (!is_supported_prime_power(fq))
            throw std::invalid_argument("unsupported q=" + std::to_string(fq));

    long bound = fitting_degree_bound(quiver, d, mode, args.l, args.m);
    int needed = static_cast<int>(bound) + 2;
    if (static_cast<int>(qs.size()) < needed)
        throw InsufficientSamplesError(
            needed, static_cast<int>(qs.size()),
            "need at least " + std::to_string(needed) + " sample q values for degree bound " +
                std::to_string(bound) + " (" + std::to_string(bound + 1) +
                " fit points plus holdout); got " + std::to_string(qs.size()));

    SampleSet set;
    set.mode = mode;
    set.l = args.l;
    set.m = args.m;
    set.source = (mode == CountMode::radical) ? "dispatch" : "brute";
    for (int fq : qs) {
        Sample s;
        s.q = fq;
        switch (mode) {
            case CountMode::radical:
                s.value = dispatch_count(quiver, d, fq, opts).value;
                break;
            case CountMode::overline:
                s.value = count_overline(quiver, d, fq, opts).value;
                break;
            case CountMode::weakened:
                s.value = count_weakened(quiver, d, fq, args.l, args.m, opts).value;
                break;
        }
        set.samples.push_back(std::move(s));
    }

    FitReport rep = interpolate(set, bound);

    if (args.json) {
        nlohmann::ordered_json out;
        out["mode"] = mode_name(mode, args.l, args.m);
        out["degree_bound"] = rep.bound_used;
        out["samples"] = nlohmann::ordered_json::array();
        for (const Sample& s : set.samples)
            out["samples"].push_back({{"q", s.q}, {"value", s.value.get_str()}});
        out["polynomial"] = rep.poly.to_string();
        out["terms"] = rep.poly.to_json_terms();
        out["holdout"] = nlohmann::ordered_json::array();
        for (const HoldoutCheck& hc : rep.holdout)
            out["holdout"].push_back({{"q", hc.q},
                                      {"predicted", hc.predicted},
                                      {"actual", hc.actual},
                                      {"match", hc.match}});
        out["nonnegative"] = rep.nonnegative;
        out["integer_coefficients"] = rep.integer_coefficients;
        out["fitted"] = rep.fitted;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "mode: " << mode_name(mode, args.l, args.m) << "\n";
    std::cout << "degree bound: " << rep.bound_used << " (" << rep.points_fit
              << " fit points, " << rep.holdout.size() << " holdout)\n";
    for (const Sample& s : set.samples)
        std::cout << "sample q=" << s.q << ": " << s.value.get_str() << "\n";
    std::cout << "fit: " << rep.poly.to_string() << "\n";
    for (const HoldoutCheck& hc : rep.holdout)
        std::cout << "holdout q=" << hc.q << ": predicted " << hc.predicted << ", actual "
                  << hc.actual << (hc.match ? " (match)" : " (MISMATCH)") << "\n";
    std::cout << "coefficients: " << (rep.integer_coefficients ? "integer" : "NON-INTEGER")
              << ", " << (rep.nonnegative ? "nonnegative" : "mixed signs") << "\n";
    if (rep.fitted) {
        std::cout << "result: fit\n";
    } else {
        std::cout << "result: NO FIT (" << rep.failure << ")\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::string cache_file;
    int trials = 100;
    std::uint64_t seed = 0;
    std::vector<int> qs{2, 3};
    int max_n = 4;
    int jobs = 0;
    long long budget = 1LL << 34;
};

int cmd_verify(const VerifyArgs& args) {
    CountOptions opts;
    opts.jobs = args.jobs;
    opts.budget = args.budget;

    SuiteReport rep;
    if (!args.cache_file.empty()) {
        rep = run_cache_audit(args.cache_file, args.seed, opts);
    } else if (args.suite == "ops") {
        rep = run_ops_suite(args.seed, args.trials, args.qs, opts);
    } else if (args.suite == "oracle") {
        rep = run_oracle_suite(args.seed, args.trials, args.qs, opts);
    } else if (args.suite == "burnside") {
        rep = run_burnside_suite(args.max_n, args.qs, opts);
    } else if (args.suite == "injectivity") {
        rep = run_injectivity_suite(args.seed, args.trials, args.qs, opts);
    } else {
        throw std::invalid_argument("pick a suite (ops|oracle|burnside|injectivity) or --cache");
    }

    for (const std::string& line : rep.lines) std::cout << line << "\n";
    std::cout << "suite " << rep.suite << ": " << rep.passed << "/" << rep.trials << " passed\n";
    if (!rep.ok()) {
        for (const std::string& f : rep.failures) std::cout << "FAILURE: " << f << "\n";
        return 1;
    }
    return 0;
}

struct FormulaArgs {
    long l = 0, d = 0, m = 0;
    bool json = false;
};

int cmd_formula(const FormulaArgs& args) {
    PolyQ p = a3_count_poly(args.l, args.d, args.m);
    if (args.json) {
        nlohmann::ordered_json out;
        out["l"] = args.l;
        out["d"] = args.d;
        out["m"] = args.m;
        out["polynomial"] = p.to_string();
        out["terms"] = p.to_json_terms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"commuting-pair counts for radicals of quiver path algebras"};
    app.require_subcommand(1);

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "exact count for one (quiver, d, q)");
    count->add_option("--quiver", count_args.quiver_file, "quiver JSON file")->required();
    count->add_option("--q", count_args.q, "field size (prime power <= 32)")->required();
    count->add_option("--mode", count_args.mode, "radical|overline|weakened (default radical)");
    count->add_option("--l", count_args.l, "weakened: lower radical power (default 1)");
    count->add_option("--m", count_args.m, "weakened: commutator truncation (default 0)");
    count->add_option("--engine", count_args.engine, "brute|dispatch|naive (default brute)");
    count->add_option("--jobs", count_args.jobs, "worker threads (default RADCOUNT_JOBS or hardware)");
    count->add_option("--budget", count_args.budget, "max enumerated elements (default 2^34)");
    count->add_option("--cache", count_args.cache_file, "JSONL cache file (default RADCOUNT_CACHE)");

    ReduceArgs reduce_args;
    CLI::App* reduce = app.add_subcommand("reduce", "normalize to classified leaves");
    reduce->add_option("--quiver", reduce_args.quiver_file, "quiver JSON file")->required();
    reduce->add_flag("--show-steps", reduce_args.show_steps, "print each reduction step");
    reduce->add_flag("--json", reduce_args.json, "machine-readable trace");

    PolyArgs poly_args;
    CLI::App* poly = app.add_subcommand("poly", "interpolate the count polynomial");
    poly->add_option("--quiver", poly_args.quiver_file, "quiver JSON file")->required();
    poly->add_option("--mode", poly_args.mode, "radical|overline|weakened (default radical)");
    poly->add_option("--l", poly_args.l, "weakened: lower radical power (default 1)");
    poly->add_option("--m", poly_args.m, "weakened: commutator truncation (default 0)");
    poly->add_option("--qs", poly_args.qs, "comma-separated sample field sizes")
        ->required()
        ->delimiter(',');
    poly->add_option("--jobs", poly_args.jobs, "worker threads");
    poly->add_option("--budget", poly_args.budget, "max enumerated elements (default 2^34)");
    poly->add_flag("--json", poly_args.json, "machine-readable report");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "randomized verification suites");
    verify->add_option("--suite", verify_args.suite, "ops|oracle|burnside|injectivity");
    verify->add_option("--cache", verify_args.cache_file, "audit a cache file instead");
    verify->add_option("--trials", verify_args.trials, "trial count (default 100)");
    verify->add_option("--seed", verify_args.seed, "RNG seed (default 0)");
    verify->add_option("--qs", verify_args.qs, "field sizes (default 2,3)")->delimiter(',');
    verify->add_option("--max-n", verify_args.max_n, "burnside: largest n (default 4)");
    verify->add_option("--jobs", verify_args.jobs, "worker threads");
    verify->add_option("--budget", verify_args.budget, "max enumerated elements");

    FormulaArgs formula_args;
    CLI::App* formula = app.add_subcommand("formula", "closed form for the (l,d,m) chain");
    formula->add_option("--l", formula_args.l, "source multiplicity")->required();
    formula->add_option("--d", formula_args.d, "middle multiplicity")->required();
    formula->add_option("--m", formula_args.m, "sink multiplicity")->required();
    formula->add_flag("--json", formula_args.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(count_args);
        if (reduce->parsed()) return cmd_reduce(reduce_args);
        if (poly->parsed()) return cmd_poly(poly_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (formula->parsed()) return cmd_formula(formula_args);
    } catch (const radcount::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const radcount::InsufficientSamplesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
