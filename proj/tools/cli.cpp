#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclica/chebotarev.hpp"
#include "cyclica/codes.hpp"
#include "cyclica/errors.hpp"
#include "cyclica/heuristics.hpp"
#include "cyclica/ideals.hpp"
#include "cyclica/primes.hpp"
#include "cyclica/ring.hpp"
#include "cyclica/uncertainty.hpp"
#include "serialize.hpp"

namespace cyclica::cli {
namespace {

using out::ojson;

// --jobs falls back to the CYCLICA_JOBS environment variable; anything
// unparsable or out of range silently means 1, the flag always wins.
unsigned default_jobs() {
    const char* env = std::getenv("CYCLICA_JOBS");
    if (!env) return 1;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
    return static_cast<unsigned>(v);
}

struct Common {
    std::string output;           // file path; empty writes to stdout
    std::string format = "json";
    bool canonical = false;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("-o,--output", c.output, "write the report here instead of stdout");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--canonical", c.canonical,
                  "omit wall-clock fields so reruns compare byte for byte");
    sub->add_option("--jobs", c.jobs, "worker threads (default: $CYCLICA_JOBS or 1)")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("--seed", c.seed, "seed for every random stage");
}

Field make_field(std::uint64_t ell, unsigned r) {
    return r == 1 ? Field::prime_field(ell) : Field::extension(ell, r);
}

std::shared_ptr<const Factorization> make_fact(std::uint64_t ell, unsigned r,
                                               std::uint64_t p) {
    return std::make_shared<const Factorization>(
        factorize_xp1(make_ring(make_field(ell, r), p)));
}

std::string field_label(std::uint64_t ell, unsigned r) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= ell;
    return "F_" + std::to_string(q);
}

ojson base_config(const Common& c) {
    ojson j;
    j["format"] = c.format;
    j["canonical"] = c.canonical;
    j["jobs"] = c.jobs;
    j["seed"] = c.seed;
    return j;
}

int deliver(const Common& c, const std::string& text, bool partial,
            std::ostream& outs, std::ostream& errs) {
    if (!c.output.empty()) {
        std::ofstream f(c.output, std::ios::binary);
        if (!f) {
            errs << "error: cannot open " << c.output << " for writing\n";
            return kInvalid;
        }
        f << text;
    } else {
        outs << text;
    }
    return partial ? kBudget : kOk;
}

int emit_json(const Common& c, const std::string& command,
              const std::string& claim, ojson config, ojson report,
              bool partial, std::ostream& outs, std::ostream& errs) {
    ojson doc;
    doc["schema_version"] = out::kSchemaVersion;
    doc["command"] = command;
    doc["claim"] = claim;
    doc["config"] = std::move(config);
    doc["partial"] = partial;
    doc["report"] = std::move(report);
    return deliver(c, doc.dump(2) + "\n", partial, outs, errs);
}

// CSV keeps the config echo as a single leading comment line; the header
// row follows.
int emit_csv(const Common& c, const std::string& command, const ojson& config,
             const std::string& rows, bool partial, std::ostream& outs,
             std::ostream& errs) {
    std::string text = "# cyclica " + command +
                       " schema_version=" + std::to_string(out::kSchemaVersion) +
                       " config=" + config.dump() + "\n" + rows;
    return deliver(c, text, partial, outs, errs);
}

int require_json(const Common& c, std::ostream& errs) {
    if (c.format == "json") return kOk;
    errs << "error: this command only emits json\n";
    return kInvalid;
}

// ---------------------------------------------------------------------
// Subcommand argument bundles and handlers.

struct FactorArgs {
    std::uint64_t ell = 2;
    unsigned r = 1;
    std::uint64_t p = 7;
};

int do_factor(const FactorArgs& a, const Common& c, std::ostream& outs,
              std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    auto fact = make_fact(a.ell, a.r, a.p);
    ojson config = base_config(c);
    config["ell"] = a.ell;
    config["r"] = a.r;
    config["p"] = a.p;
    ojson report = out::factorization_json(*fact);
    std::string claim = "X^" + std::to_string(a.p) + " - 1 = " +
                        report["display"].get<std::string>() + " over " +
                        field_label(a.ell, a.r) +
                        ", product re-verified against X^p - 1";
    return emit_json(c, "factor", claim, std::move(config), std::move(report),
                     false, outs, errs);
}

struct IdealsArgs {
    std::uint64_t ell = 2;
    unsigned r = 1;
    std::uint64_t p = 7;
    std::uint64_t min_dim = 0;
    std::uint64_t max_dim = 0;  // 0 means p + 1 (everything)
    std::uint64_t limit = 1ull << 22;
};

int do_ideals(const IdealsArgs& a, const Common& c, std::ostream& outs,
              std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    auto fact = make_fact(a.ell, a.r, a.p);
    std::uint64_t hi = a.max_dim ? a.max_dim : a.p + 1;

    ojson config = base_config(c);
    config["ell"] = a.ell;
    config["r"] = a.r;
    config["p"] = a.p;
    config["min_dim"] = a.min_dim;
    config["max_dim"] = hi;
    config["limit"] = a.limit;

    ojson report;
    report["p"] = a.p;
    report["ell"] = a.ell;
    report["factor_degree"] = fact->r;
    report["nontrivial_factors"] = fact->s;
    ojson census = ojson::array();
    for (auto [dim, count] : ideal_dim_census(fact))
        census.push_back(ojson::array({dim, count}));
    report["census"] = std::move(census);

    bool partial = false;
    try {
        ojson list = ojson::array();
        for (const auto& ideal : ideals_in_dim_range(fact, a.min_dim, hi, a.limit))
            list.push_back(out::ideal_json(ideal));
        report["ideals"] = std::move(list);
    } catch (const BudgetExceeded&) {
        report["ideals"] = nullptr;  // census above is still complete
        partial = true;
    }
    std::string claim =
        "ideals of " + field_label(a.ell, a.r) + "[X]/(X^" + std::to_string(a.p) +
        " - 1) correspond to subsets of the irreducible factors; dim is the "
        "sum of the present degrees";
    return emit_json(c, "ideals", claim, std::move(config), std::move(report),
                     partial, outs, errs);
}

struct DistanceArgs {
    std::uint64_t ell = 2;
    unsigned r = 1;
    std::uint64_t p = 7;
    std::uint64_t mask = 0;
    std::string method = "auto";
    std::uint64_t budget = 1ull << 26;
    std::uint64_t trials = 2000;
    double time_limit = 60.0;
};

int do_distance(const DistanceArgs& a, const Common& c, std::ostream& outs,
                std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    auto fact = make_fact(a.ell, a.r, a.p);
    auto ideal = ideal_from_mask(fact, a.mask);
    auto code = code_from_ideal(ideal);
    DistanceOptions opt;
    opt.budget = a.budget;
    opt.jobs = c.jobs;
    opt.trials = a.trials;
    opt.seed = c.seed;
    opt.time_limit_s = a.time_limit;

    DistanceResult res;
    if (a.method == "upper") {
        res = min_distance_upper(code, opt);
    } else if (a.method == "exact") {
        try {
            res = min_distance_exact(code, opt);
        } catch (const BudgetExceeded&) {
            res = min_distance_upper(code, opt);  // partial, flagged below
        }
    } else {
        res = min_distance_auto(code, opt);
    }
    bool partial = a.method != "upper" && !res.exact;

    ojson config = base_config(c);
    config["ell"] = a.ell;
    config["r"] = a.r;
    config["p"] = a.p;
    config["mask"] = a.mask;
    config["method"] = a.method;
    config["budget"] = a.budget;
    config["trials"] = a.trials;
    config["time_limit_s"] = a.time_limit;

    ojson report;
    report["ideal"] = out::ideal_json(ideal);
    report["distance"] =
        out::distance_json(res, fact->ring.field.size(), c.canonical);
    std::string claim =
        std::string(res.exact ? "exact minimum weight" : "upper bound on the minimum weight") +
        " of the [" + std::to_string(res.n) + ", " + std::to_string(res.k) +
        "] ideal code over " + field_label(a.ell, a.r);
    return emit_json(c, "distance", claim, std::move(config), std::move(report),
                     partial, outs, errs);
}

struct GoodCodeArgs {
    std::uint64_t ell = 2;
    std::uint64_t p = 23;
    double epsilon = 0.5;
    std::uint64_t budget = 1ull << 26;
    std::uint64_t trials = 2000;
    double time_limit = 60.0;
};

int do_good_code(const GoodCodeArgs& a, const Common& c, std::ostream& outs,
                 std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    DistanceOptions opt;
    opt.budget = a.budget;
    opt.jobs = c.jobs;
    opt.trials = a.trials;
    opt.seed = c.seed;
    opt.time_limit_s = a.time_limit;
    auto rep = build_good_code_candidate(a.ell, a.p, a.epsilon, opt);
    bool partial = !rep.dist.exact;

    ojson config = base_config(c);
    config["ell"] = a.ell;
    config["p"] = a.p;
    config["epsilon"] = a.epsilon;
    config["budget"] = a.budget;
    config["trials"] = a.trials;
    config["time_limit_s"] = a.time_limit;

    std::string claim =
        "ideal code of dimension in [eps*p/2, eps*p) at eps = " +
        std::to_string(a.epsilon) + " with its measured minimum weight";
    return emit_json(c, "good-code", claim, std::move(config),
                     out::good_code_json(rep, c.canonical), partial, outs, errs);
}

struct MuArgs {
    std::uint64_t ell = 2;
    unsigned r = 1;
    std::uint64_t p = 7;
    std::string method = "both";
    std::uint64_t budget = 1ull << 26;
    std::uint64_t trials = 2000;
    double time_limit = 60.0;
};

int do_mu(const MuArgs& a, const Common& c, std::ostream& outs,
          std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    std::optional<MuReport> bf, iv;
    if (a.method == "bruteforce" || a.method == "both")
        bf = mu_bruteforce(a.ell, a.r, a.p, c.jobs);
    if (a.method == "ideals" || a.method == "both") {
        DistanceOptions opt;
        opt.budget = a.budget;
        opt.jobs = c.jobs;
        opt.trials = a.trials;
        opt.seed = c.seed;
        opt.time_limit_s = a.time_limit;
        iv = mu_via_ideals(a.ell, a.r, a.p, opt);
    }
    bool partial = (bf && bf->upper_bound_only) || (iv && iv->upper_bound_only);

    ojson config = base_config(c);
    config["ell"] = a.ell;
    config["r"] = a.r;
    config["p"] = a.p;
    config["method"] = a.method;
    config["budget"] = a.budget;
    config["trials"] = a.trials;
    config["time_limit_s"] = a.time_limit;

    ojson report;
    report["bruteforce"] = bf ? out::mu_json(*bf) : ojson(nullptr);
    report["ideal_reduction"] = iv ? out::mu_json(*iv) : ojson(nullptr);
    std::uint64_t mu = bf ? bf->mu : iv->mu;
    if (bf && iv) mu = std::min(bf->mu, iv->mu);
    report["mu"] = mu;
    report["agreement"] =
        (bf && iv) ? ojson(bf->mu == iv->mu) : ojson(nullptr);
    std::string claim = "mu = min over nonzero f in " + field_label(a.ell, a.r) +
                        "[X]/(X^" + std::to_string(a.p) +
                        " - 1) of wt(f) + dim of the ideal f generates";
    return emit_json(c, "mu", claim, std::move(config), std::move(report),
                     partial, outs, errs);
}

struct ChebotarevArgs {
    std::uint64_t p = 7;
    std::string mode = "exhaustive";
    std::uint64_t count = 100000;
    std::vector<std::uint64_t> sizes;
};

int do_chebotarev(const ChebotarevArgs& a, const Common& c, std::ostream& outs,
                  std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    MinorSweepReport rep;
    if (a.mode == "random") {
        rep = chebotarev_sweep_random(a.p, a.count, c.seed);
    } else if (a.mode == "sizes") {
        if (a.sizes.empty()) {
            errs << "error: --sizes is required in sizes mode\n";
            return kInvalid;
        }
        rep = chebotarev_sweep_sizes(a.p, a.sizes);
    } else {
        rep = chebotarev_sweep(a.p);
    }

    ojson config = base_config(c);
    config["p"] = a.p;
    config["mode"] = a.mode;
    config["count"] = a.count;
    config["sizes"] = a.sizes;

    std::string claim =
        "every square minor of the Vandermonde matrix (zeta^(i*j)) at a "
        "primitive p-th root of unity is nonzero; each minor certified "
        "modulo a prime, escalating to exact arithmetic in Z[zeta]";
    return emit_json(c, "chebotarev", claim, std::move(config),
                     out::minor_sweep_json(rep, c.canonical), false, outs, errs);
}

struct CounterexampleArgs {
    std::string kind = "trace";
    std::uint64_t q = 2;
    std::uint64_t p = 7;
    unsigned n = 3;
    unsigned k = 1;
};

int do_counterexample(const CounterexampleArgs& a, const Common& c,
                      std::ostream& outs, std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    ojson config = base_config(c);
    config["kind"] = a.kind;
    if (a.kind == "mersenne") {
        config["n"] = a.n;
        config["k"] = a.k;
        auto rep = mersenne_counterexample(a.n, a.k);
        std::string claim =
            "product of subspace annihilators over F_{2^" + std::to_string(a.n) +
            "} has weight <= (n+1)^k and ideal dimension 2^(n-k) - 1, "
            "certifying mu <= (n+1)^k + 2^(n-k) - 1 at p = 2^n - 1";
        return emit_json(c, "counterexample", claim, std::move(config),
                         out::mersenne_json(rep), false, outs, errs);
    }
    config["q"] = a.q;
    config["p"] = a.p;
    auto rep = trace_counterexample(a.q, a.p);
    std::string claim =
        "the trace form plus its best constant has few spectrum zeros and "
        "fat root fibers, certifying mu <= p + 1 + r - p/q over F_" +
        std::to_string(a.q);
    return emit_json(c, "counterexample", claim, std::move(config),
                     out::trace_json(rep), false, outs, errs);
}

struct PrimesArgs {
    std::string predicate = "all";
    std::uint64_t ell = 2;
    double eps = 0.0;
    std::uint64_t q = 0;
    std::uint64_t min = 2;
    std::uint64_t max = 100;
};

int do_primes(const PrimesArgs& a, const Common& c, std::ostream& outs,
              std::ostream& errs) {
    PrimePredicate pred;
    std::string desc;
    if (a.predicate == "all") {
        pred = PrimePredicate::all(a.ell);
        desc = "order data recorded for every prime";
    } else if (a.predicate == "ord_lt_eps") {
        pred = PrimePredicate::ord_lt_eps(a.eps, a.ell);
        desc = "ord_p(ell) < eps * p";
    } else if (a.predicate == "primitive_root") {
        pred = PrimePredicate::primitive_root(a.ell);
        desc = "ell generates (Z/p)^*";
    } else if (a.predicate == "mersenne") {
        pred = PrimePredicate::mersenne();
        desc = "p = 2^n - 1";
    } else if (a.predicate == "ord_half") {
        pred = PrimePredicate::ord_half(a.ell);
        desc = "ord_p(ell) = (p - 1)/2";
    } else if (a.predicate == "split_in_kql") {
        pred = PrimePredicate::split_in_kql(a.q, a.ell);
        desc = "p = 1 (mod q) and ell a q-th power residue mod p, so "
               "ord_p(ell) <= (p - 1)/q";
    } else {
        errs << "error: unknown predicate " << a.predicate << "\n";
        return kInvalid;
    }
    std::uint64_t hi = a.max == ~0ull ? a.max : a.max + 1;
    auto records = search_primes(a.min, hi, pred, c.jobs);

    ojson config = base_config(c);
    config["predicate"] = a.predicate;
    config["ell"] = a.ell;
    config["eps"] = a.eps;
    config["q"] = a.q;
    config["min"] = a.min;
    config["max"] = a.max;

    std::string claim = "primes p in [" + std::to_string(a.min) + ", " +
                        std::to_string(a.max) + "] with " + desc +
                        "; counts only, no infinitude claim";
    if (c.format == "csv")
        return emit_csv(c, "primes", config, out::primes_csv(records), false,
                        outs, errs);
    ojson report;
    report["count"] = records.size();
    ojson rows = ojson::array();
    for (const auto& rec : records) rows.push_back(out::prime_record_json(rec));
    report["records"] = std::move(rows);
    return emit_json(c, "primes", claim, std::move(config), std::move(report),
                     false, outs, errs);
}

struct EntropyArgs {
    double delta = -1.0;
    std::uint64_t p = 0;
    double eta = -1.0;
    bool weak_up = false;
};

int do_entropy(const EntropyArgs& a, const Common& c, std::ostream& outs,
               std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    ojson config = base_config(c);
    config["delta"] = a.delta;
    config["p"] = a.p;
    config["eta"] = a.eta;
    config["weak_up"] = a.weak_up;

    if (a.weak_up) {
        if (!a.p) {
            errs << "error: --weak-up needs --p\n";
            return kInvalid;
        }
        auto rep = weak_up_expectation(a.p);
        std::string claim =
            "exact element counts behind the expected ideal-sphere "
            "intersection in the ord_p(2) = (p-1)/2 regime, next to the "
            "entropy prediction";
        return emit_json(c, "entropy", claim, std::move(config),
                         out::weak_up_json(rep), false, outs, errs);
    }
    if (a.delta < 0) {
        errs << "error: need --delta (or --weak-up with --p)\n";
        return kInvalid;
    }
    Entropy e = entropy(a.delta);
    ojson report;
    report["delta"] = a.delta;
    report["h"] = e.h;
    report["h_prime"] = e.h_prime;
    if (a.p) report["sphere"] = out::entropy_json(sphere_size(a.p, a.delta));
    if (a.eta >= 0) {
        if (!a.p) {
            errs << "error: --eta needs --p\n";
            return kInvalid;
        }
        report["expected_intersection_log2"] =
            expected_intersection(a.p, a.eta, a.delta);
    }
    std::string claim =
        "binary entropy of delta, with exact Hamming ball counts and the "
        "C(p,r) <= count <= p*C(p,r) sandwich when p is given";
    return emit_json(c, "entropy", claim, std::move(config), std::move(report),
                     false, outs, errs);
}

struct ExperimentArgs {
    std::uint64_t p = 23;
    double eta = 0.5;
    double delta = 0.3;
    std::uint64_t samples = 10000;
};

int do_experiment(const ExperimentArgs& a, const Common& c, std::ostream& outs,
                  std::ostream& errs) {
    if (int rc = require_json(c, errs)) return rc;
    auto rep = random_ideal_experiment(a.p, a.eta, a.delta, a.samples, c.seed);
    ojson config = base_config(c);
    config["p"] = a.p;
    config["eta"] = a.eta;
    config["delta"] = a.delta;
    config["samples"] = a.samples;
    std::string claim =
        "smallest codeword weight seen in the nonzero ideal of dimension "
        "closest to eta*p, compared against the delta*p threshold";
    return emit_json(c, "experiment", claim, std::move(config),
                     out::experiment_json(rep), false, outs, errs);
}

struct QrStudyArgs {
    std::uint64_t max = 30;
    std::uint64_t budget = 1ull << 26;
    std::uint64_t trials = 2000;
    double time_limit = 60.0;
};

int do_qr_study(const QrStudyArgs& a, const Common& c, std::ostream& outs,
                std::ostream& errs) {
    DistanceOptions opt;
    opt.budget = a.budget;
    opt.jobs = c.jobs;
    opt.trials = a.trials;
    opt.seed = c.seed;
    opt.time_limit_s = a.time_limit;
    auto rows = qr_distance_study(a.max, opt);
    bool partial = std::any_of(rows.begin(), rows.end(),
                               [](const QrStudyRow& r) { return !r.exact; });

    ojson config = base_config(c);
    config["max"] = a.max;
    config["budget"] = a.budget;
    config["trials"] = a.trials;
    config["time_limit_s"] = a.time_limit;

    if (c.format == "csv")
        return emit_csv(c, "qr-study", config, out::qr_study_csv(rows), partial,
                        outs, errs);
    ojson report;
    report["rows"] = out::qr_study_json(rows);
    std::string claim =
        "minimum distances of the binary quadratic-residue codes "
        "[p, (p+1)/2] over the primes p = +-1 (mod 8) with "
        "ord_p(2) = (p-1)/2, exact within the budget";
    return emit_json(c, "qr-study", claim, std::move(config), std::move(report),
                     partial, outs, errs);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& outs,
        std::ostream& errs) {
    CLI::App app{"cyclic codes of prime length: factorizations, ideal "
                 "distances, minor sweeps, and the support-plus-ideal "
                 "invariant mu"};
    app.name("cyclica");
    app.set_version_flag("--version", "cyclica 0.1.0");
    app.require_subcommand(1);

    Common c;
    c.jobs = default_jobs();

    FactorArgs fa;
    auto* factor = app.add_subcommand("factor", "factor X^p - 1 over F_{ell^r}");
    factor->add_option("--ell", fa.ell, "field characteristic")->required();
    factor->add_option("--r", fa.r, "coefficient extension degree");
    factor->add_option("--p", fa.p, "prime length")->required();
    add_common(factor, c);

    IdealsArgs ia;
    auto* ideals = app.add_subcommand(
        "ideals", "enumerate the ideal lattice of F[X]/(X^p - 1)");
    ideals->add_option("--ell", ia.ell, "field characteristic")->required();
    ideals->add_option("--r", ia.r, "coefficient extension degree");
    ideals->add_option("--p", ia.p, "prime length")->required();
    ideals->add_option("--min-dim", ia.min_dim, "lowest dimension listed");
    ideals->add_option("--max-dim", ia.max_dim,
                       "one past the highest dimension listed (default p+1)");
    ideals->add_option("--limit", ia.limit, "ideal-count budget");
    add_common(ideals, c);

    DistanceArgs da;
    auto* distance = app.add_subcommand(
        "distance", "minimum weight of one ideal code, exact or bounded");
    distance->add_option("--ell", da.ell, "field characteristic")->required();
    distance->add_option("--r", da.r, "coefficient extension degree");
    distance->add_option("--p", da.p, "prime length")->required();
    distance->add_option("--mask", da.mask, "factor-subset mask of the ideal")
        ->required();
    distance->add_option("--method", da.method, "auto, exact, or upper")
        ->check(CLI::IsMember({"auto", "exact", "upper"}));
    distance->add_option("--budget", da.budget, "max messages an exact walk visits");
    distance->add_option("--trials", da.trials, "random messages in the upper bound");
    distance->add_option("--time-limit", da.time_limit,
                         "seconds before an exact walk stops early (0 = off)");
    add_common(distance, c);

    GoodCodeArgs ga;
    auto* good = app.add_subcommand(
        "good-code", "pick the ideal with dim in [eps*p/2, eps*p) and measure it");
    good->add_option("--ell", ga.ell, "field characteristic")->required();
    good->add_option("--p", ga.p, "prime length")->required();
    good->add_option("--epsilon", ga.epsilon, "rate window parameter")->required();
    good->add_option("--budget", ga.budget, "max messages an exact walk visits");
    good->add_option("--trials", ga.trials, "random messages in the upper bound");
    good->add_option("--time-limit", ga.time_limit,
                     "seconds before an exact walk stops early (0 = off)");
    add_common(good, c);

    MuArgs ma;
    auto* mu = app.add_subcommand(
        "mu", "min of wt(f) + dim I_f over nonzero f, by one or both methods");
    mu->add_option("--ell", ma.ell, "field characteristic")->required();
    mu->add_option("--r", ma.r, "coefficient extension degree");
    mu->add_option("--p", ma.p, "prime length")->required();
    mu->add_option("--method", ma.method, "bruteforce, ideals, or both")
        ->check(CLI::IsMember({"bruteforce", "ideals", "both"}));
    mu->add_option("--budget", ma.budget, "distance budget for the ideal route");
    mu->add_option("--trials", ma.trials, "random messages in fallback bounds");
    mu->add_option("--time-limit", ma.time_limit,
                   "seconds per distance job (0 = off)");
    add_common(mu, c);

    ChebotarevArgs ca;
    auto* cheb = app.add_subcommand(
        "chebotarev", "certify nonvanishing of root-of-unity Vandermonde minors");
    cheb->add_option("--p", ca.p, "prime length")->required();
    cheb->add_option("--mode", ca.mode, "exhaustive, random, or sizes")
        ->check(CLI::IsMember({"exhaustive", "random", "sizes"}));
    cheb->add_option("--count", ca.count, "random minors to draw");
    cheb->add_option("--sizes", ca.sizes, "comma-separated minor sizes")
        ->delimiter(',');
    add_common(cheb, c);

    CounterexampleArgs xa;
    auto* cx = app.add_subcommand(
        "counterexample", "explicit elements with mu below p + 1");
    cx->add_option("--kind", xa.kind, "trace or mersenne")
        ->check(CLI::IsMember({"trace", "mersenne"}));
    cx->add_option("--q", xa.q, "coefficient field size (trace)");
    cx->add_option("--p", xa.p, "prime length (trace)");
    cx->add_option("--n", xa.n, "p = 2^n - 1 (mersenne)");
    cx->add_option("--k", xa.k, "number of annihilator factors (mersenne)");
    add_common(cx, c);

    PrimesArgs pa;
    auto* primes = app.add_subcommand(
        "primes", "bounded sieve for primes with prescribed order behavior");
    primes->add_option("--predicate", pa.predicate,
                       "all, ord_lt_eps, primitive_root, mersenne, ord_half, "
                       "or split_in_kql");
    primes->add_option("--ell", pa.ell, "base of the multiplicative order");
    primes->add_option("--eps", pa.eps, "threshold for ord_lt_eps");
    primes->add_option("--q", pa.q, "auxiliary prime for split_in_kql");
    primes->add_option("--min", pa.min, "lower end of the range, inclusive");
    primes->add_option("--max", pa.max, "upper end of the range, inclusive");
    add_common(primes, c);

    EntropyArgs ea;
    auto* entropy = app.add_subcommand(
        "entropy", "binary entropy, exact sphere counts, expected intersections");
    entropy->add_option("--delta", ea.delta, "radius fraction in (0, 1)");
    entropy->add_option("--p", ea.p, "length for the exact counts");
    entropy->add_option("--eta", ea.eta, "ideal dimension fraction");
    entropy->add_flag("--weak-up", ea.weak_up,
                      "exact counts for the split regime (needs --p)");
    add_common(entropy, c);

    ExperimentArgs xp;
    auto* experiment = app.add_subcommand(
        "experiment", "seeded search for light words in a dimension-targeted ideal");
    experiment->add_option("--p", xp.p, "prime length")->required();
    experiment->add_option("--eta", xp.eta, "target dim / p")->required();
    experiment->add_option("--delta", xp.delta, "weight threshold / p")->required();
    experiment->add_option("--samples", xp.samples, "random codewords to draw");
    add_common(experiment, c);

    QrStudyArgs qa;
    auto* qr = app.add_subcommand(
        "qr-study", "distance table of binary quadratic-residue codes");
    qr->add_option("--max", qa.max, "largest prime length considered")->required();
    qr->add_option("--budget", qa.budget, "max messages an exact walk visits");
    qr->add_option("--trials", qa.trials, "random messages in the upper bound");
    qr->add_option("--time-limit", qa.time_limit,
                   "seconds per distance job (0 = off)");
    add_common(qr, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, outs, errs);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (app.got_subcommand(factor)) return do_factor(fa, c, outs, errs);
        if (app.got_subcommand(ideals)) return do_ideals(ia, c, outs, errs);
        if (app.got_subcommand(distance)) return do_distance(da, c, outs, errs);
        if (app.got_subcommand(good)) return do_good_code(ga, c, outs, errs);
        if (app.got_subcommand(mu)) return do_mu(ma, c, outs, errs);
        if (app.got_subcommand(cheb)) return do_chebotarev(ca, c, outs, errs);
        if (app.got_subcommand(cx)) return do_counterexample(xa, c, outs, errs);
        if (app.got_subcommand(primes)) return do_primes(pa, c, outs, errs);
        if (app.got_subcommand(entropy)) return do_entropy(ea, c, outs, errs);
        if (app.got_subcommand(experiment)) return do_experiment(xp, c, outs, errs);
        if (app.got_subcommand(qr)) return do_qr_study(qa, c, outs, errs);
    } catch (const BudgetExceeded& e) {
        errs << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        errs << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        // A logic_error landing here means a mathematical recheck failed;
        // surface it loudly rather than pretending partial success.
        errs << "internal error: " << e.what() << "\n";
        return kInvalid;
    }
    errs << "error: no subcommand\n";
    return kInvalid;
}

}  // namespace cyclica::cli
