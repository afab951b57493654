#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cyclica::out {

namespace {

// JSON has no Inf/NaN literal; report non-finite doubles as null rather
// than relying on the library's silent substitution.
ojson finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

// Witness encoding shared by every report: hex over GF(2), where packed
// values are single bits, a plain array anywhere else.
ojson witness_value(const std::vector<ff_t>& coeffs, std::uint64_t field_size) {
    if (field_size == 2) return hex_pack(coeffs);
    return coeffs_json(coeffs);
}

ojson elem_value(const RingElem& f) {
    if (f.coeffs().empty()) return nullptr;
    return witness_value(f.coeffs(), f.ring().field.size());
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string format_ratio(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string hex_pack(const std::vector<ff_t>& coeffs) {
    static const char digits[] = "0123456789abcdef";
    std::string hex;
    for (std::size_t base = 0; base < coeffs.size(); base += 8) {
        unsigned byte = 0;
        for (std::size_t k = 0; k < 8 && base + k < coeffs.size(); ++k) {
            ff_t c = coeffs[base + k];
            if (c > 1)
                throw std::invalid_argument("hex_pack: coefficient not a bit");
            byte |= unsigned(c) << k;
        }
        hex.push_back(digits[byte >> 4]);
        hex.push_back(digits[byte & 0xf]);
    }
    return hex;
}

std::vector<ff_t> hex_unpack(const std::string& hex, std::size_t slots) {
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("hex_unpack: odd digit count");
    if (hex.size() != 2 * ((slots + 7) / 8))
        throw std::invalid_argument("hex_unpack: length does not match slots");
    std::vector<ff_t> coeffs(slots, 0);
    for (std::size_t b = 0; 2 * b < hex.size(); ++b) {
        int hi = hex_digit(hex[2 * b]), lo = hex_digit(hex[2 * b + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("hex_unpack: non-hex digit");
        unsigned byte = unsigned(hi) << 4 | unsigned(lo);
        for (std::size_t k = 0; k < 8; ++k) {
            if (!(byte >> k & 1)) continue;
            std::size_t i = 8 * b + k;
            if (i >= slots)
                throw std::invalid_argument("hex_unpack: bit beyond slot count");
            coeffs[i] = 1;
        }
    }
    return coeffs;
}

std::string poly_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const bool prime_field = f.field().degree() == 1;
    std::string s;
    for (int i = f.deg(); i >= 0; --i) {
        ff_t c = f.coeff(std::size_t(i));
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        std::string cs = prime_field ? std::to_string(c)
                                     : "{" + std::to_string(c) + "}";
        if (i == 0) {
            s += cs;
            continue;
        }
        if (c != 1) s += cs;
        s += "X";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

ojson coeffs_json(const std::vector<ff_t>& coeffs) {
    ojson a = ojson::array();
    for (ff_t c : coeffs) a.push_back(c);
    return a;
}

ojson poly_json(const Poly& f) { return coeffs_json(f.coeffs()); }

Poly poly_from_json(const Field& field, const ojson& j) {
    if (!j.is_array())
        throw std::invalid_argument("poly_from_json: expected an array");
    std::vector<ff_t> coeffs;
    coeffs.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned())
            throw std::invalid_argument(
                "poly_from_json: coefficients are unsigned packed values");
        ff_t c = v.get<std::uint64_t>();
        if (c >= field.size())
            throw std::invalid_argument(
                "poly_from_json: packed value outside the field");
        coeffs.push_back(c);
    }
    return Poly(field, std::move(coeffs));
}

ojson factorization_json(const Factorization& fact) {
    ojson j;
    j["ell"] = fact.ring.field.ell();
    j["coeff_degree"] = fact.ring.field.degree();
    j["p"] = fact.ring.p;
    j["r"] = fact.r;
    j["s"] = fact.s;
    j["multiplicity"] = fact.multiplicity;
    ojson factors = ojson::array();
    std::string display;
    for (const auto& f : fact.factors) {
        ojson entry;
        entry["coset"] = coeffs_json(
            std::vector<ff_t>(f.coset.begin(), f.coset.end()));
        entry["coeffs"] = poly_json(f.poly);
        if (fact.ring.field.size() == 2)
            entry["hex"] = hex_pack(f.poly.coeffs());
        entry["display"] = poly_string(f.poly);
        factors.push_back(std::move(entry));
        display += "(" + poly_string(f.poly) + ")";
    }
    if (fact.multiplicity > 1)
        display += "^" + std::to_string(fact.multiplicity);
    j["factors"] = std::move(factors);
    j["display"] = std::move(display);
    return j;
}

ojson ideal_json(const IdealDescriptor& ideal) {
    ojson j;
    j["p"] = ideal.fact->ring.p;
    j["ell"] = ideal.fact->ring.field.ell();
    j["present"] = coeffs_json(
        std::vector<ff_t>(ideal.present.begin(), ideal.present.end()));
    j["generator"] = poly_json(ideal.generator());
    j["dim"] = ideal.dim;
    return j;
}

ojson distance_json(const DistanceResult& d, std::uint64_t field_size,
                    bool canonical) {
    ojson j;
    j["n"] = d.n;
    j["k"] = d.k;
    j["d"] = d.distance;
    j["exact"] = d.exact;
    j["witness"] = witness_value(d.witness, field_size);
    j["rate"] = d.n ? double(d.k) / double(d.n) : 0.0;
    j["relative_distance"] = d.n ? double(d.distance) / double(d.n) : 0.0;
    j["enumerated"] = d.enumerated;
    if (!canonical) j["elapsed_s"] = d.elapsed_s;
    return j;
}

ojson mu_json(const MuReport& m) {
    ojson j;
    j["ell"] = m.ell;
    j["r"] = m.r;
    j["p"] = m.p;
    j["mu"] = m.mu;
    j["upper_bound_only"] = m.upper_bound_only;
    j["method"] = m.method;
    j["witness"] = elem_value(m.witness);
    j["witness_weight"] =
        m.witness.coeffs().empty() ? ojson(nullptr) : ojson(m.witness.weight());
    return j;
}

ojson charp_json(const CharPReport& r) {
    ojson j;
    j["p"] = r.p;
    j["mu"] = r.mu;
    j["checked"] = r.checked;
    j["claim_holds"] = r.claim_holds;
    j["report"] = mu_json(r.report);
    return j;
}

ojson primitive_root_json(const PrimitiveRootReport& r) {
    ojson j;
    j["ell"] = r.ell;
    j["p"] = r.p;
    j["mu"] = r.mu;
    j["holds"] = r.holds;
    ojson cases = ojson::array();
    for (const auto& c : r.cases) {
        ojson e;
        e["dim"] = c.dim;
        e["distance"] = c.distance;
        e["mu_term"] = c.mu_term;
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    return j;
}

ojson trace_json(const TraceReport& r) {
    ojson j;
    j["trace_r"] = r.trace_r;
    j["fiber_counts"] = coeffs_json(std::vector<ff_t>(
        r.fiber_counts.begin(), r.fiber_counts.end()));
    j["best_alpha"] = r.best_alpha;
    j["max_fiber"] = r.max_fiber;
    j["bound"] = r.bound;
    j["counterexample_regime"] = r.counterexample_regime;
    j["report"] = mu_json(r.report);
    return j;
}

ojson mersenne_json(const MersenneReport& r) {
    ojson j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["p"] = r.report.p;
    j["deg"] = r.deg;
    j["wt"] = r.wt;
    j["wt_bound"] = r.wt_bound;
    j["dim"] = r.dim;
    j["report"] = mu_json(r.report);
    return j;
}

ojson equivalence_json(const EquivalenceReport& r) {
    ojson j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["mu"] = r.mu;
    j["minors_checked"] = r.minors_checked;
    j["minor_vanished"] = r.minor_vanished;
    j["minor_rows"] = coeffs_json(
        std::vector<ff_t>(r.minor_rows.begin(), r.minor_rows.end()));
    j["minor_cols"] = coeffs_json(
        std::vector<ff_t>(r.minor_cols.begin(), r.minor_cols.end()));
    j["constructed"] = elem_value(r.constructed);
    j["constructed_mu"] = r.constructed_mu;
    j["consistent"] = r.consistent;
    return j;
}

ojson ds_json(const DsReport& r) {
    ojson j;
    j["ell"] = r.ell;
    j["r"] = r.r;
    j["p"] = r.p;
    j["checked"] = r.checked;
    j["min_product"] = r.min_product;
    j["holds"] = r.holds;
    j["argmin"] = elem_value(r.argmin);
    return j;
}

ojson minor_sweep_json(const MinorSweepReport& r, bool canonical) {
    ojson j;
    j["p"] = r.p;
    j["minors_checked"] = r.minors_checked;
    j["all_nonzero"] = r.all_nonzero;
    j["modular_prime"] = r.modular_prime;
    j["exact_escalations"] = r.exact_escalations;
    if (r.first_failure) {
        ojson f;
        f["rows"] = coeffs_json(std::vector<ff_t>(
            r.first_failure->first.begin(), r.first_failure->first.end()));
        f["cols"] = coeffs_json(std::vector<ff_t>(
            r.first_failure->second.begin(), r.first_failure->second.end()));
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    if (!canonical) j["elapsed_s"] = r.elapsed_s;
    return j;
}

ojson entropy_json(const EntropyReport& r) {
    ojson j;
    j["p"] = r.p;
    j["delta"] = r.delta;
    j["radius"] = r.radius;
    j["exact_count"] = r.exact_count.get_str();
    j["log2_count"] = finite_or_null(r.log2_count);
    j["h_prime"] = r.h_prime;
    j["lower"] = r.lower.get_str();
    j["upper"] = r.upper.get_str();
    return j;
}

ojson experiment_json(const ExperimentReport& r) {
    ojson j;
    j["seed"] = r.seed;
    j["p"] = r.p;
    j["eta"] = r.eta;
    j["delta"] = r.delta;
    j["dim"] = r.dim;
    j["mask"] = r.mask;
    j["samples"] = r.samples;
    j["min_weight"] = r.min_weight;
    j["threshold"] = r.threshold;
    j["verdict"] = r.verdict;
    j["low_confidence"] = r.low_confidence;
    return j;
}

ojson weak_up_json(const WeakUpReport& r) {
    ojson j;
    j["p"] = r.p;
    j["half"] = r.half;
    j["factor_deg"] = r.factor_deg;
    j["multiples"] = r.multiples.get_str();
    j["sphere"] = r.sphere.get_str();
    j["exponent"] = finite_or_null(r.exponent);
    j["predicted"] = r.predicted;
    return j;
}

ojson prime_record_json(const PrimeRecord& rec) {
    ojson j;
    j["p"] = rec.p;
    j["ord"] = rec.ord;
    j["is_mersenne"] = rec.is_mersenne;
    j["primitive_root"] = rec.primitive_root;
    j["ord_equals_half"] = rec.ord_equals_half;
    j["base_is_qr"] = rec.base_is_qr;
    return j;
}

ojson qr_study_json(const std::vector<QrStudyRow>& rows) {
    ojson a = ojson::array();
    for (const auto& row : rows) {
        ojson j;
        j["p"] = row.p;
        j["k"] = row.k;
        j["d"] = row.d;
        j["exact"] = row.exact;
        j["ratio"] = row.ratio;
        a.push_back(std::move(j));
    }
    return a;
}

ojson mds_json(const MdsReport& r) {
    ojson j;
    j["ell"] = r.ell;
    j["p"] = r.p;
    j["all_mds"] = r.all_mds;
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        ojson e;
        e["mask"] = row.mask;
        e["k"] = row.k;
        e["d"] = row.d;
        e["mds"] = row.mds;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    return j;
}

ojson good_code_json(const GoodCodeReport& r, bool canonical) {
    ojson j;
    j["ell"] = r.fact->ring.field.ell();
    j["p"] = r.fact->ring.p;
    j["epsilon"] = r.epsilon;
    j["ideal"] = ideal_json(r.ideal);
    j["gen_weight"] = r.gen_weight;
    j["distance"] =
        distance_json(r.dist, r.fact->ring.field.size(), canonical);
    return j;
}

std::string primes_csv(const std::vector<PrimeRecord>& records) {
    std::string csv = "p,ord,flags\n";
    for (const auto& rec : records) {
        std::string flags;
        auto mark = [&flags](bool on, const char* name) {
            if (!on) return;
            if (!flags.empty()) flags += ';';
            flags += name;
        };
        mark(rec.is_mersenne, "mersenne");
        mark(rec.primitive_root, "primitive_root");
        mark(rec.ord_equals_half, "ord_half");
        mark(rec.base_is_qr, "qr");
        csv += std::to_string(rec.p) + "," + std::to_string(rec.ord) + "," +
               flags + "\n";
    }
    return csv;
}

std::string qr_study_csv(const std::vector<QrStudyRow>& rows) {
    std::string csv = "p,k,d,exact,ratio\n";
    for (const auto& row : rows) {
        csv += std::to_string(row.p) + "," + std::to_string(row.k) + "," +
               std::to_string(row.d) + "," + (row.exact ? "1" : "0") + "," +
               format_ratio(row.ratio) + "\n";
    }
    return csv;
}

}  // namespace cyclica::out
