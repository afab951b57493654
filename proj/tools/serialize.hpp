#pragma once
// JSON and CSV views of the library's report structs, one function per
// struct, built on nlohmann::ordered_json so key order (and therefore
// the serialized bytes) is fixed by construction order.
//
// Conventions shared by every emitter:
//   - polynomial and ring-element coefficients appear lowest degree
//     first, exactly as stored;
//   - over GF(2) coefficient vectors are additionally hex-packed with
//     the constant term in the lowest bit of byte 0 ("0b" is X^3+X+1);
//   - exact big-integer counts are decimal strings, never doubles;
//   - `canonical` drops wall-clock fields (elapsed_s) so two runs of the
//     same configuration compare byte for byte.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclica/chebotarev.hpp"
#include "cyclica/codes.hpp"
#include "cyclica/heuristics.hpp"
#include "cyclica/ideals.hpp"
#include "cyclica/poly.hpp"
#include "cyclica/primes.hpp"
#include "cyclica/ring.hpp"
#include "cyclica/uncertainty.hpp"

namespace cyclica::out {

using ojson = nlohmann::ordered_json;

// Bumped on any key rename or layout change.
inline constexpr int kSchemaVersion = 1;

// GF(2) packing: bit i of the stream is coeffs[i], bytes emitted lowest
// first, two lowercase hex digits per byte.  Empty input gives "".
std::string hex_pack(const std::vector<ff_t>& coeffs);
// Inverse with an explicit slot count; throws std::invalid_argument on
// non-hex input, overlong input, or set bits at index >= slots.
std::vector<ff_t> hex_unpack(const std::string& hex, std::size_t slots);

// "X^3 + X + 1" for prime fields; extension-field coefficients appear as
// packed values in braces, "{5}X^2 + {3}".  Deterministic, for display.
std::string poly_string(const Poly& f);

ojson coeffs_json(const std::vector<ff_t>& coeffs);
ojson poly_json(const Poly& f);
Poly poly_from_json(const Field& field, const ojson& j);

// {ell, r, s, p, factors: [{coset, coeffs, hex?, display}]}
ojson factorization_json(const Factorization& fact);
// {p, ell, present, generator, dim}
ojson ideal_json(const IdealDescriptor& ideal);
// field_size picks the witness encoding: hex at 2, plain array otherwise.
ojson distance_json(const DistanceResult& d, std::uint64_t field_size,
                    bool canonical);
ojson mu_json(const MuReport& m);
ojson charp_json(const CharPReport& r);
ojson primitive_root_json(const PrimitiveRootReport& r);
ojson trace_json(const TraceReport& r);
ojson mersenne_json(const MersenneReport& r);
ojson equivalence_json(const EquivalenceReport& r);
ojson ds_json(const DsReport& r);
ojson minor_sweep_json(const MinorSweepReport& r, bool canonical);
ojson entropy_json(const EntropyReport& r);
ojson experiment_json(const ExperimentReport& r);
ojson weak_up_json(const WeakUpReport& r);
ojson prime_record_json(const PrimeRecord& rec);
ojson qr_study_json(const std::vector<QrStudyRow>& rows);
ojson mds_json(const MdsReport& r);
ojson good_code_json(const GoodCodeReport& r, bool canonical);

// Header row first, '\n' line ends, no trailing comma games.
std::string primes_csv(const std::vector<PrimeRecord>& records);
std::string qr_study_csv(const std::vector<QrStudyRow>& rows);

}  // namespace cyclica::out
