#pragma once

#include "fforge/fitting.hpp"
#include "fforge/resolution.hpp"
#include "fforge/stickelberger.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace fforge {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "fitting-forge/1";

/// Malformed or inconsistent input documents.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

/// {"cyclic_orders": [...], "gamma_factor_index": k, "complex_conjugation": [...]}
FiniteAbelianGroup group_from_json(const Json& j);
Json group_to_json(const FiniteAbelianGroup& g);

/// {"coeffs": [...]} or a bare coefficient array, in enumeration order.
GroupRingElement element_from_json(const Json& j, const FiniteAbelianGroup& g, const ResidueRing& k);
Json element_to_json(const GroupRingElement& x);

/// {"group": ..., "modulus": {"p": p, "M": M}, "matrix": [[coeffs, ...], ...]}
Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& pres);

DecompositionModel model_from_json(const Json& j);
Json model_to_json(const DecompositionModel& m);
/// A single model object or {"models": [...]}.
std::vector<DecompositionModel> models_from_json(const Json& j);

struct StickelbergerRequest {
    int m = 0;
    std::set<std::int64_t> S;
    std::set<std::int64_t> T;
};
/// {"m": m, "S": [primes or "inf"], "T": [primes]}
StickelbergerRequest stickelberger_request_from_json(const Json& j);
StickelbergerElement build_stickelberger(const StickelbergerRequest& req);
/// Odd primes up to max(m, 31) at which integrality_check passes; empty when T is.
std::vector<std::int64_t> integral_primes(const StickelbergerElement& theta);
/// {"m", "S", "T", "coeffs": [["num","den"], ...], "labels", "integral_at", "minus_pure"}
Json stickelberger_to_json(const StickelbergerElement& theta);

} // namespace fforge
