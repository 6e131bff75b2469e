#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "zk/pogorelov.hpp"

namespace zk {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCertificateSchema = "massey-certificate/1";

// `{"m": int, "maximal_simplices": [[int,...],...]}`, 1-based labels.
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& K);

// `{"m": int, "facet_cycles": [[int,...],...]}`, 1-based facet indices.
SimplePolytope3 polytope_from_json(const json& j);
json polytope_to_json(const SimplePolytope3& P);

// FNV-1a over the canonical serialization, as fixed-width hex.
std::string digest(const json& j);

json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const json& j);

json betti_to_json(const BettiTable& t);

json certificate_to_json(const MasseyCertificate& cert);
MasseyCertificate certificate_from_json(const json& j, const SimplePolytope3& P);

struct VerifyReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok() const;
};
// Re-checks a certificate against the polytope without re-running the
// configuration search.
VerifyReport verify_certificate(const SimplePolytope3& P, const json& cert_json);

// Builtin complexes addressable by name in the CLI.
std::optional<SimplicialComplex> builtin_complex(const std::string& name);
std::vector<std::string> builtin_complex_names();

}  // namespace zk
