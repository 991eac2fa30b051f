#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "spectral/cluster.hpp"
#include "spectral/eig_derivative.hpp"
#include "spectral/family.hpp"
#include "spectral/fd_oracle.hpp"
#include "spectral/ikramov.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

// Matrices:  {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major.
// Families:  {"base": <matrix>, "coefficients": [<matrix>, ...], "hermitian": bool}
//            with an optional "domain": {"lower": [...], "upper": [...]}.
// Infinite reals (an absent gap guard neighbour) are written as null.

void to_json(nlohmann::json& j, const ComplexMatrix& m);
void from_json(const nlohmann::json& j, ComplexMatrix& m);

void to_json(nlohmann::json& j, const AffineFamily& f);
void from_json(const nlohmann::json& j, AffineFamily& f);

void to_json(nlohmann::json& j, const ClusterIndex& c);
void to_json(nlohmann::json& j, const DerivativeReport& r);
void to_json(nlohmann::json& j, const FDEstimate& e);
void to_json(nlohmann::json& j, const DirectionRecord& r);
void to_json(nlohmann::json& j, const CriticalPointAnalysis& a);
void to_json(nlohmann::json& j, const LevelFunctionReport& r);

/// Parses text, turning library exceptions into Error{parse}.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::filesystem::path& path);

ComplexMatrix matrix_from_json(const nlohmann::json& j);
AffineFamily affine_family_from_json(const nlohmann::json& j);

}  // namespace spectral
