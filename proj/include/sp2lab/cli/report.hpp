#pragma once

// Report document shared by all subcommands and its json/csv/text renderings.
//
// Layout (schema in docs/report.schema.json):
//   schema_version, artifact {name, version}, command, config, pass,
//   summary, rows, failures, timing
// Everything except `timing` is a deterministic function of the config.

#include <string>
#include <string_view>

#include <json.hpp>

#include "sp2lab/algebra.hpp"

namespace sp2lab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kArtifactName = "sp2lab";

std::string_view artifact_version();

/// Shortest decimal string that reads back to the same double.
std::string format_real(double x);

Json vec_json(const Vec3& v);
/// [lambda, u1, u2, u3, v1, v2, v3, w1, w2, w3]
Json element_json(const SpElement& x);

/// Nine comma-separated m-coordinates, as accepted by `classify --x`.
std::string m_literal(const SpElement& x);
/// Complete classify invocation reproducing a plane.
std::string classify_literal(const SpElement& x, const SpElement& y);
/// {"x": [...], "y": [...], "reproduce": "..."}
Json plane_json(const SpElement& x, const SpElement& y);

/// Skeleton with schema_version, artifact, command; the caller fills the rest.
Json make_report(std::string_view command);

/// Copy without the `timing` member.
Json without_timing(Json report);

/// format is one of json, csv, text.
std::string render(const Json& report, std::string_view format);

}  // namespace sp2lab::cli
