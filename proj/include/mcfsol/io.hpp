#pragma once

// Deterministic CSV / SVG / JSON emitters. Numbers are always written with
// %.17g so identical inputs produce byte-identical files; no timestamps or
// environment data are embedded.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mcfsol/catalog.hpp"
#include "mcfsol/flow_check.hpp"
#include "mcfsol/profile_ode.hpp"
#include "mcfsol/soliton.hpp"

namespace mcfsol {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::string format_double(double v);

// columns: s,phi,psi,dphi,dpsi,kappa,residual
std::string curve_to_csv(const SampledCurve& curve);

// columns: s,u,residual
std::string report_to_csv(const ResidualReport& report);

Json report_to_json(const ResidualReport& report, bool include_samples = false);
Json verify_outcome_to_json(const VerifyOutcome& outcome);
Json sol1_report_to_json(const Sol1Report& report);
Json self_similarity_to_json(const SelfSimilarityReport& report);

// Minimal hand-emitted SVG polyline plot of a profile curve. The profile
// plane is drawn with psi horizontal and phi vertical.
std::string curve_to_svg(const SampledCurve& curve, int width = 640, int height = 480);
std::string curves_to_svg(const std::vector<SampledCurve>& curves, int width = 640,
                          int height = 480);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mcfsol
