#pragma once

#include "coh/field.hpp"
#include "coh/free_algebra.hpp"
#include "coh/identities.hpp"
#include "coh/lie.hpp"
#include "coh/peel.hpp"
#include "coh/telescope.hpp"

#include "json.hpp"

#include <string>

namespace coh {

using Json = nlohmann::ordered_json;

/// Series coefficients as decimal strings (coefficients routinely exceed
/// 64 bits).
Json series_to_json(const TruncSeries& s);

/// Space document: {"name": str, "spheres": [ints]} or
/// {"name": str, "reduced_dims": {"degree": rank, ...}}.
SpaceModel space_from_json(const Json& doc, int trunc_degree);
SpaceModel load_space(const std::string& path, int trunc_degree);

/// Graded endomorphism document: {"matrices": {"degree": [[row], ...], ...}}.
GradedEndo endo_from_json(const Json& doc, const Field& field);
GradedEndo load_endo(const std::string& path, const Field& field);

Json identity_report_to_json(const IdentityReport& r, int trunc_degree);
Json kernel_report_to_json(const KernelIdentityReport& r);
Json pbw_report_to_json(const PbwReport& r, const Field& field);
Json split_report_to_json(const TelescopeSplitReport& r);
Json swap_report_to_json(const TelescopeSwapReport& r);
Json circle_report_to_json(const CircleTelescopeReport& r);
Json peel_state_to_json(const PeelState& s);

/// FNV-1a hash of the canonical run description, for report file names.
uint64_t fnv1a64(const std::string& data);
std::string report_filename(const std::string& subcommand, const std::string& canonical);

/// Writes pretty-printed JSON, creating parent directories.
void write_json_file(const std::string& path, const Json& j);

}  // namespace coh
