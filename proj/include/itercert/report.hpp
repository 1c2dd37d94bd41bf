#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "itercert/certify.hpp"
#include "itercert/iterative.hpp"
#include "itercert/poisson.hpp"

namespace itercert {

inline constexpr int report_schema_version = 1;

// Stable JSON schema shared by every command:
//   {schema_version, command, matrix:{n, source},
//    certificate:{verdict, criterion, spectral_radius, eigenvalues:[{re,im}],
//                 predicted_rate, predicted_iters, notes} | null,
//    trace:{status, iterations, final_update_norm, final_error_norm,
//           observed_rate} | null,
//    timing_ms}

nlohmann::json certificate_report(const ConvergenceCertificate& cert);
ConvergenceCertificate certificate_from_json(const nlohmann::json& j);

// observed_rate may be NaN (serialized as null), final_error_norm may be
// absent when no reference solution exists.
nlohmann::json trace_report(const IterationTrace& trace, double observed,
                            std::optional<double> final_error);

nlohmann::json make_report(const std::string& command, std::size_t matrix_n,
                           const std::string& source,
                           const std::optional<nlohmann::json>& certificate,
                           const std::optional<nlohmann::json>& trace,
                           double timing_ms);

nlohmann::json demo_report(const DemoReport& demo, double timing_ms);

// Schema check; returns one message per violation, empty when valid.
std::vector<std::string> validate_report(const nlohmann::json& report);

// Human-readable rendering of a report.
std::string render_table(const nlohmann::json& report);

const char* verdict_name(Verdict v);
const char* criterion_name(CertCriterion c);
const char* status_name(IterationStatus s);

}  // namespace itercert
