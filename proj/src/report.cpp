#include "itercert/report.hpp"

#include <cmath>
#include <sstream>

namespace itercert {

namespace {

using nlohmann::json;

Verdict verdict_from_name(const std::string& s) {
  if (s == "Converges") return Verdict::converges;
  if (s == "Diverges") return Verdict::diverges;
  if (s == "Unknown") return Verdict::unknown;
  throw Error(errc::io_error, "unknown verdict '" + s + "'");
}

CertCriterion criterion_from_name(const std::string& s) {
  if (s == "SpectralRadius") return CertCriterion::spectral_radius;
  if (s == "Reich") return CertCriterion::reich;
  throw Error(errc::io_error, "unknown criterion '" + s + "'");
}

json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::converges: return "Converges";
    case Verdict::diverges: return "Diverges";
    case Verdict::unknown: return "Unknown";
  }
  return "Unknown";
}

const char* criterion_name(CertCriterion c) {
  return c == CertCriterion::reich ? "Reich" : "SpectralRadius";
}

const char* status_name(IterationStatus s) {
  switch (s) {
    case IterationStatus::reached_tol: return "ReachedTol";
    case IterationStatus::max_iters: return "MaxIters";
    case IterationStatus::diverged: return "Diverged";
  }
  return "MaxIters";
}

nlohmann::json certificate_report(const ConvergenceCertificate& cert) {
  json eigs = json::array();
  for (const ComplexScalar& l : cert.eigenvalues) {
    eigs.push_back(json{{"re", l.re}, {"im", l.im}});
  }
  return json{{"verdict", verdict_name(cert.verdict)},
              {"criterion", criterion_name(cert.criterion)},
              {"spectral_radius", cert.spectral_radius},
              {"eigenvalues", eigs},
              {"predicted_rate", cert.predicted_rate},
              {"predicted_iters", cert.predicted_iters},
              {"notes", cert.notes}};
}

ConvergenceCertificate certificate_from_json(const nlohmann::json& j) {
  ConvergenceCertificate cert;
  cert.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  cert.criterion = criterion_from_name(j.at("criterion").get<std::string>());
  cert.spectral_radius = j.at("spectral_radius").get<double>();
  for (const json& e : j.at("eigenvalues")) {
    cert.eigenvalues.push_back({e.at("re").get<double>(), e.at("im").get<double>()});
  }
  cert.predicted_rate = j.at("predicted_rate").get<double>();
  cert.predicted_iters = j.at("predicted_iters").get<unsigned long>();
  cert.notes = j.at("notes").get<std::string>();
  return cert;
}

nlohmann::json trace_report(const IterationTrace& trace, double observed,
                            std::optional<double> final_error) {
  return json{{"status", status_name(trace.status)},
              {"iterations", trace.iterations},
              {"final_update_norm",
               trace.update_norms.empty() ? json(nullptr)
                                          : json(trace.update_norms.back())},
              {"final_error_norm",
               final_error ? json(*final_error) : json(nullptr)},
              {"observed_rate", number_or_null(observed)}};
}

nlohmann::json make_report(const std::string& command, std::size_t matrix_n,
                           const std::string& source,
                           const std::optional<nlohmann::json>& certificate,
                           const std::optional<nlohmann::json>& trace,
                           double timing_ms) {
  return json{{"schema_version", report_schema_version},
              {"command", command},
              {"matrix", json{{"n", matrix_n}, {"source", source}}},
              {"certificate", certificate ? *certificate : json(nullptr)},
              {"trace", trace ? *trace : json(nullptr)},
              {"timing_ms", timing_ms}};
}

nlohmann::json demo_report(const DemoReport& demo, double timing_ms) {
  json report = make_report(
      "poisson", demo.n, "poisson(n=" + std::to_string(demo.n) + ")",
      certificate_report(demo.certificate),
      trace_report(demo.trace, demo.observed, demo.final_error_norm), timing_ms);
  if (!demo.error.empty()) report["error"] = demo.error;
  return report;
}

std::vector<std::string> validate_report(const nlohmann::json& report) {
  std::vector<std::string> problems;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
  };

  require(report.is_object(), "report is not an object");
  if (!report.is_object()) return problems;

  require(report.contains("schema_version") && report["schema_version"].is_number_integer(),
          "schema_version missing or not an integer");
  require(report.contains("command") && report["command"].is_string(),
          "command missing or not a string");
  require(report.contains("timing_ms") && report["timing_ms"].is_number(),
          "timing_ms missing or not a number");

  if (report.contains("matrix") && report["matrix"].is_object()) {
    const json& m = report["matrix"];
    require(m.contains("n") && m["n"].is_number_integer(), "matrix.n missing");
    require(m.contains("source") && m["source"].is_string(), "matrix.source missing");
  } else {
    problems.push_back("matrix missing or not an object");
  }

  if (!report.contains("certificate")) {
    problems.push_back("certificate missing");
  } else if (!report["certificate"].is_null()) {
    const json& c = report["certificate"];
    require(c.is_object(), "certificate not an object or null");
    if (c.is_object()) {
      require(c.contains("verdict") && c["verdict"].is_string(), "certificate.verdict missing");
      require(c.contains("criterion") && c["criterion"].is_string(),
              "certificate.criterion missing");
      require(c.contains("spectral_radius") && c["spectral_radius"].is_number(),
              "certificate.spectral_radius missing");
      require(c.contains("eigenvalues") && c["eigenvalues"].is_array(),
              "certificate.eigenvalues missing");
      require(c.contains("predicted_rate") && c["predicted_rate"].is_number(),
              "certificate.predicted_rate missing");
      require(c.contains("predicted_iters") && c["predicted_iters"].is_number_integer(),
              "certificate.predicted_iters missing");
      require(c.contains("notes") && c["notes"].is_string(), "certificate.notes missing");
    }
  }

  if (!report.contains("trace")) {
    problems.push_back("trace missing");
  } else if (!report["trace"].is_null()) {
    const json& t = report["trace"];
    require(t.is_object(), "trace not an object or null");
    if (t.is_object()) {
      require(t.contains("status") && t["status"].is_string(), "trace.status missing");
      require(t.contains("iterations") && t["iterations"].is_number_integer(),
              "trace.iterations missing");
      require(t.contains("final_update_norm"), "trace.final_update_norm missing");
      require(t.contains("final_error_norm"), "trace.final_error_norm missing");
      require(t.contains("observed_rate"), "trace.observed_rate missing");
    }
  }
  return problems;
}

std::string render_table(const nlohmann::json& report) {
  std::ostringstream out;
  out.precision(17);
  out << "command          " << report.value("command", std::string("?")) << "\n";
  if (report.contains("matrix") && report["matrix"].is_object()) {
    out << "matrix           n=" << report["matrix"].value("n", 0)
        << "  source=" << report["matrix"].value("source", std::string("?")) << "\n";
  }
  if (report.contains("certificate") && report["certificate"].is_object()) {
    const nlohmann::json& c = report["certificate"];
    out << "verdict          " << c.value("verdict", std::string("?")) << "  ("
        << c.value("criterion", std::string("?")) << ")\n";
    out << "spectral radius  " << c.value("spectral_radius", 0.0) << "\n";
    out << "predicted rate   " << c.value("predicted_rate", 0.0) << "\n";
    out << "predicted iters  " << c.value("predicted_iters", 0) << "\n";
    const std::string notes = c.value("notes", std::string());
    if (!notes.empty()) out << "notes            " << notes << "\n";
    out << "eigenvalues\n";
    for (const nlohmann::json& e : c["eigenvalues"]) {
      out << "  " << e.value("re", 0.0) << " + " << e.value("im", 0.0) << "i\n";
    }
  }
  if (report.contains("trace") && report["trace"].is_object()) {
    const nlohmann::json& t = report["trace"];
    out << "status           " << t.value("status", std::string("?")) << "\n";
    out << "iterations       " << t.value("iterations", 0) << "\n";
    if (t["final_update_norm"].is_number())
      out << "final update     " << t["final_update_norm"].get<double>() << "\n";
    if (t["final_error_norm"].is_number())
      out << "final error      " << t["final_error_norm"].get<double>() << "\n";
    if (t["observed_rate"].is_number())
      out << "observed rate    " << t["observed_rate"].get<double>() << "\n";
  }
  if (report.contains("error")) {
    out << "error            " << report["error"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace itercert
