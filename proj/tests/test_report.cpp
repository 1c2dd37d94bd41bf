#include <doctest.h>

#include "itercert/report.hpp"
#include "testutil.hpp"

using namespace itercert;
using nlohmann::json;

namespace {

ConvergenceCertificate sample_certificate() {
  ConvergenceCertificate cert;
  cert.verdict = Verdict::converges;
  cert.criterion = CertCriterion::spectral_radius;
  cert.spectral_radius = 0.7071067811865476;
  cert.eigenvalues = {{0.7071067811865476, 0.0},
                      {-0.7071067811865475, 0.0},
                      {5.5e-17, 1e-18}};
  cert.predicted_rate = 0.7071067811865476;
  cert.predicted_iters = 67;
  cert.notes = "";
  return cert;
}

}  // namespace

TEST_CASE("certificate serialization round trip") {
  const ConvergenceCertificate cert = sample_certificate();
  const json j = certificate_report(cert);
  const ConvergenceCertificate back = certificate_from_json(j);
  CHECK(back.verdict == cert.verdict);
  CHECK(back.criterion == cert.criterion);
  CHECK(back.spectral_radius == cert.spectral_radius);
  CHECK(back.predicted_rate == cert.predicted_rate);
  CHECK(back.predicted_iters == cert.predicted_iters);
  REQUIRE(back.eigenvalues.size() == cert.eigenvalues.size());
  for (std::size_t i = 0; i < cert.eigenvalues.size(); ++i) {
    CHECK(back.eigenvalues[i] == cert.eigenvalues[i]);
  }
}

TEST_CASE("unknown certificates keep their note verbatim") {
  ConvergenceCertificate cert;
  cert.verdict = Verdict::unknown;
  cert.criterion = CertCriterion::reich;
  cert.notes = "premise failed: diagonal entry 2 is not positive";
  const ConvergenceCertificate back = certificate_from_json(certificate_report(cert));
  CHECK(back.notes == cert.notes);
  CHECK(back.verdict == Verdict::unknown);
  CHECK(back.eigenvalues.empty());
}

TEST_CASE("reports validate against the schema") {
  const json report = make_report("certify", 3, "poisson3.mtx",
                                  certificate_report(sample_certificate()),
                                  std::nullopt, 1.25);
  CHECK(validate_report(report).empty());

  json broken = report;
  broken.erase("matrix");
  CHECK(!validate_report(broken).empty());

  json bad_cert = report;
  bad_cert["certificate"].erase("verdict");
  CHECK(!validate_report(bad_cert).empty());
}

TEST_CASE("trace summaries serialize NaN rates as null") {
  IterationTrace trace;
  trace.status = IterationStatus::reached_tol;
  trace.iterations = 12;
  trace.update_norms = {1.0, 0.5, 0.25};
  const json with_rate = trace_report(trace, 0.5, 0.001);
  CHECK(with_rate["observed_rate"] == 0.5);
  CHECK(with_rate["final_error_norm"] == 0.001);

  const json no_rate =
      trace_report(trace, std::numeric_limits<double>::quiet_NaN(), std::nullopt);
  CHECK(no_rate["observed_rate"].is_null());
  CHECK(no_rate["final_error_norm"].is_null());

  const json full = make_report("solve", 4, "a.mtx",
                                certificate_report(sample_certificate()),
                                no_rate, 0.4);
  CHECK(validate_report(full).empty());
}

TEST_CASE("serialization is deterministic") {
  const json a = make_report("certify", 3, "m.mtx",
                             certificate_report(sample_certificate()),
                             std::nullopt, 2.0);
  const json b = make_report("certify", 3, "m.mtx",
                             certificate_report(sample_certificate()),
                             std::nullopt, 2.0);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("table rendering mentions the key fields") {
  const json report = make_report("certify", 3, "poisson3.mtx",
                                  certificate_report(sample_certificate()),
                                  std::nullopt, 1.0);
  const std::string table = render_table(report);
  CHECK(table.find("Converges") != std::string::npos);
  CHECK(table.find("SpectralRadius") != std::string::npos);
  CHECK(table.find("0.70710678") != std::string::npos);
}
