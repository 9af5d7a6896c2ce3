#include <doctest.h>

#include <sstream>
#include <string>

#include "paircoh/errors.hpp"
#include "paircoh/grid_kernels.hpp"
#include "paircoh/io.hpp"
#include "paircoh/measures.hpp"
#include "paircoh/specfun.hpp"
#include "paircoh/sweep.hpp"
#include "paircoh/witnesses.hpp"

using namespace paircoh;

namespace {

template <class T>
T round_trip(const T& value) {
  const std::string text = json(value).dump();
  return json::parse(text).get<T>();
}

}  // namespace

TEST_CASE("numbers use 15 significant digits") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(specfun::kPi) == "3.14159265358979");
  CHECK(format_number(-1.5e-20) == "-1.5e-20");
}

TEST_CASE("sweep CSV layout") {
  SweepSettings s;
  s.measure = SweepMeasure::LinearEntropy;
  s.state = SweepState::Both;
  s.zeta_min = 0.0;
  s.zeta_max = 0.5;
  s.steps = 3;
  std::ostringstream out;
  write_csv(out, run_sweep(s));
  const std::string text = out.str();
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "|zeta|,linear-entropy_pcs,linear-entropy_tmsv");
  std::getline(lines, line);
  CHECK(line == "0,0,0");
  int rows = 1;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("quadrature and Q CSV layout") {
  std::ostringstream quad;
  write_csv(quad, quadrature_grid(pair_coherent(0.0), -1.0, 1.0, 3));
  std::istringstream ql(quad.str());
  std::string line;
  std::getline(ql, line);
  CHECK(line == "x_a,x_b,P");
  std::getline(ql, line);
  CHECK(line.rfind("-1,-1,", 0) == 0);
  int rows = 0;
  while (std::getline(ql, line)) ++rows;
  CHECK(rows == 8);

  std::ostringstream q;
  write_csv(q, q_grid(1.0, 2.0, 2, specfun::kPi), 1e-10);
  std::istringstream qs(q.str());
  std::getline(qs, line);
  CHECK(line == "|alpha|,|beta|,rel_phase,Q,near_zero");
  std::getline(qs, line);
  CHECK(line.rfind("0,0,3.14159265358979,", 0) == 0);
  CHECK(line.back() == '0');
}

TEST_CASE("JSON round trips are exact") {
  const SchmidtState s = pair_coherent(std::polar(1.3, 2.2));
  const PTSpectrum spec = pt_spectrum(s);
  CHECK(round_trip(spec) == spec);
  CHECK(round_trip(spec.paired.at(3)) == spec.paired.at(3));

  const EntropyRecord rec = entropies(s);
  CHECK(round_trip(rec) == rec);

  for (double m : {1.0, -0.7}) {
    const WitnessReport rep = duan_total_variance(s, m);
    CHECK(round_trip(rep) == rep);
  }
  const WitnessReport indeterminate = duan_total_variance(pair_coherent(std::polar(1.0, specfun::kPi / 2)), 1.0);
  CHECK(round_trip(indeterminate) == indeterminate);

  SweepSettings ss;
  ss.measure = SweepMeasure::Negativity;
  ss.state = SweepState::Both;
  ss.zeta_min = 0.1;
  ss.zeta_max = 0.9;
  ss.steps = 7;
  ss.phi = 0.3;
  const SweepTable table = run_sweep(ss);
  CHECK(round_trip(table) == table);
}

TEST_CASE("JSON field names") {
  const json j = duan_total_variance(pair_coherent(-1.0), 1.0);
  for (const char* key : {"m_param", "phi", "var_u", "var_v", "total_variance", "mancini_product",
                          "duan_threshold", "duan_lower", "mancini_violated", "duan_violated", "sign_condition"})
    CHECK(j.contains(key));
  CHECK(j.at("sign_condition") == "satisfied");

  json bad = j;
  bad["sign_condition"] = "maybe";
  CHECK_THROWS_AS(bad.get<WitnessReport>(), DomainError);

  const json g = quadrature_grid(pair_coherent(0.0), -1.0, 1.0, 3);
  CHECK(g.contains("x_a"));
  CHECK(g.at("P").size() == 9);
}
