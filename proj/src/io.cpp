#include "paircoh/io.hpp"

#include <cstdio>
#include <ostream>

#include "paircoh/errors.hpp"

namespace paircoh {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << table.parameter;
  for (const auto& c : table.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << format_number(table.parameter_values[i]);
    for (double v : table.rows[i]) out << ',' << format_number(v);
    out << '\n';
  }
}

void write_csv(std::ostream& out, const QuadratureGrid& grid) {
  out << "x_a,x_b,P\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      out << format_number(grid.axis[i]) << ',' << format_number(grid.axis[j]) << ','
          << format_number(grid.at(i, j)) << '\n';
    }
  }
}

void write_csv(std::ostream& out, const QGrid& grid, double zero_tolerance) {
  out << "|alpha|,|beta|,rel_phase,Q,near_zero\n";
  const std::string phase = format_number(grid.rel_phase);
  for (std::size_t i = 0; i < grid.magnitudes.size(); ++i) {
    for (std::size_t j = 0; j < grid.magnitudes.size(); ++j) {
      const double q = grid.at(i, j);
      out << format_number(grid.magnitudes[i]) << ',' << format_number(grid.magnitudes[j]) << ','
          << phase << ',' << format_number(q) << ',' << (q < zero_tolerance ? 1 : 0) << '\n';
    }
  }
}

void to_json(json& j, const PairedEigenvalues& p) {
  j = json{{"n", p.n}, {"m", p.m}, {"plus", p.plus}, {"minus", p.minus}, {"theta", p.theta}};
}

void from_json(const json& j, PairedEigenvalues& p) {
  j.at("n").get_to(p.n);
  j.at("m").get_to(p.m);
  j.at("plus").get_to(p.plus);
  j.at("minus").get_to(p.minus);
  j.at("theta").get_to(p.theta);
}

void to_json(json& j, const PTSpectrum& s) {
  j = json{{"diagonal", s.diagonal}, {"paired", s.paired}};
}

void from_json(const json& j, PTSpectrum& s) {
  j.at("diagonal").get_to(s.diagonal);
  j.at("paired").get_to(s.paired);
}

void to_json(json& j, const EntropyRecord& r) {
  j = json{{"s_a", r.s_a}, {"s_b", r.s_b}, {"i_corr", r.i_corr}, {"i_lin", r.i_lin}};
}

void from_json(const json& j, EntropyRecord& r) {
  j.at("s_a").get_to(r.s_a);
  j.at("s_b").get_to(r.s_b);
  j.at("i_corr").get_to(r.i_corr);
  j.at("i_lin").get_to(r.i_lin);
}

namespace {

SignCondition parse_sign(const std::string& s) {
  for (auto c : {SignCondition::Satisfied, SignCondition::Violated, SignCondition::Indeterminate}) {
    if (s == to_string(c)) return c;
  }
  throw DomainError("unknown sign condition '" + s + "'");
}

}  // namespace

void to_json(json& j, const WitnessReport& r) {
  j = json{{"m_param", r.m_param},
           {"phi", r.phi},
           {"var_u", r.var_u},
           {"var_v", r.var_v},
           {"total_variance", r.total_variance},
           {"mancini_product", r.mancini_product},
           {"duan_threshold", r.duan_threshold},
           {"duan_lower", r.duan_lower},
           {"mancini_violated", r.mancini_violated},
           {"duan_violated", r.duan_violated},
           {"sign_condition", to_string(r.sign)}};
}

void from_json(const json& j, WitnessReport& r) {
  j.at("m_param").get_to(r.m_param);
  j.at("phi").get_to(r.phi);
  j.at("var_u").get_to(r.var_u);
  j.at("var_v").get_to(r.var_v);
  j.at("total_variance").get_to(r.total_variance);
  j.at("mancini_product").get_to(r.mancini_product);
  j.at("duan_threshold").get_to(r.duan_threshold);
  j.at("duan_lower").get_to(r.duan_lower);
  j.at("mancini_violated").get_to(r.mancini_violated);
  j.at("duan_violated").get_to(r.duan_violated);
  r.sign = parse_sign(j.at("sign_condition").get<std::string>());
}

void to_json(json& j, const SweepTable& t) {
  j = json{{"parameter", t.parameter},
           {"measure", t.measure},
           {"state", t.state},
           {"phi", t.phi},
           {"m", t.m},
           {"truncation_tol", t.tail_tolerance},
           {"columns", t.columns},
           {"parameter_values", t.parameter_values},
           {"rows", t.rows}};
}

void from_json(const json& j, SweepTable& t) {
  j.at("parameter").get_to(t.parameter);
  j.at("measure").get_to(t.measure);
  j.at("state").get_to(t.state);
  j.at("phi").get_to(t.phi);
  j.at("m").get_to(t.m);
  j.at("truncation_tol").get_to(t.tail_tolerance);
  j.at("columns").get_to(t.columns);
  j.at("parameter_values").get_to(t.parameter_values);
  j.at("rows").get_to(t.rows);
}

void to_json(json& j, const QuadratureGrid& g) {
  j = json{{"x_a", g.axis}, {"x_b", g.axis}, {"P", g.values}};
}

void to_json(json& j, const QGrid& g) {
  j = json{{"zeta", g.zeta}, {"rel_phase", g.rel_phase}, {"alpha_abs", g.magnitudes},
           {"beta_abs", g.magnitudes}, {"Q", g.values}};
}

}  // namespace paircoh
