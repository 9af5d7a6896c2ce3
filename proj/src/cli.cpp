#include "paircoh/cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "paircoh/errors.hpp"
#include "paircoh/grid_kernels.hpp"
#include "paircoh/io.hpp"
#include "paircoh/measures.hpp"
#include "paircoh/oracle.hpp"
#include "paircoh/states.hpp"
#include "paircoh/sweep.hpp"
#include "paircoh/witnesses.hpp"

namespace paircoh::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "magnitude,phase" -> magnitude * e^{i phase}
cplx parse_zeta(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("zeta must be given as \"magnitude,phase\", got '" + text + "'");
  }
  double r = 0.0;
  double phi = 0.0;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    r = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    phi = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse zeta '" + text + "'");
  }
  if (r < 0.0) throw DomainError("zeta magnitude must be nonnegative");
  return std::polar(r, phi);
}

struct Output {
  std::string path;
  std::string format = "csv";
};

void add_output_options(CLI::App* cmd, Output& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--out", o.path, "Write results to FILE instead of stdout");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

template <typename Writer>
void emit(const Output& o, std::ostream& out, Writer&& write) {
  if (o.path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + o.path + "'");
  write(file);
}

void dump_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

SchmidtState state_for(const std::string& family, cplx zeta, double tol) {
  if (family == "tmsv") return squeezed_vacuum(zeta, tol);
  return pair_coherent(zeta, tol);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement and non-classicality measures for pair coherent and two-mode "
               "squeezed vacuum states"};
  app.require_subcommand(1);

  // sweep
  SweepSettings sweep_settings;
  std::string sweep_measure;
  std::string sweep_state = "pcs";
  Output sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a measure over uniformly spaced |zeta|");
  sweep->add_option("--measure", sweep_measure, "corr-entropy|linear-entropy|mancini|duan|negativity")
      ->required()
      ->check(CLI::IsMember({"corr-entropy", "linear-entropy", "mancini", "duan", "negativity"}));
  sweep->add_option("--state", sweep_state, "pcs|tmsv|both")
      ->check(CLI::IsMember({"pcs", "tmsv", "both"}))
      ->capture_default_str();
  sweep->add_option("--zeta-min", sweep_settings.zeta_min)->capture_default_str();
  sweep->add_option("--zeta-max", sweep_settings.zeta_max)->capture_default_str();
  sweep->add_option("--steps", sweep_settings.steps)->capture_default_str();
  sweep->add_option("--phi", sweep_settings.phi, "Phase of zeta (radians)")->capture_default_str();
  sweep->add_option("--m", sweep_settings.m, "EPR-variable weight m (nonzero)")->capture_default_str();
  sweep->add_option("--truncation-tol", sweep_settings.tail_tolerance)->capture_default_str();
  sweep->add_flag("--audit", sweep_settings.audit, "Recompute every point through the oracle");
  add_output_options(sweep, sweep_out, "csv");

  // pt-spectrum
  std::string pt_zeta;
  std::string pt_state = "pcs";
  int pt_nmax = 12;
  bool pt_audit = false;
  double pt_tol = kDefaultTailTolerance;
  Output pt_out;
  auto* pt = app.add_subcommand("pt-spectrum", "Eigenvalues of the partially transposed state");
  pt->add_option("--zeta", pt_zeta, "\"magnitude,phase\"")->required();
  pt->add_option("--state", pt_state)->check(CLI::IsMember({"pcs", "tmsv"}))->capture_default_str();
  pt->add_option("--n-max", pt_nmax, "Per-mode Fock cutoff")->capture_default_str();
  pt->add_option("--truncation-tol", pt_tol)->capture_default_str();
  pt->add_flag("--audit", pt_audit, "Also diagonalize the dense partial transpose");
  add_output_options(pt, pt_out, "json");

  // qgrid
  double q_zeta = 1.0;
  double q_amax = 3.0;
  int q_points = 61;
  double q_phase = 0.0;
  double q_zero_tol = 1e-10;
  Output q_out;
  auto* qg = app.add_subcommand("qgrid", "Q function of the pair coherent state over |alpha|, |beta|");
  qg->add_option("--zeta", q_zeta, "Real zeta")->capture_default_str();
  qg->add_option("--amax", q_amax)->capture_default_str();
  qg->add_option("--points", q_points)->capture_default_str();
  qg->add_option("--rel-phase", q_phase, "Phase of beta relative to alpha")->capture_default_str();
  qg->add_option("--zero-tol", q_zero_tol, "Rows with Q below this are marked")->capture_default_str();
  add_output_options(qg, q_out, "csv");

  // quadrature
  std::string quad_zeta;
  std::string quad_state = "pcs";
  double quad_range = 4.0;
  int quad_points = 81;
  double quad_tol = kDefaultTailTolerance;
  Output quad_out;
  auto* quad = app.add_subcommand("quadrature", "Joint quadrature distribution P(x_a, x_b)");
  quad->add_option("--zeta", quad_zeta, "\"magnitude,phase\"")->required();
  quad->add_option("--state", quad_state)->check(CLI::IsMember({"pcs", "tmsv"}))->capture_default_str();
  quad->add_option("--x-range", quad_range, "Grid spans [-R, R]^2")->capture_default_str();
  quad->add_option("--points", quad_points)->capture_default_str();
  quad->add_option("--truncation-tol", quad_tol)->capture_default_str();
  add_output_options(quad, quad_out, "csv");

  // evaluate
  std::string ev_zeta;
  std::string ev_state = "pcs";
  double ev_m = 1.0;
  double ev_tol = kDefaultTailTolerance;
  Output ev_out;
  auto* ev = app.add_subcommand("evaluate", "Entropies and second-moment witnesses at one zeta");
  ev->add_option("--zeta", ev_zeta, "\"magnitude,phase\"")->required();
  ev->add_option("--state", ev_state)->check(CLI::IsMember({"pcs", "tmsv"}))->capture_default_str();
  ev->add_option("--m", ev_m)->capture_default_str();
  ev->add_option("--truncation-tol", ev_tol)->capture_default_str();
  add_output_options(ev, ev_out, "json");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      std::ostringstream help_out;
      std::ostringstream help_err;
      const int code = app.exit(e, help_out, help_err);
      out << help_out.str();
      err << help_err.str();
      return code == 0 ? kSuccess : kUsage;
    }

    if (*sweep) {
      sweep_settings.measure = parse_measure(sweep_measure);
      sweep_settings.state = parse_state(sweep_state);
      const SweepTable table = run_sweep(sweep_settings);
      emit(sweep_out, out, [&](std::ostream& os) {
        if (sweep_out.format == "json") {
          dump_json(os, json(table));
        } else {
          write_csv(os, table);
        }
      });
    } else if (*pt) {
      const cplx zeta = parse_zeta(pt_zeta);
      if (pt_nmax < 0) throw DomainError("--n-max must be nonnegative");
      if (pt_audit && pt_nmax > oracle::kMaxOracleCutoff) {
        throw CapacityError("--audit supports --n-max <= 40");
      }
      const SchmidtState state = truncate(state_for(pt_state, zeta, pt_tol), pt_nmax);
      const PTSpectrum spectrum = pt_spectrum(state);
      const std::vector<double> eig = spectrum.eigenvalues();
      json j;
      j["zeta"] = {{"abs", std::abs(zeta)}, {"phi", std::arg(zeta)}};
      j["state"] = pt_state;
      j["n_max"] = pt_nmax;
      j["truncation"] = state.truncation();
      j["spectrum"] = spectrum;
      j["eigenvalues"] = eig;
      j["trace"] = spectrum.trace();
      j["negativity"] = negativity(state);
      double deviation = 0.0;
      if (pt_audit) {
        const auto dense = oracle::hermitian_eigenvalues(
            oracle::partial_transpose(oracle::dense_density(state)));
        for (std::size_t i = 0; i < dense.size(); ++i) {
          deviation = std::max(deviation, std::fabs(dense[i] - eig[i]));
        }
        j["audit"] = {{"max_deviation", deviation}, {"tolerance", kAuditTolerance}};
      }
      emit(pt_out, out, [&](std::ostream& os) {
        if (pt_out.format == "json") {
          dump_json(os, j);
        } else {
          os << "index,eigenvalue\n";
          for (std::size_t i = 0; i < eig.size(); ++i) os << i << ',' << format_number(eig[i]) << '\n';
        }
      });
      if (pt_audit && !(deviation <= kAuditTolerance)) {
        err << "oracle deviation " << deviation << " exceeds " << kAuditTolerance << '\n';
        return kNumerical;
      }
    } else if (*qg) {
      const QGrid grid = q_grid(q_zeta, q_amax, q_points, q_phase);
      emit(q_out, out, [&](std::ostream& os) {
        if (q_out.format == "json") {
          dump_json(os, json(grid));
        } else {
          write_csv(os, grid, q_zero_tol);
        }
      });
    } else if (*quad) {
      if (!(quad_range > 0.0)) throw DomainError("--x-range must be positive");
      const SchmidtState state = state_for(quad_state, parse_zeta(quad_zeta), quad_tol);
      const QuadratureGrid grid = quadrature_grid(state, -quad_range, quad_range, quad_points);
      emit(quad_out, out, [&](std::ostream& os) {
        if (quad_out.format == "json") {
          dump_json(os, json(grid));
        } else {
          write_csv(os, grid);
        }
      });
    } else if (*ev) {
      const cplx zeta = parse_zeta(ev_zeta);
      const SchmidtState state = state_for(ev_state, zeta, ev_tol);
      json j;
      j["zeta"] = {{"abs", std::abs(zeta)}, {"phi", std::arg(zeta)}};
      j["state"] = ev_state;
      j["truncation"] = state.truncation();
      j["entropies"] = entropies(state);
      j["negativity"] = negativity(state);
      j["witness"] = duan_total_variance(state, ev_m);
      emit(ev_out, out, [&](std::ostream& os) {
        if (ev_out.format == "json") {
          dump_json(os, j);
        } else {
          os << "s_a,i_corr,i_lin,negativity,var_u,var_v,M,M_x\n";
          const auto& e = j["entropies"];
          const auto& w = j["witness"];
          os << format_number(e["s_a"].get<double>()) << ',' << format_number(e["i_corr"].get<double>())
             << ',' << format_number(e["i_lin"].get<double>()) << ','
             << format_number(j["negativity"].get<double>()) << ','
             << format_number(w["var_u"].get<double>()) << ',' << format_number(w["var_v"].get<double>())
             << ',' << format_number(w["total_variance"].get<double>()) << ','
             << format_number(w["mancini_product"].get<double>()) << '\n';
        }
      });
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kDomain;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace paircoh::cli
