// lpl — Lie-Poisson deformation laboratory command line.
//
// Subcommands: catalog, classify, simulate, linearize, spectrum-table, field.
// Reports are JSON, time series and tables are CSV. Runs are deterministic:
// identical flags and seed produce identical bytes (LPL_SEED overrides --seed).

#include "lpl/bianchi.hpp"
#include "lpl/deformation.hpp"
#include "lpl/dim4.hpp"
#include "lpl/fourier_field.hpp"
#include "lpl/grid_field.hpp"
#include "lpl/lie_poisson.hpp"
#include "lpl/spectral.hpp"
#include "lpl/tensor_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

json tensor_json(const lpl::StructureTensor& c) {
  // entries [l, j, k, value], 1-based, j < k, antisymmetric completion implied
  json entries = json::array();
  for (int l = 0; l < c.dim(); ++l)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = j + 1; k < c.dim(); ++k)
        if (c.coeff(l, j, k) != 0.0) entries.push_back({l + 1, j + 1, k + 1, c.coeff(l, j, k)});
  return {{"dim", c.dim()}, {"entries", entries}};
}

// Human-readable J(xi) pattern, entry by entry: "xi1 - 2 xi2" etc.
json poisson_pattern_json(const lpl::StructureTensor& c) {
  json rows = json::array();
  for (int j = 0; j < c.dim(); ++j) {
    json row = json::array();
    for (int k = 0; k < c.dim(); ++k) {
      std::string term;
      for (int l = 0; l < c.dim(); ++l) {
        const double v = c.coeff(l, j, k);
        if (v == 0.0) continue;
        std::string coeff = v == 1.0 ? "" : (v == -1.0 ? "-" : fmt(v) + " ");
        if (!term.empty()) {
          term += v >= 0.0 ? " + " : " - ";
          coeff = std::abs(v) == 1.0 ? "" : fmt(std::abs(v)) + " ";
        }
        term += coeff + "xi" + std::to_string(l + 1);
      }
      row.push_back(term.empty() ? "0" : term);
    }
    rows.push_back(row);
  }
  return rows;
}

Eigen::VectorXd parse_components(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  Eigen::VectorXd out(values.size());
  for (size_t i = 0; i < values.size(); ++i) out(i) = values[i];
  return out;
}

void emit(const json& report, const std::string& path) {
  if (path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << report.dump(2) << "\n";
  }
}

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("LPL_SEED")) return std::strtoull(env, nullptr, 10);
  return flag_seed;
}

struct SystemOptions {
  std::string system = "prs";
  double alpha = 2.0;
  std::optional<double> eta;
  std::vector<double> inertia{1.0, 2.0, 3.0};
  bool half_energy = false;
};

void add_system_flags(CLI::App* cmd, SystemOptions& opt) {
  cmd->add_option("--system", opt.system,
                  "prs | euler | a Bianchi type (I..IX); Bianchi systems use H = 1/2 |xi|^2")
      ->capture_default_str();
  cmd->add_option("--alpha", opt.alpha, "PRS aspect parameter")->capture_default_str();
  cmd->add_option("--eta", opt.eta, "Bianchi VI/VII parameter");
  cmd->add_option("--inertia", opt.inertia, "Euler top moments of inertia")->expected(3);
  cmd->add_flag("--half-energy", opt.half_energy, "use H = 1/2 sum xi^2/I for the Euler top");
}

lpl::LiePoissonSystem build_system(const SystemOptions& opt) {
  if (opt.system == "prs") return lpl::prs_system(opt.alpha);
  if (opt.system == "euler")
    return lpl::euler_top(Eigen::Vector3d(opt.inertia[0], opt.inertia[1], opt.inertia[2]), opt.half_energy);
  const double* eta = opt.eta ? &*opt.eta : nullptr;
  const lpl::BianchiType type = lpl::parse_bianchi(opt.system, eta);
  std::vector<lpl::CasimirFunction> casimirs{lpl::casimir_of(type)};
  return lpl::make_system("bianchi-" + lpl::to_string(type), lpl::bianchi_algebra(type),
                          lpl::quadratic_energy(3), std::move(casimirs));
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

json catalog_bianchi(const lpl::BianchiType& type) {
  const lpl::StructureTensor c = lpl::bianchi_algebra(type);
  const lpl::CasimirFunction casimir = lpl::casimir_of(type);
  json out{{"type", lpl::to_string(type)},
           {"class", std::string(1, lpl::bianchi_class(type))},
           {"tensor", tensor_json(c)},
           {"poisson_matrix", poisson_pattern_json(c)},
           {"casimir",
            {{"name", casimir.name}, {"restricted_domain", static_cast<bool>(casimir.domain_signature)}}}};
  if (lpl::has_parameter(type.label)) out["eta"] = type.eta;
  if (type.label == lpl::BianchiLabel::I) {
    out["singular_set"] = {{"description", "all of phase space (J == 0)"}, {"dimension", 3}};
  } else {
    const lpl::SingularSet sigma = lpl::singular_set(type);
    json vanishing = json::array();
    for (int i : sigma.vanishing) vanishing.push_back(i + 1);
    out["singular_set"] = {
        {"description", sigma.description}, {"dimension", sigma.dimension}, {"vanishing", vanishing}};
  }
  json reversals = json::array();
  for (const auto& r : lpl::reversal_transforms(type)) reversals.push_back(r.name);
  out["reversal_transforms"] = reversals;
  return out;
}

json catalog_dim4(const lpl::Dim4Entry& entry) {
  json out{{"type", entry.name},
           {"class", lpl::to_string(entry.label)},
           {"tensor", tensor_json(entry.tensor)},
           {"poisson_matrix", poisson_pattern_json(entry.tensor)},
           {"char_poly", entry.char_poly_text}};
  out["M"] = entry.m ? matrix_json(entry.m->matrix()) : json();
  json vanishing = json::array();
  for (int i : entry.sigma.vanishing) vanishing.push_back(i + 1);
  out["singular_set"] = {{"description", entry.sigma.description},
                         {"dimension", entry.sigma.dimension},
                         {"vanishing", vanishing}};
  return out;
}

int run_catalog(const std::string& name, std::optional<double> eta, const std::string& out_path,
                const std::string& tensor_path) {
  json report;
  lpl::StructureTensor tensor;
  if (name == "mother4" || name == "A4_10" || name == "A4_8" || name == "A4_1" || name == "A4_3" ||
      name == "A4_12") {
    const lpl::Dim4Entry entry =
        name == "mother4" ? lpl::mother_entry() : lpl::dim4_entry(lpl::parse_dim4(name));
    report = catalog_dim4(entry);
    tensor = entry.tensor;
  } else {
    const double* eta_ptr = eta ? &*eta : nullptr;
    const lpl::BianchiType type = lpl::parse_bianchi(name, eta_ptr);
    report = catalog_bianchi(type);
    tensor = lpl::bianchi_algebra(type);
  }
  if (!tensor_path.empty()) {
    lpl::write_tensor_file(tensor, tensor_path);
    report["tensor_file"] = tensor_path;
  }
  emit(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int run_classify(const std::string& file, const std::string& out_path) {
  const lpl::StructureTensor c = lpl::read_tensor_file(file);
  std::vector<lpl::StructureTensor> registry;
  if (c.dim() == 4) registry.push_back(lpl::mother_r_so3());
  const lpl::Classification result = lpl::classify(c, registry);
  json report{{"class", lpl::to_string(result.label)},
              {"jacobi_residual", lpl::jacobi_residual(c)}};
  if (result.witness_m) {
    report["M"] = matrix_json(result.witness_m->matrix());
    json kernel = json::array();
    const Eigen::MatrixXd& basis = result.witness_m->kernel_basis();
    for (int col = 0; col < basis.cols(); ++col) kernel.push_back(vector_json(basis.col(col)));
    report["kernel"] = kernel;
  } else {
    report["M"] = json();
    report["kernel"] = json::array();
  }
  if (!result.note.empty()) report["note"] = result.note;
  emit(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int run_simulate(const SystemOptions& sys_opt, const std::string& x0_text, double dt, double t_final,
                 const std::string& scheme, double guard, int stride, const std::string& csv_path,
                 const std::string& out_path) {
  const lpl::LiePoissonSystem sys = build_system(sys_opt);
  const Eigen::VectorXd x0 = parse_components(x0_text);
  if (x0.size() != sys.tensor.dim()) throw std::runtime_error("--x0 has wrong dimension for the system");

  lpl::IntegrationOptions options;
  options.scheme = lpl::parse_scheme(scheme);
  options.domain_guard = guard;
  options.log_stride = stride;
  const lpl::Trajectory traj = lpl::integrate(sys, x0, dt, t_final, options);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << "t";
    for (int i = 0; i < sys.tensor.dim(); ++i) csv << ",xi" << (i + 1);
    csv << ",H";
    for (size_t ci = 0; ci < sys.casimirs.size(); ++ci) csv << ",C" << (ci + 1);
    csv << "\n";
    for (size_t row = 0; row < traj.times.size(); ++row) {
      csv << fmt(traj.times[row]);
      for (int i = 0; i < sys.tensor.dim(); ++i) csv << ',' << fmt(traj.states[row](i));
      csv << ',' << fmt(traj.hamiltonian_log[row]);
      for (const auto& log : traj.casimir_logs) csv << ',' << fmt(log[row]);
      csv << "\n";
    }
  }

  json drifts = json::array();
  for (double d : traj.casimir_drifts) drifts.push_back(d);
  json report{{"system", sys.name},
              {"dt", dt},
              {"T", t_final},
              {"scheme", scheme},
              {"x0", vector_json(x0)},
              {"hamiltonian_drift", traj.hamiltonian_drift},
              {"casimir_drifts", drifts},
              {"final_time", traj.times.back()},
              {"final_state", vector_json(traj.states.back())},
              {"blew_up", traj.blew_up}};
  if (traj.blew_up) report["diagnostic"] = traj.diagnostic;
  if (!csv_path.empty()) report["csv"] = csv_path;
  emit(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// linearize
// ---------------------------------------------------------------------------

json spectrum_json(const lpl::SpectrumReport& report) {
  json eigenvalues = json::array();
  for (const auto& ev : report.eigenvalues) eigenvalues.push_back({ev.real(), ev.imag()});
  json coeffs = json::array();
  for (int i = 0; i < report.char_poly.size(); ++i) coeffs.push_back(report.char_poly(i));
  return {{"eigenvalues", eigenvalues},
          {"char_poly", coeffs},
          {"verdict", report.hamiltonian_symmetric ? "hamiltonian_symmetric" : "chiral"},
          {"chirality_measure", report.chirality_measure},
          {"tolerance", report.tolerance},
          {"equilibrium_kind", lpl::to_string(report.equilibrium_kind)}};
}

int run_linearize(const SystemOptions& sys_opt, const std::string& at_text, const std::vector<double>& mu,
                  const std::string& out_path) {
  const lpl::LiePoissonSystem sys = build_system(sys_opt);
  const Eigen::VectorXd at = parse_components(at_text);
  if (at.size() != sys.tensor.dim()) throw std::runtime_error("--at has wrong dimension for the system");
  const lpl::SmoothFunction f = mu.empty() ? sys.hamiltonian : lpl::energy_casimir(sys, mu);

  const lpl::EquilibriumKind kind = lpl::classify_equilibrium(sys, at, f);
  lpl::LinearGenerator gen;
  switch (kind) {
    case lpl::EquilibriumKind::singular: gen = lpl::linearize_singular(sys, at); break;
    case lpl::EquilibriumKind::regular: gen = lpl::linearize_regular(sys, at, f); break;
    default:
      throw std::runtime_error("point is not a linearizable equilibrium (kind = " + lpl::to_string(kind) + ")");
  }
  const lpl::SpectrumReport report = lpl::spectrum(gen);

  json out = spectrum_json(report);
  out["system"] = sys.name;
  out["point"] = vector_json(at);
  out["generator"] = matrix_json(gen.a);
  const lpl::RankProfile profile = lpl::rank_profile(sys.tensor, at);
  out["rank"] = profile.rank;
  out["nullity"] = profile.nullity;
  emit(out, out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum-table
// ---------------------------------------------------------------------------

void spectrum_row(std::ostream& csv, const std::string& name, const std::string& cls, int sigma_dim,
                  const lpl::StructureTensor& tensor, const Eigen::VectorXd& h) {
  const lpl::SpectrumReport report = lpl::spectrum(lpl::singular_generator(tensor, h));
  csv << name << ',' << cls << ',' << sigma_dim;
  for (int i = 0; i < h.size(); ++i) csv << ',' << fmt(h(i));
  csv << ',' << '"';
  for (size_t i = 0; i < report.eigenvalues.size(); ++i) {
    if (i) csv << ' ';
    csv << fmt(report.eigenvalues[i].real()) << (report.eigenvalues[i].imag() < 0 ? "-" : "+")
        << fmt(std::abs(report.eigenvalues[i].imag())) << 'i';
  }
  csv << '"' << ',' << (report.hamiltonian_symmetric ? "hamiltonian_symmetric" : "chiral") << ','
      << fmt(report.chirality_measure) << "\n";
}

int run_spectrum_table(int dim, std::uint64_t seed, const std::string& out_path) {
  std::ostringstream csv;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  if (dim == 3) {
    csv << "type,class,sigma_dim,h1,h2,h3,eigenvalues,verdict,chirality\n";
    std::vector<lpl::BianchiType> types{
        lpl::bianchi_type(lpl::BianchiLabel::I),         lpl::bianchi_type(lpl::BianchiLabel::II),
        lpl::bianchi_type(lpl::BianchiLabel::III),       lpl::bianchi_type(lpl::BianchiLabel::IV),
        lpl::bianchi_type(lpl::BianchiLabel::V),         lpl::bianchi_type(lpl::BianchiLabel::VI, -1.0),
        lpl::bianchi_type(lpl::BianchiLabel::VI, 2.0),   lpl::bianchi_type(lpl::BianchiLabel::VII, 0.0),
        lpl::bianchi_type(lpl::BianchiLabel::VII, 1.5),  lpl::bianchi_type(lpl::BianchiLabel::VIII),
        lpl::bianchi_type(lpl::BianchiLabel::IX)};
    for (const auto& type : types) {
      Eigen::VectorXd h(3);
      for (int i = 0; i < 3; ++i) h(i) = unit(rng);
      const int sigma_dim = type.label == lpl::BianchiLabel::I ? 3 : lpl::singular_set(type).dimension;
      spectrum_row(csv, lpl::to_string(type), std::string(1, lpl::bianchi_class(type)), sigma_dim,
                   lpl::bianchi_algebra(type), h);
    }
  } else if (dim == 4) {
    csv << "type,class,sigma_dim,h1,h2,h3,h4,eigenvalues,verdict,chirality\n";
    for (const auto& entry : lpl::dim4_catalog()) {
      Eigen::VectorXd h(4);
      for (int i = 0; i < 4; ++i) h(i) = unit(rng);
      spectrum_row(csv, entry.name, lpl::to_string(entry.label), entry.sigma.dimension, entry.tensor, h);
    }
  } else {
    throw std::runtime_error("--dim must be 3 or 4");
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << csv.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// field
// ---------------------------------------------------------------------------

int run_field_local(int n, double t, double dt, const std::string& csv_path) {
  // Section fields for the demo: a spatially varying gradient with
  // h1 = 0.5 sin(y), h3 = 1 + cos(x) — a continuum of decay rates.
  const lpl::GridField h = lpl::grid_from_function(n, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(0.5 * std::sin(x.y()), 0.0, 1.0 + std::cos(x.x()));
  });
  const lpl::GridField u0 = lpl::grid_from_function(n, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(1.0 + 0.25 * std::cos(x.z()), 0.5, 0.25 * std::sin(x.y()));
  });
  const lpl::GridField closed = lpl::local_chiral_evolution(h, u0, t);
  const lpl::GridField generic = lpl::local_generic_evolution(h, u0, t, dt);
  const double max_err = (closed.values - generic.values).cwiseAbs().maxCoeff();
  const Eigen::VectorXd rates = lpl::local_decay_rates(h);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << "x,y,z,rate\n";
    for (long s = 0; s < h.sites(); ++s) {
      const Eigen::Vector3d x = h.point(s);
      csv << fmt(x(0)) << ',' << fmt(x(1)) << ',' << fmt(x(2)) << ',' << fmt(rates(s)) << "\n";
    }
  }

  json report{{"n", n},
              {"t", t},
              {"dt", dt},
              {"rate_min", rates.minCoeff()},
              {"rate_max", rates.maxCoeff()},
              {"closed_vs_generic_max_error", max_err}};
  if (!csv_path.empty()) report["csv"] = csv_path;
  emit(report, "");
  return 0;
}

int run_field_vortex(int truncation, double dt, double t_final, const std::string& init, std::uint64_t seed,
                     int stride, const std::string& csv_path) {
  lpl::FourierField omega0;
  if (init == "beltrami") {
    omega0 = lpl::beltrami_state(truncation, {0, 0, 1}, +1);
  } else if (init == "two-beltrami") {
    omega0 = lpl::two_beltrami_state(truncation);
  } else if (init == "random-seeded") {
    std::mt19937_64 rng(seed);
    omega0 = lpl::random_solenoidal_state(truncation, rng);
  } else {
    throw std::runtime_error("--init must be beltrami, two-beltrami or random-seeded");
  }

  const lpl::FieldTrajectory traj = lpl::integrate_field(omega0, dt, t_final, stride);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << "t,E,C\n";
    for (size_t i = 0; i < traj.times.size(); ++i)
      csv << fmt(traj.times[i]) << ',' << fmt(traj.energy_log[i]) << ',' << fmt(traj.helicity_log[i]) << "\n";
  }

  json report{{"K", truncation},
              {"dt", dt},
              {"T", t_final},
              {"init", init},
              {"energy_initial", traj.energy_log.front()},
              {"helicity_initial", traj.helicity_log.front()},
              {"energy_drift", traj.energy_drift},
              {"helicity_drift", traj.helicity_drift},
              {"blew_up", traj.blew_up}};
  if (traj.blew_up) report["diagnostic"] = traj.diagnostic;
  if (init == "random-seeded") report["seed"] = seed;
  if (!csv_path.empty()) report["csv"] = csv_path;
  emit(report, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-Poisson mechanics via deformation of Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags (--seed) may follow the subcommand
  std::uint64_t seed = 12345;
  app.add_option("--seed", seed, "seed for randomized outputs (env LPL_SEED overrides)")
      ->capture_default_str();

  // catalog
  auto* catalog = app.add_subcommand("catalog", "emit a cataloged algebra as JSON");
  catalog->fallthrough();
  std::string catalog_type = "IX";
  std::optional<double> catalog_eta;
  std::string catalog_out;
  catalog->add_option("--type", catalog_type, "I..IX, A4_10, A4_8, A4_1, A4_3, A4_12, mother4")
      ->capture_default_str();
  catalog->add_option("--eta", catalog_eta, "Bianchi VI/VII parameter");
  catalog->add_option("--out", catalog_out, "output path (default stdout)");
  std::string catalog_tensor_out;
  catalog->add_option("--tensor-out", catalog_tensor_out,
                      "also write the structure tensor in the text format (classify reads it)");

  // classify
  auto* classify = app.add_subcommand("classify", "classify a structure-tensor file as class A/B/C");
  classify->fallthrough();
  std::string classify_file;
  std::string classify_out;
  classify->add_option("--file", classify_file, "structure tensor text file")->required();
  classify->add_option("--out", classify_out, "output path (default stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "integrate a system and report invariant drifts");
  simulate->fallthrough();
  SystemOptions sim_sys;
  add_system_flags(simulate, sim_sys);
  std::string sim_x0 = "0.01,0.01,1";
  double sim_dt = 1e-3, sim_t = 10.0, sim_guard = 1e-3;
  std::string sim_scheme = "rk4", sim_csv, sim_out;
  int sim_stride = 1;
  simulate->add_option("--x0", sim_x0, "initial state, comma separated")->capture_default_str();
  simulate->add_option("--dt", sim_dt, "time step")->capture_default_str();
  simulate->add_option("--T", sim_t, "final time")->capture_default_str();
  simulate->add_option("--scheme", sim_scheme, "rk4 | midpoint")->capture_default_str();
  simulate->add_option("--guard", sim_guard, "casimir validity-domain guard distance")->capture_default_str();
  simulate->add_option("--stride", sim_stride, "log every k-th step")->capture_default_str();
  simulate->add_option("--csv", sim_csv, "write the trajectory (t, xi, H, C) to this CSV file");
  simulate->add_option("--out", sim_out, "JSON summary path (default stdout)");

  // linearize
  auto* linearize = app.add_subcommand("linearize", "linearize at an equilibrium and report the spectrum");
  linearize->fallthrough();
  SystemOptions lin_sys;
  add_system_flags(linearize, lin_sys);
  std::string lin_at, lin_out;
  std::vector<double> lin_mu;
  linearize->add_option("--at", lin_at, "expansion point, comma separated")->required();
  linearize->add_option("--energy-casimir,--mu", lin_mu, "energy-Casimir multipliers (one per casimir)");
  linearize->add_option("--out", lin_out, "output path (default stdout)");

  // spectrum-table
  auto* table = app.add_subcommand("spectrum-table", "regenerate the catalog spectra as CSV");
  table->fallthrough();
  int table_dim = 3;
  std::string table_out;
  table->add_option("--dim", table_dim, "3 or 4")->capture_default_str();
  table->add_option("--out", table_out, "output path (default stdout)");

  // field
  auto* field = app.add_subcommand("field", "periodic-lattice field-bundle demos");
  field->fallthrough();
  field->require_subcommand(1);
  auto* local = field->add_subcommand("local-demo", "pointwise deformation: decay-rate field and closed form");
  local->fallthrough();
  int local_n = 16;
  double local_t = 1.0, local_dt = 1e-3;
  std::string local_csv;
  local->add_option("--n", local_n, "lattice points per axis")->capture_default_str();
  local->add_option("--t", local_t, "evolution time")->capture_default_str();
  local->add_option("--dt", local_dt, "generic-integration step")->capture_default_str();
  local->add_option("--csv", local_csv, "write the decay-rate field (x,y,z,rate) to this CSV file");

  auto* vortex = field->add_subcommand("vortex", "truncated vortex dynamics with energy/helicity logs");
  vortex->fallthrough();
  int vortex_k = 2, vortex_stride = 1;
  double vortex_dt = 1e-3, vortex_t = 1.0;
  std::string vortex_init = "two-beltrami", vortex_csv;
  vortex->add_option("--K", vortex_k, "Fourier truncation |k|_inf <= K")->capture_default_str();
  vortex->add_option("--dt", vortex_dt, "time step")->capture_default_str();
  vortex->add_option("--T", vortex_t, "final time")->capture_default_str();
  vortex->add_option("--init", vortex_init, "beltrami | two-beltrami | random-seeded")->capture_default_str();
  vortex->add_option("--stride", vortex_stride, "log every k-th step")->capture_default_str();
  vortex->add_option("--csv", vortex_csv, "write per-step t,E,C to this CSV file");

  CLI11_PARSE(app, argc, argv);
  seed = resolve_seed(seed);

  try {
    if (catalog->parsed()) return run_catalog(catalog_type, catalog_eta, catalog_out, catalog_tensor_out);
    if (classify->parsed()) return run_classify(classify_file, classify_out);
    if (simulate->parsed())
      return run_simulate(sim_sys, sim_x0, sim_dt, sim_t, sim_scheme, sim_guard, sim_stride, sim_csv, sim_out);
    if (linearize->parsed()) return run_linearize(lin_sys, lin_at, lin_mu, lin_out);
    if (table->parsed()) return run_spectrum_table(table_dim, seed, table_out);
    if (field->parsed()) {
      if (local->parsed()) return run_field_local(local_n, local_t, local_dt, local_csv);
      if (vortex->parsed())
        return run_field_vortex(vortex_k, vortex_dt, vortex_t, vortex_init, seed, vortex_stride, vortex_csv);
    }
  } catch (const std::exception& err) {
    std::cerr << json{{"error", err.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
