// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phicx/assembly.hpp"
#include "phicx/blackhole.hpp"
#include "phicx/catalog.hpp"
#include "phicx/error.hpp"
#include "phicx/io.hpp"
#include "phicx/measures.hpp"
#include "phicx/qthermo.hpp"
#include "phicx/report.hpp"
#include "phicx/units.hpp"

namespace phicx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNumericalFailure = 3;
inline constexpr const char* kConstantsEnvVar = "PHICX_CONSTANTS";

namespace detail {

struct MassArg {
  double value = 1.0;
  std::string unit = "kg";
};

inline Quantity to_mass(double v, const std::string& u, const Constants& k) {
  if (u == "kg") return kilograms(v);
  if (u == "solar") return v * k.solar_mass;
  if (u == "planck") return v * k.planck_mass;
  fail(Errc::ParseError, "--unit must be kg, solar or planck");
}

inline Quantity to_energy(double v, const std::string& u, const Constants& k) {
  if (u == "J") return joules(v);
  if (u == "eV") return v * k.electron_volt;
  fail(Errc::ParseError, "--energy-unit must be J or eV");
}

struct TemperatureArg {
  std::optional<double> kelvin_value;
  std::optional<double> thermal_energy;

  void attach(CLI::App* cmd) {
    auto* t = cmd->add_option("--temp", kelvin_value, "temperature in kelvin");
    auto* kt = cmd->add_option("--ktemp-joules", thermal_energy, "k_B T in joules");
    t->excludes(kt);
  }
  Quantity get(const Constants& k) const {
    require(kelvin_value || thermal_energy, Errc::ParseError, "one of --temp or --ktemp-joules is required");
    if (kelvin_value) return kelvin(*kelvin_value);
    return kelvin(*thermal_energy / k.kB());
  }
  void echo(Report& r) const {
    if (kelvin_value) r.input("temperature", *kelvin_value, "K");
    else if (thermal_energy) r.input("ktemp", *thermal_energy, "J");
  }
};

inline std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    require(!item.empty() && end == item.c_str() + item.size(), Errc::ParseError,
            "--sweep: '" + item + "' is not a number");
    out.push_back(v);
  }
  require(!out.empty(), Errc::ParseError, "--sweep needs at least one mass");
  return out;
}

inline std::string describe_pathway(const assembly::AssemblyPathway& p) {
  std::string s;
  for (const auto& step : p.steps) {
    if (!s.empty()) s += "; ";
    s += step.left + "+" + step.right + "->" + step.product;
  }
  return s.empty() ? "(atomic)" : s;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), Errc::ParseError, "cannot write '" + path + "'");
  f << text;
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"phicx: physical computational complexity toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string format_name = "human";
  std::string constants_path;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--constants", constants_path, "constants override file (key = number)");

  Constants k;
  Format fmt = Format::Human;
  std::function<void()> action;
  auto emit = [&](const Report& r) { render_report(out, r, fmt); };

  // constants
  auto* c_cmd = app.add_subcommand("constants", "print the constant set in use");
  c_cmd->callback([&] {
    action = [&] {
      Report r{"constants"};
      const double worst = constants_self_check(k);
      r.result("hbar", k.hbar.value(), "J s", "CODATA 2018");
      r.result("c", k.c.value(), "m/s", "CODATA 2018 (exact)");
      r.result("G", k.G.value(), "m^3 kg^-1 s^-2", "CODATA 2018");
      r.result("k_B", k.kB(), "J/K", "CODATA 2018 (exact)");
      r.result("planck_mass", k.planck_mass.value(), "kg", "m_P = sqrt(hbar c/G)");
      r.result("planck_length", k.planck_length.value(), "m", "l_P = sqrt(hbar G/c^3)");
      r.result("solar_mass", k.solar_mass.value(), "kg", "pinned");
      r.result("electron_volt", k.electron_volt.value(), "J", "CODATA 2018 (exact)");
      r.result("seconds_per_year", k.seconds_per_year.value(), "s", "Julian year");
      r.result("self_check_max_rel_error", worst, "", "m_P^2 G/(hbar c), l_P^2 c^3/(hbar G)");
      emit(r);
    };
  });

  // bh
  auto* bh = app.add_subcommand("bh", "black hole computer properties");
  detail::MassArg bh_mass;
  std::string sweep;
  bh->add_option("--mass", bh_mass.value, "mass");
  bh->add_option("--unit", bh_mass.unit, "mass unit")->check(CLI::IsMember({"kg", "solar", "planck"}));
  bh->add_option("--sweep", sweep, "comma-separated masses (in --unit) for a table");
  bh->require_subcommand(0, 1);
  bh->callback([&] {
    if (!bh->get_subcommands().empty()) return;
    action = [&] {
      if (!sweep.empty()) {
        Report r{"bh"};
        r.input("sweep", sweep);
        r.input("unit", bh_mass.unit);
        ReportTable t{{"mass_kg", "radius_m", "temperature_K", "entropy_bits", "lifetime_s",
                       "ops_per_second", "total_ops", "max_error_rate"},
                      {}};
        for (double m : detail::parse_list(sweep)) {
          const auto b = blackhole::characterize(detail::to_mass(m, bh_mass.unit, k), k);
          t.rows.push_back({b.mass.value(), b.radius.value(), b.temperature.value(), b.entropy_bits,
                            b.lifetime.value(), b.ops_per_second.value(), b.total_ops,
                            b.max_error_rate});
        }
        r.table = std::move(t);
        emit(r);
        return;
      }
      const Quantity M = detail::to_mass(bh_mass.value, bh_mass.unit, k);
      const auto b = blackhole::characterize(M, k);
      Report r{"bh"};
      r.input("mass", bh_mass.value, bh_mass.unit);
      r.result("mass", b.mass.value(), "kg", "M");
      r.result("radius", b.radius.value(), "m", "R = 2GM/c^2");
      r.result("temperature", b.temperature.value(), "K", "T = m_P^2 c^2/(8 pi M k_B)");
      r.result("entropy_nats", b.entropy_nats, "nat", "S = 4 pi M^2/m_P^2");
      r.result("entropy_bits", b.entropy_bits, "bit", "S/ln 2");
      r.result("lifetime", b.lifetime.value(), "s", "t_M = 5120 pi G^2 M^3/(hbar c^4)");
      r.result("lifetime_years", b.lifetime_years, "yr", "t_M/year");
      r.result("ops_per_second", b.ops_per_second.value(), "1/s", "2Mc^2/(pi hbar)");
      r.result("total_ops", b.total_ops, "", "2Mc^2 t_M/(pi hbar)");
      r.result("bit_flip_time", b.bit_flip_time.value(), "s", "pi^2 R/c");
      r.result("free_energy", b.free_energy.value(), "J", "F = Mc^2 - TS");
      r.result("page_time_paper", b.page_time_paper.value(), "s", "t_M/2");
      r.result("page_time_entropy", b.page_time_entropy.value(), "s", "(1 - 2^-3/2) t_M");
      r.result("max_error_rate", b.max_error_rate, "", "h(eps) total_ops = S_bits");
      if (M.value() <= k.planck_mass.value())
        r.warnings.push_back("mass at or below the Planck mass: error-rate bound is vacuous (1/2)");
      emit(r);
    };
  });

  auto* timeline = bh->add_subcommand("timeline", "evaporation timeline as CSV");
  detail::MassArg tl_mass;
  std::size_t tl_samples = 101;
  std::string tl_out;
  timeline->add_option("--mass", tl_mass.value, "initial mass");
  timeline->add_option("--unit", tl_mass.unit, "mass unit")->check(CLI::IsMember({"kg", "solar", "planck"}));
  timeline->add_option("--samples", tl_samples, "number of samples (>= 2)");
  timeline->add_option("--out", tl_out, "write the CSV here instead of standard output");
  timeline->callback([&] {
    action = [&] {
      const auto samples = blackhole::page_curve(detail::to_mass(tl_mass.value, tl_mass.unit, k), tl_samples, k);
      std::ostringstream csv;
      blackhole::write_timeline_csv(csv, samples);
      if (!tl_out.empty()) detail::write_text(tl_out, csv.str());
      if (fmt == Format::Json || !tl_out.empty()) {
        Report r{"bh timeline"};
        r.input("mass", tl_mass.value, tl_mass.unit);
        r.input("samples", static_cast<double>(tl_samples), "");
        if (!tl_out.empty()) r.input("out", tl_out);
        ReportTable t{{"t_seconds", "mass_kg", "hole_entropy_bits", "radiation_entropy_bits"}, {}};
        if (tl_out.empty())
          for (const auto& s : samples)
            t.rows.push_back({s.t_seconds, s.mass_kg, s.hole_entropy_bits, s.radiation_entropy_bits});
        else
          r.result("rows_written", static_cast<double>(samples.size()), "", "uniform grid on [0, t_M]");
        if (!t.rows.empty()) r.table = std::move(t);
        emit(r);
      } else {
        out << csv.str();
      }
    };
  });

  auto* page = bh->add_subcommand("page-curve", "Page curve summary");
  detail::MassArg pc_mass;
  std::size_t pc_samples = 10001;
  page->add_option("--mass", pc_mass.value, "initial mass");
  page->add_option("--unit", pc_mass.unit, "mass unit")->check(CLI::IsMember({"kg", "solar", "planck"}));
  page->add_option("--samples", pc_samples, "number of samples (>= 2)");
  page->callback([&] {
    action = [&] {
      const Quantity M = detail::to_mass(pc_mass.value, pc_mass.unit, k);
      const auto samples = blackhole::page_curve(M, pc_samples, k);
      const auto peak = std::max_element(samples.begin(), samples.end(), [](const auto& a, const auto& b) {
        return a.radiation_entropy_bits < b.radiation_entropy_bits;
      });
      const double t_m = blackhole::lifetime(M, k).value();
      Report r{"bh page-curve"};
      r.input("mass", pc_mass.value, pc_mass.unit);
      r.input("samples", static_cast<double>(pc_samples), "");
      r.result("lifetime", t_m, "s", "t_M = 5120 pi G^2 M^3/(hbar c^4)");
      r.result("page_time_paper", 0.5 * t_m, "s", "t_M/2");
      r.result("page_time_entropy", blackhole::kPageCrossoverFraction * t_m, "s", "(1 - 2^-3/2) t_M");
      r.result("peak_time", peak->t_seconds, "s", "argmax radiation entropy on grid");
      r.result("peak_fraction", peak->t_seconds / t_m, "", "peak_time/t_M");
      r.result("peak_radiation_entropy", peak->radiation_entropy_bits, "bit", "min(S(M0) - S(M), S(M))");
      r.result("grid_step_fraction", 1.0 / static_cast<double>(pc_samples - 1), "", "1/(samples - 1)");
      emit(r);
    };
  });

  // measure
  auto* measure = app.add_subcommand("measure", "physical complexity measures");
  measure->require_subcommand(1);

  double m_energy = 0.0, m_time = 0.0;
  std::string m_energy_unit = "J";
  auto* phi_time = measure->add_subcommand("phi-time", "2Et/(pi hbar)");
  phi_time->add_option("--energy", m_energy, "energy above the ground state")->required();
  phi_time->add_option("--energy-unit", m_energy_unit)->check(CLI::IsMember({"J", "eV"}));
  phi_time->add_option("--time", m_time, "duration in seconds")->required();
  phi_time->callback([&] {
    action = [&] {
      Report r{"measure phi-time"};
      r.input("energy", m_energy, m_energy_unit).input("time", m_time, "s");
      r.result("phi_time", measures::phi_time(detail::to_energy(m_energy, m_energy_unit, k), seconds(m_time), k),
               "ops", "2Et/(pi hbar)");
      emit(r);
    };
  });

  auto* ml_time = measure->add_subcommand("ml-time", "pi hbar/(2E)");
  ml_time->add_option("--energy", m_energy, "energy above the ground state")->required();
  ml_time->add_option("--energy-unit", m_energy_unit)->check(CLI::IsMember({"J", "eV"}));
  ml_time->callback([&] {
    action = [&] {
      Report r{"measure ml-time"};
      r.input("energy", m_energy, m_energy_unit);
      r.result("ml_min_time", measures::ml_min_time(detail::to_energy(m_energy, m_energy_unit, k), k).value(), "s",
               "pi hbar/(2E)");
      emit(r);
    };
  });

  double s_max = 0.0, s_val = 0.0;
  auto* phi_space = measure->add_subcommand("phi-space", "S_max - S");
  phi_space->add_option("--s-max", s_max, "maximum entropy in bits")->required();
  phi_space->add_option("--s", s_val, "entropy in bits")->required();
  phi_space->callback([&] {
    action = [&] {
      Report r{"measure phi-space"};
      r.input("s_max", s_max, "bit").input("s", s_val, "bit");
      r.result("phi_space", measures::phi_space(bits(s_max), bits(s_val)).in(unit::bit), "bit", "S_max - S");
      emit(r);
    };
  });

  double fp_delta = 0.0;
  std::optional<double> fp_time, fp_s_eq, fp_s;
  detail::TemperatureArg fp_temp;
  auto* free_phi = measure->add_subcommand("free-phi", "free energy consumed");
  free_phi->add_option("--delta-f", fp_delta, "free energy consumed in joules");
  free_phi->add_option("--time", fp_time, "duration for the op-count equivalent");
  free_phi->add_option("--s-eq", fp_s_eq, "equilibrium entropy in bits (thermodynamic-depth form)");
  free_phi->add_option("--s", fp_s, "entropy in bits (thermodynamic-depth form)");
  fp_temp.attach(free_phi);
  free_phi->callback([&] {
    action = [&] {
      Report r{"measure free-phi"};
      if (fp_s_eq || fp_s) {
        require(fp_s_eq && fp_s, Errc::ParseError, "--s-eq and --s go together");
        const Quantity T = fp_temp.get(k);
        fp_temp.echo(r);
        r.input("s_eq", *fp_s_eq, "bit").input("s", *fp_s, "bit");
        const Quantity f = measures::free_phi_thermo(T, bits(*fp_s_eq), bits(*fp_s), k);
        r.result("free_phi", f.value(), "J", "k_B T (S_eq - S)");
        if (fp_time)
          r.result("op_equivalent", measures::free_phi_op_equivalent(f, seconds(*fp_time), k), "ops",
                   "2 F t/(pi hbar)");
      } else {
        r.input("delta_f", fp_delta, "J");
        const Quantity f = measures::free_phi(joules(fp_delta));
        r.result("free_phi", f.value(), "J", "free energy consumed");
        if (fp_time) {
          r.input("time", *fp_time, "s");
          r.result("op_equivalent", measures::free_phi_op_equivalent(f, seconds(*fp_time), k), "ops",
                   "2 F t/(pi hbar)");
        }
      }
      emit(r);
    };
  });

  double l_bits = 1.0;
  detail::TemperatureArg l_temp;
  auto* landauer = measure->add_subcommand("landauer", "n k_B T ln 2");
  landauer->add_option("--bits", l_bits, "number of bits erased");
  l_temp.attach(landauer);
  landauer->callback([&] {
    action = [&] {
      Report r{"measure landauer"};
      l_temp.echo(r);
      r.input("bits", l_bits, "bit");
      r.result("landauer_cost", measures::landauer_cost(l_temp.get(k), l_bits, k).value(), "J", "n k_B T ln 2");
      emit(r);
    };
  });

  double be_eps = 0.5;
  auto* bin_ent = measure->add_subcommand("binary-entropy", "h(eps)");
  bin_ent->add_option("--eps", be_eps, "error probability")->required();
  bin_ent->callback([&] {
    action = [&] {
      Report r{"measure binary-entropy"};
      r.input("eps", be_eps, "");
      r.result("binary_entropy", measures::binary_entropy_bits(be_eps), "bit",
               "-eps log eps - (1-eps) log(1-eps)");
      emit(r);
    };
  });

  double ec_ops = 0.0, ec_eps = 0.0;
  std::string ec_mode = "exact";
  auto* ec = measure->add_subcommand("ec-space", "error-correction negentropy");
  ec->add_option("--ops", ec_ops, "number of operations")->required();
  ec->add_option("--eps", ec_eps, "error probability per operation")->required();
  ec->add_option("--mode", ec_mode)->check(CLI::IsMember({"exact", "asymptotic"}));
  ec->callback([&] {
    action = [&] {
      Report r{"measure ec-space"};
      r.input("ops", ec_ops, "").input("eps", ec_eps, "").input("mode", ec_mode);
      const auto mode = ec_mode == "exact" ? measures::EcMode::Exact : measures::EcMode::Asymptotic;
      r.result("ec_space", measures::error_correction_space(ec_ops, ec_eps, mode).in(unit::bit), "bit",
               ec_mode == "exact" ? "t h(eps)" : "t eps log2(1/eps)");
      emit(r);
    };
  });

  // qt
  auto* qt = app.add_subcommand("qt", "finite-dimensional quantum thermodynamics");
  qt->require_subcommand(1);
  std::string ham_path, state_path, out_path, entropy_unit = "bits";
  detail::TemperatureArg qt_temp;

  auto* q_entropy = qt->add_subcommand("entropy", "von Neumann entropy");
  q_entropy->add_option("--state", state_path, "density matrix file")->required();
  q_entropy->add_option("--unit", entropy_unit)->check(CLI::IsMember({"bits", "nats"}));
  q_entropy->callback([&] {
    action = [&] {
      const auto rho = io::load_density_matrix(state_path);
      Report r{"qt entropy"};
      r.input("state", state_path);
      const Quantity s = qthermo::von_neumann_entropy(rho);
      const bool in_bits = entropy_unit == "bits";
      r.result("entropy", in_bits ? s.in(unit::bit) : s.in(unit::nat), in_bits ? "bit" : "nat",
               "-tr rho log rho");
      emit(r);
    };
  });

  auto* q_gibbs = qt->add_subcommand("gibbs", "thermal state of a Hamiltonian");
  q_gibbs->add_option("--ham", ham_path, "Hamiltonian file")->required();
  q_gibbs->add_option("--out", out_path, "write the thermal state matrix here");
  qt_temp.attach(q_gibbs);
  auto gibbs_report = [&](Report& r, const qthermo::HermitianOperator& H, const qthermo::GibbsState& g) {
    r.result("temperature", g.temperature.value(), "K", "T = 1/(k_B beta)");
    r.result("beta", g.beta.value(), "1/J", "beta = 1/(k_B T)");
    r.result("partition_function", g.partition_function, "", "Z = tr exp(-H/(k_B T))");
    r.result("log_partition_function", g.log_partition_function, "", "ln Z");
    r.result("f_eq", g.f_eq.value(), "J", "F_eq = -k_B T ln Z");
    r.result("mean_energy", qthermo::mean_energy(g.rho, H), "J", "tr rho_th H");
    r.result("entropy", qthermo::von_neumann_entropy(g.rho).in(unit::bit), "bit", "-tr rho log rho");
    if (!out_path.empty()) detail::write_text(out_path, io::write_matrix(g.rho.matrix()));
  };
  q_gibbs->callback([&] {
    action = [&] {
      const auto H = io::load_hamiltonian(ham_path);
      Report r{"qt gibbs"};
      r.input("ham", ham_path);
      qt_temp.echo(r);
      gibbs_report(r, H, qthermo::gibbs_state(H, qt_temp.get(k), k));
      emit(r);
    };
  });

  double target_energy = 0.0;
  auto* q_solve = qt->add_subcommand("solve-temp", "temperature with a given mean energy");
  q_solve->add_option("--ham", ham_path, "Hamiltonian file")->required();
  q_solve->add_option("--energy", target_energy, "target mean energy in joules")->required();
  q_solve->add_option("--out", out_path, "write the thermal state matrix here");
  q_solve->callback([&] {
    action = [&] {
      const auto H = io::load_hamiltonian(ham_path);
      Report r{"qt solve-temp"};
      r.input("ham", ham_path).input("energy", target_energy, "J");
      const auto g = qthermo::solve_inverse_temperature(H, joules(target_energy), k);
      gibbs_report(r, H, g);
      r.result("ktemp", k.kB() * g.temperature.value(), "J", "k_B T");
      emit(r);
    };
  });

  auto* q_work = qt->add_subcommand("work", "extractable work");
  q_work->add_option("--ham", ham_path, "Hamiltonian file")->required();
  q_work->add_option("--state", state_path, "density matrix file")->required();
  qt_temp.attach(q_work);
  q_work->callback([&] {
    action = [&] {
      const auto H = io::load_hamiltonian(ham_path);
      const auto rho = io::load_density_matrix(state_path);
      const Quantity T = qt_temp.get(k);
      Report r{"qt work"};
      r.input("ham", ham_path).input("state", state_path);
      qt_temp.echo(r);
      const auto g = qthermo::gibbs_state(H, T, k);
      r.result("extractable_work", qthermo::extractable_work(rho, H, T, k).value(), "J",
               "k_B T D(rho || rho_th)");
      r.result("free_energy", qthermo::nonequilibrium_free_energy(rho, H, T, k).value(), "J",
               "F = tr rho H - k_B T S");
      r.result("f_eq", g.f_eq.value(), "J", "F_eq = -k_B T ln Z");
      emit(r);
    };
  });

  double evolve_time = 0.0;
  std::string psi_path;
  std::optional<std::size_t> basis_index;
  auto* q_evolve = qt->add_subcommand("evolve", "unitary evolution of a pure state");
  q_evolve->add_option("--ham", ham_path, "Hamiltonian file")->required();
  q_evolve->add_option("--time", evolve_time, "evolution time in seconds")->required();
  auto* psi_opt = q_evolve->add_option("--psi", psi_path, "state vector file");
  auto* basis_opt = q_evolve->add_option("--basis", basis_index, "start in computational basis state k");
  psi_opt->excludes(basis_opt);
  q_evolve->add_option("--out", out_path, "write the evolved state vector here");
  q_evolve->callback([&] {
    action = [&] {
      const auto H = io::load_hamiltonian(ham_path);
      Report r{"qt evolve"};
      r.input("ham", ham_path).input("time", evolve_time, "s");
      std::optional<qthermo::StateVector> psi;
      if (!psi_path.empty()) {
        r.input("psi", psi_path);
        psi = io::parse_state_vector(io::read_file(psi_path), psi_path);
      } else {
        const std::size_t b = basis_index.value_or(0);
        r.input("basis", static_cast<double>(b), "");
        psi = qthermo::StateVector::basis(H.dim(), b);
      }
      const auto outv = qthermo::evolve(H, seconds(evolve_time), *psi, k);
      for (std::size_t i = 0; i < outv.dim(); ++i)
        r.result("probability_" + std::to_string(i), outv.probability(i), "", "|<i|exp(-iHt/hbar)|psi>|^2");
      r.result("norm", outv.norm(), "", "||psi||");
      if (!out_path.empty())
        detail::write_text(out_path, io::render_canonical(io::state_vector_to_json(outv)) + "\n");
      emit(r);
    };
  });

  auto* q_spread = qt->add_subcommand("spread", "energy spread");
  q_spread->add_option("--ham", ham_path, "Hamiltonian file")->required();
  q_spread->add_option("--state", state_path, "density matrix file")->required();
  q_spread->callback([&] {
    action = [&] {
      const auto H = io::load_hamiltonian(ham_path);
      const auto rho = io::load_density_matrix(state_path);
      Report r{"qt spread"};
      r.input("ham", ham_path).input("state", state_path);
      r.result("mean_energy", qthermo::mean_energy(rho, H), "J", "tr rho H");
      r.result("energy_spread", qthermo::energy_spread(rho, H).value(), "J",
               "sqrt(tr rho H^2 - (tr rho H)^2)");
      emit(r);
    };
  });

  // assembly
  auto* asm_cmd = app.add_subcommand("assembly", "assembly index and pathway free energy");
  std::string a_target, a_basis, a_pathway;
  asm_cmd->add_option("--target", a_target, "target string");
  asm_cmd->add_option("--basis", a_basis, "atomic symbols (default: the target's symbols)");
  asm_cmd->add_option("--pathway", a_pathway, "pathway file to validate and price");
  asm_cmd->add_option("--out", out_path, "write the witness pathway here");
  asm_cmd->callback([&] {
    action = [&] {
      Report r{"assembly"};
      require(!a_target.empty() || !a_pathway.empty(), Errc::ParseError, "--target or --pathway is required");
      if (!a_pathway.empty()) {
        r.input("pathway", a_pathway);
        const auto p = io::parse_pathway(io::read_file(a_pathway), a_pathway);
        r.result("steps", static_cast<double>(p.steps.size()), "", "join count");
        r.result("pathway", detail::describe_pathway(p), "left+right->product");
        r.result("free_phi", assembly::pathway_free_phi(p).value(), "J", "sum of step free energies");
      }
      if (!a_target.empty()) {
        std::string basis = a_basis;
        if (basis.empty()) {
          std::string sorted = a_target;
          std::sort(sorted.begin(), sorted.end());
          sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
          basis = sorted;
        }
        r.input("target", a_target).input("basis", basis);
        const auto res = assembly::assembly_index(a_target, basis);
        r.result("assembly_index", static_cast<double>(res.index), "", "minimal joins with reuse");
        r.result("lower_bound", static_cast<double>(assembly::detail::ceil_log2(a_target.size())), "",
                 "ceil(log2 |target|)");
        r.result("witness", detail::describe_pathway(res.witness), "lexicographically smallest optimal");
        if (!out_path.empty())
          detail::write_text(out_path, io::render_canonical(io::pathway_to_json(res.witness)) + "\n");
      }
      emit(r);
    };
  });

  // catalog
  auto* cat = app.add_subcommand("catalog", "reference systems");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list built-in systems");
  cat_list->callback([&] {
    action = [&] {
      Report r{"catalog list"};
      for (const auto& s : catalog::builtin_systems(k)) {
        r.result(s.name + ".energy_per_op", s.energy_per_op.value(), "J", s.provenance);
        if (s.power) r.result(s.name + ".power", s.power->value(), "W", s.provenance);
        if (s.ops_per_second) r.result(s.name + ".ops_per_second", s.ops_per_second->value(), "1/s", s.provenance);
        if (s.capacitance) r.result(s.name + ".capacitance", s.capacitance->value(), "F", s.provenance);
        r.result(s.name + ".notes", s.notes, s.provenance);
      }
      emit(r);
    };
  });
  detail::TemperatureArg cmp_temp;
  auto* cat_cmp = cat->add_subcommand("compare", "inefficiency factors and op rates against claims");
  cmp_temp.attach(cat_cmp);
  cat_cmp->callback([&] {
    action = [&] {
      if (!cmp_temp.kelvin_value && !cmp_temp.thermal_energy) cmp_temp.kelvin_value = catalog::kRoomTemperature;
      const Quantity T = cmp_temp.get(k);
      Report r{"catalog compare"};
      cmp_temp.echo(r);
      for (const auto& s : catalog::builtin_systems(k)) {
        const double f = catalog::inefficiency_factor(s, T, k);
        r.result(s.name + ".inefficiency_factor", f, "", "E_op/(k_B T ln 2)");
        const auto rate = catalog::implied_op_rate(s);
        if (rate) r.result(s.name + ".ops_per_second", rate->value(), "1/s", "P/E_op or stated");
        for (const auto& c : s.claims) {
          double v = 0.0;
          if (c.quantity == "ops_per_second" && rate) v = rate->value();
          else if (c.quantity == "inefficiency_factor_300K")
            v = catalog::inefficiency_factor(s, kelvin(catalog::kRoomTemperature), k);
          else continue;
          r.result(s.name + ".claim." + c.quantity, c.contains(v) ? "within" : "outside",
                   "[" + io::format_number(c.lo) + ", " + io::format_number(c.hi) + "]");
        }
      }
      emit(r);
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical_failure(e.code()) ? kExitNumericalFailure : kExitInvalidInput;
  }

  try {
    fmt = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Human;
    if (constants_path.empty())
      if (const char* env = std::getenv(kConstantsEnvVar); env && *env) constants_path = env;
    if (!constants_path.empty()) k = load_constants_override(constants_path);
    if (!action) {
      err << app.help();
      return kExitInvalidInput;
    }
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical_failure(e.code()) ? kExitNumericalFailure : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace phicx::cli
