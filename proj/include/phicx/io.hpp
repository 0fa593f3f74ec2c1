// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "phicx/assembly.hpp"
#include "phicx/error.hpp"
#include "phicx/linalg.hpp"
#include "phicx/qthermo.hpp"

namespace phicx::io {

using json = nlohmann::json;

/// %.17g: enough digits to round-trip any double.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {
inline void render(const json& j, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        render(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += (flat && indent >= 0) ? ", " : ",";
        if (!flat) newline(depth + 1);
        render(j[i], out, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}
}  // namespace detail

/// Canonical JSON text: sorted keys and 17-significant-digit floats, so that
/// parse -> render is byte-stable.
inline std::string render_canonical(const json& j, int indent = 2) {
  std::string out;
  detail::render(j, out, indent, 0);
  return out;
}

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(Errc::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                               ": malformed JSON");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {
inline linalg::cplx parse_pair(const json& v, const std::string& where) {
  require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(), Errc::ParseError,
          where + ": expected a [re, im] number pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

inline std::size_t parse_dim(const json& j, const std::string& source) {
  require(j.is_object(), Errc::ParseError, source + ": top level must be an object");
  require(j.contains("dim") && j["dim"].is_number_integer() && j["dim"].get<long long>() >= 1,
          Errc::ParseError, source + ": /dim must be a positive integer");
  return j["dim"].get<std::size_t>();
}
}  // namespace detail

/// A parsed matrix file. `units` is "J" for Hamiltonians and empty for states.
struct MatrixFile {
  linalg::Matrix matrix;
  std::string units;
};

/// {"dim": d, "entries": [[[re, im], ...], ...], "units": "J"?}; entries are
/// d rows of d pairs, row-major.
inline MatrixFile parse_matrix(const std::string& text, const std::string& source = "<matrix>") {
  const json j = parse_json_text(text, source);
  const std::size_t d = detail::parse_dim(j, source);
  require(j.contains("entries") && j["entries"].is_array(), Errc::ParseError,
          source + ": /entries must be an array");
  const json& rows = j["entries"];
  require(rows.size() == d, Errc::ParseError,
          source + ": /entries has " + std::to_string(rows.size()) + " rows, expected " +
              std::to_string(d));
  linalg::Matrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    const std::string rw = source + ": /entries/" + std::to_string(r);
    require(rows[r].is_array() && rows[r].size() == d, Errc::ParseError,
            rw + ": expected a row of " + std::to_string(d) + " pairs");
    for (std::size_t c = 0; c < d; ++c) m(r, c) = detail::parse_pair(rows[r][c], rw + "/" + std::to_string(c));
  }
  MatrixFile out{std::move(m), {}};
  if (j.contains("units")) {
    require(j["units"].is_string(), Errc::ParseError, source + ": /units must be a string");
    out.units = j["units"].get<std::string>();
    require(out.units == "J", Errc::ParseError, source + ": /units must be \"J\"");
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    require(it.key() == "dim" || it.key() == "entries" || it.key() == "units", Errc::ParseError,
            source + ": unknown field /" + it.key());
  return out;
}

inline json matrix_to_json(const linalg::Matrix& m, const std::string& units = {}) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  json j = {{"dim", m.dim()}, {"entries", std::move(rows)}};
  if (!units.empty()) j["units"] = units;
  return j;
}

inline std::string write_matrix(const linalg::Matrix& m, const std::string& units = {}) {
  return render_canonical(matrix_to_json(m, units)) + "\n";
}

inline qthermo::HermitianOperator load_hamiltonian(const std::string& path) {
  auto f = parse_matrix(read_file(path), path);
  require(f.units == "J", Errc::ParseError, path + ": Hamiltonian files need \"units\": \"J\"");
  return qthermo::HermitianOperator(f.matrix);
}

inline qthermo::DensityMatrix load_density_matrix(const std::string& path) {
  auto f = parse_matrix(read_file(path), path);
  require(f.units.empty(), Errc::ParseError, path + ": state files carry no units");
  return qthermo::DensityMatrix(f.matrix);
}

/// {"dim": d, "amplitudes": [[re, im], ...]}
inline qthermo::StateVector parse_state_vector(const std::string& text,
                                               const std::string& source = "<vector>") {
  const json j = parse_json_text(text, source);
  const std::size_t d = detail::parse_dim(j, source);
  require(j.contains("amplitudes") && j["amplitudes"].is_array() && j["amplitudes"].size() == d,
          Errc::ParseError, source + ": /amplitudes must be an array of " + std::to_string(d) + " pairs");
  std::vector<linalg::cplx> a(d);
  for (std::size_t i = 0; i < d; ++i)
    a[i] = detail::parse_pair(j["amplitudes"][i], source + ": /amplitudes/" + std::to_string(i));
  return qthermo::StateVector(std::move(a));
}

inline json state_vector_to_json(const qthermo::StateVector& psi) {
  json amps = json::array();
  for (const auto& a : psi.amplitudes()) amps.push_back(json::array({a.real(), a.imag()}));
  return {{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

/// {"basis": "ab", "steps": [["a", "b"], ...], "free_energy_joules": [..]?, "target": ".."?}
inline assembly::AssemblyPathway parse_pathway(const std::string& text,
                                               const std::string& source = "<pathway>") {
  const json j = parse_json_text(text, source);
  require(j.is_object(), Errc::ParseError, source + ": top level must be an object");
  require(j.contains("basis") && j["basis"].is_string(), Errc::ParseError,
          source + ": /basis must be a string of symbols");
  require(j.contains("steps") && j["steps"].is_array(), Errc::ParseError,
          source + ": /steps must be an array");
  assembly::AssemblyPathway p;
  p.basis = j["basis"].get<std::string>();
  const json& steps = j["steps"];
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const json& s = steps[i];
    require(s.is_array() && s.size() == 2 && s[0].is_string() && s[1].is_string(), Errc::ParseError,
            source + ": /steps/" + std::to_string(i) + ": expected [left, right] strings");
    const auto l = s[0].get<std::string>();
    const auto r = s[1].get<std::string>();
    p.steps.push_back({l, r, l + r});
  }
  if (j.contains("free_energy_joules")) {
    const json& f = j["free_energy_joules"];
    require(f.is_array(), Errc::ParseError, source + ": /free_energy_joules must be an array");
    std::vector<Quantity> energies;
    for (std::size_t i = 0; i < f.size(); ++i) {
      require(f[i].is_number(), Errc::ParseError,
              source + ": /free_energy_joules/" + std::to_string(i) + ": expected a number");
      energies.push_back(joules(f[i].get<double>()));
    }
    p.step_free_energy = std::move(energies);
  }
  if (j.contains("target")) {
    require(j["target"].is_string(), Errc::ParseError, source + ": /target must be a string");
    p.target = j["target"].get<std::string>();
  } else if (!p.steps.empty()) {
    p.target = p.steps.back().product;
  }
  return p;
}

inline json pathway_to_json(const assembly::AssemblyPathway& p) {
  json steps = json::array();
  for (const auto& s : p.steps) steps.push_back(json::array({s.left, s.right}));
  json j = {{"basis", p.basis}, {"steps", std::move(steps)}, {"target", p.target}};
  if (p.step_free_energy) {
    json f = json::array();
    for (const auto& q : *p.step_free_energy) f.push_back(q.value());
    j["free_energy_joules"] = std::move(f);
  }
  return j;
}

}  // namespace phicx::io
