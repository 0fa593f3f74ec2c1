// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "phicx/io.hpp"

namespace phicx::io {
namespace {

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected an Error";
  return {};
}

TEST(CanonicalJson, SortedKeysAndStableNumbers) {
  const json j = json::parse(R"({"b": 0.1, "a": [1, 2.5e-300], "c": {"z": true, "y": null}})");
  const std::string text = render_canonical(j);
  EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos);
  EXPECT_EQ(render_canonical(json::parse(text)), text);
}

TEST(CanonicalJson, RandomDoublesRoundTripExactly) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-300, 300);
  for (int i = 0; i < 1000; ++i) {
    const double v = (i % 2 ? -1 : 1) * std::pow(10.0, u(rng));
    const json back = json::parse(render_canonical(json{{"v", v}}));
    EXPECT_EQ(back["v"].get<double>(), v);
  }
}

TEST(MatrixFile, RoundTrip) {
  std::mt19937_64 rng(5);
  const auto m = oracle::random_hermitian(rng, 4);
  const std::string text = write_matrix(m, "J");
  const auto back = parse_matrix(text);
  EXPECT_EQ(back.units, "J");
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(back.matrix(r, c), m(r, c));
  EXPECT_EQ(write_matrix(back.matrix, back.units), text);
}

TEST(MatrixFile, PositionedErrors) {
  EXPECT_NE(error_text([] { parse_matrix("{\"dim\": 2,\n \"entries\": [", "h.json"); }).find("h.json:"),
            std::string::npos);
  const std::string bad_pair = R"({"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[1]]]})";
  EXPECT_NE(error_text([&] { parse_matrix(bad_pair, "h.json"); }).find("/entries/1/1"), std::string::npos);
  EXPECT_NE(error_text([] { parse_matrix(R"({"dim": 1, "entries": [[[1,0]]], "extra": 1})"); }).find("/extra"),
            std::string::npos);
  EXPECT_THROW(parse_matrix(R"({"dim": 2, "entries": [[[1,0],[0,0]]]})"), Error);
  EXPECT_THROW(parse_matrix(R"({"dim": 0, "entries": []})"), Error);
  EXPECT_THROW(parse_matrix(R"({"dim": 1, "entries": [[[1,0]]], "units": "eV"})"), Error);
}

TEST(MatrixFile, SampleData) {
  const auto h = load_hamiltonian(std::string(PHICX_SAMPLE_DATA) + "/twolevel.mat");
  EXPECT_EQ(h.dim(), 2u);
  const auto rho = load_density_matrix(std::string(PHICX_SAMPLE_DATA) + "/ground.mat");
  EXPECT_NEAR(rho.matrix()(0, 0).real(), 1.0, 1e-15);
  EXPECT_THROW(load_density_matrix(std::string(PHICX_SAMPLE_DATA) + "/twolevel.mat"), Error);
  EXPECT_THROW(load_hamiltonian(std::string(PHICX_SAMPLE_DATA) + "/ground.mat"), Error);
  EXPECT_THROW(read_file("/nonexistent/file.mat"), Error);
}

TEST(StateVectorFile, RoundTrip) {
  const std::string text = R"({"amplitudes": [[0.6, 0], [0, 0.8]], "dim": 2})";
  const auto psi = parse_state_vector(text);
  EXPECT_NEAR(psi.probability(1), 0.64, 1e-15);
  EXPECT_EQ(parse_state_vector(render_canonical(state_vector_to_json(psi))).amplitudes(), psi.amplitudes());
  EXPECT_THROW(parse_state_vector(R"({"amplitudes": [[1, 0], [1, 0]], "dim": 2})"), Error);
}

TEST(PathwayFile, ParseAndPrice) {
  const auto p = parse_pathway(read_file(std::string(PHICX_SAMPLE_DATA) + "/pathway.json"));
  EXPECT_EQ(p.target, "ababa");
  EXPECT_EQ(assembly::pathway_free_phi(p).value(), 10.0);
  const auto again = parse_pathway(render_canonical(pathway_to_json(p)));
  EXPECT_EQ(again.steps.size(), p.steps.size());
  EXPECT_EQ(again.target, p.target);
  EXPECT_NE(error_text([] { parse_pathway(R"({"basis": "ab", "steps": [["a"]]})"); }).find("/steps/0"),
            std::string::npos);
}

}  // namespace
}  // namespace phicx::io
