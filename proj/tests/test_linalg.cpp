// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "oracles.hpp"
#include "phicx/linalg.hpp"

namespace phicx::linalg {
namespace {

Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd e(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) e(i, j) = m(i, j);
  return e;
}

class JacobiVsEigen : public ::testing::TestWithParam<std::size_t> {};

TEST_P(JacobiVsEigen, EigenvaluesAgreeAndReconstruct) {
  const std::size_t d = GetParam();
  std::mt19937_64 rng(1000 + d);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = oracle::random_hermitian(rng, d);
    const Spectrum s = eigh(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(a));
    const double scale = a.frobenius();
    for (std::size_t k = 0; k < d; ++k) EXPECT_NEAR(s.values[k], ref.eigenvalues()(k), 1e-11 * scale);

    const Matrix back = s.apply([](double x) { return x; });
    EXPECT_LE((back - a).max_abs(), 1e-11 * scale);
    const Matrix gram = s.vectors.adjoint() * s.vectors;
    EXPECT_LE((gram - Matrix::identity(d)).max_abs(), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, JacobiVsEigen, ::testing::Values(1, 2, 3, 4, 8, 16, 33, 64));

TEST(Jacobi, DiagonalAndDegenerateInputs) {
  const std::vector<double> d{3.0, -1.0, 3.0, 0.0};
  const Spectrum s = eigh(Matrix::diagonal(d));
  EXPECT_EQ(s.values, (std::vector<double>{-1.0, 0.0, 3.0, 3.0}));
  const Spectrum z = eigh(Matrix(3));
  EXPECT_EQ(z.values, (std::vector<double>{0.0, 0.0, 0.0}));
}

TEST(Jacobi, PauliX) {
  Matrix x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const Spectrum s = eigh(x);
  EXPECT_NEAR(s.values[0], -1.0, 1e-15);
  EXPECT_NEAR(s.values[1], 1.0, 1e-15);
}

TEST(Matrix, TraceProductMatchesProductTrace) {
  std::mt19937_64 rng(3);
  const Matrix a = oracle::random_hermitian(rng, 5);
  const Matrix b = oracle::random_hermitian(rng, 5);
  EXPECT_NEAR(std::abs(trace_product(a, b) - (a * b).trace()), 0.0, 1e-12);
}

}  // namespace
}  // namespace phicx::linalg
