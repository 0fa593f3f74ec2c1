// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Work extractable from a qubit prepared in its ground state, as the bath
// temperature varies.
#include <cstdio>

#include "phicx/qthermo.hpp"

int main() {
  using namespace phicx;
  using namespace phicx::qthermo;
  const double gap = 1.0;  // J
  const HermitianOperator H(linalg::Matrix::diagonal(std::vector<double>{0.0, gap}));
  const DensityMatrix ground = StateVector::basis(2, 0).projector();
  std::printf("%-12s %-14s %-14s\n", "kT/E", "W/E", "S_th_bits");
  for (double kt : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const Quantity T = kelvin(kt * gap / constants().kB());
    const auto g = gibbs_state(H, T);
    std::printf("%-12g %-14.8f %-14.8f\n", kt, extractable_work(ground, H, T).value() / gap,
                von_neumann_entropy(g.rho).in(unit::bit));
  }
}
