// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <string>
#include <vector>

#include "phicx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return phicx::cli::run(std::move(args));
}
