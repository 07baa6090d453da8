// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return fpgasched::cli::run(argc, argv, std::cout, std::cerr);
}
