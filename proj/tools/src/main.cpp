// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "vardecomp_cli/cli.hpp"

int main(int argc, char** argv) { return vardecomp::cli::run_cli(argc, argv, std::cout, std::cerr); }
