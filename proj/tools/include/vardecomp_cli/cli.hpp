// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace vardecomp::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kIo = 2,
  kNotConverged = 3,
};

/// Entry point of `vardecomp synth|decompose|eval`. Machine output goes to
/// `out`, logs and diagnostics to `err`. Returns one of ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vardecomp::cli
