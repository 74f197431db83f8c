// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/autocorrelation.hpp"

#include <fftw3.h>

#include <complex>
#include <memory>
#include <mutex>
#include <vector>

namespace vardecomp {

namespace {

// FFTW's planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {}
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

Image autocorrelation(const Image& a) {
  if (a.empty()) return a;
  const int rows = static_cast<int>(a.height());
  const int cols = static_cast<int>(a.width());
  const int half = cols / 2 + 1;
  std::vector<double> real(a.data());
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(rows) * static_cast<std::size_t>(half));
  auto* spec_ptr = reinterpret_cast<fftw_complex*>(spec.data());

  std::unique_ptr<Plan> forward;
  std::unique_ptr<Plan> backward;
  {
    std::lock_guard lock(planner_mutex());
    // FFTW_ESTIMATE leaves the arrays untouched while planning.
    forward = std::make_unique<Plan>(fftw_plan_dft_r2c_2d(rows, cols, real.data(), spec_ptr, FFTW_ESTIMATE));
    backward = std::make_unique<Plan>(fftw_plan_dft_c2r_2d(rows, cols, spec_ptr, real.data(), FFTW_ESTIMATE));
  }
  forward->execute();
  for (auto& z : spec) z = std::norm(z);
  backward->execute();

  const double scale = 1.0 / (static_cast<double>(rows) * static_cast<double>(cols));
  for (double& x : real) x *= scale;
  return Image(a.width(), a.height(), std::move(real));
}

}  // namespace vardecomp
