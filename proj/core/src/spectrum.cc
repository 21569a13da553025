// Copyright 2026 The FACE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "face/spectrum.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "face/error.h"

namespace face {
namespace {

// FFTW planning touches global state; execution with new-array execute is
// thread-safe once a plan exists.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

// r2c transform; returns bins 0..N/2.
std::vector<std::complex<double>> half_dft(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  const int half = n / 2 + 1;
  FftwBuffer<double> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
  FftwBuffer<fftw_complex> out(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * half)));
  if (!in || !out) throw std::bad_alloc();

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in.get(), out.get(), FFTW_ESTIMATE);
  }
  std::copy(x.begin(), x.end(), in.get());
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  std::vector<std::complex<double>> result(half);
  for (int k = 0; k < half; ++k) result[k] = {out[k][0], out[k][1]};
  return result;
}

}  // namespace

std::vector<std::complex<double>> full_dft(std::span<const double> x) {
  if (x.empty()) throw InvalidArgument("DFT of an empty sequence");
  const std::size_t n = x.size();
  std::vector<std::complex<double>> half = half_dft(x);
  std::vector<std::complex<double>> full(n);
  for (std::size_t k = 0; k < n; ++k) {
    full[k] = k < half.size() ? half[k] : std::conj(half[n - k]);
  }
  return full;
}

Spectrum dft_real(std::span<const double> ce, std::string source_id) {
  if (ce.size() < 2) {
    throw InvalidArgument("spectrum needs at least 2 samples, got " +
                          std::to_string(ce.size()));
  }
  for (double v : ce) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite value in sequence");
  }
  const std::size_t n = ce.size();
  std::vector<std::complex<double>> half = half_dft(ce);

  Spectrum s;
  s.source_id = std::move(source_id);
  s.freqs.resize(half.size());
  s.mags.resize(half.size());
  for (std::size_t k = 0; k < half.size(); ++k) {
    s.freqs[k] = static_cast<double>(k) / static_cast<double>(n);
    s.mags[k] = half[k].real();
  }
  return s;
}

std::vector<double> uniform_grid(std::size_t n_c) {
  if (n_c < 2) throw InvalidArgument("grid length must be at least 2");
  std::vector<double> grid(n_c);
  const double denom = static_cast<double>(n_c - 1);
  for (std::size_t i = 0; i < n_c; ++i) {
    grid[i] = 0.5 * static_cast<double>(i) / denom;
  }
  grid.back() = 0.5;
  return grid;
}

double interpolate_at(const Spectrum& s, double freq) {
  const auto& f = s.freqs;
  const auto& m = s.mags;
  if (freq <= f.front()) return m.front();
  if (freq >= f.back()) return m.back();
  // First knot strictly greater than freq; freq lies in [f[j-1], f[j]).
  const std::size_t j = static_cast<std::size_t>(
      std::upper_bound(f.begin(), f.end(), freq) - f.begin());
  const double f0 = f[j - 1], f1 = f[j];
  if (freq == f0) return m[j - 1];
  const double t = (freq - f0) / (f1 - f0);
  return m[j - 1] + t * (m[j] - m[j - 1]);
}

std::vector<double> interpolate(const Spectrum& s, std::size_t n_c) {
  if (n_c < 2) throw InvalidArgument("n_c must be at least 2");
  if (s.freqs.size() != s.mags.size() || s.mags.size() < 2) {
    throw InvalidArgument("spectrum must have matching freqs/mags of length >= 2");
  }
  const std::vector<double> grid = uniform_grid(n_c);
  std::vector<double> out(n_c);
  for (std::size_t i = 0; i < n_c; ++i) out[i] = interpolate_at(s, grid[i]);
  return out;
}

AlignedSpectra align(const Spectrum& s1, const Spectrum& s2, std::size_t n_c) {
  if (n_c == kAutoLength) n_c = std::max(s1.size(), s2.size());
  AlignedSpectra out;
  out.grid = uniform_grid(n_c);
  out.a = interpolate(s1, n_c);
  out.b = interpolate(s2, n_c);
  return out;
}

Spectrum drop_dc(const Spectrum& s) {
  if (s.size() < 3) {
    throw InvalidArgument("dropping DC needs at least 3 spectral bins");
  }
  Spectrum out;
  out.source_id = s.source_id;
  out.freqs.assign(s.freqs.begin() + 1, s.freqs.end());
  out.mags.assign(s.mags.begin() + 1, s.mags.end());
  return out;
}

}  // namespace face
