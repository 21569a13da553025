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

#ifndef FACE_SPECTRUM_H_
#define FACE_SPECTRUM_H_

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace face {

// One-sided real-part spectrum. freqs are in cycles per token:
// freqs[k] = k / N for k = 0..floor(N/2), mags[k] = Re X_k.
struct Spectrum {
  std::vector<double> freqs;
  std::vector<double> mags;
  std::string source_id;

  std::size_t size() const { return mags.size(); }
};

// Two spectra resampled onto the same uniform grid over [0, 0.5].
struct AlignedSpectra {
  std::vector<double> grid;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t size() const { return grid.size(); }
};

// Full complex DFT, X_k = sum_n x_n exp(-2 pi i k n / N), k = 0..N-1.
// Backed by FFTW; any N >= 1.
std::vector<std::complex<double>> full_dft(std::span<const double> x);

// Real part of the DFT for k = 0..floor(N/2). Requires N >= 2 and finite
// input; throws InvalidArgument otherwise.
Spectrum dft_real(std::span<const double> ce, std::string source_id = "");

// n_c points evenly spaced over [0, 0.5], endpoints exact.
std::vector<double> uniform_grid(std::size_t n_c);

// Piecewise-linear resampling of (freqs, mags) onto uniform_grid(n_c).
// Grid points past the last spectral frequency (odd N, where the last bin is
// (N-1)/(2N) < 0.5) hold the last magnitude. Throws for n_c < 2.
std::vector<double> interpolate(const Spectrum& s, std::size_t n_c);

// Value of the piecewise-linear curve through (freqs, mags) at one point,
// held constant outside the knot range.
double interpolate_at(const Spectrum& s, double freq);

// Passing kAutoLength picks max(s1.size(), s2.size()).
inline constexpr std::size_t kAutoLength = 0;

AlignedSpectra align(const Spectrum& s1, const Spectrum& s2,
                     std::size_t n_c = kAutoLength);

// Copy of s with the DC bin removed.
Spectrum drop_dc(const Spectrum& s);

}  // namespace face

#endif  // FACE_SPECTRUM_H_
