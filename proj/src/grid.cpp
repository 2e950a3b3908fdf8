#include "logmink/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "logmink/errors.hpp"

namespace logmink {

namespace {

// FFTW planning is not thread-safe; plans are created once per size under a
// lock and then executed with the new-array interface, which is.
struct RealPlans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

const RealPlans& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, RealPlans> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  double* in = fftw_alloc_real(static_cast<std::size_t>(n));
  fftw_complex* out = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  RealPlans p;
  p.forward = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_c2r_1d(n, out, in, FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
  fftw_free(in);
  fftw_free(out);
  return cache.emplace(n, p).first->second;
}

struct RealBuffer {
  explicit RealBuffer(int n) : data(fftw_alloc_real(static_cast<std::size_t>(n))) {}
  ~RealBuffer() { fftw_free(data); }
  RealBuffer(const RealBuffer&) = delete;
  RealBuffer& operator=(const RealBuffer&) = delete;
  double* data;
};

struct Spectrum {
  explicit Spectrum(int n)
      : size(n / 2 + 1), data(fftw_alloc_complex(static_cast<std::size_t>(size))) {
    std::fill_n(reinterpret_cast<double*>(data), 2 * size, 0.0);
  }
  ~Spectrum() { fftw_free(data); }
  Spectrum(const Spectrum&) = delete;
  Spectrum& operator=(const Spectrum&) = delete;

  std::complex<double>& operator[](int k) {
    return reinterpret_cast<std::complex<double>*>(data)[k];
  }

  int size;
  fftw_complex* data;
};

// Unnormalized r2c transform of the samples.
void forward(const PeriodicSamples& s, Spectrum& spec) {
  const int n = s.size();
  RealBuffer in(n);
  std::copy(s.values().begin(), s.values().end(), in.data);
  fftw_execute_dft_r2c(plans_for(n).forward, in.data, spec.data);
}

// Inverse transform including the 1/n normalization.
PeriodicSamples backward(Spectrum& spec, const AngleGrid& grid) {
  const int n = grid.size();
  RealBuffer out(n);
  fftw_execute_dft_c2r(plans_for(n).backward, spec.data, out.data);
  std::vector<double> v(out.data, out.data + n);
  for (double& x : v) x /= n;
  return PeriodicSamples(grid, std::move(v));
}

}  // namespace

AngleGrid::AngleGrid(int n) : n_(n) {
  if (n < 8 || n % 2 != 0) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "grid size must be even and >= 8, got " + std::to_string(n));
  }
}

std::vector<double> AngleGrid::nodes() const {
  std::vector<double> v(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) v[j] = node(j);
  return v;
}

PeriodicSamples::PeriodicSamples(AngleGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size()) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "sample count " + std::to_string(values_.size()) +
                            " does not match grid size " + std::to_string(grid_.size()));
  }
}

PeriodicSamples PeriodicSamples::constant(const AngleGrid& grid, double c) {
  return PeriodicSamples(grid, std::vector<double>(static_cast<std::size_t>(grid.size()), c));
}

double PeriodicSamples::min() const { return *std::min_element(values_.begin(), values_.end()); }
double PeriodicSamples::max() const { return *std::max_element(values_.begin(), values_.end()); }
int PeriodicSamples::argmin() const {
  return static_cast<int>(std::min_element(values_.begin(), values_.end()) - values_.begin());
}

void PeriodicSamples::check_same_grid(const PeriodicSamples& other) const {
  if (!(grid_ == other.grid_)) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "grid mismatch: " + std::to_string(grid_.size()) + " vs " +
                            std::to_string(other.grid_.size()));
  }
}

PeriodicSamples PeriodicSamples::operator+(const PeriodicSamples& o) const {
  return zip(o, [](double a, double b) { return a + b; });
}
PeriodicSamples PeriodicSamples::operator-(const PeriodicSamples& o) const {
  return zip(o, [](double a, double b) { return a - b; });
}
PeriodicSamples PeriodicSamples::operator*(const PeriodicSamples& o) const {
  return zip(o, [](double a, double b) { return a * b; });
}
PeriodicSamples PeriodicSamples::operator/(const PeriodicSamples& o) const {
  return zip(o, [](double a, double b) { return a / b; });
}
PeriodicSamples PeriodicSamples::operator*(double s) const {
  return map([s](double a) { return a * s; });
}

double integrate(const PeriodicSamples& s) {
  double sum = 0.0;
  for (double v : s.values()) sum += v;
  return s.grid().step() * sum;
}

Derivatives fourier_derivatives(const PeriodicSamples& s) {
  const int n = s.size();
  const int nyquist = n / 2;
  Spectrum first(n);
  Spectrum second(n);
  forward(s, first);
  for (int k = 0; k <= nyquist; ++k) {
    const std::complex<double> c = first[k];
    const double kk = static_cast<double>(k);
    second[k] = -kk * kk * c;
    first[k] = (k == nyquist) ? std::complex<double>(0.0, 0.0)
                              : std::complex<double>(0.0, kk) * c;
  }
  return {backward(first, s.grid()), backward(second, s.grid())};
}

PeriodicSamples resample(const PeriodicSamples& s, int n) {
  const AngleGrid target(n);
  const int m = s.size();
  if (n == m) return s;

  Spectrum src(m);
  forward(s, src);
  Spectrum dst(n);
  const double scale = static_cast<double>(n) / m;
  if (n > m) {
    for (int k = 0; k < m / 2; ++k) dst[k] = scale * src[k];
    // The source Nyquist term splits evenly between +m/2 and -m/2.
    dst[m / 2] = 0.5 * scale * src[m / 2];
  } else {
    for (int k = 0; k < n / 2; ++k) dst[k] = scale * src[k];
    // Modes +-n/2 alias onto the target Nyquist.
    dst[n / 2] = scale * 2.0 * src[n / 2].real();
  }
  return backward(dst, target);
}

}  // namespace logmink
