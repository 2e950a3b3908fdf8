#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace logmink {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr int kDefaultGridSize = 256;

// Uniform periodic grid on the unit circle, theta_j = 2*pi*j/n.
class AngleGrid {
 public:
  explicit AngleGrid(int n = kDefaultGridSize);

  int size() const { return n_; }
  double step() const { return kTwoPi / n_; }
  double node(int j) const { return kTwoPi * j / n_; }
  std::vector<double> nodes() const;

  friend bool operator==(const AngleGrid&, const AngleGrid&) = default;

 private:
  int n_;
};

// Values of a 2*pi-periodic function at the nodes of an AngleGrid.
class PeriodicSamples {
 public:
  PeriodicSamples(AngleGrid grid, std::vector<double> values);

  template <typename Fn>
  static PeriodicSamples sample(const AngleGrid& grid, Fn&& fn) {
    std::vector<double> v(static_cast<std::size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) v[j] = fn(grid.node(j));
    return PeriodicSamples(grid, std::move(v));
  }

  static PeriodicSamples constant(const AngleGrid& grid, double c);

  const AngleGrid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }

  double min() const;
  double max() const;
  int argmin() const;

  template <typename Fn>
  PeriodicSamples map(Fn&& fn) const {
    std::vector<double> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(values_[j]);
    return PeriodicSamples(grid_, std::move(v));
  }

  // Pointwise combination of two sample sets on the same grid.
  template <typename Fn>
  PeriodicSamples zip(const PeriodicSamples& other, Fn&& fn) const {
    check_same_grid(other);
    std::vector<double> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(values_[j], other.values_[j]);
    return PeriodicSamples(grid_, std::move(v));
  }

  PeriodicSamples operator+(const PeriodicSamples& o) const;
  PeriodicSamples operator-(const PeriodicSamples& o) const;
  PeriodicSamples operator*(const PeriodicSamples& o) const;
  PeriodicSamples operator/(const PeriodicSamples& o) const;
  PeriodicSamples operator*(double s) const;

 private:
  void check_same_grid(const PeriodicSamples& other) const;

  AngleGrid grid_;
  std::vector<double> values_;
};

// Composite trapezoid rule: (2*pi/n) * sum of the samples.
double integrate(const PeriodicSamples& s);

struct Derivatives {
  PeriodicSamples first;
  PeriodicSamples second;
};

// Spectral first and second derivatives. The Nyquist mode of the first
// derivative is zeroed so the result stays real.
Derivatives fourier_derivatives(const PeriodicSamples& s);

// Trigonometric interpolation onto an n-point grid by zero-padding or
// truncating the spectrum.
PeriodicSamples resample(const PeriodicSamples& s, int n);

}  // namespace logmink
