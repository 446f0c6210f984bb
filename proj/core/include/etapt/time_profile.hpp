#pragma once

#include <variant>
#include <vector>

namespace etapt {

/// Real-valued profile of time. Four kinds: constant, sinusoidal
/// (offset + amplitude*sin(w t + phase)), polynomial (ascending
/// coefficients), and sampled (strictly increasing knots, linear
/// interpolation, evaluable only inside the sampled window).
class TimeProfile {
 public:
  enum class Kind { constant, sinusoidal, polynomial, sampled };

  static TimeProfile constant(double value);
  static TimeProfile sinusoidal(double offset, double amplitude,
                                double angular_frequency, double phase);
  static TimeProfile polynomial(std::vector<double> coefficients);
  static TimeProfile sampled(std::vector<double> times, std::vector<double> values);

  Kind kind() const noexcept { return kind_; }

  double operator()(double t) const;

  /// Integral over [t0, t1]; closed form except for sampled profiles, which
  /// use adaptive Simpson quadrature to 1e-10.
  double integral(double t0, double t1) const;

 private:
  struct Constant {
    double value;
  };
  struct Sinusoidal {
    double offset, amplitude, angular_frequency, phase;
  };
  struct Polynomial {
    std::vector<double> coefficients;
  };
  struct Sampled {
    std::vector<double> times, values;
  };

  TimeProfile(Kind k, std::variant<Constant, Sinusoidal, Polynomial, Sampled> data)
      : kind_(k), data_(std::move(data)) {}

  Kind kind_;
  std::variant<Constant, Sinusoidal, Polynomial, Sampled> data_;
};

}  // namespace etapt
