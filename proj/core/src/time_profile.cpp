#include "etapt/time_profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace etapt {

TimeProfile TimeProfile::constant(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("TimeProfile: non-finite value");
  return {Kind::constant, Constant{value}};
}

TimeProfile TimeProfile::sinusoidal(double offset, double amplitude,
                                    double angular_frequency, double phase) {
  if (!std::isfinite(offset) || !std::isfinite(amplitude) ||
      !std::isfinite(angular_frequency) || !std::isfinite(phase)) {
    throw std::invalid_argument("TimeProfile: non-finite sinusoidal parameter");
  }
  return {Kind::sinusoidal, Sinusoidal{offset, amplitude, angular_frequency, phase}};
}

TimeProfile TimeProfile::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) {
    throw std::invalid_argument("TimeProfile: polynomial needs at least one coefficient");
  }
  for (double c : coefficients) {
    if (!std::isfinite(c)) throw std::invalid_argument("TimeProfile: non-finite coefficient");
  }
  return {Kind::polynomial, Polynomial{std::move(coefficients)}};
}

TimeProfile TimeProfile::sampled(std::vector<double> times, std::vector<double> values) {
  if (times.size() != values.size() || times.size() < 2) {
    throw std::invalid_argument("TimeProfile: sampled profile needs >= 2 matching knots");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || !std::isfinite(values[i])) {
      throw std::invalid_argument("TimeProfile: non-finite knot");
    }
    if (i > 0 && times[i] <= times[i - 1]) {
      throw std::invalid_argument("TimeProfile: sample times must be strictly increasing");
    }
  }
  return {Kind::sampled, Sampled{std::move(times), std::move(values)}};
}

double TimeProfile::operator()(double t) const {
  switch (kind_) {
    case Kind::constant:
      return std::get<Constant>(data_).value;
    case Kind::sinusoidal: {
      const auto& s = std::get<Sinusoidal>(data_);
      return s.offset + s.amplitude * std::sin(s.angular_frequency * t + s.phase);
    }
    case Kind::polynomial: {
      const auto& p = std::get<Polynomial>(data_).coefficients;
      double acc = 0.0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
      return acc;
    }
    case Kind::sampled: {
      const auto& s = std::get<Sampled>(data_);
      if (t < s.times.front() || t > s.times.back()) {
        throw std::domain_error("TimeProfile: t outside the sampled window");
      }
      auto hi = std::upper_bound(s.times.begin(), s.times.end(), t);
      if (hi == s.times.end()) return s.values.back();
      if (hi == s.times.begin()) return s.values.front();
      const std::size_t i = static_cast<std::size_t>(hi - s.times.begin());
      const double w = (t - s.times[i - 1]) / (s.times[i] - s.times[i - 1]);
      return s.values[i - 1] + w * (s.values[i] - s.values[i - 1]);
    }
  }
  throw std::logic_error("TimeProfile: unknown kind");
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double TimeProfile::integral(double t0, double t1) const {
  if (t0 == t1) return 0.0;
  switch (kind_) {
    case Kind::constant:
      return std::get<Constant>(data_).value * (t1 - t0);
    case Kind::sinusoidal: {
      const auto& s = std::get<Sinusoidal>(data_);
      if (s.angular_frequency == 0.0) {
        return (s.offset + s.amplitude * std::sin(s.phase)) * (t1 - t0);
      }
      const double w = s.angular_frequency;
      return s.offset * (t1 - t0) -
             s.amplitude / w * (std::cos(w * t1 + s.phase) - std::cos(w * t0 + s.phase));
    }
    case Kind::polynomial: {
      const auto& p = std::get<Polynomial>(data_).coefficients;
      double acc = 0.0;
      for (std::size_t k = p.size(); k-- > 0;) {
        const double kk = static_cast<double>(k + 1);
        acc += p[k] / kk * (std::pow(t1, kk) - std::pow(t0, kk));
      }
      return acc;
    }
    case Kind::sampled: {
      const auto f = [this](double t) { return (*this)(t); };
      const double fa = f(t0);
      const double fb = f(t1);
      const double fm = f(0.5 * (t0 + t1));
      const double whole = (t1 - t0) / 6.0 * (fa + 4.0 * fm + fb);
      return adaptive_simpson(f, t0, t1, fa, fm, fb, whole, 1e-10, 40);
    }
  }
  throw std::logic_error("TimeProfile: unknown kind");
}

}  // namespace etapt
