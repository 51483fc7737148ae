// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/signals.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace framelab {

namespace {

const double kRoot2 = std::sqrt(2.0);
const double kGaussAmp = std::pow(2.0, 0.25);  // unit L2 norm for e^{-pi t^2}

double hermite_poly(int n, double x) {
  if (n == 0) return 1.0;
  double hm = 1.0, h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  return h;
}

// L2 norm of (t+i)^e restricted to the real/imag/complex part, computed via
// the substitution t = tan(u) which compactifies the domain.
double poisson_norm(double e, SignalKind kind) {
  if (e >= -0.75) throw std::invalid_argument("poisson exponent must be < -3/4");
  if (kind == SignalKind::PoissonComplex) {
    // \int (1+t^2)^e dt = B(1/2, -e - 1/2)
    return std::sqrt(std::beta(0.5, -e - 0.5));
  }
  const int n = 1 << 14;
  const double h = kPi / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = -kPi / 2.0 + (i + 0.5) * h;
    const double theta = kPi / 2.0 - u;  // arg(tan(u) + i)
    const double part = (kind == SignalKind::PoissonReal) ? std::cos(e * theta)
                                                          : std::sin(e * theta);
    sum += part * part * std::pow(std::cos(u), -2.0 * e - 2.0);
  }
  return std::sqrt(sum * h);
}

double poisson_support(double e, double c) {
  // |psi(T)| ~ c (T^2+1)^{e/2} < 1e-6
  const double t = std::pow(1e-6 / c, 1.0 / e);
  return std::clamp(t, 8.0, 512.0);
}

cplx base_eval(const Signal& s, double t) {
  switch (s.kind) {
    case SignalKind::Gaussian:
      return kGaussAmp * std::exp(-kPi * t * t);
    case SignalKind::Hermite: {
      const double c = kGaussAmp / std::sqrt(std::pow(2.0, s.order) * std::tgamma(s.order + 1.0));
      return c * hermite_poly(s.order, std::sqrt(2.0 * kPi) * t) * std::exp(-kPi * t * t);
    }
    case SignalKind::Box:
      return std::abs(t) <= s.width / 2.0 ? 1.0 / std::sqrt(s.width) : 0.0;
    case SignalKind::MexicanHat:
      return 2.0 / (std::sqrt(3.0) * std::pow(kPi, 0.25)) * (1.0 - t * t) *
             std::exp(-t * t / 2.0);
    case SignalKind::PoissonReal:
    case SignalKind::PoissonImag:
    case SignalKind::PoissonComplex: {
      const cplx v = s.poisson_coeff * std::pow(cplx(t, 1.0), s.exponent);
      if (s.kind == SignalKind::PoissonReal) return s.norm_const * v.real();
      if (s.kind == SignalKind::PoissonImag) return s.norm_const * v.imag();
      return s.norm_const * v;
    }
    case SignalKind::Samples: {
      if (s.samples.empty() || s.dt <= 0.0) return 0.0;
      const double pos = (t - s.t0) / s.dt;
      if (pos < 0.0 || pos > double(s.samples.size() - 1)) return 0.0;
      const auto i = static_cast<size_t>(pos);
      if (i + 1 >= s.samples.size()) return s.samples.back();
      const double w = pos - double(i);
      return (1.0 - w) * s.samples[i] + w * s.samples[i + 1];
    }
  }
  return 0.0;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (step <= 0.0 || time_step <= 0.0) throw std::invalid_argument("quadrature step must be > 0");
  if (truncation_radius < 1.0) throw std::invalid_argument("truncation radius must be >= 1");
  if (!(y_min > 0.0 && y_min < 1.0 && y_max > 1.0))
    throw std::invalid_argument("half-plane strip must satisfy 0 < y_min < 1 < y_max");
}

cplx Signal::operator()(double t) const {
  const double s = (t - shift) / dilation;
  if (kind != SignalKind::Samples && std::abs(s) > support_radius) return 0.0;
  cplx v = scale * base_eval(*this, s) / std::sqrt(dilation);
  if (modulation != 0.0) v *= std::exp(cplx(0.0, -2.0 * kPi * modulation * t));
  return v;
}

Signal Signal::translated(double x0) const {
  Signal s = *this;
  s.shift += x0;
  // True translation: the modulation factor sits outside the base shape, so
  // (T_x f)(t) = e^{2 pi i m x} e^{-2 pi i m t} base(t - x - shift).
  s.scale *= std::exp(cplx(0.0, 2.0 * kPi * modulation * x0));
  return s;
}

Signal Signal::modulated(double y0) const {
  Signal s = *this;
  s.modulation += y0;
  return s;
}

Signal Signal::dilated(double a) const {
  if (a <= 0.0) throw std::invalid_argument("dilation must be positive");
  Signal s = *this;
  s.dilation *= a;
  s.shift *= a;       // (t/a - shift_old) == (t - a*shift_old)/a
  s.modulation /= a;  // the modulation factor sits outside the base shape
  return s;
}

Signal Signal::scaled(cplx c) const {
  Signal s = *this;
  s.scale *= c;
  return s;
}

Signal Signal::gaussian() { return Signal{}; }

Signal Signal::hermite(int n) {
  if (n < 0) throw std::invalid_argument("hermite order must be >= 0");
  Signal s;
  s.kind = SignalKind::Hermite;
  s.order = n;
  s.support_radius = 8.0 + 0.5 * n;
  return s;
}

Signal Signal::box(double width) {
  if (width <= 0.0) throw std::invalid_argument("box width must be positive");
  Signal s;
  s.kind = SignalKind::Box;
  s.width = width;
  s.support_radius = width / 2.0;
  return s;
}

Signal Signal::mexican_hat() {
  Signal s;
  s.kind = SignalKind::MexicanHat;
  s.support_radius = 7.0;
  return s;
}

static Signal make_poisson(SignalKind kind, double exponent) {
  Signal s;
  s.kind = kind;
  s.exponent = exponent;
  s.norm_const = 1.0 / poisson_norm(exponent, kind);
  s.support_radius = poisson_support(exponent, s.norm_const);
  return s;
}

Signal Signal::poisson_real(double alpha) {
  if (alpha <= 1.0) throw std::invalid_argument("poisson wavelet requires alpha > 1");
  return make_poisson(SignalKind::PoissonReal, -(alpha + 1.0) / 2.0);
}
Signal Signal::poisson_imag(double alpha) {
  if (alpha <= 1.0) throw std::invalid_argument("poisson wavelet requires alpha > 1");
  return make_poisson(SignalKind::PoissonImag, -(alpha + 1.0) / 2.0);
}
Signal Signal::poisson_complex(double alpha) {
  if (alpha <= 1.0) throw std::invalid_argument("poisson wavelet requires alpha > 1");
  return make_poisson(SignalKind::PoissonComplex, -(alpha + 1.0) / 2.0);
}
Signal Signal::poisson_real_raw(double exponent) {
  if (exponent >= -1.0) throw std::invalid_argument("raw exponent must be < -1");
  return make_poisson(SignalKind::PoissonReal, exponent);
}
Signal Signal::poisson_imag_raw(double exponent) {
  if (exponent >= -1.0) throw std::invalid_argument("raw exponent must be < -1");
  return make_poisson(SignalKind::PoissonImag, exponent);
}

Signal Signal::poisson_mix_raw(double exponent, cplx coeff) {
  if (exponent >= -1.0) throw std::invalid_argument("raw exponent must be < -1");
  Signal s;
  s.kind = SignalKind::PoissonReal;
  s.exponent = exponent;
  s.poisson_coeff = coeff;
  s.support_radius = poisson_support(exponent, std::abs(coeff));
  return s;
}

Signal Signal::from_samples(double t0, double dt, std::vector<cplx> samples) {
  if (dt <= 0.0) throw std::invalid_argument("sample grid step must be > 0");
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  Signal s;
  s.kind = SignalKind::Samples;
  s.t0 = t0;
  s.dt = dt;
  s.samples = std::move(samples);
  const double t1 = s.t0 + s.dt * double(s.samples.size() - 1);
  s.support_radius = std::max(std::abs(s.t0), std::abs(t1));
  return s;
}

Signal Signal::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open signal file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,re,im", 0) != 0)
    throw std::runtime_error("signal CSV must start with header t,re,im");
  std::vector<double> ts;
  std::vector<cplx> vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double t, re, im;
    char c1, c2;
    if (!(ss >> t >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      throw std::runtime_error("malformed signal CSV line: " + line);
    ts.push_back(t);
    vals.push_back(cplx(re, im));
  }
  if (ts.size() < 2) throw std::runtime_error("signal CSV needs at least two rows");
  const double dt = ts[1] - ts[0];
  for (size_t i = 1; i < ts.size(); ++i)
    if (std::abs(ts[i] - ts[0] - dt * double(i)) > 1e-9 * std::max(1.0, std::abs(ts[i])))
      throw std::runtime_error("signal CSV grid is not uniform");
  return from_samples(ts[0], dt, std::move(vals));
}

Signal Signal::from_descriptor(const std::string& descriptor) {
  std::string name = descriptor;
  double param = 0.0;
  bool has_param = false;
  if (auto pos = descriptor.find(':'); pos != std::string::npos) {
    name = descriptor.substr(0, pos);
    param = std::stod(descriptor.substr(pos + 1));
    has_param = true;
  }
  if (name == "gaussian") return gaussian();
  if (name == "hermite") return hermite(has_param ? int(param) : 0);
  if (name == "box") return box(has_param ? param : 1.0);
  if (name == "mexican-hat") return mexican_hat();
  if (name == "poisson-real") return poisson_real(param);
  if (name == "poisson-imag") return poisson_imag(param);
  if (name == "poisson-complex") return poisson_complex(param);
  throw std::invalid_argument("unknown signal descriptor: " + descriptor);
}

std::string Signal::descriptor() const {
  switch (kind) {
    case SignalKind::Gaussian: return "gaussian";
    case SignalKind::Hermite: return "hermite:" + std::to_string(order);
    case SignalKind::Box: return "box:" + std::to_string(width);
    case SignalKind::MexicanHat: return "mexican-hat";
    case SignalKind::PoissonReal: return "poisson-real(exp=" + std::to_string(exponent) + ")";
    case SignalKind::PoissonImag: return "poisson-imag(exp=" + std::to_string(exponent) + ")";
    case SignalKind::PoissonComplex: return "poisson-complex(exp=" + std::to_string(exponent) + ")";
    case SignalKind::Samples: return "samples";
  }
  return "?";
}

Signal gabor_atom(const Signal& g, const PhasePoint& z) {
  return g.translated(z.x).modulated(z.y);
}

Signal wavelet_atom(const Signal& psi, const PhasePoint& z) {
  if (z.y <= 0.0) throw std::invalid_argument("wavelet atom needs scale y > 0");
  return psi.dilated(z.y).translated(z.x);
}

cplx inner_product(const Signal& f, const Signal& g, const QuadratureSpec& q) {
  q.validate();
  const double fa = f.support_center() - f.transformed_radius();
  const double fb = f.support_center() + f.transformed_radius();
  const double ga = g.support_center() - g.transformed_radius();
  const double gb = g.support_center() + g.transformed_radius();
  const double a = std::max(fa, ga);
  const double b = std::min(fb, gb);
  if (a >= b) throw std::invalid_argument("quadrature domains do not overlap");

  const double dmod = std::abs(f.modulation - g.modulation);
  double h = q.time_step * std::min({1.0, f.dilation, g.dilation});
  h = std::min(h, 1.0 / (32.0 * (1.0 + dmod)));
  const auto n = static_cast<long>(std::ceil((b - a) / h));
  h = (b - a) / double(n);

  cplx sum = 0.0;
  if (q.scheme == QuadratureSpec::Scheme::Midpoint) {
    for (long i = 0; i < n; ++i) {
      const double t = a + (double(i) + 0.5) * h;
      sum += f(t) * std::conj(g(t));
    }
  } else {
    for (long i = 0; i <= n; ++i) {
      const double t = a + double(i) * h;
      const double w = (i == 0 || i == n) ? 0.5 : 1.0;
      sum += w * f(t) * std::conj(g(t));
    }
  }
  return sum * h;
}

double l2_norm(const Signal& f, const QuadratureSpec& q) {
  return std::sqrt(std::max(0.0, inner_product(f, f, q).real()));
}

cplx fourier_at(const Signal& f, double xi, const QuadratureSpec& q) {
  const double a = f.support_center() - f.transformed_radius();
  const double b = f.support_center() + f.transformed_radius();
  double h = q.time_step * std::min(1.0, f.dilation);
  h = std::min(h, 1.0 / (16.0 * (1.0 + std::abs(xi) + std::abs(f.modulation))));
  const auto n = static_cast<long>(std::ceil((b - a) / h));
  h = (b - a) / double(n);
  cplx sum = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = a + (double(i) + 0.5) * h;
    sum += f(t) * std::exp(cplx(0.0, -2.0 * kPi * xi * t));
  }
  return sum * h;
}

Signal fourier(const Signal& f, double xi_min, double xi_max, double xi_step,
               const QuadratureSpec& q) {
  if (xi_step <= 0.0 || xi_max <= xi_min) throw std::invalid_argument("bad xi grid");
  const auto n = static_cast<long>(std::floor((xi_max - xi_min) / xi_step)) + 1;
  std::vector<cplx> vals(n);
  for (long i = 0; i < n; ++i) vals[i] = fourier_at(f, xi_min + double(i) * xi_step, q);
  return Signal::from_samples(xi_min, xi_step, std::move(vals));
}

AdmissibilityResult admissibility(const Signal& psi, const QuadratureSpec& q) {
  // Log-spaced xi grid: \int |psi_hat|^2 / xi dxi = \int |psi_hat(e^v)|^2 dv.
  const double xi_lo = 1e-3, xi_hi = 16.0;
  const double dv = 0.05;
  const double v_lo = std::log(xi_lo), v_hi = std::log(xi_hi);
  const auto n = static_cast<long>(std::ceil((v_hi - v_lo) / dv));

  std::vector<double> integrand(n);
  double sum = 0.0, peak = 0.0;
  for (long i = 0; i < n; ++i) {
    const double v = v_lo + (double(i) + 0.5) * dv;
    const double m = std::abs(fourier_at(psi, std::exp(v), q));
    integrand[i] = m * m;
    peak = std::max(peak, integrand[i]);
    sum += integrand[i] * dv;
  }

  AdmissibilityResult r;
  r.value = sum;
  // Divergence toward xi -> 0: the integrand must decay at the low end.
  const long probe = std::min<long>(10, n);
  double low_max = 0.0;
  for (long i = 0; i < probe; ++i) low_max = std::max(low_max, integrand[i]);
  if (peak > 0.0 && integrand[0] >= 0.9 * low_max && low_max > 1e-8 * peak) r.divergent = true;

  // Geometric extrapolation of the upper tail.
  const double last = integrand[n - 1], prev = integrand[n - 2];
  if (prev > 0.0 && last > 0.0 && last < prev)
    r.tail_estimate = last * dv / (1.0 - last / prev);
  else if (last > 0.0)
    r.tail_estimate = std::numeric_limits<double>::infinity();
  return r;
}

NormalizedWavelet normalize_wavelet(const Signal& psi, const QuadratureSpec& q) {
  const auto adm = admissibility(psi, q);
  if (adm.divergent || adm.value <= 0.0)
    throw std::invalid_argument("wavelet is not admissible");
  NormalizedWavelet out;
  out.psi = psi.scaled(1.0 / std::sqrt(adm.value));
  out.l2 = l2_norm(out.psi, q);
  out.admissibility_before = adm.value;
  return out;
}

}  // namespace framelab
