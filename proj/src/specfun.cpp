#include "kzeta/specfun.hpp"

#include <cmath>
#include <array>
#include <algorithm>
#include <limits>

namespace kzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn2 = 0.693147180559945309417232121458176568;
const double kLnPi = std::log(kPi);
const double kLnSqrt2Pi = 0.5 * std::log(2.0 * kPi);

// B_{2k} / (2k (2k-1)), k = 1..10: Stirling series coefficients.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12,      -1.0 / 360,        1.0 / 1260,        -1.0 / 1680,
    1.0 / 1188,    -691.0 / 360360,   1.0 / 156,         -3617.0 / 122400,
    43867.0 / 244188, -174611.0 / 125400};

// B_{2k}, k = 1..20, for the Euler-Maclaurin zeta tail.
constexpr std::array<double, 20> kBern2k = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
    -7709321041217.0 / 510,
    2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190,
    2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530};

// B_{2k} / (2k)!, same range.
const std::array<double, 20> kBernFact = [] {
  std::array<double, 20> c{};
  double fact = 1.0;  // (2k)!
  for (int k = 1; k <= 20; ++k) {
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    c[k - 1] = kBern2k[k - 1] / fact;
  }
  return c;
}();

bool near_nonpositive_integer(Cplx z, double radius) {
  double n = std::round(z.real());
  if (n > 0.5) return false;
  return std::abs(z - Cplx(n, 0.0)) < radius;
}

// Euler-Maclaurin zeta, valid for Re s >= -0.5 (away from s = 1).
EvalResult em_zeta(Cplx s) {
  const long n_cut = std::max<long>(16, static_cast<long>(10.0 + 1.3 * std::abs(s.imag())));
  Cplx acc = 1.0;       // n = 1 term
  double abs_sum = 1.0; // running sum of term magnitudes, for rounding estimate
  for (long n = 2; n < n_cut; ++n) {
    Cplx t = std::exp(-s * std::log(static_cast<double>(n)));
    acc += t;
    abs_sum += std::abs(t);
  }
  const double ln_n = std::log(static_cast<double>(n_cut));
  const Cplx n_pow = std::exp(-s * ln_n);  // N^{-s}
  acc += std::exp((1.0 - s) * ln_n) / (s - 1.0);
  acc += 0.5 * n_pow;

  Cplx poch = s;                    // (s)_{2k-1}
  Cplx scale = n_pow / static_cast<double>(n_cut);  // N^{-s-2k+1}
  double prev = std::numeric_limits<double>::infinity();
  double tail_err = 0.0;
  long k_used = 0;
  for (int k = 1; k <= 20; ++k) {
    Cplx term = kBernFact[k - 1] * poch * scale;
    double mag = std::abs(term);
    if (mag > prev) {  // asymptotic series turned; stop before it diverges
      tail_err = prev;
      break;
    }
    acc += term;
    prev = mag;
    tail_err = mag;
    k_used = k;
    if (mag < 1e-18 * std::abs(acc)) break;
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    scale /= static_cast<double>(n_cut) * static_cast<double>(n_cut);
  }

  EvalResult r;
  r.value = acc;
  r.abs_error = tail_err + 4e-16 * abs_sum;
  r.terms_used = n_cut + k_used;
  r.truncation = static_cast<double>(n_cut);
  return r;
}

}  // namespace

Cplx log_sin_pi(Cplx z) {
  const Cplx w = kPi * z;
  if (w.imag() > 20.0) {
    // sin w = e^{-iw} (i/2) (1 - e^{2iw})
    return Cplx(0.0, -1.0) * w + Cplx(-kLn2, kPi / 2) +
           std::log(1.0 - std::exp(Cplx(0.0, 2.0) * w));
  }
  if (w.imag() < -20.0) {
    return Cplx(0.0, 1.0) * w + Cplx(-kLn2, -kPi / 2) +
           std::log(1.0 - std::exp(Cplx(0.0, -2.0) * w));
  }
  return std::log(std::sin(w));
}

Cplx log_cos_pi(Cplx z) {
  const Cplx w = kPi * z;
  if (w.imag() > 20.0) {
    return Cplx(0.0, -1.0) * w - kLn2 + std::log(1.0 + std::exp(Cplx(0.0, 2.0) * w));
  }
  if (w.imag() < -20.0) {
    return Cplx(0.0, 1.0) * w - kLn2 + std::log(1.0 + std::exp(Cplx(0.0, -2.0) * w));
  }
  return std::log(std::cos(w));
}

Cplx log_gamma(Cplx z) {
  if (z.real() < 0.5) {
    // Reflection. Branch may differ from principal by 2 pi i; exp-safe.
    return kLnPi - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  Cplx shift = 0.0;
  while (std::abs(z) < 16.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  const Cplx lz = std::log(z);
  Cplx r = (z - 0.5) * lz - z + kLnSqrt2Pi;
  const Cplx zi = 1.0 / z;
  const Cplx zi2 = zi * zi;
  Cplx p = zi;
  for (double b : kStirling) {
    r += b * p;
    p *= zi2;
  }
  return shift + r;
}

EvalResult complex_gamma(Cplx z, const ToleranceConfig& cfg) {
  if (near_nonpositive_integer(z, cfg.pole_exclusion_radius))
    raise(ErrorKind::PoleProximity, "gamma pole near z");
  const Cplx lg = log_gamma(z);
  if (lg.real() > 700.0)
    raise(ErrorKind::Overflow, "gamma overflows double range");
  EvalResult r;
  r.value = std::exp(lg);
  r.abs_error = std::abs(r.value) * 1e-13;
  r.terms_used = 1;
  return r;
}

EvalResult riemann_zeta(Cplx s, const ToleranceConfig& cfg) {
  if (std::abs(s - Cplx(1.0, 0.0)) < cfg.pole_exclusion_radius)
    raise(ErrorKind::PoleProximity, "zeta pole at s = 1");
  if (s.real() >= -0.5) return em_zeta(s);

  // Functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
  const EvalResult base = em_zeta(1.0 - s);
  const Cplx ls = log_sin_pi(0.5 * s);
  if (ls.real() == -std::numeric_limits<double>::infinity()) {
    // Trivial zero: s a negative even integer.
    return {Cplx(0.0, 0.0), 0.0, base.terms_used, base.truncation};
  }
  const Cplx lpref = s * kLn2 + (s - 1.0) * kLnPi + ls + log_gamma(1.0 - s);
  if (lpref.real() > 700.0)
    raise(ErrorKind::Overflow, "zeta reflection overflows double range");
  const Cplx pref = std::exp(lpref);
  EvalResult r;
  r.value = pref * base.value;
  r.abs_error = std::abs(pref) * base.abs_error + std::abs(r.value) * 1e-14;
  r.terms_used = base.terms_used;
  r.truncation = base.truncation;
  return r;
}

EvalResult completed_zeta(Cplx s, const ToleranceConfig& cfg) {
  if (std::abs(s) < cfg.pole_exclusion_radius ||
      std::abs(s - Cplx(1.0, 0.0)) < cfg.pole_exclusion_radius)
    raise(ErrorKind::PoleProximity, "completed zeta pole at s in {0,1}");
  const EvalResult z = riemann_zeta(s, cfg);
  const Cplx lg = log_gamma(0.5 * s) - 0.5 * s * kLnPi;
  if (lg.real() > 700.0)
    raise(ErrorKind::Overflow, "completed zeta overflows double range");
  const Cplx pref = std::exp(lg);
  EvalResult r;
  r.value = pref * z.value;
  r.abs_error = std::abs(pref) * z.abs_error + std::abs(r.value) * 1e-13;
  r.terms_used = z.terms_used;
  r.truncation = z.truncation;
  return r;
}

Cplx divisor_sigma(Cplx w, long n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "divisor_sigma needs n >= 1");
  Cplx acc = 0.0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += std::exp(w * std::log(static_cast<double>(d)));
    const long q = n / d;
    if (q != d) acc += std::exp(w * std::log(static_cast<double>(q)));
  }
  return acc;
}

EvalResult gauss_2f1_half(Cplx a, Cplx b, Cplx c, const ToleranceConfig& cfg) {
  if (near_nonpositive_integer(c, cfg.pole_exclusion_radius))
    raise(ErrorKind::PoleProximity, "2F1 parameter c near non-positive integer");
  Cplx term = 1.0;
  Cplx acc = 1.0;
  const long cap = std::max<long>(cfg.max_terms, 8);
  for (long k = 0; k < cap; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * 0.5;
    acc += term;
    const double mag = std::abs(term);
    if (mag == 0.0 || mag < 1e-17 * std::abs(acc)) {
      EvalResult r;
      r.value = acc;
      r.abs_error = 2.0 * mag + 1e-15 * std::abs(acc);
      r.terms_used = k + 2;
      r.truncation = static_cast<double>(k + 2);
      return r;
    }
  }
  raise(ErrorKind::NonConvergent, "2F1 series exceeded max_terms");
}

Cplx pochhammer(Cplx z, long n) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "pochhammer needs n >= 0");
  Cplx acc = 1.0;
  for (long k = 0; k < n; ++k) acc *= z + static_cast<double>(k);
  return acc;
}

EvalResult bessel_j_odd(long order, double x) {
  if (order < 1 || order % 2 == 0)
    raise(ErrorKind::InvalidArgument, "bessel_j_odd needs odd positive order");
  if (x < 0.0) raise(ErrorKind::InvalidArgument, "bessel_j_odd needs x >= 0");
  EvalResult r;
  r.value = std::cyl_bessel_j(static_cast<double>(order), x);
  r.abs_error = 1e-13 * std::max(1.0, std::sqrt(std::max(1.0, x)));
  r.terms_used = 1;
  return r;
}

}  // namespace kzeta
