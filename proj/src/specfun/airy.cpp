#include "edgelaw/specfun/airy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "edgelaw/numeric/quadrature.hpp"

namespace edgelaw::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Ai(0) and -Ai'(0).
constexpr double kAi0 = 0.35502805388781723926;
constexpr double kMinusAiPrime0 = 0.25881940379280679840;

// Region boundaries. The Maclaurin series loses about exp(2ζ) relative digits
// for x > 0 and exp(ζ) for x < 0, the asymptotic series has optimal error
// ~exp(-2ζ); the Bessel-K continued fraction covers the gap on the positive
// axis where neither reaches 1e-10.
constexpr double kNegativeAsymptotic = -7.0;
constexpr double kSeriesUpper = 2.1;
constexpr double kPositiveAsymptotic = 8.0;

AiryPair maclaurin(double x) {
  const double x3 = x * x * x;
  // f, g: the two power series with Ai = Ai(0) f + Ai'(0) g.
  double f = 1.0, fp = 0.0, g = x, gp = 1.0;
  double tf = 1.0, tfp = x * x / 2.0, tg = x, tgp = 1.0;
  fp = tfp;
  for (int k = 0; k < 200; ++k) {
    const double k3 = 3.0 * k;
    tf *= x3 / ((k3 + 2.0) * (k3 + 3.0));
    tfp *= x3 / ((k3 + 3.0) * (k3 + 5.0));
    tg *= x3 / ((k3 + 3.0) * (k3 + 4.0));
    tgp *= x3 / ((k3 + 1.0) * (k3 + 3.0));
    f += tf;
    fp += tfp;
    g += tg;
    gp += tgp;
    const double scale = std::abs(f) + std::abs(g) + std::abs(fp) + std::abs(gp);
    if (std::abs(tf) + std::abs(tfp) + std::abs(tg) + std::abs(tgp) <= 0.25 * kEps * scale) break;
  }
  return {kAi0 * f - kMinusAiPrime0 * g, kAi0 * fp - kMinusAiPrime0 * gp};
}

// Coefficients u_k, v_k of the Airy asymptotic expansions.
struct AsymptoticSums {
  double even_u, odd_u, even_v, odd_v;  // alternating sums (negative axis)
  double all_u, all_v;                  // alternating sums (positive axis)
};

AsymptoticSums asymptotic_sums(double zeta) {
  AsymptoticSums out{1.0, 0.0, 1.0, 0.0, 1.0, 1.0};
  double u = 1.0;
  double zpow = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    zpow /= zeta;
    const double tu = u * zpow;
    const double tv = v * zpow;
    const double mag = std::max(std::abs(tu), std::abs(tv));
    if (mag > last) break;  // optimal truncation
    last = mag;
    const double sign_pos = (k % 2 == 0) ? 1.0 : -1.0;
    out.all_u += sign_pos * tu;
    out.all_v += sign_pos * tv;
    // Negative axis: even and odd parts with (-1)^floor(k/2).
    const double sign_neg = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      out.even_u += sign_neg * tu;
      out.even_v += sign_neg * tv;
    } else {
      out.odd_u += sign_neg * tu;
      out.odd_v += sign_neg * tv;
    }
    if (mag < 0.25 * kEps) break;
  }
  return out;
}

AiryPair positive_asymptotic(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const AsymptoticSums s = asymptotic_sums(zeta);
  const double x14 = std::sqrt(std::sqrt(x));
  const double e = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
  return {e / x14 * s.all_u, -e * x14 * s.all_v};
}

AiryPair negative_asymptotic(double x) {
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const AsymptoticSums s = asymptotic_sums(zeta);
  const double z14 = std::sqrt(std::sqrt(z));
  const double phase = zeta - kPi / 4.0;
  const double c = std::cos(phase);
  const double sn = std::sin(phase);
  const double norm = 1.0 / std::sqrt(kPi);
  return {norm / z14 * (c * s.even_u + sn * s.odd_u),
          norm * z14 * (sn * s.even_v - c * s.odd_v)};
}

// K_{1/3}(z) and K_{2/3}(z) for z >= 2 by Steed's method applied to the
// continued fraction CF2 (Temme / Thompson-Barnett), order mu = -1/3.
void bessel_k_third(double z, double& k13, double& k23) {
  const double mu = -1.0 / 3.0;
  const double a1 = 0.25 - mu * mu;
  double b = 2.0 * (1.0 + z);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0, q2 = 1.0;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h *= a1;
  k13 = std::sqrt(kPi / (2.0 * z)) * std::exp(-z) / s;
  k23 = k13 * (mu + z + 0.5 - h) / z;
}

AiryPair bessel_region(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double k13 = 0.0, k23 = 0.0;
  bessel_k_third(zeta, k13, k23);
  return {std::sqrt(x / 3.0) / kPi * k13, -x / (kPi * std::sqrt(3.0)) * k23};
}

}  // namespace

AiryPair airy_ai(double x) {
  if (!std::isfinite(x)) throw std::domain_error("airy_ai: non-finite argument");
  if (std::abs(x) > 100.0) throw std::domain_error("airy_ai: |x| > 100 (got " + std::to_string(x) + ")");
  if (x < kNegativeAsymptotic) return negative_asymptotic(x);
  if (x <= kSeriesUpper) return maclaurin(x);
  if (x <= kPositiveAsymptotic) return bessel_region(x);
  return positive_asymptotic(x);
}

double airy_ai_leading(double x) {
  return 0.5 / std::sqrt(kPi) / std::sqrt(std::sqrt(x)) * std::exp(-2.0 / 3.0 * x * std::sqrt(x));
}

double airy_integral_tail(double x) {
  if (!(x >= 0.0)) throw std::domain_error("airy_integral_tail: requires x >= 0");
  const double upper = std::min(x + 40.0, 100.0);
  return numeric::gauss_legendre_integrate([](double y) { return airy_ai(y).value; }, x, upper, 0.25);
}

double airy_squared_tail(double x) {
  const AiryPair a = airy_ai(x);
  return a.derivative * a.derivative - x * a.value * a.value;
}

double airy_squared_moment_tail(double x) {
  const AiryPair a = airy_ai(x);
  return (2.0 * x * x * a.value * a.value - 2.0 * x * a.derivative * a.derivative - a.value * a.derivative) / 3.0;
}

}  // namespace edgelaw::specfun
