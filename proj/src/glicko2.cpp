#include "pacarena/glicko2.hpp"

#include <cmath>

namespace pacarena {

namespace {

constexpr double kScale = 173.7178;
constexpr double kEps = 1e-6;
constexpr int kMaxIter = 100;

double g_of(double phi) { return 1.0 / std::sqrt(1.0 + 3.0 * phi * phi / (M_PI * M_PI)); }

double e_of(double mu, double mu_j, double phi_j) {
  return 1.0 / (1.0 + std::exp(-g_of(phi_j) * (mu - mu_j)));
}

}  // namespace

Rating glicko2_update(const Rating& rating, const std::vector<GlickoOutcome>& outcomes,
                      double tau) {
  const double mu = (rating.r - 1500.0) / kScale;
  const double phi = rating.rd / kScale;
  const double sigma = rating.sigma;

  if (outcomes.empty()) {
    Rating out = rating;
    out.rd = std::sqrt(phi * phi + sigma * sigma) * kScale;
    return out;
  }

  double v_inv = 0.0, delta_sum = 0.0;
  for (const auto& o : outcomes) {
    const double mu_j = (o.opponent.r - 1500.0) / kScale;
    const double phi_j = o.opponent.rd / kScale;
    const double gj = g_of(phi_j);
    const double ej = e_of(mu, mu_j, phi_j);
    v_inv += gj * gj * ej * (1.0 - ej);
    delta_sum += gj * (o.score - ej);
  }
  const double v = 1.0 / v_inv;
  const double delta = v * delta_sum;

  // Volatility via the Illinois variant of regula falsi.
  const double a = std::log(sigma * sigma);
  auto f = [&](double x) {
    const double ex = std::exp(x);
    const double num = ex * (delta * delta - phi * phi - v - ex);
    const double den = 2.0 * (phi * phi + v + ex) * (phi * phi + v + ex);
    return num / den - (x - a) / (tau * tau);
  };

  double A = a;
  double B;
  if (delta * delta > phi * phi + v) {
    B = std::log(delta * delta - phi * phi - v);
  } else {
    int k = 1;
    while (f(a - k * tau) < 0.0) {
      ++k;
      if (k > kMaxIter) throw GlickoError("glicko2: bracket search failed to converge");
    }
    B = a - k * tau;
  }
  double fA = f(A), fB = f(B);
  int iter = 0;
  while (std::abs(B - A) > kEps) {
    if (++iter > kMaxIter) throw GlickoError("glicko2: volatility iteration failed to converge");
    const double C = A + (A - B) * fA / (fB - fA);
    const double fC = f(C);
    if (fC * fB <= 0.0) {
      A = B;
      fA = fB;
    } else {
      fA /= 2.0;
    }
    B = C;
    fB = fC;
  }
  const double sigma_p = std::exp(A / 2.0);

  const double phi_star = std::sqrt(phi * phi + sigma_p * sigma_p);
  const double phi_p = 1.0 / std::sqrt(1.0 / (phi_star * phi_star) + 1.0 / v);
  const double mu_p = mu + phi_p * phi_p * delta_sum;

  return {mu_p * kScale + 1500.0, phi_p * kScale, sigma_p};
}

}  // namespace pacarena
