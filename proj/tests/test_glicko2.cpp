#include <doctest.h>

#include <cmath>

#include "pacarena/glicko2.hpp"

using namespace pacarena;

// Expected values computed up front with an independent step-by-step
// implementation of the published update procedure (same example: 1500/200/
// 0.06 vs 1400/30 win, 1550/100 loss, 1700/300 loss at tau 0.5).
namespace {
constexpr double kExpectedR = 1464.050671;
constexpr double kExpectedRd = 151.516524;
constexpr double kExpectedSigma = 0.05999598;
}  // namespace

TEST_CASE("worked example matches the independent oracle") {
  const Rating player{1500.0, 200.0, 0.06};
  const std::vector<GlickoOutcome> games = {
      {{1400.0, 30.0, 0.06}, 1.0},
      {{1550.0, 100.0, 0.06}, 0.0},
      {{1700.0, 300.0, 0.06}, 0.0},
  };
  const Rating out = glicko2_update(player, games, 0.5);
  CHECK(std::abs(out.r - kExpectedR) < 1e-4);
  CHECK(std::abs(out.rd - kExpectedRd) < 1e-4);
  CHECK(std::abs(out.sigma - kExpectedSigma) < 1e-6);

  // The published reference rounds to 1464.06 / 151.52; stay within 0.01.
  CHECK(std::abs(out.r - 1464.06) < 0.01);
  CHECK(std::abs(out.rd - 151.52) < 0.01);
  CHECK(std::abs(out.sigma - 0.05999) < 0.001);
}

TEST_CASE("no games played: rating and volatility hold, deviation inflates") {
  const Rating player{1500.0, 200.0, 0.06};
  const Rating out = glicko2_update(player, {}, 0.5);
  CHECK(out.r == 1500.0);
  CHECK(out.sigma == 0.06);
  CHECK(out.rd > 200.0);
  // phi* = sqrt(phi^2 + sigma^2), scaled back.
  const double phi = 200.0 / 173.7178;
  CHECK(std::abs(out.rd - std::sqrt(phi * phi + 0.06 * 0.06) * 173.7178) < 1e-9);
}

TEST_CASE("two equal players trading wins stay symmetric") {
  Rating a, b;
  for (int period = 0; period < 4; ++period) {
    const Rating a2 = glicko2_update(a, {{b, period % 2 == 0 ? 1.0 : 0.0}}, 0.5);
    const Rating b2 = glicko2_update(b, {{a, period % 2 == 0 ? 0.0 : 1.0}}, 0.5);
    a = a2;
    b = b2;
  }
  // Mirror symmetry around the origin rating: the trades never favor a side.
  CHECK(std::abs((a.r - 1500.0) + (b.r - 1500.0)) < 1e-9);
  CHECK(std::abs(a.rd - b.rd) < 1e-9);
  CHECK(std::abs(a.sigma - b.sigma) < 1e-9);
}

TEST_CASE("a win raises the rating, a loss lowers it") {
  const Rating base;
  const Rating up = glicko2_update(base, {{Rating{}, 1.0}}, 0.5);
  const Rating down = glicko2_update(base, {{Rating{}, 0.0}}, 0.5);
  CHECK(up.r > base.r);
  CHECK(down.r < base.r);
  CHECK(std::abs((up.r - base.r) + (down.r - base.r)) < 1e-9);  // symmetric pull
}
