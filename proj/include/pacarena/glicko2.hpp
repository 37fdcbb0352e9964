#pragma once

#include <stdexcept>
#include <vector>

namespace pacarena {

struct Rating {
  double r = 1500.0;
  double rd = 350.0;
  double sigma = 0.06;
};

struct GlickoOutcome {
  Rating opponent;
  double score = 0.0;  // 1 win, 0.5 draw, 0 loss
};

class GlickoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One rating-period update. An empty outcome list applies the no-play step
// (RD inflates, r and sigma unchanged). Throws GlickoError if the
// volatility iteration fails to converge within its cap.
Rating glicko2_update(const Rating& rating, const std::vector<GlickoOutcome>& outcomes,
                      double tau);

}  // namespace pacarena
