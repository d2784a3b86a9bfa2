#include "isoshare/types.hpp"

#include <cmath>
#include <sstream>

namespace isoshare {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << what << " must be a positive finite number, got " << value;
    throw DomainError(msg.str());
  }
}

void require_interior(const Bundle& b) {
  require_positive(b.capital, "capital");
  require_positive(b.labour, "labour");
}

void require_positive(const FactorPrices& prices) {
  require_positive(prices.wage, "wage");
  require_positive(prices.rental, "rental");
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  require_positive(lo, "grid lower bound");
  require_positive(hi, "grid upper bound");
  if (n == 0) throw DomainError("a grid needs at least one point");

  std::vector<double> points;
  points.reserve(n);
  if (n == 1) {
    points.push_back(lo);
    return points;
  }
  const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back(std::exp(std::log(lo) + step * static_cast<double>(i)));
  }
  points.back() = hi;  // pin the top end against exp/log drift
  return points;
}

}  // namespace isoshare
