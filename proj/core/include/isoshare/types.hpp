#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace isoshare {

/// Invalid numeric input: nonpositive coordinate, price, or scale, or a
/// family parameter outside its admissible range.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Base for failures of a well-posed computation (as opposed to bad input).
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The requested output level cannot be reached anywhere on the search bracket.
class UnattainableError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// The one-dimensional cost profile is monotone over the full search bracket,
/// so there is no interior minimum to report.
class NoInteriorMinimumError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// Gradient requested at a kink of a technology that is not differentiable there.
class NotDifferentiableError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// Root bracketing failed (zero-profit rental search).
class NoRootError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// An input point (K, L). All numeric operations are restricted to the open
/// positive orthant; boundary points are rejected.
struct Bundle {
  double capital = 1.0;  ///< K
  double labour = 1.0;   ///< L
};

/// Factor prices: wage w per unit labour and rental rate r per unit capital.
struct FactorPrices {
  double wage = 1.0;
  double rental = 1.0;
};

/// Partial derivatives of output with respect to each input.
struct Gradient {
  double d_capital = 0.0;  ///< dY/dK
  double d_labour = 0.0;   ///< dY/dL
};

void require_positive(double value, const char* what);
void require_interior(const Bundle& b);
void require_positive(const FactorPrices& prices);

/// Factor cost w*L + r*K. Every module computes cost through this one
/// expression so machine reports can be recomputed bit-exactly from their own
/// columns.
inline double bundle_cost(const FactorPrices& prices, const Bundle& b) {
  return prices.wage * b.labour + prices.rental * b.capital;
}

/// n points log-spaced over [lo, hi] inclusive; n == 1 yields {lo}.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

}  // namespace isoshare
