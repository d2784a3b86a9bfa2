#pragma once

#include <span>
#include <string>

#include "isoshare/types.hpp"

namespace isoshare {

/// A two-input technology Y(K, L): strictly positive and nondecreasing in each
/// argument on the open positive orthant.
class ProductionFunction {
public:
  virtual ~ProductionFunction() = default;

  /// Output at b. Throws DomainError off the open positive orthant.
  double evaluate(const Bundle& b) const;

  /// (dY/dK, dY/dL). Analytic where the family provides one, otherwise central
  /// finite differences with relative step 1e-6. Throws NotDifferentiableError
  /// at a kink.
  Gradient gradient(const Bundle& b) const;

  /// False for families with kinks (Leontief).
  virtual bool differentiable_everywhere() const noexcept { return true; }

  /// Pointwise differentiability. Kinks are detected with a narrow relative
  /// band so that points a solver lands on within rounding of a kink count as
  /// being on it.
  virtual bool differentiable_at(const Bundle& b) const;

  virtual std::string family_name() const = 0;

  /// Family name with parameter values, e.g. "cobb-douglas(A=2.5, alpha=0.3)".
  virtual std::string description() const = 0;

protected:
  virtual double evaluate_impl(const Bundle& b) const = 0;
  virtual Gradient gradient_impl(const Bundle& b) const;  // finite differences
};

struct CobbDouglasParams {
  double scale = 1.0;  ///< A > 0
  double alpha = 0.5;  ///< capital exponent, 0 < alpha < 1

  /// Share ratio alpha/(1 - alpha).
  double beta() const noexcept { return alpha / (1.0 - alpha); }
  void validate() const;
};

/// Y = A * K^alpha * L^(1-alpha).
class CobbDouglas final : public ProductionFunction {
public:
  explicit CobbDouglas(CobbDouglasParams params);
  const CobbDouglasParams& params() const noexcept { return params_; }

  std::string family_name() const override { return "cobb-douglas"; }
  std::string description() const override;

protected:
  double evaluate_impl(const Bundle& b) const override;
  Gradient gradient_impl(const Bundle& b) const override;

private:
  CobbDouglasParams params_;
};

struct CESParams {
  double scale = 1.0;  ///< A > 0
  double share = 0.5;  ///< capital weight a, in (0, 1)
  double rho = -1.0;   ///< substitution parameter, rho <= 1 and rho != 0
  void validate() const;
};

/// Y = A * (a*K^rho + (1-a)*L^rho)^(1/rho), degree-1 homogeneous by
/// construction. Below |rho| = 1e-6 the direct formula is numerically
/// indeterminate and the Cobb-Douglas limit A*K^a*L^(1-a) is used instead.
class CES final : public ProductionFunction {
public:
  static constexpr double kRhoLimitSwitch = 1e-6;

  explicit CES(CESParams params);
  const CESParams& params() const noexcept { return params_; }

  std::string family_name() const override { return "ces"; }
  std::string description() const override;

protected:
  double evaluate_impl(const Bundle& b) const override;
  Gradient gradient_impl(const Bundle& b) const override;

private:
  CESParams params_;
};

struct LeontiefParams {
  double capital_coef = 1.0;
  double labour_coef = 1.0;
  void validate() const;
};

/// Y = min(cK*K, cL*L). Not differentiable on the kink cK*K = cL*L; the
/// gradient there is an error, not a subgradient.
class Leontief final : public ProductionFunction {
public:
  /// Relative width of the band around the kink treated as non-differentiable.
  static constexpr double kKinkBand = 1e-6;

  explicit Leontief(LeontiefParams params = {});
  const LeontiefParams& params() const noexcept { return params_; }

  bool differentiable_everywhere() const noexcept override { return false; }
  bool differentiable_at(const Bundle& b) const override;

  std::string family_name() const override { return "leontief"; }
  std::string description() const override;

protected:
  double evaluate_impl(const Bundle& b) const override;
  Gradient gradient_impl(const Bundle& b) const override;

private:
  LeontiefParams params_;
};

struct PerturbedParams {
  CobbDouglasParams base;
  double shift = 0.0;  ///< additive constant c >= 0; c > 0 breaks homogeneity
  void validate() const;
};

/// Cobb-Douglas base plus an additive constant. The gradient field is the
/// base's, so the Euler residual equals the shift everywhere.
class Perturbed final : public ProductionFunction {
public:
  explicit Perturbed(PerturbedParams params);
  const PerturbedParams& params() const noexcept { return params_; }

  std::string family_name() const override { return "perturbed"; }
  std::string description() const override;

protected:
  double evaluate_impl(const Bundle& b) const override;
  Gradient gradient_impl(const Bundle& b) const override;

private:
  PerturbedParams params_;
  CobbDouglas base_;
};

/// Y - K*dY/dK - L*dY/dL; zero for degree-1 homogeneous technologies.
double euler_residual(const ProductionFunction& pf, const Bundle& b);

/// max over scales t of |Y(tK, tL) - t*Y(K, L)| / (t*Y(K, L)).
double homogeneity_max_residual(const ProductionFunction& pf, const Bundle& b,
                                std::span<const double> scales);

/// Central finite differences with relative step 1e-6*max(|coordinate|, 1),
/// clipped so the probe stays inside the domain.
Gradient finite_difference_gradient(const ProductionFunction& pf, const Bundle& b);

}  // namespace isoshare
