#include "isoshare/production.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isoshare {

double ProductionFunction::evaluate(const Bundle& b) const {
  require_interior(b);
  return evaluate_impl(b);
}

Gradient ProductionFunction::gradient(const Bundle& b) const {
  require_interior(b);
  if (!differentiable_at(b)) {
    std::ostringstream msg;
    msg << family_name() << " is not differentiable at (K=" << b.capital
        << ", L=" << b.labour << ")";
    throw NotDifferentiableError(msg.str());
  }
  return gradient_impl(b);
}

bool ProductionFunction::differentiable_at(const Bundle&) const { return true; }

Gradient ProductionFunction::gradient_impl(const Bundle& b) const {
  return finite_difference_gradient(*this, b);
}

Gradient finite_difference_gradient(const ProductionFunction& pf, const Bundle& b) {
  require_interior(b);
  // Relative step 1e-6*max(|coordinate|, 1), clipped so K-h and L-h stay positive.
  const double hk = std::min(1e-6 * std::max(std::abs(b.capital), 1.0), 0.5 * b.capital);
  const double hl = std::min(1e-6 * std::max(std::abs(b.labour), 1.0), 0.5 * b.labour);
  Gradient g;
  g.d_capital = (pf.evaluate({b.capital + hk, b.labour}) -
                 pf.evaluate({b.capital - hk, b.labour})) /
                (2.0 * hk);
  g.d_labour = (pf.evaluate({b.capital, b.labour + hl}) -
                pf.evaluate({b.capital, b.labour - hl})) /
               (2.0 * hl);
  return g;
}

double euler_residual(const ProductionFunction& pf, const Bundle& b) {
  const double y = pf.evaluate(b);
  const Gradient g = pf.gradient(b);
  return y - b.capital * g.d_capital - b.labour * g.d_labour;
}

double homogeneity_max_residual(const ProductionFunction& pf, const Bundle& b,
                                std::span<const double> scales) {
  const double y = pf.evaluate(b);
  double worst = 0.0;
  for (double t : scales) {
    require_positive(t, "scale");
    const double scaled = pf.evaluate({t * b.capital, t * b.labour});
    worst = std::max(worst, std::abs(scaled - t * y) / (t * y));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Cobb-Douglas

void CobbDouglasParams::validate() const {
  require_positive(scale, "A");
  if (!std::isfinite(alpha) || !(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in the open interval (0, 1), got " << alpha;
    throw DomainError(msg.str());
  }
}

CobbDouglas::CobbDouglas(CobbDouglasParams params) : params_(params) {
  params_.validate();
}

double CobbDouglas::evaluate_impl(const Bundle& b) const {
  return params_.scale * std::pow(b.capital, params_.alpha) *
         std::pow(b.labour, 1.0 - params_.alpha);
}

Gradient CobbDouglas::gradient_impl(const Bundle& b) const {
  const double y = evaluate_impl(b);
  return {params_.alpha * y / b.capital, (1.0 - params_.alpha) * y / b.labour};
}

std::string CobbDouglas::description() const {
  std::ostringstream out;
  out << "cobb-douglas(A=" << params_.scale << ", alpha=" << params_.alpha << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// CES

void CESParams::validate() const {
  require_positive(scale, "A");
  if (!std::isfinite(share) || !(share > 0.0 && share < 1.0)) {
    std::ostringstream msg;
    msg << "a must lie in the open interval (0, 1), got " << share;
    throw DomainError(msg.str());
  }
  if (!std::isfinite(rho) || rho > 1.0) {
    std::ostringstream msg;
    msg << "rho must be <= 1, got " << rho;
    throw DomainError(msg.str());
  }
  if (rho == 0.0) {
    throw DomainError("rho must be nonzero; the rho -> 0 limit is cobb-douglas");
  }
}

CES::CES(CESParams params) : params_(params) { params_.validate(); }

double CES::evaluate_impl(const Bundle& b) const {
  const CESParams& p = params_;
  if (std::abs(p.rho) < kRhoLimitSwitch) {
    return p.scale * std::pow(b.capital, p.share) * std::pow(b.labour, 1.0 - p.share);
  }
  const double mix = p.share * std::pow(b.capital, p.rho) +
                     (1.0 - p.share) * std::pow(b.labour, p.rho);
  return p.scale * std::pow(mix, 1.0 / p.rho);
}

Gradient CES::gradient_impl(const Bundle& b) const {
  const CESParams& p = params_;
  const double y = evaluate_impl(b);
  if (std::abs(p.rho) < kRhoLimitSwitch) {
    return {p.share * y / b.capital, (1.0 - p.share) * y / b.labour};
  }
  const double common = std::pow(p.scale, p.rho) * std::pow(y, 1.0 - p.rho);
  return {common * p.share * std::pow(b.capital, p.rho - 1.0),
          common * (1.0 - p.share) * std::pow(b.labour, p.rho - 1.0)};
}

std::string CES::description() const {
  std::ostringstream out;
  out << "ces(A=" << params_.scale << ", a=" << params_.share << ", rho=" << params_.rho
      << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// Leontief

void LeontiefParams::validate() const {
  require_positive(capital_coef, "k_coef");
  require_positive(labour_coef, "l_coef");
}

Leontief::Leontief(LeontiefParams params) : params_(params) { params_.validate(); }

double Leontief::evaluate_impl(const Bundle& b) const {
  return std::min(params_.capital_coef * b.capital, params_.labour_coef * b.labour);
}

bool Leontief::differentiable_at(const Bundle& b) const {
  const double ck = params_.capital_coef * b.capital;
  const double cl = params_.labour_coef * b.labour;
  return std::abs(ck - cl) > kKinkBand * std::max(ck, cl);
}

Gradient Leontief::gradient_impl(const Bundle& b) const {
  // gradient() has already excluded the kink band
  const double ck = params_.capital_coef * b.capital;
  const double cl = params_.labour_coef * b.labour;
  if (ck < cl) return {params_.capital_coef, 0.0};
  return {0.0, params_.labour_coef};
}

std::string Leontief::description() const {
  std::ostringstream out;
  out << "leontief(k_coef=" << params_.capital_coef << ", l_coef=" << params_.labour_coef
      << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// Perturbed

void PerturbedParams::validate() const {
  base.validate();
  if (!std::isfinite(shift) || shift < 0.0) {
    std::ostringstream msg;
    msg << "c must be a nonnegative finite number, got " << shift;
    throw DomainError(msg.str());
  }
}

Perturbed::Perturbed(PerturbedParams params) : params_(params), base_(params.base) {
  params_.validate();
}

double Perturbed::evaluate_impl(const Bundle& b) const {
  return base_.evaluate(b) + params_.shift;
}

Gradient Perturbed::gradient_impl(const Bundle& b) const { return base_.gradient(b); }

std::string Perturbed::description() const {
  std::ostringstream out;
  out << "perturbed(A=" << params_.base.scale << ", alpha=" << params_.base.alpha
      << ", c=" << params_.shift << ")";
  return out.str();
}

}  // namespace isoshare
