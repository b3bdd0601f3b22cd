#include "besselzeros/zero_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "besselzeros/errors.hpp"

namespace besselzeros {

DerivTable build_deriv_table(UpsilonEngine& engine, int order) {
  if (order < 1) throw DomainError("derivative table order must be >= 1");
  DerivTable t;
  t.family = engine.family();
  t.order = order;
  t.zeta_derivs.push_back(RingElem::zeta());
  for (int k = 1; k <= order; ++k) t.zeta_derivs.push_back(ring_diff(t.zeta_derivs.back()));
  for (int j = 1; j <= order; ++j) {
    RingElem d = engine.upsilon(j);
    for (int k = 0; j + k <= order; ++k) {
      if (k > 0) d = ring_diff(d);
      t.ups_derivs.emplace(std::pair{j, k}, d);
    }
  }
  return t;
}

std::vector<RingElem> symbolic_zero_coefficients(const DerivTable& table, int terms) {
  if (terms > table.order) throw DomainError("derivative table too short for requested order");
  PointData<RingElem> at{table.zeta_derivs, table.ups_derivs, RingElem::monomial(1, {1, 0, 1})};
  std::vector<RingElem> out;
  for (int s = 1; s <= terms; ++s) out.push_back(zm_coefficient(s, at, out));
  return out;
}

PointData<BigReal> evaluate_table(const DerivTable& table, const Triple<BigReal>& at) {
  PointData<BigReal> pd;
  for (const RingElem& r : table.zeta_derivs) pd.zeta.push_back(ring_eval(r, at));
  for (const auto& [key, r] : table.ups_derivs) pd.ups.emplace(key, ring_eval(r, at));
  const BigReal zeta_prime = pd.zeta.at(1);
  if (zeta_prime.is_zero()) throw NumericFailure("zeta' vanished at the expansion point");
  pd.neg_inv_zeta_prime = -1 / zeta_prime;
  return pd;
}

std::vector<BigReal> zero_coefficients(const DerivTable& table, const LeadingTriple& triple, int terms) {
  if (terms > table.order) throw DomainError("derivative table too short for requested order");
  std::vector<BigReal> out{triple.z0};
  if (terms == 0) return out;
  const PointData<BigReal> pd = evaluate_table(table, triple.point());
  std::vector<BigReal> prior;
  for (int s = 1; s <= terms; ++s) {
    prior.push_back(zm_coefficient(s, pd, prior));
    out.push_back(prior.back());
  }
  return out;
}

ZeroSolver::ZeroSolver(int max_terms) : max_terms_(max_terms) {
  if (max_terms < 1) throw DomainError("ZeroSolver needs max_terms >= 1");
}

const DerivTable& ZeroSolver::table(Family family, int terms) {
  if (terms < 1 || terms > max_terms_) {
    throw DomainError("terms must be in 1.." + std::to_string(max_terms_));
  }
  auto it = tables_.find(family);
  if (it != tables_.end() && it->second.order >= terms) return it->second;
  auto& engine = engines_[family];
  if (!engine) engine = std::make_unique<UpsilonEngine>(family, max_terms_);
  return tables_.insert_or_assign(family, build_deriv_table(*engine, terms)).first->second;
}

namespace {

// Digits lost to cancellation among the pole terms of the coefficients when
// |zeta0| < 1: they behave like |zeta0|^-(3S+2).
int cancellation_digits(ZeroFamily family, const BigReal& nu, int m, int terms) {
  WorkingPrecision wp(WorkingPrecision::kMinDigits);
  const Bracket br = airy_zero_bracket(airy_kind(family), m);
  const double zero = std::fabs((br.lo.to_double() + br.hi.to_double()) / 2);
  // log10 |zeta0| = log10 |zero| - (2/3) log10 nu, taken in BigReal so huge nu cannot overflow.
  const double log_zeta = std::log10(zero) - 2.0 / 3.0 * log10(nu).to_double();
  if (!(log_zeta < 0)) return 0;
  const double extra = std::ceil((3 * terms + 2) * -log_zeta);
  return extra > ZeroSolver::kMaxWorkingDigits ? ZeroSolver::kMaxWorkingDigits + 1 : static_cast<int>(extra);
}

}  // namespace

ZeroResult ZeroSolver::solve(ZeroFamily family, const BigReal& nu, int m, int terms, int digits) {
  if (nu.sign() <= 0) throw DomainError("nu must be positive");
  if (m < 1) throw DomainError("m must be >= 1, got " + std::to_string(m));
  if (terms < 0 || terms > max_terms_) {
    throw DomainError("terms must be in 0.." + std::to_string(max_terms_));
  }
  if (digits < WorkingPrecision::kMinDigits) {
    throw DomainError("digits must be >= " + std::to_string(WorkingPrecision::kMinDigits));
  }
  const int extra = cancellation_digits(family, nu, m, std::max(terms, 1));
  if (digits + kGuardDigits + extra > kMaxWorkingDigits) {
    throw NumericFailure("nu = " + nu.to_string(10) + " needs more than " + std::to_string(kMaxWorkingDigits) +
                         " working digits");
  }
  WorkingPrecision wp(digits + kGuardDigits + extra);

  ZeroResult r;
  r.family = family;
  r.nu = at_working_precision(nu);
  r.m = m;
  r.terms = terms;
  r.digits = digits;
  r.triple = leading_triple(family, r.nu, m, &zeros_);
  r.proximity = r.triple.z0_minus_1;
  if (terms == 0) {
    r.coefficients = {r.triple.z0};
  } else {
    r.coefficients = zero_coefficients(table(coefficient_family(family), terms), r.triple, terms);
  }
  const BigReal inv_nu2 = 1 / (r.nu * r.nu);
  BigReal scale = 1, sum = 0;
  for (const BigReal& c : r.coefficients) {
    sum += c * scale;
    scale *= inv_nu2;
    r.partial_sums.push_back(sum);
    r.x_values.push_back(r.nu * sum);
  }
  return r;
}

ZeroResult zero_expansion(ZeroFamily family, const BigReal& nu, int m, int terms, int digits) {
  ZeroSolver solver(std::max(terms, 1));
  return solver.solve(family, nu, m, terms, digits);
}

}  // namespace besselzeros
