#include "kproj/sequences.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kproj {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

std::string to_string(Case c) {
  switch (c) {
    case Case::A: return "A";
    case Case::B: return "B";
    case Case::C: return "C";
  }
  return "?";
}

std::optional<Case> case_from_string(const std::string& s) {
  if (s == "A") return Case::A;
  if (s == "B") return Case::B;
  if (s == "C") return Case::C;
  return std::nullopt;
}

AlphaSequence::AlphaSequence(Case family, double lambda, double q,
                             Precision mode)
    : family_(family), lambda_(lambda), q_(q), mode_(mode) {
  switch (family_) {
    case Case::A:
      if (!(q > 0.0) || !std::isfinite(q))
        throw std::invalid_argument("case A requires q > 0");
      c_ = kHalfPi;  // alpha_1 = c * 1^(-q) = pi/2
      break;
    case Case::B:
    case Case::C:
      if (!(lambda > 0.0) || !(lambda < 1.0))
        throw std::invalid_argument("lambda must lie in (0,1)");
      c_ = kHalfPi / lambda;  // alpha_1 = c * lambda = pi/2
      break;
  }
  if (family_ == Case::C && lambda_ >= 0.5) {
    min_index_ = min_valid_index(*this);
  }
}

AlphaSequence AlphaSequence::case_a(double q) {
  return AlphaSequence(Case::A, 0.0, q, Precision::standard);
}

AlphaSequence AlphaSequence::case_b(double lambda) {
  return AlphaSequence(Case::B, lambda, 0.0, Precision::standard);
}

AlphaSequence AlphaSequence::case_c(double lambda, Precision mode) {
  return AlphaSequence(Case::C, lambda, 0.0, mode);
}

int AlphaSequence::index_cap() const {
  if (family_ != Case::C) return 10000;
  return mode_ == Precision::extended ? 24 : 12;
}

double AlphaSequence::alpha(int n) const {
  if (n < 1) throw std::invalid_argument("alpha index must be >= 1");
  const double dn = static_cast<double>(n);
  switch (family_) {
    case Case::A: return c_ * std::pow(dn, -q_);
    case Case::B: return c_ * std::pow(lambda_, dn);
    case Case::C: return c_ * std::pow(lambda_, dn * dn);
  }
  return 0.0;
}

double AlphaSequence::alpha_diff(int m, int n) const {
  if (m < 1 || m >= n) throw std::invalid_argument("alpha_diff needs 1<=m<n");
  const double dm = static_cast<double>(m);
  const double dn = static_cast<double>(n);
  switch (family_) {
    case Case::A:
      // c*m^-q*(1 - (m/n)^q), with (m/n)^q = exp(-q*log1p((n-m)/m))
      return c_ * std::pow(dm, -q_) *
             -std::expm1(-q_ * std::log1p((dn - dm) / dm));
    case Case::B:
      return c_ * std::pow(lambda_, dm) *
             -std::expm1((dn - dm) * std::log(lambda_));
    case Case::C:
      return c_ * std::pow(lambda_, dm * dm) *
             -std::expm1((dn * dn - dm * dm) * std::log(lambda_));
  }
  return 0.0;
}

double AlphaSequence::second_diff(int n) const {
  if (n < 2) throw std::invalid_argument("second_diff needs n >= 2");
  // b_n - b_{n+1}; the subtraction is benign for all three families
  // (the terms differ by a factor bounded away from 1 except family A,
  // where the loss is ~log10(n) digits and stays within 1e-12 relative).
  return alpha_diff(n - 1, n) - alpha_diff(n, n + 1);
}

ConditionReport check_condition_c1(const AlphaSequence& seq, int n_max) {
  if (n_max < 3) throw std::invalid_argument("check_condition_c1: n_max >= 3");
  ConditionReport report;
  report.checked_up_to = n_max;
  for (int n = 1; n + 2 <= n_max; ++n) {
    const double b1 = seq.alpha_diff(n, n + 1);      // alpha_n - alpha_{n+1}
    const double b2 = seq.alpha_diff(n + 1, n + 2);  // alpha_{n+1} - a_{n+2}
    const bool decreasing = b1 > 0.0 && b2 > 0.0;
    // midpoint convexity: b1 >= b2, up to a few ulps
    const bool convex = b1 - b2 >= -1e-14 * b1;
    if (!decreasing || !convex) {
      report.first_failure = n;
      return report;
    }
  }
  return report;
}

int min_valid_index(const AlphaSequence& seq, int horizon) {
  if (horizon < 4) throw std::invalid_argument("min_valid_index: horizon");
  int last_violation = 0;
  for (int n = 1; n + 2 <= horizon; ++n) {
    const double b1 = seq.alpha_diff(n, n + 1);
    const double b2 = seq.alpha_diff(n + 1, n + 2);
    if (!(b1 > 0.0) || b1 - b2 < -1e-14 * b1) last_violation = n;
  }
  if (last_violation >= horizon - 3)
    throw std::domain_error(
        "min_valid_index: condition still violated near the horizon");
  return last_violation + 1;
}

}  // namespace kproj
