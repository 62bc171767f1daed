#pragma once

#include <optional>
#include <string>

namespace kproj {

// The three angle families. Every sequence is pinned so that alpha_1 = pi/2,
// which fixes the scale c:
//   A: alpha_n = c * n^(-q),        c = pi/2
//   B: alpha_n = c * lambda^n,      c = pi/(2*lambda)
//   C: alpha_n = c * lambda^(n^2),  c = pi/(2*lambda)
enum class Case { A, B, C };

std::string to_string(Case c);
std::optional<Case> case_from_string(const std::string& s);

enum class Precision { standard, extended };

// Strictly decreasing angles in (0, pi/2] satisfying the midpoint-convexity
// condition 2*alpha_{n+1} <= alpha_n + alpha_{n+2} for n >= min_index().
//
// All evaluators are pure; differences use factored closed forms so that
// alpha_m - alpha_n keeps full relative precision even when the values agree
// to hundreds of digits (family C reaches 1e-57 by n = 12).
class AlphaSequence {
 public:
  static AlphaSequence case_a(double q);
  static AlphaSequence case_b(double lambda);
  static AlphaSequence case_c(double lambda,
                              Precision mode = Precision::standard);

  Case family() const { return family_; }
  double scale() const { return c_; }           // the derived constant c
  double lambda() const { return lambda_; }     // families B, C
  double exponent() const { return q_; }        // family A
  Precision precision() const { return mode_; }

  // First index from which the midpoint-convexity condition holds for all
  // larger tested indices (1 except family C with lambda near 1).
  int min_index() const { return min_index_; }

  // Largest index the binary64 representation is considered meaningful for.
  int index_cap() const;

  double alpha(int n) const;                    // n >= 1
  double alpha_diff(int m, int n) const;        // alpha_m - alpha_n, m < n
  double second_diff(int n) const;              // alpha_{n-1} - 2a_n + a_{n+1}
  double step(int n) const { return alpha_diff(n - 1, n); }  // b_n, n >= 2

 private:
  AlphaSequence(Case family, double lambda, double q, Precision mode);

  Case family_;
  double c_ = 0.0;
  double lambda_ = 0.0;
  double q_ = 0.0;
  int min_index_ = 1;
  Precision mode_ = Precision::standard;
};

struct ConditionReport {
  std::optional<int> first_failure;  // smallest violating index, if any
  int checked_up_to = 0;
};

// Checks strict decrease and midpoint convexity for 1 <= n <= n_max.
ConditionReport check_condition_c1(const AlphaSequence& seq, int n_max);

// Smallest N such that the condition holds for every tested n in
// [N, horizon]. Throws if violations persist too close to the horizon.
int min_valid_index(const AlphaSequence& seq, int horizon = 64);

}  // namespace kproj
