#pragma once

#include <cstddef>
#include <vector>

namespace grovesim::analytic {

/// Real amplitudes of a single-marked-state search after `k` rotations.
/// Every unmarked state shares amplitude `a`; alpha^2 + (N-1) a^2 = 1.
struct AnalyticState {
  std::size_t n = 0;
  double N = 0.0;
  double alpha = 0.0;
  double a = 0.0;
  std::size_t k = 0;

  double marked_probability() const { return alpha * alpha; }
  /// alpha^2 + (N-1) a^2.
  double total_probability() const { return alpha * alpha + (N - 1.0) * a * a; }
};

/// Largest search width for which N = 2^n is exact in a double mantissa.
inline constexpr std::size_t kMaxQubits = 52;

/// Uniform superposition: alpha = a = 1/sqrt(N). Throws ParameterError for
/// n == 0 or n > kMaxQubits.
AnalyticState initial_state(std::size_t n);

/// Mean amplitude once the oracle has negated the marked amplitude:
/// ((N-1) a - alpha) / N.
double mean_after_oracle(const AnalyticState& state);

/// One oracle + inversion-about-the-mean step on signed real amplitudes.
AnalyticState rotate(const AnalyticState& state);

/// alpha^2 after `k` rotations from the uniform state.
double marked_probability_after(std::size_t n, std::size_t k);

struct TableRow {
  std::size_t k = 0;
  double probability = 0.0;
};

/// Rows k = 1..max_k. Throws ParameterError when max_k == 0.
std::vector<TableRow> probability_table(std::size_t n, std::size_t max_k);

}  // namespace grovesim::analytic
