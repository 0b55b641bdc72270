#include "grovesim/analytic.hpp"

#include <cmath>
#include <string>

#include "grovesim/errors.hpp"

namespace grovesim::analytic {

AnalyticState initial_state(std::size_t n) {
  if (n == 0 || n > kMaxQubits)
    throw ParameterError("analytic model needs 1 <= n <= " + std::to_string(kMaxQubits));
  AnalyticState s;
  s.n = n;
  s.N = std::ldexp(1.0, static_cast<int>(n));
  s.alpha = s.a = 1.0 / std::sqrt(s.N);
  return s;
}

double mean_after_oracle(const AnalyticState& state) {
  return ((state.N - 1.0) * state.a - state.alpha) / state.N;
}

AnalyticState rotate(const AnalyticState& state) {
  AnalyticState next = state;
  const double flipped = -state.alpha;
  const double mean = mean_after_oracle(state);
  next.alpha = 2.0 * mean - flipped;
  next.a = 2.0 * mean - state.a;
  ++next.k;
  return next;
}

double marked_probability_after(std::size_t n, std::size_t k) {
  AnalyticState s = initial_state(n);
  for (std::size_t i = 0; i < k; ++i) s = rotate(s);
  return s.marked_probability();
}

std::vector<TableRow> probability_table(std::size_t n, std::size_t max_k) {
  if (max_k == 0) throw ParameterError("probability table needs at least one rotation");
  std::vector<TableRow> rows;
  rows.reserve(max_k);
  AnalyticState s = initial_state(n);
  for (std::size_t k = 1; k <= max_k; ++k) {
    s = rotate(s);
    rows.push_back({k, s.marked_probability()});
  }
  return rows;
}

}  // namespace grovesim::analytic
