#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string_view>

namespace robin {

/// Data-regularity regimes for f in L^q, ordered from strongest to weakest:
///   bounded     : q > N/2, bounded solutions exist
///   energy      : 2N/(N+2-theta(N-2)) <= q < N/2, solutions lie in
///                 H^1 and in L^{q**(1-theta)}
///   non_energy  : (2N-N theta)/(N+2-N theta) <= q < energy lower bound,
///                 solutions lie in W^{1,s} only
///   below_scope : everything else; nothing is claimed there, including the
///                 single point q == N/2 where both neighbours are strict
enum class Regime { bounded, energy, non_energy, below_scope };

std::string_view regime_name(Regime r);

/// Exact arithmetic for thresholds; magnitudes here are tiny so an int64
/// rational never overflows in practice.
using Rational = boost::rational<long long>;

/// Every threshold and derived exponent for one (N, theta, q) triple.
/// Optional fields are set only in the regime where they mean something.
template <class T>
struct RegimeReportT {
  Regime regime = Regime::below_scope;

  T q_lower_nonenergy{};  ///< (2N - N theta)/(N + 2 - N theta)
  T q_lower_energy{};     ///< 2N/(N + 2 - theta(N-2))
  T q_bounded{};          ///< N/2

  std::optional<T> q_double_star;         ///< qN/(N - 2q)              (energy)
  std::optional<T> summability_exponent;  ///< q**(1 - theta)           (energy)
  std::optional<T> p_test;                ///< (1-theta)N(q-1)/(N-2q)   (energy)
  std::optional<T> trace_exponent;        ///< p_test + 1 - theta       (energy)
  std::optional<T> s;                     ///< N(2-theta)/(N-theta)     (non-energy)
  std::optional<T> s_conj;                ///< theta s/(2-s)            (non-energy)
};

using RegimeReport = RegimeReportT<double>;
using ExactRegimeReport = RegimeReportT<Rational>;

/// Classify (N, theta, q) against the three regimes.  Threshold comparisons
/// follow the inequality directions above exactly (boundary values land on
/// the stronger side when the window is closed there).  Instantiated for
/// double and Rational; with Rational inputs every comparison and derived
/// exponent is exact.
template <class T>
RegimeReportT<T> classify(int dimension, const T& theta, const T& q);

/// Summability of the power source f = A/|x|^gamma on a ball: f belongs to
/// the Marcinkiewicz space of index N/gamma and to L^q exactly for
/// q < N/gamma.  gamma == 0 yields +infinity for both.
struct SourceSummability {
  double marcinkiewicz_index = 0.0;
  double lebesgue_supremum = 0.0;
};

SourceSummability power_source_summability(int dimension, double gamma);

}  // namespace robin
