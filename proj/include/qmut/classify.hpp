#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qmut/exchange.hpp"

namespace qmut {

enum class Reason {
  Bounded,
  MaxWeightExceedsTwo,
  MarkovConstantExceedsFour,
  BothExceeded,
  DisconnectedTriviallyBounded,
};

const char* reason_name(Reason r);

/// Boundedness verdict for the mutation class of a quiver, decided from the
/// given representative alone: [Q] is bounded iff p <= 2 and C(Q) <= 4.
struct Classification {
  bool bounded = false;
  double markov_c = 0.0;
  double max_weight = 0.0;
  /// sqrt(C(Q)); set whenever the class is bounded. For a quiver with at
  /// most one nonzero weight this equals norm(B), since mutation then only
  /// flips signs.
  std::optional<double> norm_bound;
  Reason reason = Reason::Bounded;
  /// (p - 2, C - 4): positive entries are the failed margins.
  std::pair<double, double> boundary_margin{0.0, 0.0};
};

/// Boundary comparisons (p <= 2, C <= 4) are exact IEEE comparisons; the
/// margins let callers detect ill-conditioned inputs themselves.
Classification classify(const ExchangeTriple& b);

/// True iff canonicalize(b) is exactly (2, 2, 2, Cyclic).
bool is_markov_quiver(const ExchangeTriple& b);

/// sqrt(C(Q)), the norm bound of a bounded class. Throws std::domain_error
/// when the class is unbounded or the quiver has fewer than two nonzero
/// weights.
double norm_bound(const ExchangeTriple& b);

}  // namespace qmut
