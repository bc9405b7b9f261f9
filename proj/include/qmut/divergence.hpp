#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qmut/exchange.hpp"

namespace qmut {

enum class WitnessStrategy {
  AcyclicPrefixThenAlternating,
  Alternating,
  MuStar,
};

const char* strategy_name(WitnessStrategy s);

struct WitnessStep {
  std::size_t index = 0;  // position in the trajectory; 0 is the start quiver
  int vertex = 0;         // vertex mutated to reach this quiver; 0 at index 0
  ExchangeTriple triple;
  double norm = 0.0;
  /// Certified lower bound, when the strategy provides one at this step.
  /// Alternating: P^i q0 on the steps that create q_i, P = p0^2 - p0 - 1.
  /// MuStar: (C/4)^floor((i+2)/2) q0, a lower bound for p_i q_i - r_i.
  std::optional<double> bound;
};

/// A mutation sequence together with per-step certified lower bounds proving
/// that the class norm exceeds any target. Replaying `sequence` from the
/// original quiver through mutate_sequence reproduces `steps` and reaches
/// `achieved_norm`.
struct DivergenceCertificate {
  WitnessStrategy strategy = WitnessStrategy::MuStar;
  MutationSequence sequence;
  double target = 0.0;
  double achieved_norm = 0.0;
  /// MuStar bounds are proven for start weights <= 2; with a larger start
  /// weight they are recorded but not guaranteed.
  bool bounds_guaranteed = true;
  std::vector<WitnessStep> steps;
};

inline constexpr double kMaxWitnessTarget = 1e12;
inline constexpr double kWeightCap = 1e300;
inline constexpr std::size_t kDefaultStepBudget = 1000000;

/// Shortest-known mutation prefix (length <= 2) taking a connected quiver to
/// a cyclic one without decreasing the norm. Identity for cyclic input.
/// Throws std::domain_error when fewer than two weights are nonzero.
std::pair<MutationSequence, ExchangeTriple> acyclic_to_cyclic(
    const ExchangeTriple& b);

/// Blow-up for a cyclic quiver whose max weight p0 exceeds 2: alternately
/// mutates the two endpoints of the max edge, which fixes p0 and drives the
/// other two weights through the recursion
///   r_i = p0 q_{i-1} - r_{i-1},   q_i = p0 r_i - q_{i-1},
/// with q_i > r_i > q_{i-1} > 0 and q_i >= (p0^2 - p0 - 1)^i q0 certified at
/// every step. Stops once the norm reaches `target`.
DivergenceCertificate alternating_blowup(
    const ExchangeTriple& b, double target,
    std::size_t step_budget = kDefaultStepBudget);

/// One mu* move: mutate at the vertex opposite the smallest-magnitude edge
/// (ties: smallest opposite-vertex index). Throws std::domain_error on
/// acyclic input.
std::pair<int, ExchangeTriple> mu_star_step(const ExchangeTriple& b);

/// Iterated mu* blow-up for a cyclic quiver with C(Q) > 4. With sorted
/// weights p_i >= q_i >= r_i at iterate i, certifies
///   p_i q_i - r_i > (C/4)^floor((i+2)/2) q_0
/// at every step and stops once the norm reaches `target`.
DivergenceCertificate mu_star_blowup(
    const ExchangeTriple& b, double target,
    std::size_t step_budget = kDefaultStepBudget);

/// Witness construction for any quiver classified unbounded: reduces to a
/// cyclic representative, then uses the alternating blow-up when its max
/// weight exceeds 2 and the mu* blow-up otherwise (all weights <= 2 forces
/// C > 4). Throws std::domain_error for bounded input.
DivergenceCertificate divergence_witness(
    const ExchangeTriple& b, double target,
    std::size_t step_budget = kDefaultStepBudget);

/// Experimental probe toward the sharpness of the sqrt(C) bound on bounded
/// classes: per round, (a) alternate mutations at the endpoints of the max
/// edge until the quiver is acyclic, then (b) mutate opposite the max edge,
/// growing it from p to p + qr. Records (quiver, norm) after each round;
/// stops early when a round adds less than 1e-12 or the alternation cycles
/// without progress (Markov-like classes). Heuristic: the recorded norms are
/// non-decreasing and stay below sqrt(C), with no convergence guarantee.
std::vector<std::pair<ExchangeTriple, double>> sharpness_probe(
    const ExchangeTriple& b, std::size_t iterations);

}  // namespace qmut
