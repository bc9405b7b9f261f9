#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmut {

/// Signed weights of a rank-3 skew-symmetric exchange matrix.
///
/// The triple (b12, b23, b13) stands for the matrix
///
///     (   0    b12   b13 )
///     ( -b12    0    b23 )
///     ( -b13  -b23    0  )
///
/// A positive b12 is an arrow 1 -> 2 of that weight; a negative value is the
/// reversed arrow. Same pattern for b23 (2 -> 3) and b13 (1 -> 3).
struct ExchangeTriple {
  double b12 = 0.0;
  double b23 = 0.0;
  double b13 = 0.0;
};

enum class Orientation { Cyclic, Acyclic };

/// Unsigned weights sorted p >= q >= r >= 0 plus the orientation of the
/// underlying directed graph. A triple with a zero weight is always Acyclic.
struct CanonicalForm {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  Orientation orientation = Orientation::Acyclic;
};

/// Vertices in {1,2,3}, applied left to right.
using MutationSequence = std::vector<int>;

/// A weight left the finite double range. Carries the offending entry name
/// and, when raised while walking a sequence, the step index (0-based; npos
/// when the error did not occur inside a sequence).
class NumericRangeError : public std::range_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  NumericRangeError(const std::string& what, std::string entry,
                    std::size_t step = npos)
      : std::range_error(what), entry_(std::move(entry)), step_(step) {}

  const std::string& entry() const { return entry_; }
  std::size_t step() const { return step_; }

 private:
  std::string entry_;
  std::size_t step_;
};

// Edges are indexed 0:{1,2}, 1:{2,3}, 2:{1,3}, matching the triple layout.
constexpr std::pair<int, int> edge_vertices(int edge) {
  switch (edge) {
    case 0: return {1, 2};
    case 1: return {2, 3};
    default: return {1, 3};
  }
}

/// Vertex not incident to the given edge.
constexpr int opposite_vertex(int edge) {
  switch (edge) {
    case 0: return 3;
    case 1: return 1;
    default: return 2;
  }
}

/// Edge not incident to the given vertex.
constexpr int opposite_edge(int vertex) {
  switch (vertex) {
    case 1: return 1;
    case 2: return 2;
    default: return 0;
  }
}

double edge_weight(const ExchangeTriple& b, int edge);

bool is_finite(const ExchangeTriple& b);

/// Max absolute weight of the quiver.
double norm(const ExchangeTriple& b);

/// True iff the three arrows form a directed 3-cycle. A zero weight means no
/// arrow, hence false. Sign comparisons are exact; callers wanting fuzz apply
/// their own threshold first.
bool is_cyclic(const ExchangeTriple& b);

CanonicalForm canonicalize(const ExchangeTriple& b);

/// Markov constant C(Q) = p^2 + q^2 + r^2 -+ pqr (minus when cyclic, plus
/// when acyclic). Invariant under mutation.
double markov_constant(const ExchangeTriple& b);

/// Mutation at vertex k in {1,2,3}: weights on the two edges at k flip sign,
/// the opposite edge picks up the exchange term
///   b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
///
/// Throws std::invalid_argument for k outside {1,2,3} or non-finite input,
/// NumericRangeError if the result overflows.
ExchangeTriple mutate(const ExchangeTriple& b, int k);

/// Full trajectory [B, mu_{k1}(B), mu_{k2}mu_{k1}(B), ...]; length
/// seq.size() + 1. A NumericRangeError from an overflowing step is rethrown
/// with that step's index attached.
std::vector<ExchangeTriple> mutate_sequence(const ExchangeTriple& b,
                                            const MutationSequence& seq);

}  // namespace qmut
