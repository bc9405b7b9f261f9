#include "qmut/classify.hpp"

#include <cmath>

namespace qmut {

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::Bounded: return "bounded";
    case Reason::MaxWeightExceedsTwo: return "max_weight_exceeds_two";
    case Reason::MarkovConstantExceedsFour:
      return "markov_constant_exceeds_four";
    case Reason::BothExceeded: return "both_exceeded";
    default: return "disconnected_trivially_bounded";
  }
}

namespace {

int nonzero_weights(const ExchangeTriple& b) {
  return (b.b12 != 0.0) + (b.b23 != 0.0) + (b.b13 != 0.0);
}

}  // namespace

Classification classify(const ExchangeTriple& b) {
  if (!is_finite(b))
    throw std::invalid_argument("classify: non-finite input triple");

  Classification out;
  const CanonicalForm c = canonicalize(b);
  out.markov_c = markov_constant(b);
  out.max_weight = c.p;
  out.boundary_margin = {c.p - 2.0, out.markov_c - 4.0};

  if (nonzero_weights(b) <= 1) {
    // Mutation can only flip the sign of an isolated arrow, so the class
    // norm is exactly norm(b) = sqrt(C).
    out.bounded = true;
    out.reason = Reason::DisconnectedTriviallyBounded;
    out.norm_bound = std::sqrt(out.markov_c);
    return out;
  }

  const bool p_ok = c.p <= 2.0;
  const bool c_ok = out.markov_c <= 4.0;
  out.bounded = p_ok && c_ok;
  if (out.bounded) {
    out.reason = Reason::Bounded;
    out.norm_bound = std::sqrt(out.markov_c);
  } else if (!p_ok && !c_ok) {
    out.reason = Reason::BothExceeded;
  } else if (!p_ok) {
    out.reason = Reason::MaxWeightExceedsTwo;
  } else {
    out.reason = Reason::MarkovConstantExceedsFour;
  }
  return out;
}

bool is_markov_quiver(const ExchangeTriple& b) {
  const CanonicalForm c = canonicalize(b);
  return c.p == 2.0 && c.q == 2.0 && c.r == 2.0 &&
         c.orientation == Orientation::Cyclic;
}

double norm_bound(const ExchangeTriple& b) {
  const Classification cls = classify(b);
  if (!cls.bounded)
    throw std::domain_error("norm_bound: mutation class is unbounded");
  if (cls.reason == Reason::DisconnectedTriviallyBounded)
    throw std::domain_error(
        "norm_bound: quiver has fewer than two nonzero weights");
  return std::sqrt(cls.markov_c);
}

}  // namespace qmut
