#include "qmut/exchange.hpp"

#include <algorithm>
#include <cmath>

namespace qmut {

double edge_weight(const ExchangeTriple& b, int edge) {
  switch (edge) {
    case 0: return b.b12;
    case 1: return b.b23;
    default: return b.b13;
  }
}

bool is_finite(const ExchangeTriple& b) {
  return std::isfinite(b.b12) && std::isfinite(b.b23) && std::isfinite(b.b13);
}

double norm(const ExchangeTriple& b) {
  return std::max({std::fabs(b.b12), std::fabs(b.b23), std::fabs(b.b13)});
}

bool is_cyclic(const ExchangeTriple& b) {
  if (b.b12 == 0.0 || b.b23 == 0.0 || b.b13 == 0.0) return false;
  // Arrows 1->2->3->1 (or the reverse cycle) iff b12, b23 and -b13 share a
  // strict sign.
  const bool s12 = b.b12 > 0.0;
  const bool s23 = b.b23 > 0.0;
  const bool s31 = b.b13 < 0.0;
  return s12 == s23 && s23 == s31;
}

CanonicalForm canonicalize(const ExchangeTriple& b) {
  double w[3] = {std::fabs(b.b12), std::fabs(b.b23), std::fabs(b.b13)};
  std::sort(w, w + 3, std::greater<double>());
  return CanonicalForm{w[0], w[1], w[2],
                       is_cyclic(b) ? Orientation::Cyclic
                                    : Orientation::Acyclic};
}

double markov_constant(const ExchangeTriple& b) {
  const CanonicalForm c = canonicalize(b);
  const double sum = c.p * c.p + c.q * c.q + c.r * c.r;
  const double prod = c.p * c.q * c.r;
  return c.orientation == Orientation::Cyclic ? sum - prod : sum + prod;
}

ExchangeTriple mutate(const ExchangeTriple& b, int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("mutate: vertex index must be 1, 2 or 3, got " +
                                std::to_string(k));
  if (!is_finite(b))
    throw std::invalid_argument("mutate: non-finite input triple");

  ExchangeTriple out;
  switch (k) {
    case 1:
      // b23 is opposite vertex 1; exchange term uses b21 = -b12 and b13.
      out.b12 = -b.b12;
      out.b13 = -b.b13;
      out.b23 =
          b.b23 + (std::fabs(b.b12) * b.b13 - b.b12 * std::fabs(b.b13)) / 2.0;
      break;
    case 2:
      out.b12 = -b.b12;
      out.b23 = -b.b23;
      out.b13 =
          b.b13 + (std::fabs(b.b12) * b.b23 + b.b12 * std::fabs(b.b23)) / 2.0;
      break;
    default:
      // b12 is opposite vertex 3; exchange term uses b13 and b32 = -b23.
      out.b13 = -b.b13;
      out.b23 = -b.b23;
      out.b12 =
          b.b12 + (b.b13 * std::fabs(b.b23) - std::fabs(b.b13) * b.b23) / 2.0;
      break;
  }

  if (!is_finite(out)) {
    const char* entry = (k == 1) ? "b23" : (k == 2) ? "b13" : "b12";
    throw NumericRangeError("mutate: weight overflowed at vertex " +
                                std::to_string(k),
                            entry);
  }
  return out;
}

std::vector<ExchangeTriple> mutate_sequence(const ExchangeTriple& b,
                                            const MutationSequence& seq) {
  std::vector<ExchangeTriple> path;
  path.reserve(seq.size() + 1);
  path.push_back(b);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      path.push_back(mutate(path.back(), seq[i]));
    } catch (const NumericRangeError& e) {
      throw NumericRangeError(std::string(e.what()) + " (sequence step " +
                                  std::to_string(i) + ")",
                              e.entry(), i);
    }
  }
  return path;
}

}  // namespace qmut
