#include "qmut/divergence.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmut/classify.hpp"

namespace qmut {

const char* strategy_name(WitnessStrategy s) {
  switch (s) {
    case WitnessStrategy::AcyclicPrefixThenAlternating:
      return "acyclic_prefix_then_alternating";
    case WitnessStrategy::Alternating: return "alternating";
    default: return "mu_star";
  }
}

namespace {

std::array<double, 3> edge_mags(const ExchangeTriple& b) {
  return {std::fabs(b.b12), std::fabs(b.b23), std::fabs(b.b13)};
}

int max_edge(const ExchangeTriple& b) {
  const auto m = edge_mags(b);
  int e = 0;
  if (m[1] > m[e]) e = 1;
  if (m[2] > m[e]) e = 2;
  return e;
}

struct VertexRoles {
  int out[4] = {0, 0, 0, 0};
  int in[4] = {0, 0, 0, 0};
};

VertexRoles arrow_roles(const ExchangeTriple& b) {
  VertexRoles r;
  const double w[3] = {b.b12, b.b23, b.b13};
  for (int e = 0; e < 3; ++e) {
    if (w[e] == 0.0) continue;
    auto [a, c] = edge_vertices(e);
    if (w[e] < 0.0) std::swap(a, c);
    ++r.out[a];
    ++r.in[c];
  }
  return r;
}

void check_target(double target) {
  if (!std::isfinite(target))
    throw std::invalid_argument("blow-up target must be finite");
  if (target > kMaxWitnessTarget)
    throw std::invalid_argument("blow-up target exceeds the 1e12 cap");
}

void check_weight_cap(const ExchangeTriple& b, std::size_t step) {
  if (norm(b) > kWeightCap)
    throw NumericRangeError("blow-up weight exceeded 1e300", "norm", step);
}

WitnessStep make_step(std::size_t index, int vertex, const ExchangeTriple& b,
                      std::optional<double> bound = std::nullopt) {
  return WitnessStep{index, vertex, b, norm(b), bound};
}

[[noreturn]] void budget_exhausted(std::size_t budget) {
  throw std::runtime_error("blow-up step budget of " + std::to_string(budget) +
                           " exhausted before reaching the target");
}

}  // namespace

std::pair<MutationSequence, ExchangeTriple> acyclic_to_cyclic(
    const ExchangeTriple& b) {
  if (!is_finite(b))
    throw std::invalid_argument("acyclic_to_cyclic: non-finite input");
  const int nonzero =
      (b.b12 != 0.0) + (b.b23 != 0.0) + (b.b13 != 0.0);
  if (nonzero < 2)
    throw std::domain_error(
        "acyclic_to_cyclic: quiver must have at least two nonzero weights");
  if (is_cyclic(b)) return {{}, b};

  MutationSequence seq;
  ExchangeTriple cur = b;
  if (nonzero == 2) {
    // The two arrows share the vertex opposite the zero edge. If that vertex
    // is a source or a sink, one magnitude-preserving mutation at a far
    // vertex reorients it into a flow-through path first.
    int zero_edge = 0;
    for (int e = 0; e < 3; ++e)
      if (edge_weight(cur, e) == 0.0) zero_edge = e;
    const int shared = opposite_vertex(zero_edge);
    const auto roles = arrow_roles(cur);
    if (roles.out[shared] != 1 || roles.in[shared] != 1) {
      const int far = edge_vertices(zero_edge).first;
      seq.push_back(far);
      cur = mutate(cur, far);
    }
    seq.push_back(shared);
    cur = mutate(cur, shared);
  } else {
    // Acyclic with three arrows: unique flow-through vertex; mutating there
    // turns the source->sink weight r into pq + r and closes the cycle.
    const auto roles = arrow_roles(cur);
    int mid = 1;
    for (int v = 1; v <= 3; ++v)
      if (roles.out[v] == 1 && roles.in[v] == 1) mid = v;
    seq.push_back(mid);
    cur = mutate(cur, mid);
  }
  if (!is_cyclic(cur))
    throw std::logic_error("acyclic_to_cyclic: result is not cyclic");
  return {seq, cur};
}

DivergenceCertificate alternating_blowup(const ExchangeTriple& b,
                                         double target,
                                         std::size_t step_budget) {
  if (!is_cyclic(b))
    throw std::domain_error("alternating_blowup: input must be cyclic");
  const CanonicalForm canon = canonicalize(b);
  if (!(canon.p > 2.0))
    throw std::domain_error(
        "alternating_blowup: requires a weight larger than 2, max is " +
        std::to_string(canon.p));
  check_target(target);

  DivergenceCertificate cert;
  cert.strategy = WitnessStrategy::Alternating;
  cert.target = target;
  cert.steps.push_back(make_step(0, 0, b));
  cert.achieved_norm = norm(b);
  if (cert.achieved_norm >= target) return cert;

  const int emax = max_edge(b);
  const auto [u, v] = edge_vertices(emax);
  const auto mags = edge_mags(b);
  const double p0 = mags[emax];
  // Mutating at a vertex rewrites its opposite edge, so the first move is at
  // the endpoint opposite the smaller of the two remaining weights.
  const double w_opp_u = mags[opposite_edge(u)];
  const double w_opp_v = mags[opposite_edge(v)];
  const double q0 = std::max(w_opp_u, w_opp_v);
  const double r0 = std::min(w_opp_u, w_opp_v);
  const double growth = p0 * p0 - p0 - 1.0;  // > 1 since p0 > 2

  ExchangeTriple cur = b;
  int at = (w_opp_u <= w_opp_v) ? u : v;
  double q_prev = q0;
  double r_cur = r0;
  double bound = q0;
  std::size_t pair_index = 0;

  for (std::size_t step = 1;; ++step) {
    if (step > step_budget) budget_exhausted(step_budget);
    cur = mutate(cur, at);
    check_weight_cap(cur, step);
    const double created = std::fabs(edge_weight(cur, opposite_edge(at)));
    std::optional<double> step_bound;
    if (step % 2 == 1) {
      // r_{i+1} = p0 q_i - r_i; must exceed q_i (eq. chain r_i > q_{i-1}).
      if (!(created > q_prev * (1.0 - 1e-12)) || !(created > 0.0))
        throw std::logic_error(
            "alternating_blowup: r_i > q_{i-1} > 0 violated");
      r_cur = created;
    } else {
      ++pair_index;
      bound *= growth;
      if (!(created > r_cur * (1.0 - 1e-12)))
        throw std::logic_error("alternating_blowup: q_i > r_i violated");
      if (!(created >= bound * (1.0 - 1e-12)))
        throw std::logic_error(
            "alternating_blowup: growth bound q_i >= P^i q0 violated");
      q_prev = created;
      step_bound = bound;
    }
    cert.steps.push_back(make_step(step, at, cur, step_bound));
    cert.sequence.push_back(at);
    cert.achieved_norm = std::max(cert.achieved_norm, norm(cur));
    if (cert.achieved_norm >= target) break;
    at = (at == u) ? v : u;
  }
  return cert;
}

std::pair<int, ExchangeTriple> mu_star_step(const ExchangeTriple& b) {
  if (!is_cyclic(b))
    throw std::domain_error("mu_star_step: input must be cyclic");
  const auto mags = edge_mags(b);
  const double mn = std::min({mags[0], mags[1], mags[2]});
  int vertex = 4;
  for (int e = 0; e < 3; ++e)
    if (mags[e] == mn) vertex = std::min(vertex, opposite_vertex(e));
  return {vertex, mutate(b, vertex)};
}

DivergenceCertificate mu_star_blowup(const ExchangeTriple& b, double target,
                                     std::size_t step_budget) {
  if (!is_cyclic(b))
    throw std::domain_error("mu_star_blowup: input must be cyclic");
  const double c = markov_constant(b);
  if (!(c > 4.0))
    throw std::domain_error(
        "mu_star_blowup: requires C(Q) > 4, got C = " + std::to_string(c));
  check_target(target);

  const CanonicalForm start = canonicalize(b);
  const double q0 = start.q;
  const double ratio = c / 4.0;

  DivergenceCertificate cert;
  cert.strategy = WitnessStrategy::MuStar;
  cert.target = target;
  cert.bounds_guaranteed = start.p <= 2.0;

  auto certified_bound = [&](std::size_t i) {
    return std::pow(ratio, static_cast<double>((i + 2) / 2)) * q0;
  };
  auto check_iterate = [&](const ExchangeTriple& q, std::size_t i,
                           double bound) {
    const CanonicalForm cf = canonicalize(q);
    const double monitored = cf.p * cf.q - cf.r;
    if (cert.bounds_guaranteed && !(monitored > bound))
      throw std::logic_error(
          "mu_star_blowup: certified inequality p_i q_i - r_i > "
          "(C/4)^floor((i+2)/2) q0 violated at iterate " +
          std::to_string(i));
    return monitored;
  };

  double bound0 = certified_bound(0);
  double prev_monitored = check_iterate(b, 0, bound0);
  cert.steps.push_back(make_step(0, 0, b, bound0));
  cert.achieved_norm = norm(b);
  if (cert.achieved_norm >= target) return cert;

  ExchangeTriple cur = b;
  for (std::size_t i = 1;; ++i) {
    if (i > step_budget) budget_exhausted(step_budget);
    auto [vertex, next] = mu_star_step(cur);
    cur = next;
    check_weight_cap(cur, i);
    const double bound = certified_bound(i);
    const double monitored = check_iterate(cur, i, bound);
    if (cert.bounds_guaranteed && !(monitored > prev_monitored))
      throw std::logic_error(
          "mu_star_blowup: monitored quantity failed to increase");
    prev_monitored = monitored;
    cert.steps.push_back(make_step(i, vertex, cur, bound));
    cert.sequence.push_back(vertex);
    cert.achieved_norm = std::max(cert.achieved_norm, norm(cur));
    if (cert.achieved_norm >= target) break;
  }
  return cert;
}

DivergenceCertificate divergence_witness(const ExchangeTriple& b,
                                         double target,
                                         std::size_t step_budget) {
  const Classification cls = classify(b);
  if (cls.bounded)
    throw std::domain_error(
        "divergence_witness: mutation class is bounded (reason: " +
        std::string(reason_name(cls.reason)) + ")");
  check_target(target);

  auto [prefix, rep] = acyclic_to_cyclic(b);
  const CanonicalForm canon = canonicalize(rep);
  DivergenceCertificate engine =
      canon.p > 2.0 ? alternating_blowup(rep, target,
                                         step_budget - prefix.size())
                    : mu_star_blowup(rep, target, step_budget - prefix.size());
  if (prefix.empty()) return engine;

  DivergenceCertificate cert;
  cert.strategy = engine.strategy == WitnessStrategy::Alternating
                      ? WitnessStrategy::AcyclicPrefixThenAlternating
                      : WitnessStrategy::MuStar;
  cert.target = target;
  cert.bounds_guaranteed = engine.bounds_guaranteed;
  cert.sequence = prefix;
  cert.sequence.insert(cert.sequence.end(), engine.sequence.begin(),
                       engine.sequence.end());

  cert.steps.push_back(make_step(0, 0, b));
  ExchangeTriple cur = b;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    cur = mutate(cur, prefix[i]);
    // The last prefix step lands on the cyclic representative and inherits
    // the engine's bound recorded there.
    std::optional<double> bound =
        (i + 1 == prefix.size()) ? engine.steps.front().bound : std::nullopt;
    cert.steps.push_back(make_step(i + 1, prefix[i], cur, bound));
  }
  for (std::size_t i = 1; i < engine.steps.size(); ++i) {
    WitnessStep s = engine.steps[i];
    s.index = prefix.size() + i;
    cert.steps.push_back(s);
  }
  cert.achieved_norm = norm(b);
  for (const WitnessStep& s : cert.steps)
    cert.achieved_norm = std::max(cert.achieved_norm, s.norm);
  return cert;
}

std::vector<std::pair<ExchangeTriple, double>> sharpness_probe(
    const ExchangeTriple& b, std::size_t iterations) {
  const Classification cls = classify(b);
  if (!cls.bounded)
    throw std::domain_error("sharpness_probe: mutation class is unbounded");
  if (!(cls.markov_c > 0.0))
    throw std::domain_error("sharpness_probe: requires C(Q) > 0");

  constexpr std::size_t kAlternationCap = 10000;
  std::vector<std::pair<ExchangeTriple, double>> rounds;
  rounds.emplace_back(b, norm(b));

  ExchangeTriple cur = b;
  double prev_tail = -1.0;  // q^2 + r^2 of the previous acyclic representative
  for (std::size_t round = 0; round < iterations; ++round) {
    // (a) alternate at the endpoints of the max edge until acyclic.
    if (is_cyclic(cur)) {
      const int emax = max_edge(cur);
      const auto [u, v] = edge_vertices(emax);
      int at = u;
      CanonicalForm before = canonicalize(cur);
      std::size_t taken = 0;
      while (is_cyclic(cur)) {
        if (taken == kAlternationCap)
          throw std::runtime_error(
              "sharpness_probe: no acyclic representative within 10^4 "
              "alternating mutations");
        cur = mutate(cur, at);
        at = (at == u) ? v : u;
        ++taken;
        if (taken % 2 == 0) {
          // A full pair that reproduces the weights means the alternation
          // cycles (e.g. the Markov quiver): the probe has degenerated.
          const CanonicalForm now = canonicalize(cur);
          const bool same = std::fabs(now.p - before.p) <= 1e-14 * (1.0 + before.p) &&
                            std::fabs(now.q - before.q) <= 1e-14 * (1.0 + before.q) &&
                            std::fabs(now.r - before.r) <= 1e-14 * (1.0 + before.r);
          if (same && is_cyclic(cur)) return rounds;
          before = now;
        }
      }
    }

    // Markov-constant bookkeeping from remark identity: successive acyclic
    // representatives satisfy (q')^2 + (r')^2 <= q^2 + r^2.
    const CanonicalForm acyc = canonicalize(cur);
    const double tail = acyc.q * acyc.q + acyc.r * acyc.r;
    if (prev_tail >= 0.0 && tail > prev_tail * (1.0 + 1e-9) + 1e-12)
      throw std::logic_error(
          "sharpness_probe: tail weights q^2 + r^2 failed to decrease");
    prev_tail = tail;

    // (b) mutate opposite the max edge; reorient first if that vertex is a
    // source or sink (sign flips only, no magnitude change).
    const int emax = max_edge(cur);
    const int grow_vertex = opposite_vertex(emax);
    const int zero_weights =
        (cur.b12 == 0.0) + (cur.b23 == 0.0) + (cur.b13 == 0.0);
    if (zero_weights == 0) {
      const auto roles = arrow_roles(cur);
      if (roles.out[grow_vertex] == 2) {
        for (int v = 1; v <= 3; ++v)
          if (roles.out[v] == 0) cur = mutate(cur, v);  // mutate at the sink
      } else if (roles.in[grow_vertex] == 2) {
        for (int v = 1; v <= 3; ++v)
          if (roles.in[v] == 0) cur = mutate(cur, v);  // mutate at the source
      }
    }
    const double before_norm = norm(cur);
    cur = mutate(cur, grow_vertex);
    const double after_norm = norm(cur);
    rounds.emplace_back(cur, after_norm);
    if (after_norm - before_norm < 1e-12) break;
  }
  return rounds;
}

}  // namespace qmut
