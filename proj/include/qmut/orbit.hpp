#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmut/exchange.hpp"

namespace qmut {

/// The pinned 64-bit generator behind every random sequence in this project
/// (SplitMix64). Reproducible across platforms and languages, bit-exactly:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::uint64_t state_;
};

/// Random vertex sequence with no two consecutive entries equal: the first
/// entry is 1 + next() % 3, each later entry picks next() % 2 among the two
/// candidates != predecessor, in increasing order.
MutationSequence random_alternating_sequence(std::size_t length,
                                             std::uint64_t seed);

struct OrbitRecord {
  std::size_t step = 0;  // 0 for the initial quiver
  int vertex = 0;        // 0 on the initial record
  ExchangeTriple triple;
  double norm = 0.0;
  double markov_c = 0.0;
};

struct OrbitSummary {
  double max_norm = 0.0;
  std::size_t argmax_step = 0;  // first step attaining max_norm
  ExchangeTriple final_triple;
  /// Max over records of |C_i - C_0| / markov_drift_scale(B_i, C_0).
  double markov_drift = 0.0;
  std::size_t length = 0;  // number of mutation steps (records - 1)
  std::uint64_t seed = 0;
};

/// Relative scale for Markov-constant drift: max(1, |C_0|, p^2+q^2+r^2+|pqr|).
/// C(Q) is a difference of terms of that magnitude, so once weights grow this
/// is the finest resolution at which the constant is representable; measuring
/// drift against it keeps the figure meaningful on diverging orbits.
double markov_drift_scale(const ExchangeTriple& b, double c0);

/// Lazily walks an orbit; each next() costs one mutation. An overflowing
/// step throws NumericRangeError carrying the step index and ends the
/// stream.
class OrbitStream {
 public:
  OrbitStream(const ExchangeTriple& initial, MutationSequence seq);

  /// Record i holds the quiver after the first i mutations; nullopt once the
  /// sequence is exhausted.
  std::optional<OrbitRecord> next();

  std::size_t total_records() const { return seq_.size() + 1; }

 private:
  ExchangeTriple current_;
  MutationSequence seq_;
  std::size_t emitted_ = 0;
};

/// Collects the full orbit, length seq.size() + 1.
std::vector<OrbitRecord> run_orbit(const ExchangeTriple& b,
                                   const MutationSequence& seq);

/// Throws std::invalid_argument on an empty record list.
OrbitSummary orbit_summary(const std::vector<OrbitRecord>& records,
                           std::uint64_t seed = 0);

// CSV schema: header `step,vertex,b12,b23,b13,norm`, doubles rendered with
// 17 significant digits.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const OrbitRecord& rec);
void export_csv(const std::vector<OrbitRecord>& records, std::ostream& os);
void export_csv(const std::vector<OrbitRecord>& records,
                const std::string& path);

/// JSON document {initial, seed, sequence, classification, records}.
void export_json(const ExchangeTriple& initial, std::uint64_t seed,
                 const MutationSequence& seq,
                 const std::vector<OrbitRecord>& records, std::ostream& os);
void export_json(const ExchangeTriple& initial, std::uint64_t seed,
                 const MutationSequence& seq,
                 const std::vector<OrbitRecord>& records,
                 const std::string& path);

/// Sequence data files: one comma-separated vertex list per line; blank
/// lines are skipped.
std::vector<MutationSequence> load_sequences(const std::string& path);

}  // namespace qmut
