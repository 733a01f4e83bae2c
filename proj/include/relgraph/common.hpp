#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace relgraph {

// ---------------------------------------------------------------------------
// Error hierarchy. Every module throws one of these; the CLI maps them to
// exit codes (usage/check -> 1, I/O and parse -> 2).
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class IngestError : public Error {
 public:
  using Error::Error;
};

class PlanError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class LogicalType : uint8_t { Int64 = 0, Float64 = 1, String = 2 };

inline const char* type_name(LogicalType t) {
  switch (t) {
    case LogicalType::Int64: return "int64";
    case LogicalType::Float64: return "float64";
    case LogicalType::String: return "string";
  }
  return "?";
}

// Distance value for vertices no shortest-path iteration ever reached.
inline constexpr int64_t kUnreachedSentinel = INT64_MAX;

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64). Metadata generation and the test-graph
// generators must be bit-reproducible for a given seed, independent of the
// standard library's distribution implementations.
// ---------------------------------------------------------------------------

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be > 0.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

  int64_t next_int(int64_t lo, int64_t hi) {  // inclusive range
    return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Hash used for segmentation and exchange partitioning. All operators must
// agree on it or co-partitioned merge joins break.
inline uint64_t part_hash(int64_t v) {
  uint64_t z = static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t hash_combine(uint64_t h, uint64_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

// ---------------------------------------------------------------------------
// Counters. Storage counters track bytes moved through the storage layer
// (scans, table materializations, persisted files) -- not OS-level I/O.
// The memory gauge is an allocator high-water estimate over live column data.
// ---------------------------------------------------------------------------

struct StorageCounters {
  std::atomic<uint64_t> bytes_read{0};
  std::atomic<uint64_t> bytes_written{0};
  std::atomic<uint64_t> tables_written{0};

  void reset() {
    bytes_read = 0;
    bytes_written = 0;
    tables_written = 0;
  }
};

class MemoryGauge {
 public:
  static MemoryGauge& instance() {
    static MemoryGauge g;
    return g;
  }

  void add(uint64_t bytes) {
    uint64_t now = current_.fetch_add(bytes) + bytes;
    uint64_t peak = peak_.load();
    while (now > peak && !peak_.compare_exchange_weak(peak, now)) {
    }
  }

  void sub(uint64_t bytes) { current_.fetch_sub(bytes); }

  uint64_t current() const { return current_.load(); }
  uint64_t peak() const { return peak_.load(); }
  void reset_peak() { peak_.store(current_.load()); }

 private:
  std::atomic<uint64_t> current_{0};
  std::atomic<uint64_t> peak_{0};
};

// Live rows held in in-flight batches; used to assert pipelining behavior.
class LiveRowGauge {
 public:
  static LiveRowGauge& instance() {
    static LiveRowGauge g;
    return g;
  }

  void add(uint64_t rows) {
    uint64_t now = current_.fetch_add(rows) + rows;
    uint64_t peak = peak_.load();
    while (now > peak && !peak_.compare_exchange_weak(peak, now)) {
    }
  }

  void sub(uint64_t rows) { current_.fetch_sub(rows); }

  uint64_t current() const { return current_.load(); }
  uint64_t peak() const { return peak_.load(); }
  void reset_peak() { peak_.store(current_.load()); }

 private:
  std::atomic<uint64_t> current_{0};
  std::atomic<uint64_t> peak_{0};
};

}  // namespace relgraph
