#pragma once

#include "hetero/enclosure.hpp"
#include "hetero/oracle/oracle.hpp"
#include "hetero/ratpoly/serialize.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

using hetero::json;

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kInvalidConfig = 2,
  kCeiling = 3,
  kCertificateFailed = 4,
  kHypothesis = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CeilingExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Failed cross-check (oracle-check); maps to exit 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Column {
  std::string name;
  std::string provenance;
};

struct Table {
  json meta = json::object();
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;

  void add_column(std::string name, std::string provenance) { columns.push_back({std::move(name), std::move(provenance)}); }
  std::string csv() const;
  json to_json() const;
};

std::string csv_field(const std::string& s);

/// Writes to `path` through a temporary file and rename; empty path means stdout.
void write_atomic(const std::string& path, const std::string& content);

/// Correctly rounded decimal of a rational.
std::string decimal(const hetero::Rat& v, int digits);
/// Decimal of a quantity known through enclosures of increasing precision:
/// refines until both ends round alike, dropping digits if precision runs out.
std::string decimal(const std::function<hetero::Enclosure(unsigned bits)>& enclose, int digits);
std::string decimal(const hetero::Surd& s, int digits);
std::string decimal(const hetero::Real& v, int digits);

/// Thread cap: HETERO_BOUNDS_THREADS if set, else the hardware concurrency.
unsigned thread_count();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Rational-only policy for r; points at --exact-case for 1/sqrt(6).
hetero::Rat parse_r(const std::string& text);

}  // namespace hb
