#include "output.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>
#include <unistd.h>

namespace hb {

using hetero::Enclosure;
using hetero::Rat;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string Table::csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  std::vector<std::string> names, prov;
  for (const auto& c : columns) {
    names.push_back(c.name);
    prov.push_back(c.provenance);
  }
  line(names);
  line(prov);
  for (const auto& r : rows) line(r);
  return out;
}

json Table::to_json() const {
  json j;
  j["meta"] = meta;
  json cols = json::array();
  for (const auto& c : columns) cols.push_back({{"name", c.name}, {"provenance", c.provenance}});
  j["columns"] = cols;
  j["rows"] = rows;
  return j;
}

void write_atomic(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("cannot write " + tmp.string());
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot rename onto " + target.string() + ": " + ec.message());
  }
}

std::string decimal(const Rat& v, int digits) { return hetero::to_scientific(v, digits); }

std::string decimal(const std::function<Enclosure(unsigned)>& enclose, int digits) {
  Enclosure e;
  for (unsigned bits = 256; bits <= 4096; bits *= 2) {
    e = enclose(bits);
    if (e.lo == e.hi) return hetero::to_scientific(e.lo, digits);
    std::string lo = hetero::to_scientific(e.lo, digits), hi = hetero::to_scientific(e.hi, digits);
    if (lo == hi) return lo;
  }
  for (int d = digits - 1; d >= 1; --d) {
    std::string lo = hetero::to_scientific(e.lo, d), hi = hetero::to_scientific(e.hi, d);
    if (lo == hi) return lo;
  }
  return hetero::to_scientific(e.mid(), 1);
}

std::string decimal(const hetero::Surd& s, int digits) {
  return decimal([&](unsigned bits) { return hetero::enclose(s, bits); }, digits);
}

std::string decimal(const hetero::Real& v, int digits) { return hetero::to_string(v, digits); }

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("HETERO_BOUNDS_THREADS");
  if (!env || !*env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError(std::string("HETERO_BOUNDS_THREADS must be a positive integer, got '") + env + "'");
  return static_cast<unsigned>(std::min<long>(v, 1024));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Rat parse_r(const std::string& text) {
  if (text.find("sqrt") != std::string::npos || text.find("\xE2\x88\x9A") != std::string::npos)
    throw UsageError("r must be an exact rational p/q, got '" + text +
                     "'; for r = 1/sqrt(6) use `timeparam --exact-case`");
  try {
    return hetero::parse_rat(text);
  } catch (const std::exception&) {
    throw UsageError("r must be an exact rational p/q, got '" + text + "'");
  }
}

}  // namespace hb
