#pragma once

#include "output.hpp"

#include <optional>
#include <string>

namespace hb {

struct RunConfig {
  std::string command;
  std::string preset = "fisher";
  std::string r;
  std::string n;  // integer, or a range "a..b" for timeparam --limits
  int m = 10;
  int grid = 200;
  std::string tol = "1e-110";
  std::string format = "csv";
  std::string out;
  bool expensive = false;
  int digits = 40;

  // bounds / oracle-check
  bool no_oracle = false;

  // certify
  std::optional<int> lower;
  std::optional<int> upper;
  std::string verify;

  // timeparam / general
  std::string t_min = "-10";
  std::string t_max = "10";
  int t_grid = 21;
  bool exact_case = false;
  bool limits = false;
  bool no_certify = false;
  std::string domain;
};

/// Each command returns its exit code; errors propagate as exceptions.
int cmd_bounds(const RunConfig& cfg);
int cmd_certify(const RunConfig& cfg);
int cmd_timeparam(const RunConfig& cfg);
int cmd_general(const RunConfig& cfg);
int cmd_oracle_check(const RunConfig& cfg);

}  // namespace hb
