#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "record.hpp"
#include "wfai/info.hpp"

namespace wfai::cli {

// Malformed command line: bad number, unknown sweep axis, oversized grid.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// toggle flags hold "true" or "false".
enum class Kind { integer, real, text, toggle };

struct Flag {
  std::string name;  // without the leading "--"
  Kind kind;
  std::string help;
  std::string default_value;  // empty: no default
  bool required = false;
};

// One fully resolved parameter assignment: defaults, then command-line
// values, then the sweep coordinates of this grid point.
class Point {
 public:
  explicit Point(const std::vector<Flag>* flags) : flags_(flags) {}

  void set(const std::string& name, std::string value);
  bool has(const std::string& name) const;

  std::int64_t integer(const std::string& name) const;
  double real(const std::string& name) const;
  const std::string& text(const std::string& name) const;
  bool toggle(const std::string& name) const;
  LogBase base() const;

  // Every flag in declaration order, typed; unset optional flags are null.
  Fields echo() const;

 private:
  const Flag& flag(const std::string& name) const;
  const std::string& raw(const std::string& name) const;

  const std::vector<Flag>* flags_;
  std::map<std::string, std::string> values_;
};

struct SweepAxis {
  std::string name;
  std::vector<std::string> values;
};

inline constexpr std::int64_t kMaxGridPoints = 1'000'000;

// Parses AXIS=v1,v2,... or AXIS=start:stop:step (inclusive of stop up to
// rounding). The axis must name one of the command's numeric or text flags.
SweepAxis parse_sweep(const std::string& text, const std::vector<Flag>& flags);

// Number of points in the cartesian product; throws UsageError beyond the cap.
std::int64_t grid_size(const std::vector<SweepAxis>& axes);

// The index-th point in row-major order: the last declared axis varies
// fastest.
Point grid_point(const Point& base, const std::vector<SweepAxis>& axes,
                 std::int64_t index);

std::int64_t parse_integer(const std::string& name, const std::string& text);
double parse_real(const std::string& name, const std::string& text);

}  // namespace wfai::cli
