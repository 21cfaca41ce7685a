#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wfai::cli {

// A scalar field of an output record. monostate is an absent optional value.
using Value = std::variant<std::monostate, bool, std::int64_t, std::uint64_t,
                           double, std::string>;

using Fields = std::vector<std::pair<std::string, Value>>;

struct Record {
  std::string command;
  Fields inputs;
  Fields outputs;
  Fields metadata;
};

enum class Format { csv, json };

// 17 significant digits (JSON) or 12 (CSV); infinities as "inf"/"-inf".
std::string format_real(double value, int digits);

std::string json_line(const Record& record);
std::string csv_quote(const std::string& field);

// Streams records in the selected format. CSV writes the header before the
// first row and requires every later row to carry the same columns.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const Record& record);
  std::int64_t count() const { return count_; }

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> header_;
  std::int64_t count_ = 0;
};

}  // namespace wfai::cli
