#include "record.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace wfai::cli {
namespace {

std::string json_scalar(const Value& value) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const {
      if (std::isfinite(v)) return format_real(v, 17);
      return nlohmann::json(format_real(v, 17)).dump();
    }
    std::string operator()(const std::string& s) const {
      return nlohmann::json(s).dump();
    }
  };
  return std::visit(Visitor{}, value);
}

std::string csv_scalar(const Value& value) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v, 12); }
    std::string operator()(const std::string& s) const { return csv_quote(s); }
  };
  return std::visit(Visitor{}, value);
}

void append_object(std::string& line, const Fields& fields) {
  line += '{';
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) line += ',';
    first = false;
    line += nlohmann::json(key).dump();
    line += ':';
    line += json_scalar(value);
  }
  line += '}';
}

}  // namespace

std::string format_real(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                    std::chars_format::general, digits);
  return std::string(buffer, result.ptr);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string json_line(const Record& record) {
  std::string line = "{\"command\":" + nlohmann::json(record.command).dump();
  line += ",\"inputs\":";
  append_object(line, record.inputs);
  line += ",\"outputs\":";
  append_object(line, record.outputs);
  line += ",\"metadata\":";
  append_object(line, record.metadata);
  line += "}\n";
  return line;
}

void RecordWriter::write(const Record& record) {
  if (format_ == Format::json) {
    out_ << json_line(record);
    ++count_;
    return;
  }

  std::vector<std::string> columns;
  std::vector<std::string> cells;
  for (const Fields* group : {&record.inputs, &record.outputs,
                              &record.metadata}) {
    for (const auto& [key, value] : *group) {
      columns.push_back(key);
      cells.push_back(csv_scalar(value));
    }
  }
  if (count_ == 0) {
    auto sorted = columns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::logic_error("duplicate CSV column name");
    }
    header_ = columns;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out_ << (c ? "," : "") << csv_quote(columns[c]);
    }
    out_ << "\r\n";
  } else if (columns != header_) {
    throw std::logic_error("CSV row columns differ from the header");
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    out_ << (c ? "," : "") << cells[c];
  }
  out_ << "\r\n";
  ++count_;
}

}  // namespace wfai::cli
