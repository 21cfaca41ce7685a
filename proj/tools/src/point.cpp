#include "point.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace wfai::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  for (;;) {
    const auto end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string::npos) return parts;
    begin = end + 1;
  }
}

std::vector<std::string> expand_range(const std::string& name,
                                      const std::vector<std::string>& parts) {
  const double start = parse_real(name, parts[0]);
  const double stop = parse_real(name, parts[1]);
  const double step = parse_real(name, parts[2]);
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
      step == 0.0 || (stop - start) / step < 0.0) {
    throw UsageError("--sweep " + name +
                     ": range start:stop:step must reach stop from start");
  }
  const double span = std::floor((stop - start) / step + 1e-9);
  if (span + 1.0 > static_cast<double>(kMaxGridPoints)) {
    throw UsageError("--sweep " + name + ": more than " +
                     std::to_string(kMaxGridPoints) + " values");
  }
  const auto count = static_cast<std::int64_t>(span) + 1;
  std::vector<std::string> values;
  values.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = 0; k < count; ++k) {
    // 15 digits strips the accumulation noise of start + k * step.
    values.push_back(format_real(start + static_cast<double>(k) * step, 15));
  }
  return values;
}

}  // namespace

std::int64_t parse_integer(const std::string& name, const std::string& text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec == std::errc() && ptr == end) return value;
  // Accept integral reals such as 1e5.
  double real = 0.0;
  auto [rptr, rec] = std::from_chars(text.data(), end, real);
  if (rec == std::errc() && rptr == end && std::isfinite(real) &&
      real == std::floor(real) && std::abs(real) < 9.0e18) {
    return static_cast<std::int64_t>(real);
  }
  throw UsageError("--" + name + ": expected an integer, got '" + text + "'");
}

double parse_real(const std::string& name, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec == std::errc() && ptr == end && !std::isnan(value)) return value;
  throw UsageError("--" + name + ": expected a number, got '" + text + "'");
}

const Flag& Point::flag(const std::string& name) const {
  const auto it = std::find_if(flags_->begin(), flags_->end(),
                               [&](const Flag& f) { return f.name == name; });
  if (it == flags_->end()) throw std::logic_error("undeclared flag " + name);
  return *it;
}

void Point::set(const std::string& name, std::string value) {
  flag(name);
  values_[name] = std::move(value);
}

bool Point::has(const std::string& name) const {
  flag(name);
  return values_.count(name) != 0;
}

const std::string& Point::raw(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw UsageError("missing required flag --" + name);
  return it->second;
}

std::int64_t Point::integer(const std::string& name) const {
  return parse_integer(name, raw(name));
}

double Point::real(const std::string& name) const {
  return parse_real(name, raw(name));
}

const std::string& Point::text(const std::string& name) const {
  return raw(name);
}

bool Point::toggle(const std::string& name) const {
  return raw(name) == "true";
}

LogBase Point::base() const {
  const std::string& text = raw("base");
  if (text != "bits" && text != "nats") {
    throw UsageError("--base: expected bits or nats, got '" + text + "'");
  }
  return parse_log_base(text);
}

Fields Point::echo() const {
  Fields fields;
  for (const Flag& f : *flags_) {
    const auto it = values_.find(f.name);
    if (it == values_.end()) {
      fields.emplace_back(f.name, std::monostate{});
      continue;
    }
    switch (f.kind) {
      case Kind::integer:
        fields.emplace_back(f.name, parse_integer(f.name, it->second));
        break;
      case Kind::real:
        fields.emplace_back(f.name, parse_real(f.name, it->second));
        break;
      case Kind::text:
        fields.emplace_back(f.name, it->second);
        break;
      case Kind::toggle:
        fields.emplace_back(f.name, it->second == "true");
        break;
    }
  }
  return fields;
}

SweepAxis parse_sweep(const std::string& text,
                      const std::vector<Flag>& flags) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw UsageError("--sweep: expected AXIS=v1,v2,... or AXIS=start:stop:step,"
                     " got '" + text + "'");
  }
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  if (!axis.name.empty() && axis.name.front() == '-') {
    axis.name.erase(0, axis.name.find_first_not_of('-'));
  }
  const auto it = std::find_if(flags.begin(), flags.end(), [&](const Flag& f) {
    return f.name == axis.name;
  });
  if (it == flags.end()) {
    throw UsageError("--sweep: '" + axis.name +
                     "' is not a parameter of this subcommand");
  }
  const std::string list = text.substr(eq + 1);
  const auto range = split(list, ':');
  if (range.size() == 3) {
    if (it->kind == Kind::text || it->kind == Kind::toggle) {
      throw UsageError("--sweep " + axis.name + ": ranges need a numeric axis");
    }
    axis.values = expand_range(axis.name, range);
  } else if (range.size() == 1) {
    axis.values = split(list, ',');
  } else {
    throw UsageError("--sweep " + axis.name + ": malformed value list '" +
                     list + "'");
  }
  for (const auto& value : axis.values) {
    if (it->kind == Kind::integer) parse_integer(axis.name, value);
    if (it->kind == Kind::real) parse_real(axis.name, value);
    if (it->kind == Kind::toggle && value != "true" && value != "false") {
      throw UsageError("--sweep " + axis.name + ": expected true or false");
    }
  }
  return axis;
}

std::int64_t grid_size(const std::vector<SweepAxis>& axes) {
  std::int64_t size = 1;
  for (const auto& axis : axes) {
    const auto n = static_cast<std::int64_t>(axis.values.size());
    if (n > kMaxGridPoints / size) {
      throw UsageError("sweep grid exceeds " + std::to_string(kMaxGridPoints) +
                       " points");
    }
    size *= n;
  }
  return size;
}

Point grid_point(const Point& base, const std::vector<SweepAxis>& axes,
                 std::int64_t index) {
  Point point = base;
  for (auto axis = axes.rbegin(); axis != axes.rend(); ++axis) {
    const auto n = static_cast<std::int64_t>(axis->values.size());
    point.set(axis->name, axis->values[static_cast<std::size_t>(index % n)]);
    index /= n;
  }
  return point;
}

}  // namespace wfai::cli
