#include "wfai/info.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wfai/error.hpp"

namespace wfai {

std::string_view to_string(LogBase base) {
  return base == LogBase::bits ? "bits" : "nats";
}

LogBase parse_log_base(std::string_view text) {
  if (text == "bits") return LogBase::bits;
  if (text == "nats") return LogBase::nats;
  throw InvalidParameter("log base must be 'bits' or 'nats', got '" +
                         std::string(text) + "'");
}

InfoValue InfoValue::from_nats(double nats, LogBase target) {
  if (std::isnan(nats)) {
    throw std::logic_error("information value evaluated to NaN");
  }
  if (target == LogBase::bits) return {nats / std::numbers::ln2, target};
  return {nats, target};
}

double InfoValue::nats() const {
  return base == LogBase::nats ? value : value * std::numbers::ln2;
}

double InfoValue::bits() const {
  return base == LogBase::bits ? value : value / std::numbers::ln2;
}

InfoValue InfoValue::in(LogBase target) const {
  if (target == base) return *this;
  return target == LogBase::bits ? InfoValue{bits(), target}
                                 : InfoValue{nats(), target};
}

bool InfoValue::finite() const { return std::isfinite(value); }

}  // namespace wfai
