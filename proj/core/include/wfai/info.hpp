#pragma once

#include <string_view>

namespace wfai {

enum class LogBase { bits, nats };

std::string_view to_string(LogBase base);

// Accepts "bits" or "nats"; throws InvalidParameter otherwise.
LogBase parse_log_base(std::string_view text);

// An information quantity tagged with the logarithm base it is expressed in.
// The value may be +/-infinity but is never NaN.
struct InfoValue {
  double value = 0.0;
  LogBase base = LogBase::nats;

  // Builds a value from a natural-log quantity, converting to `target`.
  static InfoValue from_nats(double nats, LogBase target);

  double nats() const;
  double bits() const;
  InfoValue in(LogBase target) const;
  bool finite() const;
};

// Endogenous (neutral), exogenous (alternative) and active information of
// a single event. active = endogenous - exogenous whenever both are finite.
struct InfoBreakdown {
  InfoValue endogenous;
  InfoValue exogenous;
  InfoValue active;
};

}  // namespace wfai
