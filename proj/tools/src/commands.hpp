#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "point.hpp"
#include "record.hpp"

namespace wfai::cli {

struct RunContext {
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

// Receives the output fields of one record; extra metadata (censor counts)
// is appended after the tool version and seed.
using Emit = std::function<void(Fields outputs, Fields metadata)>;

struct Command {
  std::string group;  // "fixation"
  std::string name;   // "exact"
  std::string help;
  std::vector<Flag> flags;
  // Null for deterministic commands; otherwise decides whether this point
  // consumes randomness and therefore needs --seed.
  std::function<bool(const Point&)> stochastic;
  // Throws on any violated precondition without doing the heavy work.
  // Null means the command is cheap and validated by a dry run.
  std::function<void(const Point&)> check;
  std::function<void(const Point&, const RunContext&, const Emit&)> run;

  std::string path() const {
    return name.empty() ? group : group + " " + name;
  }
};

const std::vector<Command>& commands();

}  // namespace wfai::cli
