#include "wfai_cli/cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wfai/error.hpp"

#ifndef WFAI_VERSION
#define WFAI_VERSION "0.0.0"
#endif

namespace wfai::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Leaf {
  const Command* command = nullptr;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> toggles;
  std::map<std::string, CLI::Option*> options;
  std::string seed;
  CLI::Option* seed_option = nullptr;
  std::vector<std::string> sweeps;
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
  bool timestamp = false;
};

void add_leaf_options(Leaf& leaf) {
  CLI::App& app = *leaf.app;
  for (const Flag& flag : leaf.command->flags) {
    std::string help = flag.help;
    if (!flag.default_value.empty() && flag.kind != Kind::toggle) {
      help += " [default: " + flag.default_value + "]";
    }
    if (flag.kind == Kind::toggle) {
      leaf.options[flag.name] =
          app.add_flag("--" + flag.name, leaf.toggles[flag.name], help);
    } else {
      leaf.options[flag.name] =
          app.add_option("--" + flag.name, leaf.values[flag.name], help);
    }
  }
  if (leaf.command->stochastic) {
    leaf.seed_option = app.add_option(
        "--seed", leaf.seed, "master seed (64-bit unsigned, required)");
  }
  app.add_option("--sweep", leaf.sweeps,
                 "sweep a parameter: AXIS=v1,v2,... or AXIS=start:stop:step "
                 "(repeatable; row-major, last axis fastest)")
      ->allow_extra_args(false);
  app.add_option("--format", leaf.format, "output format [default: json]")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", leaf.output, "write records to PATH");
  app.add_option("--threads", leaf.threads,
                 "worker threads for Monte Carlo (0: all cores); output does "
                 "not depend on it");
  app.add_flag("--timestamp", leaf.timestamp,
               "add a UTC timestamp to the metadata (breaks byte identity)");
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("--seed: expected a 64-bit unsigned integer, got '" +
                     text + "'");
  }
  return value;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

Point base_point(const Leaf& leaf) {
  Point point(&leaf.command->flags);
  for (const Flag& flag : leaf.command->flags) {
    const bool given = leaf.options.at(flag.name)->count() > 0;
    if (flag.kind == Kind::toggle) {
      const bool on = given ? leaf.toggles.at(flag.name)
                            : flag.default_value == "true";
      point.set(flag.name, on ? "true" : "false");
    } else if (given) {
      point.set(flag.name, leaf.values.at(flag.name));
    } else if (!flag.default_value.empty()) {
      point.set(flag.name, flag.default_value);
    }
  }
  return point;
}

void validate_point(const Command& command, const Point& point,
                    bool have_seed) {
  for (const Flag& flag : command.flags) {
    if (flag.required && !point.has(flag.name)) {
      throw UsageError("missing required flag --" + flag.name);
    }
  }
  point.echo();  // type-checks every value
  if (command.stochastic && command.stochastic(point) && !have_seed) {
    throw UsageError("--seed is required: '" + command.path() +
                     "' draws random numbers");
  }
  if (command.check) {
    command.check(point);
  } else {
    command.run(point, RunContext{}, [](Fields, Fields) {});
  }
}

int execute(const Leaf& leaf, std::ostream& out) {
  const Command& command = *leaf.command;
  RunContext ctx;
  ctx.threads = leaf.threads;
  if (leaf.seed_option && leaf.seed_option->count() > 0) {
    ctx.seed = parse_seed(leaf.seed);
  }

  const Point base = base_point(leaf);
  std::vector<SweepAxis> axes;
  for (const auto& text : leaf.sweeps) {
    axes.push_back(parse_sweep(text, command.flags));
    for (std::size_t a = 0; a + 1 < axes.size(); ++a) {
      if (axes[a].name == axes.back().name) {
        throw UsageError("--sweep " + axes.back().name + " given twice");
      }
    }
  }
  const std::int64_t points = grid_size(axes);

  // Every grid point is validated before any record is computed.
  for (std::int64_t idx = 0; idx < points; ++idx) {
    validate_point(command, grid_point(base, axes, idx), ctx.seed.has_value());
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!leaf.output.empty()) {
    file.open(leaf.output, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + leaf.output + "' for writing");
    sink = &file;
  }
  RecordWriter writer(*sink,
                      leaf.format == "csv" ? Format::csv : Format::json);
  const std::string stamp = leaf.timestamp ? utc_timestamp() : "";

  for (std::int64_t idx = 0; idx < points; ++idx) {
    const Point point = grid_point(base, axes, idx);
    const Fields inputs = point.echo();
    command.run(point, ctx, [&](Fields outputs, Fields extra) {
      Record record{command.path(), inputs, std::move(outputs), {}};
      record.metadata.emplace_back("tool_version", std::string(WFAI_VERSION));
      record.metadata.emplace_back(
          "seed", ctx.seed ? Value(*ctx.seed) : Value(std::monostate{}));
      if (leaf.timestamp) record.metadata.emplace_back("timestamp", stamp);
      for (auto& field : extra) record.metadata.push_back(std::move(field));
      writer.write(record);
      if (!*sink) throw IoError("write failed");
    });
  }
  sink->flush();
  if (!*sink) throw IoError("write failed");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Wright-Fisher active information toolkit", "wfai"};
  app.set_version_flag("--version", std::string(WFAI_VERSION));
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Leaf>> leaves;
  std::map<std::string, CLI::App*> groups;
  for (const Command& command : commands()) {
    auto leaf = std::make_unique<Leaf>();
    leaf->command = &command;
    if (command.name.empty()) {
      leaf->app = app.add_subcommand(command.group, command.help);
    } else {
      CLI::App*& group = groups[command.group];
      if (!group) {
        group = app.add_subcommand(command.group, command.group + " commands");
        group->require_subcommand(1);
      }
      leaf->app = group->add_subcommand(command.name, command.help);
    }
    add_leaf_options(*leaf);
    leaves.push_back(std::move(leaf));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  const Leaf* chosen = nullptr;
  for (const auto& leaf : leaves) {
    if (leaf->app->parsed()) chosen = leaf.get();
  }
  if (!chosen) {
    err << "no subcommand selected\n";
    return kExitValidation;
  }

  try {
    return execute(*chosen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const wfai::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace wfai::cli
