// Copyright 2026 The mdsp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "mdsp/mdsp.hpp"

namespace {

// Exit codes: 0 completed (refuted verdicts included), 2 parse/validation
// errors, 3 internal inconsistency or golden mismatch, 4 unwritable output.
int exit_code_for(mdsp::errc code) {
  switch (code) {
    case mdsp::errc::golden_mismatch:
    case mdsp::errc::inconsistency:
      return 3;
    case mdsp::errc::io_error:
      return 4;
    default:
      return 2;
  }
}

unsigned default_workers() {
  if (const char* env = std::getenv("MDSP_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

struct CommonArgs {
  std::string scenario_path;
  std::string format = "json";
  std::string out_path;
  unsigned workers = default_workers();
  std::size_t grid_points = 0;  // 0 = keep the scenario's value
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_scenario) {
  if (needs_scenario) {
    cmd->add_option("--scenario", args.scenario_path, "scenario JSON file")->required();
  }
  cmd->add_option("--format", args.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", args.out_path, "write the report to this path");
  cmd->add_option("--workers", args.workers, "sweep worker threads (default $MDSP_WORKERS or 1)");
  cmd->add_option("--grid-points", args.grid_points, "override the scenario's grid resolution");
  cmd->add_flag("--timing", args.timing, "include elapsed-time fields in the report");
}

int run_command(mdsp::Command command, const CommonArgs& args,
                const std::string& builtin_case) {
  mdsp::RunOptions options;
  options.workers = args.workers;
  options.timing = args.timing;

  mdsp::RunReport report;
  if (command == mdsp::Command::Builtin) {
    report = mdsp::reproduce_builtin(builtin_case, options);
  } else {
    mdsp::Scenario scenario = mdsp::load_scenario(args.scenario_path);
    if (scenario.command != command) {
      // A scenario written for another command is a user error, not an override.
      throw mdsp::Error(mdsp::errc::parse_error,
                        std::string("scenario command '") +
                            mdsp::command_name(scenario.command) +
                            "' does not match subcommand '" +
                            mdsp::command_name(command) + "'");
    }
    if (args.grid_points != 0) scenario.grid_points = args.grid_points;
    report = mdsp::run_scenario(scenario, options);
  }

  if (args.out_path.empty()) {
    mdsp::emit_report(report, args.format, std::cout);
  } else {
    mdsp::emit_report_to_file(report, args.format, args.out_path);
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"allocation rules and axiom certification for multi-commodity "
               "division with single-peaked preferences"};
  app.require_subcommand(1);

  struct SubSpec {
    mdsp::Command command;
    const char* name;
    const char* help;
  };
  const SubSpec subs[] = {
      {mdsp::Command::Allocate, "allocate", "evaluate a rule on a peak profile"},
      {mdsp::Command::Check, "check", "certify or refute axioms on a peak grid"},
      {mdsp::Command::OptionBox, "option-box",
       "sweep one agent's attainable bundles against fixed others"},
      {mdsp::Command::Dominate, "dominate", "compare two rules by option-set nesting"},
      {mdsp::Command::Pusp, "pusp", "search for a strategy-proof dominator"},
      {mdsp::Command::Theorem3, "theorem3", "run the uniqueness elimination over a catalog"},
  };

  std::vector<CommonArgs> arg_slots(std::size(subs) + 1);
  std::vector<std::pair<mdsp::Command, const CommonArgs*>> dispatch;

  mdsp::Command chosen{};
  const CommonArgs* chosen_args = nullptr;
  std::string builtin_case;

  for (std::size_t i = 0; i < std::size(subs); ++i) {
    CLI::App* cmd = app.add_subcommand(subs[i].name, subs[i].help);
    add_common(cmd, arg_slots[i], true);
    const SubSpec& spec = subs[i];
    const CommonArgs* slot = &arg_slots[i];
    cmd->callback([&chosen, &chosen_args, spec, slot] {
      chosen = spec.command;
      chosen_args = slot;
    });
  }

  CLI::App* builtin = app.add_subcommand("builtin", "reproduce a canned worked case");
  builtin
      ->add_option("case", builtin_case,
                   "one of: figure1, example1, serial-et, domination-serial-uniform, theorem3")
      ->required();
  add_common(builtin, arg_slots[std::size(subs)], false);
  const CommonArgs* builtin_slot = &arg_slots[std::size(subs)];
  builtin->callback([&chosen, &chosen_args, builtin_slot] {
    chosen = mdsp::Command::Builtin;
    chosen_args = builtin_slot;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return run_command(chosen, *chosen_args, builtin_case);
  } catch (const mdsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
