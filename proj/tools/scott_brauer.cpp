// scott-brauer <command> [--input FILE] [--example ID] [--json] [--max-order N]
//              [--max-dim N] [--no-conjugacy-reduction]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "scott_brauer/error.hpp"
#include "scott_brauer/job.hpp"

namespace {

enum Exit { ok = 0, internal = 1, parse = 2, precondition = 3, resource = 4, mismatch = 5 };

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw sb::ParseError("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

int fail(bool as_json, const char* kind, int code, const std::string& msg) {
  std::cerr << "scott-brauer: " << kind << ": " << msg << "\n";
  if (as_json) std::cout << nlohmann::json{{"error", kind}, {"exit_code", code}, {"message", msg}}.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sb::cli;
  CLI::App app{"Scott modules and Brauer indecomposability over finite fields"};
  std::string command, input, example;
  bool as_json = false, no_reduction = false;
  std::optional<std::size_t> max_order, max_dim;
  app.add_option("command", command, "scott | decompose | brauer-quotient | check-bi | reproduce")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--input", input, "job document (JSON), '-' for stdin");
  app.add_option("--example", example, "built-in example")->check(CLI::IsMember(kExamples));
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_option("--max-order", max_order, "cap on the group order");
  app.add_option("--max-dim", max_dim, "cap on module dimensions");
  app.add_flag("--no-conjugacy-reduction", no_reduction, "check every subgroup of P, not one per class");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Exit::parse;
  }

  try {
    auto apply = [&](JobOptions& o) {
      if (max_order) o.max_order = *max_order;
      if (max_dim) o.max_dim = *max_dim;
      if (no_reduction) o.conjugacy_reduction = false;
    };
    Report report;
    if (command == "reproduce") {
      if (example.empty()) throw sb::ParseError("reproduce needs --example");
      JobOptions o;
      apply(o);
      report = reproduce(example, o);
    } else {
      if (input.empty() == example.empty()) throw sb::ParseError("give exactly one of --input and --example");
      JobSpec spec = input.empty() ? example_job(example) : parse_job(read_input(input));
      spec.command = command;
      apply(spec.options);
      spec = parse_job(emit_job(spec));  // revalidate against the chosen command
      report = run_job(spec);
    }
    if (as_json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      for (const auto& line : report.lines) std::cout << line << "\n";
    }
    return Exit::ok;
  } catch (const FixtureMismatch& e) {
    return fail(as_json, "fixture-mismatch", Exit::mismatch, e.what());
  } catch (const sb::ParseError& e) {
    return fail(as_json, "parse-error", Exit::parse, e.what());
  } catch (const sb::PreconditionError& e) {
    return fail(as_json, "precondition", Exit::precondition, e.what());
  } catch (const sb::ResourceError& e) {
    return fail(as_json, "resource-cap", Exit::resource, e.what());
  } catch (const std::exception& e) {
    return fail(as_json, "internal", Exit::internal, e.what());
  }
}
