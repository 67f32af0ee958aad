#include "veegroups/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "veegroups/common.hpp"
#include "veegroups/reports.hpp"

namespace veegroups {

namespace {

int parse_count(const std::string& text, const char* what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " '" + text + "' is not an integer");
  }
  if (used != text.size()) {
    throw std::invalid_argument(std::string(what) + " '" + text + "' is not an integer");
  }
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative");
  }
  return value;
}

/// Group operands: either "p q", a single signature string, or --signature.
struct GroupInput {
  std::vector<std::string> operands;
  std::string signature;
  CLI::Option* signature_opt = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("operands", operands,
                    "either the two counts p q, or one signature string like 1,Z,Z")
        ->expected(0, 2);
    signature_opt = sub->add_option("--signature", signature, "signature string like 1,Z,Z");
  }

  Signature resolve() const {
    const bool flagged = signature_opt != nullptr && signature_opt->count() > 0;
    if (flagged && !operands.empty()) {
      throw std::invalid_argument("give p q / a signature or --signature, not both");
    }
    if (flagged) return Signature::parse(signature);
    if (operands.size() == 1) return Signature::parse(operands[0]);
    if (operands.size() == 2) {
      return Signature::pq(parse_count(operands[0], "p"), parse_count(operands[1], "q"));
    }
    throw std::invalid_argument("expected p q, a signature string, or --signature");
  }
};

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream help_out;
  std::ostringstream diag;
  std::string rendered;
  std::string format_name = "text";
  std::string out_path;

  CLI::App app{"discrete Clifford groups Q(t): structure, tables and classification"};
  app.name("veegroups");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "output format: text, csv or json")
        ->capture_default_str();
    sub->add_option("--out", out_path, "write the report to a file instead of stdout");
  };

  GroupInput info_input;
  CLI::App* info = app.add_subcommand("info", "structure report for Q(t)");
  info_input.attach(info);
  add_common(info);
  info->callback([&] {
    rendered = render_info(build_info(info_input.resolve()), parse_format(format_name));
  });

  GroupInput table_input;
  CLI::App* table = app.add_subcommand("table", "full multiplication table of Q(t)");
  table_input.attach(table);
  add_common(table);
  table->callback([&] {
    rendered = render_table(build_table(table_input.resolve()), parse_format(format_name));
  });

  int max_n = 8;
  CLI::App* periodic =
      app.add_subcommand("periodic", "triangle of the groups Q_{p,q} with 0 <= p+q <= N");
  periodic->add_option("--max-n", max_n, "largest rank to include")->capture_default_str();
  add_common(periodic);
  periodic->callback([&] {
    rendered = render_periodic(build_periodic(max_n), max_n, parse_format(format_name));
  });

  int char_rank = 0;
  CLI::App* characters =
      app.add_subcommand("characters", "character matrix chi_A(e_B) = (-1)^{|A cap B|}");
  characters->add_option("n", char_rank, "number of generators")->required();
  add_common(characters);
  characters->callback([&] {
    rendered =
        render_characters(build_characters(char_rank), char_rank, parse_format(format_name));
  });

  GroupInput central_input;
  CLI::App* central =
      app.add_subcommand("central", "basis of the central functions in Q[Q(t)]");
  central_input.attach(central);
  add_common(central);
  central->callback([&] {
    rendered = render_central(build_central(central_input.resolve()), parse_format(format_name));
  });

  GroupInput constants_input;
  CLI::App* constants =
      app.add_subcommand("constants", "Clifford structure constants e_A e_B = sign e_{A xor B}");
  constants_input.attach(constants);
  add_common(constants);
  constants->callback([&] {
    rendered =
        render_constants(build_constants(constants_input.resolve()), parse_format(format_name));
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (out_path.empty()) {
      result.output = rendered;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      file << rendered;
      if (!file) throw std::invalid_argument("cannot write to '" + out_path + "'");
    }
  } catch (const CLI::CallForHelp& e) {
    result.exit_code = app.exit(e, help_out, diag);
    result.output = help_out.str();
  } catch (const CLI::CallForAllHelp& e) {
    result.exit_code = app.exit(e, help_out, diag);
    result.output = help_out.str();
  } catch (const CLI::ParseError& e) {
    app.exit(e, help_out, diag);
    result.exit_code = 2;
  } catch (const size_cap_error& e) {
    diag << "error: " << e.what() << '\n';
    result.exit_code = 3;
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << '\n';
    result.exit_code = 2;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    result.exit_code = 1;
  }
  result.error = diag.str();
  return result;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  const CliResult result = run_cli(args);
  std::fputs(result.output.c_str(), stdout);
  std::fputs(result.error.c_str(), stderr);
  return result.exit_code;
}

}  // namespace veegroups
