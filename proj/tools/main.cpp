#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11/CLI11.hpp>

#include "jacobi/errors.hpp"
#include "jacobi_cli/acceptance.hpp"
#include "jacobi_cli/commands.hpp"
#include "jacobi_cli/documents.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw jacobi::ValidationError("cannot open input file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw jacobi::ValidationError("cannot open output file '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = jacobi::cli;
  CLI::App app{"Spectral curves of Jacobi pencils: exact construction, reducibility certificates, "
               "Hensel decision and monodromy"};
  app.require_subcommand(1);
  std::string input_path, output_path, csv_path, form = "w";
  std::uint64_t seed = 1;
  bool text = false;
  auto* seed_opt = app.add_option("--seed", seed, "Seed for campaigns and the self-test");
  app.add_option("--input", input_path, "Input document (default: standard input)");
  app.add_option("--output", output_path, "Output file (default: standard output)");
  app.add_option("--form", form, "Second variable of reported curves")->check(CLI::IsMember({"t", "w"}));
  app.add_option("--csv", csv_path, "Also write the campaign table as CSV");
  app.add_flag("--text", text, "Human-readable summary instead of JSON");
  app.fallthrough();

  for (const char* name : {"charpoly", "detect", "decide", "monodromy", "campaign"}) app.add_subcommand(name);
  app.add_subcommand("selftest", "Run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "selftest") {
      bool all = true;
      std::ostringstream lines;
      cli::run_acceptance(seed, [&](const cli::CriterionResult& r) {
        all = all && r.passed;
        const std::string line = cli::format_line(r) + "\n";
        if (output_path.empty()) {
          std::cout << line << std::flush;
        } else {
          lines << line;
        }
      });
      if (!output_path.empty()) write_all(output_path, lines.str());
      return all ? cli::kExitOk : cli::kExitFailure;
    }

    const std::string source = input_path.empty() ? "<stdin>" : input_path;
    const std::string body = read_all(input_path);
    const auto input = cli::parse_text(body, source);
    cli::Options opts;
    opts.form = form == "t" ? jacobi::Form::T : jacobi::Form::W;
    if (seed_opt->count() > 0) opts.seed = seed;
    const cli::CommandResult res = cli::run_command(command, input, body, opts);
    write_all(output_path, text ? cli::render_text(res.document) : res.document.dump(2) + "\n");
    if (!csv_path.empty()) write_all(csv_path, res.csv);
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "jacobi " << command << ": " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
}
