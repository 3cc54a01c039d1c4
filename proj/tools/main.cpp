#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "skewcliff/dispatch.hpp"
#include "skewcliff/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"skewcliff: graded (skew) Clifford algebras and their twists"};
  app.set_version_flag("--version", "skewcliff 0.1.0");

  std::string command;
  std::string file;
  std::string format = "text";
  std::string algebra = "x";
  std::string side = "gens";
  skewcliff::DispatchOptions options;
  std::size_t max_degree = 0;

  std::string commands_help = "one of:";
  for (const auto& c : skewcliff::known_commands()) commands_help += " " + c;
  app.add_option("command", command, commands_help)->required()->check(CLI::IsMember(skewcliff::known_commands()));
  app.add_option("file", file, "algebra description (JSON)")->required();
  auto* max_opt = app.add_option("--max-deg", max_degree, "degree bound for Groebner computations (default 2n+2)")
                      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--grid", options.grid_radius, "normal-locus grid radius")->check(CLI::Range(0L, 10L));
  app.add_option("--poly", options.poly, "polynomial argument for nf, normal and central");
  app.add_option("--algebra", algebra, "x: the presentation, skew: S, quotient: S/(forms)")
      ->check(CLI::IsMember({"x", "skew", "quotient"}));
  app.add_option("--side", side, "gens: degree-one generators, y: the y_k")->check(CLI::IsMember({"gens", "y"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*max_opt) options.max_degree = max_degree;
  static const std::map<std::string, skewcliff::AlgebraChoice> choices{
      {"x", skewcliff::AlgebraChoice::x},
      {"skew", skewcliff::AlgebraChoice::skew},
      {"quotient", skewcliff::AlgebraChoice::quotient}};
  options.algebra = choices.at(algebra);
  options.side_y = side == "y";

  try {
    const auto spec = skewcliff::parse_spec(file);
    const auto report = skewcliff::dispatch(command, spec, options);
    std::cout << skewcliff::emit_report(report, format == "json" ? skewcliff::ReportFormat::json
                                                                  : skewcliff::ReportFormat::text);
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
