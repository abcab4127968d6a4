#include "equindex/cli.hpp"

#include "equindex/errors.hpp"
#include "equindex/index.hpp"
#include "equindex/io.hpp"
#include "oracles.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace equindex::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

QSeries<Rational> oracle_series(const std::string& preset, int order) {
  if (preset == "ls2" || preset.starts_with("lsigma:")) {
    const ProblemSpec spec = preset_problem(preset, order);
    const int g = spec.model.genus();
    std::vector<Rational> c;
    for (const auto& v : oracles::partition_self_convolution(order)) c.emplace_back(v * (1 - g));
    return QSeries<Rational>(0, std::move(c), order);
  }
  const ProblemSpec spec = preset_problem(preset, order);  // validates cplane:<k>
  const int k = std::stoi(preset.substr(7));
  return oracles::direct_cplane_index(k, {Integer(1)}, order);
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.input_path.has_value() == config.preset.has_value()) {
    err << "equindex: exactly one of --input and --preset is required\n";
    return 1;
  }
  try {
    QSeries<Rational> result;
    if (config.oracle) {
      if (!config.preset) throw SchemaError("--oracle", "only available with --preset");
      result = oracle_series(*config.preset, config.order.value_or(kDefaultOrder));
    } else {
      ProblemSpec spec = config.preset
                             ? preset_problem(*config.preset, config.order.value_or(kDefaultOrder))
                             : parse_problem(read_file(*config.input_path));
      if (config.order) spec.order = *config.order;
      if (spec.order < 0) throw SchemaError("order", "must be nonnegative");
      result = localized_index(spec);
      if (has_integer_roots(spec) && !is_integral(result))
        err << "equindex: warning: non-integral coefficients from integer roots "
               "(the tangent data is probably not a genuine tangent bundle)\n";
    }

    const std::string rendered = config.format == OutputFormat::json
                                     ? series_to_json(result).dump() + "\n"
                                     : to_text(result) + "\n";
    if (config.output_path) {
      std::ofstream f(*config.output_path, std::ios::binary);
      if (!f) throw IoError("cannot open '" + *config.output_path + "' for writing");
      f << rendered;
      f.flush();
      if (!f) throw IoError("error writing '" + *config.output_path + "'");
    } else {
      out << rendered;
    }
    return 0;
  } catch (const IoError& e) {
    err << "equindex: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "equindex: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Localized equivariant index as a truncated q-series", "equindex"};
  CliConfig config;
  std::string format = "text";
  auto* input = app.add_option("--input", config.input_path, "Problem spec (JSON)");
  auto* preset = app.add_option("--preset", config.preset, "cplane:<k> | ls2 | lsigma:<g>");
  input->excludes(preset);
  preset->excludes(input);
  app.add_option("--order", config.order, "Truncation order N (output known mod q^(N+1))")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", config.output_path, "Write the result here instead of stdout");
  app.add_flag("--oracle", config.oracle)->group("");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "equindex: " << e.what() << "\n";
    return 1;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  return run(config, out, err);
}

}  // namespace equindex::cli
