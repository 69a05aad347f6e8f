#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "motivic/classifier.hpp"
#include "motivic/motivic_class.hpp"

namespace motivic::cli {

enum class Format { json, text };

/// Settings shared by every subcommand. Command-line flags override the
/// [run] table of a --config file, which overrides the environment.
struct RunConfig {
  std::string command;
  std::string input_path;
  Format output_format = Format::json;
  bool explain = false;
  bool assume_hartshorne = false;
  bool assume_ddj = false;
  std::string order = "lex";
  int truncation = 8;
  TablePtr table;
};

/// Contents of a check-yfy / classify input file.
struct InputFile {
  std::optional<bounds::VarietyProfile> profile;
  std::optional<std::string> poincare;  // p_Y(t)
  std::optional<int> m;
  std::optional<std::string> class_text;  // [Y]
  std::optional<std::string> sym2_text;   // [Y^(2)] when supplied
  std::string sing_text = "0";
  TablePtr table;
};

/// [[generators]] entries: name, dimension, poincare, hodge_deligne,
/// effective, point_count, or the shorthand genus = g for a curve.
TablePtr parse_table_toml(const std::string& text, const std::string& source = "<string>");
InputFile parse_input_toml(const std::string& text, const std::string& source = "<string>");
/// Fills flags from the [run] table (format, explain, truncation, order,
/// assume_hartshorne, assume_ddj) and generators.
void apply_config_toml(RunConfig& cfg, const std::string& text, const std::string& source = "<string>");

std::string read_file(const std::string& path);

/// MOTIVIC_TRUNCATION, default 8; ParseError on junk.
int truncation_from_env();

/// Runs the command line (without the program name). Returns the exit
/// code: 0 success, 1 usage or parse error, 2 mathematical obstruction.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic::cli
