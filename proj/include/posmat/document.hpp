#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "posmat/bonding.hpp"
#include "posmat/exmin.hpp"
#include "posmat/matroid.hpp"
#include "posmat/positroid.hpp"

namespace posmat {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Exit codes of the command line tool.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

struct MatroidDocument {
  std::string name;
  Matroid matroid;
  std::optional<std::vector<std::string>> order;
};

// Parses JSON text; syntax errors carry line:col, semantic errors the offending field.
MatroidDocument parse_document(const std::string& text, const std::string& source = "<input>");
MatroidDocument read_document(const std::string& path);
MatroidDocument document_from_json(const Json& j);
// Always written in the bases representation.
Json document_to_json(const Matroid& m, const std::string& name = "",
                      const std::optional<std::vector<std::string>>& order = std::nullopt);

std::vector<std::string> split_labels(const std::string& csv);
std::vector<int> split_ints(const std::string& csv);
LinearOrder parse_order(const Matroid& m, const std::vector<std::string>& labels);

Json labels_json(const Matroid& m, Mask x);
Json certificate_to_json(const Matroid& m, const Certificate& c);
Certificate certificate_from_json(const Matroid& m, const Json& j);
Json report_to_json(const Matroid& m, const CheckReport& r);
CheckReport report_from_json(const Matroid& m, const Json& j);
Json theorem_to_json(const TheoremReport& r);
Json exmin_to_json(const Matroid& m, const ExminReport& r);

int exit_code(const CheckReport& r);

// Runs the command line tool; argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posmat
