#ifndef FISCHER_TOOLS_OUTPUT_HPP
#define FISCHER_TOOLS_OUTPUT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum class Format { Human, Json, Tsv };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

struct CommandOutput {
  Json payload = Json::object();
  Table table;
  std::string human;
  int exit_code = 0;
};

/// {"value": v, "source": tag}
Json tagged(int value, const std::string& source);

/// The whole stdout text for one invocation.
std::string render(const std::string& command, const Json& args, const CommandOutput& out, Format format);

} // namespace cli

#endif
