#include "output.hpp"

#include <sstream>

namespace cli {

Json tagged(int value, const std::string& source)
{
  Json j = Json::object();
  j["value"] = value;
  j["source"] = source;
  return j;
}

namespace {

std::string tsv_cell(const std::string& s)
{
  std::string out;
  for (char c : s)
    out += (c == '\t' || c == '\n') ? ' ' : c;
  return out;
}

} // namespace

std::string render(const std::string& command, const Json& args, const CommandOutput& out, Format format)
{
  std::ostringstream os;
  switch (format) {
  case Format::Json: {
    Json env = Json::object();
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["args"] = args;
    env["exit_code"] = out.exit_code;
    env["payload"] = out.payload;
    os << env.dump(2) << '\n';
    break;
  }
  case Format::Tsv: {
    os << "#schema_version=" << kSchemaVersion << "\tcommand=" << command << '\n';
    for (std::size_t i = 0; i < out.table.columns.size(); ++i)
      os << (i ? "\t" : "") << out.table.columns[i];
    os << '\n';
    for (const auto& row : out.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "\t" : "") << tsv_cell(row[i]);
      os << '\n';
    }
    break;
  }
  case Format::Human: os << out.human; break;
  }
  return os.str();
}

} // namespace cli
