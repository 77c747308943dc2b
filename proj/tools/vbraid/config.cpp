#include "config.hpp"

#include <fstream>

#include "vbraid/errors.hpp"

namespace vbraid::cli {

namespace {

template <class T>
T read(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SyntaxError("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "group") {
      c.group = parse_group_kind(read<std::string>(j, "group"));
    } else if (key == "n" || key == "strands") {
      c.strands = read<int>(j, key.c_str());
    } else if (key == "base") {
      c.base = read<std::string>(j, "base");
    } else if (key == "seed") {
      c.seed = read<std::uint64_t>(j, "seed");
    } else if (key == "max_symbolic_n") {
      c.limits.max_strands = read<int>(j, "max_symbolic_n");
    } else if (key == "max_symbolic_len") {
      c.limits.max_length = read<std::size_t>(j, "max_symbolic_len");
    } else if (key == "format") {
      const auto f = read<std::string>(j, "format");
      if (f == "json") {
        c.format = OutputFormat::json;
      } else if (f == "plain") {
        c.format = OutputFormat::plain;
      } else {
        throw SyntaxError("config key 'format' must be \"json\" or \"plain\", got \"" + f + "\"");
      }
    } else if (key == "symbolic") {
      c.symbolic = read<bool>(j, "symbolic");
    } else if (key == "y") {
      c.y_variables = read<bool>(j, "y");
    } else {
      throw SyntaxError("unknown config key '" + key + "'");
    }
  }
  return c;
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j = {{"n", c.strands},
                      {"seed", c.seed},
                      {"max_symbolic_n", c.limits.max_strands},
                      {"max_symbolic_len", c.limits.max_length},
                      {"format", c.format == OutputFormat::json ? "json" : "plain"},
                      {"symbolic", c.symbolic},
                      {"y", c.y_variables}};
  if (c.group) j["group"] = std::string(to_string(*c.group));
  if (c.base) j["base"] = *c.base;
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open config file '" + path + "'");
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError("config file '" + path + "': " + e.what());
  }
}

}  // namespace vbraid::cli
