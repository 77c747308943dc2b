#ifndef VBRAID_TOOLS_CONFIG_HPP
#define VBRAID_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "vbraid/braid_word.hpp"
#include "vbraid/relations.hpp"

namespace vbraid::cli {

enum class OutputFormat { json, plain };

/// Everything a command needs besides its positional inputs. The seed
/// determines every randomized choice (base-point retries).
struct RunConfig {
  std::optional<GroupKind> group;
  int strands = 0;
  std::optional<std::string> base;
  std::uint64_t seed = 0;
  SymbolicLimits limits;
  OutputFormat format = OutputFormat::json;
  bool symbolic = false;
  bool y_variables = false;
};

/// {"group": "vb", "n": 3, "base": "1,2,2,1,1,2", "seed": 0,
///  "max_symbolic_n": 6, "max_symbolic_len": 12, "format": "json",
///  "symbolic": false, "y": false}; every key optional.
/// Throws SyntaxError on unknown keys or bad values.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& config);

RunConfig load_config(const std::string& path);

}  // namespace vbraid::cli

#endif  // VBRAID_TOOLS_CONFIG_HPP
