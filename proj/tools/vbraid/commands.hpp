#ifndef VBRAID_TOOLS_COMMANDS_HPP
#define VBRAID_TOOLS_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include "config.hpp"

namespace vbraid::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kSingular = 2,
  kInconclusive = 3,
  kDeviation = 4,
};

/// Invariant report for one word. 1 on parse/validation errors, 2 when every
/// base point is singular.
int cmd_invariant(const std::string& word_text, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Invariants for every word of a corpus: a JSON corpus file, or one word
/// per line (group and n then come from the config). Entries are evaluated
/// in parallel and reported in input order; the exit code is the largest
/// per-entry code.
int cmd_invariant_corpus(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);

/// "distinct" (0) when the invariants differ at a common base point,
/// "inconclusive-at-base" (3) otherwise. With config.symbolic an equal pair
/// is compared as birational maps: "distinct" (0) or "equal-in-image" (3).
int cmd_distinguish(const std::string& word1, const std::string& word2, const RunConfig& config, std::ostream& out,
                    std::ostream& err);

/// Defining relations, plus forbidden relations and factorization
/// identities for the virtual kinds. 4 on any deviation.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Applies a mutation script left to right to a seed read from
/// `seed_file`; without a file, the quiver seed on 3n+1 symbolic variables
/// is used. With config.y_variables the seed is a YSeed.
int cmd_mutate(const std::optional<std::string>& seed_file, const std::string& script, const RunConfig& config,
               std::ostream& out, std::ostream& err);

}  // namespace vbraid::cli

#endif  // VBRAID_TOOLS_COMMANDS_HPP
