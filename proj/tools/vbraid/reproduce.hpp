#ifndef VBRAID_TOOLS_REPRODUCE_HPP
#define VBRAID_TOOLS_REPRODUCE_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "vbraid/representation.hpp"

namespace vbraid::cli {

struct ReproduceRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// How the example rows evaluate a word at a point. Tests swap in broken
/// kernels to check that the suite notices.
using Evaluator = std::function<Point(const BraidWord&, const Point&)>;

Evaluator standard_evaluator();

/// Every regression row, in table order. `seed` drives the random words of
/// the fixed-point row.
std::vector<ReproduceRow> run_reproduction(const Evaluator& evaluate, std::uint64_t seed = 0);

/// Prints the table (or a JSON array with config.format == json) and
/// returns 0 iff every row passes, 4 otherwise; failing rows go to `err`.
int cmd_reproduce(const RunConfig& config, std::ostream& out, std::ostream& err,
                        const Evaluator& evaluate = standard_evaluator());

}  // namespace vbraid::cli

#endif  // VBRAID_TOOLS_REPRODUCE_HPP
