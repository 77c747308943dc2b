#include "vbraid/errors.hpp"

namespace vbraid {

namespace {

std::string with_letter(const std::string& what, std::optional<std::size_t> letter) {
  if (!letter) return what;
  return what + " (at letter " + std::to_string(*letter) + ")";
}

}  // namespace

SingularPoint::SingularPoint(const std::string& what, std::optional<std::size_t> letter)
    : Error(with_letter(what, letter)), letter_(letter) {}

}  // namespace vbraid
