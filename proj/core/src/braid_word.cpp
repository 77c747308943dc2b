#include "vbraid/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "vbraid/errors.hpp"

namespace vbraid {

std::string_view to_string(GroupKind g) {
  switch (g) {
    case GroupKind::B: return "B";
    case GroupKind::FB: return "FB";
    case GroupKind::VB: return "VB";
    case GroupKind::FVB: return "FVB";
  }
  return "?";
}

GroupKind parse_group_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "b") return GroupKind::B;
  if (lower == "fb") return GroupKind::FB;
  if (lower == "vb") return GroupKind::VB;
  if (lower == "fvb") return GroupKind::FVB;
  throw SyntaxError("unknown group kind '" + std::string(text) + "' (expected b, fb, vb or fvb)");
}

BraidWord::BraidWord(int strands, GroupKind group, std::vector<Generator> letters)
    : strands_(strands), group_(group), letters_(std::move(letters)) {
  if (strands_ < 2) throw InvalidStrandCount("strand count must be >= 2, got " + std::to_string(strands_));
  for (auto& g : letters_) {
    if (g.index < 1 || g.index > strands_ - 1) {
      throw IndexOutOfRange("generator index " + std::to_string(g.index) + " outside 1.." + std::to_string(strands_ - 1));
    }
    if (g.is_virtual() && !has_virtual(group_)) {
      throw KindMismatch("virtual generator r" + std::to_string(g.index) + " is not in " + std::string(to_string(group_)));
    }
    if (g.power != 1 && g.power != -1) throw SyntaxError("generator power must be +1 or -1");
    if (g.is_virtual() || is_flat(group_)) g.power = 1;
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<Generator> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return BraidWord(strands_, group_, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_ || group_ != rhs.group_) throw KindMismatch("cannot concatenate words of different groups");
  std::vector<Generator> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, group_, std::move(out));
}

BraidWord BraidWord::pow(unsigned k) const {
  BraidWord out(strands_, group_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

namespace {

constexpr std::string_view kSigma = "\xCF\x83";  // σ
constexpr std::string_view kRho = "\xCF\x81";    // ρ

Generator parse_token(std::string_view token, int strands) {
  const std::string original(token);
  GeneratorKind kind;
  int power = 1;
  if (token.starts_with(kSigma)) {
    kind = GeneratorKind::classical;
    token.remove_prefix(kSigma.size());
  } else if (token.starts_with(kRho)) {
    kind = GeneratorKind::virtual_;
    token.remove_prefix(kRho.size());
  } else if (!token.empty() && (token.front() == 's' || token.front() == 'S' || token.front() == 'r')) {
    kind = token.front() == 'r' ? GeneratorKind::virtual_ : GeneratorKind::classical;
    if (token.front() == 'S') power = -1;
    token.remove_prefix(1);
  } else {
    throw SyntaxError("bad generator token '" + original + "'");
  }
  if (!token.empty() && token.front() == '_') token.remove_prefix(1);

  std::size_t digits = 0;
  while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits]))) ++digits;
  if (digits == 0 || digits > 6) throw SyntaxError("bad generator token '" + original + "'");
  const int index = std::stoi(std::string(token.substr(0, digits)));
  token.remove_prefix(digits);

  if (token == "'" || token == "^-1" || token == "^{-1}") {
    if (power == -1) throw SyntaxError("double inverse in token '" + original + "'");
    power = -1;
  } else if (!token.empty() && token != "^1" && token != "^{1}") {
    throw SyntaxError("bad generator token '" + original + "'");
  }
  if (index < 1 || index > strands - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(index) + " outside 1.." + std::to_string(strands - 1) +
                          " in token '" + original + "'");
  }
  return Generator{kind, index, power};
}

}  // namespace

BraidWord parse_word(std::string_view text, int strands, GroupKind group) {
  if (strands < 2) throw InvalidStrandCount("strand count must be >= 2, got " + std::to_string(strands));
  std::vector<Generator> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) letters.push_back(parse_token(token, strands));
  return BraidWord(strands, group, std::move(letters));
}

std::string format_word(const BraidWord& word) {
  std::string out;
  for (const auto& g : word.letters()) {
    if (!out.empty()) out += ' ';
    out += g.is_virtual() ? 'r' : (g.power < 0 ? 'S' : 's');
    out += std::to_string(g.index);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BraidWord& word) { return os << format_word(word); }

BraidWord free_reduce(const BraidWord& word) {
  const bool flat = is_flat(word.group());
  std::vector<Generator> stack;
  stack.reserve(word.length());
  for (const auto& g : word.letters()) {
    if (!stack.empty()) {
      const Generator& top = stack.back();
      const bool same_generator = top.kind == g.kind && top.index == g.index;
      const bool cancels = same_generator && (top.is_virtual() || flat || top.power == -g.power);
      if (cancels) {
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(g);
  }
  return BraidWord(word.strands(), word.group(), std::move(stack));
}

BraidWord random_word(GroupKind group, int strands, std::size_t length, std::mt19937_64& rng) {
  if (strands < 2) throw InvalidStrandCount("strand count must be >= 2, got " + std::to_string(strands));
  std::vector<Generator> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(Generator::sigma(i));
    if (!is_flat(group)) alphabet.push_back(Generator::sigma(i, -1));
    if (has_virtual(group)) alphabet.push_back(Generator::rho(i));
  }
  std::vector<Generator> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) letters.push_back(alphabet[rng() % alphabet.size()]);
  return BraidWord(strands, group, std::move(letters));
}

std::string_view to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::braid: return "braid";
    case RelationTag::far_commute: return "far-commute";
    case RelationTag::virtual_braid: return "virtual-braid";
    case RelationTag::virtual_far_commute: return "virtual-far-commute";
    case RelationTag::virtual_involution: return "virtual-involution";
    case RelationTag::mixed_commute: return "mixed-commute";
    case RelationTag::mixed_braid: return "mixed-braid";
    case RelationTag::flat_involution: return "flat-involution";
    case RelationTag::forbidden_a: return "forbidden-a";
    case RelationTag::forbidden_b: return "forbidden-b";
  }
  return "?";
}

RelationTable relation_table(GroupKind group, int strands, RelationSet set) {
  if (strands < 2) throw InvalidStrandCount("strand count must be >= 2, got " + std::to_string(strands));
  const int m = strands - 1;
  RelationTable table;
  const auto word = [&](std::vector<Generator> letters) { return BraidWord(strands, group, std::move(letters)); };
  const auto add = [&](std::vector<Generator> lhs, std::vector<Generator> rhs, RelationTag tag) {
    table.push_back(Relation{word(std::move(lhs)), word(std::move(rhs)), tag});
  };
  using G = Generator;

  if (set != RelationSet::forbidden) {
    for (int i = 1; i <= m - 1; ++i) {
      add({G::sigma(i), G::sigma(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)}, RelationTag::braid);
    }
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 2; j <= m; ++j) add({G::sigma(i), G::sigma(j)}, {G::sigma(j), G::sigma(i)}, RelationTag::far_commute);
    }
    if (has_virtual(group)) {
      for (int i = 1; i <= m - 1; ++i) {
        add({G::rho(i), G::rho(i + 1), G::rho(i)}, {G::rho(i + 1), G::rho(i), G::rho(i + 1)}, RelationTag::virtual_braid);
      }
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 2; j <= m; ++j) add({G::rho(i), G::rho(j)}, {G::rho(j), G::rho(i)}, RelationTag::virtual_far_commute);
      }
      for (int i = 1; i <= m; ++i) add({G::rho(i), G::rho(i)}, {}, RelationTag::virtual_involution);
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          if (std::abs(i - j) >= 2) add({G::sigma(i), G::rho(j)}, {G::rho(j), G::sigma(i)}, RelationTag::mixed_commute);
        }
      }
      for (int i = 1; i <= m - 1; ++i) {
        add({G::rho(i), G::rho(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::rho(i), G::rho(i + 1)}, RelationTag::mixed_braid);
      }
    }
    if (is_flat(group)) {
      for (int i = 1; i <= m; ++i) add({G::sigma(i), G::sigma(i)}, {}, RelationTag::flat_involution);
    }
  }

  if (set != RelationSet::defining && has_virtual(group)) {
    for (int i = 1; i <= m - 1; ++i) {
      add({G::rho(i), G::sigma(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::sigma(i), G::rho(i + 1)}, RelationTag::forbidden_a);
      add({G::rho(i + 1), G::sigma(i), G::sigma(i + 1)}, {G::sigma(i), G::sigma(i + 1), G::rho(i)}, RelationTag::forbidden_b);
    }
  }
  return table;
}

std::vector<std::string> read_word_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SyntaxError("corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("n") || !item.contains("group") || !item.contains("word")) {
      throw SyntaxError("corpus entry needs \"n\", \"group\" and \"word\"");
    }
    if (!item.at("n").is_number_integer() || !item.at("group").is_string() || !item.at("word").is_string()) {
      throw SyntaxError("corpus entry has mistyped fields");
    }
    const int n = item.at("n").get<int>();
    const GroupKind g = parse_group_kind(item.at("group").get<std::string>());
    std::string name = item.contains("name") && item.at("name").is_string() ? item.at("name").get<std::string>()
                                                                            : "word" + std::to_string(out.size() + 1);
    out.push_back(CorpusEntry{std::move(name), parse_word(item.at("word").get<std::string>(), n, g)});
  }
  return out;
}

nlohmann::json corpus_to_json(const std::vector<CorpusEntry>& corpus) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : corpus) {
    arr.push_back({{"name", e.name},
                   {"n", e.word.strands()},
                   {"group", std::string(to_string(e.word.group()))},
                   {"word", format_word(e.word)}});
  }
  return arr;
}

}  // namespace vbraid
