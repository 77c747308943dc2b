#include "vbraid/cluster.hpp"

#include <cstdlib>
#include <string>

#include "vbraid/json_io.hpp"

namespace vbraid {

using nlohmann::json;

bool is_antisymmetric(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != -rows[j][i]) return false;
    }
  }
  return true;
}

ExchangeMatrix::ExchangeMatrix(const std::vector<std::vector<int>>& rows) : n_(rows.size()) {
  if (!is_antisymmetric(rows)) throw InvalidExchangeMatrix("exchange matrix must be square and antisymmetric");
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) entries_.insert(entries_.end(), r.begin(), r.end());
}

std::vector<std::vector<int>> ExchangeMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = entries_[i * n_ + j];
  }
  return out;
}

ExchangeMatrix ExchangeMatrix::mutate(std::size_t k) const {
  if (k < 1 || k > n_) throw IndexOutOfRange("vertex " + std::to_string(k) + " outside 1.." + std::to_string(n_));
  ExchangeMatrix out(n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) {
      const int bij = (*this)(i, j);
      int value = 0;
      if (i == k || j == k) {
        value = -bij;
      } else {
        const int bik = (*this)(i, k);
        const int bkj = (*this)(k, j);
        // |b_ik| b_kj + b_ik |b_kj| is always even.
        value = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
      out.entries_[(i - 1) * n_ + (j - 1)] = value;
    }
  }
  return out;
}

void Seed::validate() const {
  if (x.size() != B.size()) throw ArityMismatch("seed has " + std::to_string(x.size()) + " values for " + std::to_string(B.size()) + " vertices");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) throw DivisionByZero("seed value x" + std::to_string(i + 1) + " is zero");
  }
}

void YSeed::validate() const {
  if (y.size() != B.size()) throw ArityMismatch("seed has " + std::to_string(y.size()) + " values for " + std::to_string(B.size()) + " vertices");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) throw DivisionByZero("seed value y" + std::to_string(i + 1) + " is zero");
  }
}

Seed mutate_x(const Seed& seed, std::size_t k) {
  const std::size_t n = seed.B.size();
  if (k < 1 || k > n) throw IndexOutOfRange("vertex " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (seed.x.size() != n) throw ArityMismatch("seed value count does not match exchange matrix");
  const FieldValue& xk = seed.x[k - 1];
  if (xk.is_zero()) throw DivisionByZero("x" + std::to_string(k) + " is zero");

  FieldValue positive = constant_like(xk, Rational(1));
  FieldValue negative = constant_like(xk, Rational(1));
  for (std::size_t j = 1; j <= n; ++j) {
    const int b = seed.B(j, k);
    if (b > 0) positive = positive * power(seed.x[j - 1], b);
    if (b < 0) negative = negative * power(seed.x[j - 1], -b);
  }
  Seed out{seed.x, seed.B.mutate(k)};
  out.x[k - 1] = (positive + negative) / xk;
  if (out.x[k - 1].is_zero()) throw SingularPoint("mutated value x" + std::to_string(k) + " vanishes");
  return out;
}

YSeed mutate_y(const YSeed& seed, std::size_t k) {
  const std::size_t n = seed.B.size();
  if (k < 1 || k > n) throw IndexOutOfRange("vertex " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (seed.y.size() != n) throw ArityMismatch("seed value count does not match exchange matrix");
  const FieldValue& yk = seed.y[k - 1];
  if (yk.is_zero()) throw SingularPoint("y" + std::to_string(k) + " is zero");

  const FieldValue one = constant_like(yk, Rational(1));
  const FieldValue one_plus = one + yk;
  YSeed out{seed.y, seed.B.mutate(k)};
  out.y[k - 1] = one / yk;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == k) continue;
    const int b = seed.B(k, i);
    if (b == 0) continue;
    if (one_plus.is_zero()) throw SingularPoint("1 + y" + std::to_string(k) + " vanishes");
    // (1 + 1/y_k)^{-b} = (y_k / (1 + y_k))^{b}
    const FieldValue factor = b > 0 ? power(yk / one_plus, b) : power(one_plus, -b);
    out.y[i - 1] = seed.y[i - 1] * factor;
  }
  return out;
}

std::vector<FieldValue> y_from_x(const Seed& seed) {
  seed.validate();
  const std::size_t n = seed.B.size();
  std::vector<FieldValue> y;
  y.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    FieldValue value = constant_like(seed.x.front(), Rational(1));
    for (std::size_t k = 1; k <= n; ++k) {
      const int b = seed.B(k, j);
      if (b != 0) value = value * power(seed.x[k - 1], b);
    }
    y.push_back(std::move(value));
  }
  return y;
}

ExchangeMatrix build_quiver(int n) {
  if (n < 2) throw InvalidStrandCount("quiver needs n >= 2, got " + std::to_string(n));
  const std::size_t size = 3 * static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<int>> rows(size, std::vector<int>(size, 0));
  const auto edge = [&rows](std::size_t from, std::size_t to) {
    rows[from - 1][to - 1] = 1;
    rows[to - 1][from - 1] = -1;
  };
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    const std::size_t left = 3 * i - 2;
    const std::size_t bottom = 3 * i - 1;
    const std::size_t top = 3 * i;
    const std::size_t right = 3 * i + 1;
    edge(left, bottom);
    edge(bottom, right);
    edge(right, top);
    edge(top, left);
  }
  return ExchangeMatrix(rows);
}

std::vector<std::size_t> parse_mutation_script(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string_view::npos) {
      throw SyntaxError("malformed mutation script '" + std::string(text) + "'");
    }
    const auto k = static_cast<std::size_t>(std::stoul(std::string(item)));
    if (k == 0) throw IndexOutOfRange("vertices are 1-based; got 0");
    out.push_back(k);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {

std::vector<FieldValue> read_values(const json& arr) {
  if (!arr.is_array()) throw SyntaxError("seed values must be an array");
  std::vector<FieldValue> values;
  bool symbolic = false;
  for (const auto& item : arr) {
    FieldValue v;
    if (item.is_string()) {
      v = FieldValue::parse(item.get<std::string>());
    } else if (item.is_number_integer()) {
      v = FieldValue(Rational(item.get<long>()));
    } else {
      v = item.get<FieldValue>();
    }
    symbolic = symbolic || v.is_function();
    values.push_back(std::move(v));
  }
  if (symbolic) {
    for (auto& v : values) v = FieldValue::promote(v);
  }
  return values;
}

ExchangeMatrix read_matrix(const json& j) {
  if (!j.is_array()) throw SyntaxError("\"B\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw SyntaxError("\"B\" rows must be arrays");
    std::vector<int> row;
    for (const auto& e : r) {
      if (!e.is_number_integer()) throw SyntaxError("\"B\" entries must be integers");
      row.push_back(e.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return ExchangeMatrix(rows);
}

void check_declared_size(const json& j, std::size_t actual) {
  if (j.contains("n_vertices")) {
    const auto& nv = j.at("n_vertices");
    if (!nv.is_number_integer() || nv.get<long long>() != static_cast<long long>(actual)) {
      throw ArityMismatch("\"n_vertices\" does not match the exchange matrix");
    }
  }
}

json values_to_json(const std::vector<FieldValue>& values, char prefix) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str(prefix));
  return arr;
}

}  // namespace

json seed_to_json(const Seed& seed) {
  return {{"n_vertices", seed.B.size()}, {"x", values_to_json(seed.x, 'x')}, {"B", seed.B.rows()}};
}

Seed seed_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("B")) throw SyntaxError("seed needs \"x\" and \"B\"");
  Seed seed{read_values(j.at("x")), read_matrix(j.at("B"))};
  check_declared_size(j, seed.B.size());
  seed.validate();
  return seed;
}

json yseed_to_json(const YSeed& seed) {
  return {{"n_vertices", seed.B.size()}, {"y", values_to_json(seed.y, 'y')}, {"B", seed.B.rows()}};
}

YSeed yseed_from_json(const json& j) {
  if (!j.is_object() || !j.contains("B") || !(j.contains("y") || j.contains("x"))) {
    throw SyntaxError("y-seed needs \"y\" (or \"x\") and \"B\"");
  }
  YSeed seed{read_values(j.contains("y") ? j.at("y") : j.at("x")), read_matrix(j.at("B"))};
  check_declared_size(j, seed.B.size());
  seed.validate();
  return seed;
}

}  // namespace vbraid
