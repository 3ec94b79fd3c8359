#include "steinhaus/modring.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace steinhaus {

namespace {
constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;
}

Modulus::Modulus(std::int64_t m) : m_(m) {
  if (m < 1) throw Error("modulus must be >= 1");
  if (m > kMaxModulus) throw Error("modulus too large (must be < 2^31)");
}

ModTuple::ModTuple(Modulus m, std::vector<std::int64_t> values)
    : m_(m), v_(std::move(values)) {
  for (auto& x : v_) x = m_.reduce(x);
}

std::int64_t MultiplicityMap::cardinality() const {
  std::int64_t total = 0;
  for (auto c : counts_) total += c;
  return total;
}

ModTuple project(const ModTuple& t, std::int64_t d) {
  if (!t.modulus().divides(d)) throw Error("not a divisor");
  ModTuple out{Modulus(d)};
  for (std::size_t j = 0; j < t.size(); ++j) out.push_back(t[j]);
  return out;
}

ModTuple tuple_add(const ModTuple& a, const ModTuple& b) {
  if (a.modulus() != b.modulus()) throw Error("modulus mismatch");
  if (a.size() != b.size()) throw Error("length mismatch");
  ModTuple out{a.modulus()};
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j] + b[j]);
  return out;
}

ModTuple tuple_scale(std::int64_t lambda, const ModTuple& a) {
  const std::int64_t lr = a.modulus().reduce(lambda);
  ModTuple out{a.modulus()};
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(lr * a[j]);
  return out;
}

ModTuple concat(const ModTuple& a, const ModTuple& b) {
  if (a.modulus() != b.modulus()) throw Error("modulus mismatch");
  ModTuple out{a.modulus()};
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j]);
  for (std::size_t j = 0; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

ModTuple repeat(const ModTuple& a, std::int64_t lambda) {
  if (lambda < 0) throw Error("negative repeat count");
  ModTuple out{a.modulus()};
  for (std::int64_t i = 0; i < lambda; ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j]);
  return out;
}

ModTuple tuple_neg(const ModTuple& a) { return tuple_scale(-1, a); }

bool is_antisymmetric(const ModTuple& t) {
  const std::size_t n = t.size();
  for (std::size_t j = 0; j < n; ++j)
    if (t.modulus().reduce(t[j] + t[n - 1 - j]) != 0) return false;
  return true;
}

MultiplicityMap multiplicity(const ModTuple& t) {
  MultiplicityMap mm{t.modulus()};
  for (std::size_t j = 0; j < t.size(); ++j) mm.add(t[j]);
  return mm;
}

bool is_balanced(const MultiplicityMap& mm) {
  const auto& c = mm.counts();
  for (auto x : c)
    if (x != c[0]) return false;
  return true;
}

bool is_almost_balanced(const MultiplicityMap& mm) {
  const std::int64_t m = mm.modulus().value();
  const std::int64_t q = mm.cardinality() / m;
  for (auto x : mm.counts())
    if (x != q && x != q + 1) return false;
  return true;
}

std::int64_t sigma(const ModTuple& t) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < t.size(); ++j)
    s = t.modulus().reduce(s + t[j]);
  return s;
}

MultiplicityMap project(const MultiplicityMap& mm, std::int64_t d) {
  if (!mm.modulus().divides(d)) throw Error("not a divisor");
  MultiplicityMap out{Modulus(d)};
  const auto& c = mm.counts();
  for (std::size_t x = 0; x < c.size(); ++x)
    out.add(static_cast<std::int64_t>(x) % d, c[x]);
  return out;
}

std::string to_json(const ModTuple& t) {
  nlohmann::json j;
  j["m"] = t.mod();
  j["v"] = t.values();
  return j.dump();
}

std::string to_digits(const ModTuple& t) {
  if (t.mod() > 10) throw Error("digit form requires m <= 10");
  std::string s;
  s.reserve(t.size());
  for (std::size_t j = 0; j < t.size(); ++j)
    s.push_back(static_cast<char>('0' + t[j]));
  return s;
}

ModTuple tuple_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::int64_t> v = j.at("v").get<std::vector<std::int64_t>>();
  return ModTuple{Modulus(j.at("m").get<std::int64_t>()), std::move(v)};
}

ModTuple tuple_from_digits(const std::string& digits, std::int64_t m) {
  if (m > 10) throw Error("digit form requires m <= 10");
  std::vector<std::int64_t> v;
  v.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error("invalid digit in tuple string");
    v.push_back(c - '0');
  }
  return ModTuple{Modulus(m), std::move(v)};
}

}  // namespace steinhaus
