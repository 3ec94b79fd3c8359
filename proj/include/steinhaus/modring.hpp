#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steinhaus/error.hpp"

namespace steinhaus {

// Residue arithmetic over Z/mZ. Residues are stored canonically in [0, m).
// Moduli are restricted to m < 2^31 so that products of canonical residues
// never overflow int64.

class Modulus {
 public:
  explicit Modulus(std::int64_t m);

  std::int64_t value() const { return m_; }

  std::int64_t reduce(std::int64_t x) const {
    std::int64_t r = x % m_;
    return r < 0 ? r + m_ : r;
  }

  bool divides(std::int64_t d) const { return d >= 1 && m_ % d == 0; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const Modulus& a, const Modulus& b) {
    return a.m_ != b.m_;
  }

 private:
  std::int64_t m_;
};

class ModTuple {
 public:
  explicit ModTuple(Modulus m) : m_(m) {}
  ModTuple(Modulus m, std::vector<std::int64_t> values);

  Modulus modulus() const { return m_; }
  std::int64_t mod() const { return m_.value(); }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  std::int64_t operator[](std::size_t j) const { return v_[j]; }
  const std::vector<std::int64_t>& values() const { return v_; }

  void push_back(std::int64_t x) { v_.push_back(m_.reduce(x)); }

  friend bool operator==(const ModTuple& a, const ModTuple& b) {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }
  friend bool operator!=(const ModTuple& a, const ModTuple& b) {
    return !(a == b);
  }
  friend bool operator<(const ModTuple& a, const ModTuple& b) {
    return a.v_ < b.v_;
  }

 private:
  Modulus m_;
  std::vector<std::int64_t> v_;
};

// Total multiplicity function Z/mZ -> N of a finite multiset.
class MultiplicityMap {
 public:
  explicit MultiplicityMap(Modulus m)
      : m_(m), counts_(static_cast<std::size_t>(m.value()), 0) {}

  Modulus modulus() const { return m_; }
  std::int64_t count(std::int64_t x) const {
    return counts_[static_cast<std::size_t>(m_.reduce(x))];
  }
  void add(std::int64_t x, std::int64_t times = 1) {
    counts_[static_cast<std::size_t>(m_.reduce(x))] += times;
  }
  std::int64_t cardinality() const;
  const std::vector<std::int64_t>& counts() const { return counts_; }

  friend bool operator==(const MultiplicityMap& a, const MultiplicityMap& b) {
    return a.m_ == b.m_ && a.counts_ == b.counts_;
  }

 private:
  Modulus m_;
  std::vector<std::int64_t> counts_;
};

// Entrywise reduction mod d, where d divides the modulus of t.
ModTuple project(const ModTuple& t, std::int64_t d);

ModTuple tuple_add(const ModTuple& a, const ModTuple& b);
ModTuple tuple_scale(std::int64_t lambda, const ModTuple& a);
ModTuple concat(const ModTuple& a, const ModTuple& b);
ModTuple repeat(const ModTuple& a, std::int64_t lambda);
ModTuple tuple_neg(const ModTuple& a);

// u[n-1-j] == -u[j] for all j.
bool is_antisymmetric(const ModTuple& t);

MultiplicityMap multiplicity(const ModTuple& t);
bool is_balanced(const MultiplicityMap& mm);
// Counts all lie in {q, q+1} where q = |M| / m rounded down.  When m divides
// |M| this degenerates to is_balanced.
bool is_almost_balanced(const MultiplicityMap& mm);

// Sum of entries mod m.
std::int64_t sigma(const ModTuple& t);

// Projection of a multiset: pushforward of counts along Z/mZ -> Z/dZ.
MultiplicityMap project(const MultiplicityMap& mm, std::int64_t d);

// Serialization.  JSON form {"m":5,"v":[2,2,0,3,3]}; for m <= 10 the compact
// digit-string form "22033" is also accepted and produced.
std::string to_json(const ModTuple& t);
std::string to_digits(const ModTuple& t);
ModTuple tuple_from_json(const std::string& text);
ModTuple tuple_from_digits(const std::string& digits, std::int64_t m);

}  // namespace steinhaus
