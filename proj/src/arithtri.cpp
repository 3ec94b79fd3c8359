#include "steinhaus/arithtri.hpp"

#include <numeric>
#include <sstream>

namespace steinhaus {

ArithTriangle::ArithTriangle(Modulus m, std::int64_t a_, std::int64_t d1_,
                             std::int64_t d2_, std::int64_t n_)
    : modulus(m),
      a(m.reduce(a_)),
      d1(m.reduce(d1_)),
      d2(m.reduce(d2_)),
      n(n_) {
  if (n_ < 0) throw Error("negative triangle size");
}

MultiplicityMap at_multiplicity(const ArithTriangle& t) {
  MultiplicityMap mm{t.modulus};
  const std::int64_t m = t.modulus.value();
  std::int64_t row_start = t.a;
  for (std::int64_t i = 0; i < t.n; ++i) {
    std::int64_t v = row_start;
    for (std::int64_t j = 0; j < t.n - i; ++j) {
      mm.add(v);
      v += t.d1;
      if (v >= m) v -= m;
    }
    row_start += t.d2;
    if (row_start >= m) row_start -= m;
  }
  return mm;
}

bool shift_invariance_holds(const ArithTriangle& t) {
  const std::int64_t m = t.modulus.value();
  const std::int64_t g1 = std::gcd(t.d1, m);
  const std::int64_t g2 = std::gcd(t.d2, m);
  if (g1 != g2) {
    std::ostringstream os;
    os << "hypothesis gcd(d1,m) = gcd(d2,m) fails: " << g1 << " != " << g2;
    throw Error(os.str());
  }
  const std::int64_t period = m / g1;
  if (t.n % period != 0 && (t.n + 1) % period != 0)
    throw Error("hypothesis n = 0 or -1 mod m/gcd(d1,m) fails");
  const std::int64_t shift = std::gcd(t.modulus.reduce(t.d2 - t.d1), m);
  MultiplicityMap mm = at_multiplicity(t);
  for (std::int64_t x = 0; x < m; ++x)
    if (mm.count(x + shift) != mm.count(x)) return false;
  return true;
}

bool at_balanced_odd(const ArithTriangle& t) {
  const std::int64_t m = t.modulus.value();
  if (m % 2 == 0)
    throw Error("no balanced arithmetic triangle for even modulus");
  const std::int64_t diff = t.modulus.reduce(t.d2 - t.d1);
  if (std::gcd(t.d1, m) != 1 || std::gcd(t.d2, m) != 1 ||
      std::gcd(diff, m) != 1)
    throw Error("d1, d2, d2-d1 must all be invertible");
  if (t.n % m != 0 && (t.n + 1) % m != 0)
    throw Error("n must be 0 or -1 mod m");
  if (!is_balanced(at_multiplicity(t)))
    throw Error("balance assertion failed on an arithmetic triangle");
  return true;
}

bool invertibility_necessity_check(const ArithTriangle& t) {
  if (!is_balanced(at_multiplicity(t))) return true;  // nothing to check
  const std::int64_t m = t.modulus.value();
  const std::int64_t diff = t.modulus.reduce(t.d2 - t.d1);
  return std::gcd(t.d1, m) == 1 && std::gcd(t.d2, m) == 1 &&
         std::gcd(diff, m) == 1;
}

}  // namespace steinhaus
