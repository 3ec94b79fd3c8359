#pragma once

#include <cstdint>

#include "steinhaus/modring.hpp"

namespace steinhaus {

// Arithmetic triangles AT(a, d1, d2, n): cell (i,j), i+j < n, has value
// a + i d2 + j d1.  Rows are arithmetic with difference d1, diagonals with
// d2, anti-diagonals with d2 - d1.

struct ArithTriangle {
  Modulus modulus;
  std::int64_t a, d1, d2;
  std::int64_t n;

  ArithTriangle(Modulus m, std::int64_t a_, std::int64_t d1_, std::int64_t d2_,
                std::int64_t n_);

  std::int64_t at(std::int64_t i, std::int64_t j) const {
    return modulus.reduce(a + i * d2 + j * d1);
  }
};

// A subtriangle reference inside a k x k interlaced block.
struct ArithTriangleRef {
  ArithTriangle triangle;
  std::int64_t origin_r, origin_s;
};

MultiplicityMap at_multiplicity(const ArithTriangle& t);

// Checks the hypotheses gcd(d1,m) = gcd(d2,m) and n = 0 or -1 mod
// m/gcd(d1,m) (error when violated), then verifies the multiplicity shift
// identity mf(x + gcd(d2-d1,m)) = mf(x) for all x.
bool shift_invariance_holds(const ArithTriangle& t);

// Odd m with d1, d2, d2-d1 all invertible and n = 0 or -1 mod m: verifies
// the triangle is balanced.  Hypothesis failures raise errors.
bool at_balanced_odd(const ArithTriangle& t);

// Contrapositive scan: balanced implies d1, d2, d2-d1 all invertible.
bool invertibility_necessity_check(const ArithTriangle& t);

}  // namespace steinhaus
