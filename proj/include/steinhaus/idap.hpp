#pragma once

#include <cstdint>
#include <vector>

#include "steinhaus/arithtri.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/matrix.hpp"

namespace steinhaus {

// Interlaced doubly arithmetic progressions: the doubly indexed sequence
// with value A[i0][j0] + i D2[i0][j0] + j D1[i0][j0] at (i0 + i k2, j0 + j k1).

struct IdapSpec {
  Modulus modulus;
  std::int64_t k1, k2;
  ModMatrix a;   // k2 x k1 initial block
  ModMatrix d1;  // horizontal differences
  ModMatrix d2;  // vertical differences

  IdapSpec(ModMatrix a_, ModMatrix d1_, ModMatrix d2_);
};

std::int64_t idap_eval(const IdapSpec& s, std::int64_t i, std::int64_t j);

// Orbit of <A, D> is (k1,k2)-interlaced doubly arithmetic iff (A|D) is in
// the left kernel of IA = [[W^2, 0], [T W, W]].
bool idap_orbit_predicate(const ModTuple& a, const ModTuple& d,
                          std::int64_t k2);
// Antisymmetric refinement: A in the left kernel of AIA = (M W | X W).
bool idap_orbit_antisym_predicate(const ModTuple& a, std::int64_t k2);

// Materializes the IDAP descriptor of the orbit of <A, D> using the row
// formulas R_i(A) = (-1)^i (A C^i + D T^i), R_i(D1) = (-1)^i D C^i,
// R_i(D2) = (-1)^{i+k2} (A W + D T^{k2}) C^i.
IdapSpec idap_from_orbit(const ModTuple& a, const ModTuple& d,
                         std::int64_t k2);

// k2 x k1 matrix with R_1 = A and R_{i+1} = -R_i C^1.
ModMatrix delta_matrix(const ModTuple& a, std::int64_t k2);

// The same progression re-described on a (mu k2) x (lambda k1) block.
IdapSpec idap_rescale(const IdapSpec& s, std::int64_t lambda, std::int64_t mu);

// Decomposition of the size-n triangle at the origin of a (k,k)-IDAP into
// k^2 arithmetic subtriangles (Euclidean n = qk + r; sizes q-1, q, q+1).
std::vector<ArithTriangleRef> decompose_triangle(const IdapSpec& s,
                                                 std::int64_t n);

}  // namespace steinhaus
