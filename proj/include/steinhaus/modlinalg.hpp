#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "steinhaus/matrix.hpp"

namespace steinhaus {

// Exact linear algebra over GF(p) and left-kernel lifting over Z/p^u.

// Spanning set of the left kernel { x : x M = 0 }.  Over GF(p) the vectors
// are independent and in reduced row echelon form, so bases are canonical.
struct KernelBasis {
  Modulus modulus;
  std::size_t ambient = 0;  // length of the kernel vectors
  std::vector<ModTuple> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

std::int64_t rank_gfp(const ModMatrix& m, std::int64_t p);
KernelBasis left_kernel_gfp(const ModMatrix& m, std::int64_t p);

// Some solution y of y M = x over GF(p), if one exists.
std::optional<ModTuple> solve_left_gfp(const ModMatrix& m, const ModTuple& x,
                                       std::int64_t p);

// True iff v lies in the span of the (RREF) basis.
bool in_span_gfp(const KernelBasis& basis, const ModTuple& v);

// All p^dim span elements; throws BudgetError past the cap.
std::vector<ModTuple> enumerate_span_gfp(const KernelBasis& basis,
                                         std::int64_t cap);

// The coset of lifts of one solution: when non-empty, the set
// { base + p^u z : z in translates } inside Z/p^{u+1}.
struct LiftedSolutionSet {
  explicit LiftedSolutionSet(KernelBasis translates_)
      : translates(std::move(translates_)) {}

  bool empty = true;
  std::optional<ModTuple> base;  // over Z/p^{u+1}
  KernelBasis translates;        // over GF(p)

  std::vector<ModTuple> elements(std::int64_t cap) const;
};

// Given A with A M = 0 (mod p^u), finds all lifts to Z/p^{u+1} that satisfy
// the same relation against M taken mod p^{u+1}.
LiftedSolutionSet lift_kernel_step(const ModMatrix& m_next, std::int64_t p,
                                   int u, const ModTuple& a);

// All tuples mod p^u whose projection lies in the kernel of matrix_at(v) at
// every level v = 1..u.  matrix_at(v) must be taken mod p^v.
std::vector<ModTuple> left_kernel_prime_power(
    const std::function<ModMatrix(int)>& matrix_at, std::int64_t p, int u,
    std::int64_t cap);

}  // namespace steinhaus
