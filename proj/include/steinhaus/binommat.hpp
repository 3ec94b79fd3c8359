#pragma once

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "steinhaus/matrix.hpp"

namespace steinhaus {

// Arithmetic sums of binomial coefficients and the derived circulant /
// Toeplitz / Wendt / exchange matrices.  cmat and tmat are computed both by
// the additive recursion mod m and from the exact sums, and the two results
// are required to agree.

// S0(k,i,j) = sum_a binom(i, a*k + j), S1(k,i,j) = sum_a a*binom(i, a*k + j),
// exact over Z.
mpz_class s0(std::int64_t k, std::int64_t i, std::int64_t j);
mpz_class s1(std::int64_t k, std::int64_t i, std::int64_t j);

// C_k^i = (S0(k,i,r-s)) and T_k^i = (S1(k,i,r-s)) reduced mod m.
ModMatrix cmat(std::int64_t k, std::int64_t i, Modulus m);
ModMatrix tmat(std::int64_t k, std::int64_t i, Modulus m);
// Both at once (they share the powering of the (C,T) pair).
std::pair<ModMatrix, ModMatrix> ctmat(std::int64_t k, std::int64_t i,
                                      Modulus m);

// Circulant of the S1 values; T_k^i = CT_k^i + SUT(C_k^i).
ModMatrix ctmat_circ(std::int64_t k, std::int64_t i, Modulus m);

// Wendt matrix W_k^p = C_k^p + (-1)^{p+1} I.
ModMatrix wendt(std::int64_t k, std::int64_t p, Modulus m);
// Exchange-plus-identity matrix, entry (r,s) = d(r,s) + d(r,k-s+1), 1-based.
ModMatrix xmat(std::int64_t k, Modulus m);
IntMat xmat_int(std::int64_t k);
// M_k^p = W_k^p + X_k T_k^p.
ModMatrix mmat(std::int64_t k, std::int64_t p, Modulus m);

// Block matrices of the periodicity characterizations:
//   P_k^p  = [[W, 0], [T, W]]           (2k x 2k)
//   IA_k^p = [[W^2, 0], [T W, W]]       (2k x 2k)
//   AIA_k^p = (M W | X W)               (k x 2k)
ModMatrix pmat_block(std::int64_t k, std::int64_t p, Modulus m);
ModMatrix iamat_block(std::int64_t k1, std::int64_t k2, Modulus m);
ModMatrix aiamat_block(std::int64_t k1, std::int64_t k2, Modulus m);

// Verifies C^{i+j} = C^i C^j and T^{i+j} = T^i C^j + C^i T^j.
bool composition_identities_check(std::int64_t k, std::int64_t i,
                                  std::int64_t j, Modulus m);

// Strictly upper triangular part.
ModMatrix sut(const ModMatrix& m);
IntMat sut(const IntMat& m);

// Fixed 24x24 congruence constants:
//   3 C_24^{3*2^u} = Cd0 + 2^{u-2} Cd1   (mod 2^u), u >= 4
//   9 T_24^{3*2^u} = Td0 + 2^{u-3} Td1   (mod 2^u), u >= 5
//   9 CT_24^{3*2^u} = CTd0 + 2^{u-3} CTd1 (mod 2^u), u >= 5
// A self-check recomputes all of them from the exact sums at u = 5 the first
// time any constant is used.
const IntMat& cd0();
const IntMat& cd1();
const IntMat& td0();
const IntMat& td1();
const IntMat& ctd0();
const IntMat& ctd1();
// Nd0 = 3 Cd0 - 9 I + X24 Td0; satisfies 9 M_24^{24*2^u} = Nd0 (mod 2^u).
const IntMat& nd0();
// Nd1 = 6 Cd1 + X24 Td1 (used mod 8).
const IntMat& nd1();
// Md0 = ((X Td0 - 9I)(Cd0 - 3I) | 9 X (Cd0 - 3I)) / 3, a 24x48 matrix with
// Lker Md0 = <Z_1..Z_16>.  md1_times6 is the matching 6*Md1 block mod 8.
const IntMat& md0();
const IntMat& md1_times6();

// Left and right sides of the two closed-form congruences; callers assert
// equality.  u >= 4 for C, u >= 5 for T.
std::pair<ModMatrix, ModMatrix> congruence_c24(int u);
std::pair<ModMatrix, ModMatrix> congruence_t24(int u);

}  // namespace steinhaus
