#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "steinhaus/modring.hpp"

namespace steinhaus {

// The explicit integer 24-tuple families behind the balanced-period
// construction: the generators X_1..X_7, Y_1..Y_8, Z_1..Z_16, the module
// F = <Z_1..Z_16>, the set E = {+-X_i} + <4Y, 8Z> solving powers of two,
// the sets O and O' solving odd moduli, and U_mu = mu E + 4 O' solving the
// even moduli with odd part dividing mu.

using IntTuple24 = std::array<std::int64_t, 24>;

IntTuple24 gen_Z(int i);  // 1..16
IntTuple24 gen_Y(int i);  // 1..8
IntTuple24 gen_X(int i);  // 1..7

IntTuple24 tuple24_add(const IntTuple24& a, const IntTuple24& b);
IntTuple24 tuple24_scale(std::int64_t c, const IntTuple24& a);
ModTuple project(const IntTuple24& t, Modulus m);

// Constructive parameters of a family element.  Membership is certified by
// rebuilding the element from them, never decided from the raw tuple.
struct ESpec {
  int i0 = 1;                       // 1..7
  int sign = 1;                     // +-1
  std::array<std::int64_t, 8> alpha_y{};  // coefficients of 4Y_1..4Y_8
  std::array<std::int64_t, 8> alpha_z{};  // coefficients of 8Z_9..8Z_16
};

struct OSpec {
  std::int64_t a1 = 0;
  int sign = 1;
  int alpha = 0;  // exponent of 3, in {0, 1}; must stay 0 for O'
  int beta = 0;   // exponent of 2
  std::int64_t a2() const;
};

struct USpec {
  std::int64_t mu = 1;  // odd
  ESpec e;
  OSpec oprime;  // with alpha = 0
};

struct FamilyElementSpec {
  enum class Family { kE, kO, kOPrime, kUMu } family;
  ESpec e{};
  OSpec o{};
  USpec u{};
};

IntTuple24 sample_E(const ESpec& spec);
IntTuple24 sample_O(const OSpec& spec);
IntTuple24 sample_U(const USpec& spec);
IntTuple24 sample(const FamilyElementSpec& spec);

// t Nd0 = 0 over the integers, i.e. membership in F = <Z_1..Z_16>.
bool in_F(const IntTuple24& t);

// The two generators of the intersection of all periodicity kernels.
IntTuple24 a1_tuple();  // (1,0,-1)^8
IntTuple24 a2_tuple();  // (0,1,-1,-1,3,-2,...)

// The universal tuple mu A0 + 4 A2 with A0 = X_1 - 4Y_5 - 4Y_8; its mod-m
// periods give balanced triangles for every m whose odd part divides mu.
IntTuple24 universal_A(std::int64_t mu);
// A0 itself.
IntTuple24 a0_tuple();

// lcm of the odd numbers below m0 (m0 even).
std::int64_t mu_for_range(std::int64_t m0);

struct BalancedPeriodResult {
  ModTuple period;
  std::int64_t orbit_period;            // both coordinates equal
  std::array<std::int64_t, 2> lambdas;  // balance verified at these repeats
};

// First period of the interlaced progression <pi_m(t), pi_m(t) X_24>:
// length 12m for even m, 3m for odd m.  Membership in the required family
// is certified from the hint, and the periodicity and balance guarantees
// are re-verified before returning.
BalancedPeriodResult balanced_period(Modulus m, const IntTuple24& t,
                                     const FamilyElementSpec& hint);

struct FamilyCheckReport {
  bool ok = true;
  std::string detail;
};

// For an E element: verifies the orbit period (12*2^u, 12*2^u) and the
// balance of the size 12*2^u*lambda triangles for lambda = 1..lambda_max.
FamilyCheckReport check_mainthm(const ESpec& spec, int u, int lambda_max);

// gcd(a1,a2,m) = 1 and gcd(a2,m) in {1,3} for odd m.  When true the lambda=1
// triangle of size 3m is built and asserted balanced; when false with
// a2 = 0 mod m and m not in {1,3} it is asserted unbalanced.
bool odd_balance_predicate(std::int64_t a1, std::int64_t a2, Modulus m);

}  // namespace steinhaus
