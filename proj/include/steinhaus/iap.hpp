#pragma once

#include <cstdint>

#include "steinhaus/binommat.hpp"
#include "steinhaus/modring.hpp"

namespace steinhaus {

// Interlaced arithmetic progressions: the doubly infinite sequence with
// value A[r] + q D[r] at index qk + r.

struct IapSpec {
  Modulus modulus;
  std::int64_t k;
  ModTuple a;  // initial terms, length k
  ModTuple d;  // common differences, length k

  IapSpec(ModTuple a_, ModTuple d_);

  friend bool operator==(const IapSpec& x, const IapSpec& y) {
    return x.a == y.a && x.d == y.d;
  }
  friend bool operator!=(const IapSpec& x, const IapSpec& y) {
    return !(x == y);
  }
};

std::int64_t iap_eval(const IapSpec& s, std::int64_t j);
// Inclusive window [i1, i2].
ModTuple iap_window(const IapSpec& s, std::int64_t i1, std::int64_t i2);

IapSpec iap_derive(const IapSpec& s);
// i-fold derivation via (-1)^i <A C^i + D T^i, D C^i>.
IapSpec iap_iterated(const IapSpec& s, std::int64_t i);

// p-periodicity (p = lambda k): holds iff lambda D = 0.
bool iap_is_periodic(const IapSpec& s, std::int64_t p);

// Orbit periodicity of period (p1, p2): the p1-row condition on D plus
// (A | D) in the left kernel of [[W, 0], [T, W]] at exponent p2.
bool orbit_is_periodic(const IapSpec& s, std::int64_t p1, std::int64_t p2);

// D = A X_k, the common differences making the dk-period antisymmetric.
ModTuple antisym_diff(const ModTuple& a);

// Orbit periodicity of period (p, lambda p) for the antisymmetric spec
// <A, A X_k>: the condition on A X_k plus A in Lker M_k^{lambda p}.
bool orbit_is_periodic_antisym(const ModTuple& a, std::int64_t p,
                               std::int64_t lambda);

// A p-periodic k-IAP is a gcd(k,p)-IAP; returns the reduced spec.
IapSpec iap_reduce(const IapSpec& s, std::int64_t p);

std::string to_json(const IapSpec& s);
IapSpec iap_from_json(const std::string& text);

}  // namespace steinhaus
