#include "steinhaus/families.hpp"

#include <numeric>
#include <sstream>

#include "steinhaus/binommat.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

namespace {

IntTuple24 elementary(int i) {  // E_i, 1-based
  IntTuple24 t{};
  t[static_cast<std::size_t>(i - 1)] = 1;
  return t;
}

void add_scaled(IntTuple24& acc, std::int64_t c, const IntTuple24& t) {
  for (std::size_t j = 0; j < 24; ++j) {
    std::int64_t term, sum;
    if (__builtin_mul_overflow(c, t[j], &term) ||
        __builtin_add_overflow(acc[j], term, &sum))
      throw Error("24-tuple coefficient overflow");
    acc[j] = sum;
  }
}

// Z expansions of X_1..X_7.
constexpr std::array<std::array<std::int64_t, 16>, 7> kXFromZ = {{
    {0, 0, 1, 1, 2, 3, 2, 2, 4, 2, 0, 3, -1, -4, 0, -2},
    {0, 0, 1, 3, 0, 3, 2, 0, 2, 2, 0, -1, 3, -4, 0, 0},
    {0, 0, 3, 3, 0, 1, 0, 0, 2, 0, -4, -1, 3, 0, 2, 0},
    {0, 2, 1, 3, 0, 1, 0, 0, 2, -2, -2, -1, 3, -2, 4, 0},
    {2, 0, 1, 1, 0, 3, 2, 0, 0, 2, 0, 1, 1, -4, 0, 2},
    {2, 0, 3, 3, 2, 1, 0, 2, 2, 0, -4, 1, 1, 0, 2, 0},
    {2, 2, 3, 1, 0, 3, 2, 0, 0, 0, -2, 1, 1, -2, 2, 2},
}};

std::int64_t pow_check(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw Error("exponent overflow");
  return r;
}

bool equal24(const IntTuple24& a, const IntTuple24& b) { return a == b; }

std::int64_t odd_part(std::int64_t m) {
  while (m % 2 == 0) m /= 2;
  return m;
}

}  // namespace

IntTuple24 gen_Z(int i) {
  if (i < 1 || i > 16) throw Error("Z index out of range");
  IntTuple24 t{};
  if (i <= 8) {
    // Z_i = E_i - 3E_{16+i} + 2E_{25-i}
    add_scaled(t, 1, elementary(i));
    add_scaled(t, -3, elementary(16 + i));
    add_scaled(t, 2, elementary(25 - i));
  } else {
    // Z_{8+i} = E_{8+i} - 2E_{16+i} + E_{25-i}, i = 1..8
    const int j = i - 8;
    add_scaled(t, 1, elementary(8 + j));
    add_scaled(t, -2, elementary(16 + j));
    add_scaled(t, 1, elementary(25 - j));
  }
  return t;
}

IntTuple24 gen_Y(int i) {
  if (i < 1 || i > 8) throw Error("Y index out of range");
  // Y_j = Z_j - Z_{8+j} + Z_{17-j}
  IntTuple24 t{};
  add_scaled(t, 1, gen_Z(i));
  add_scaled(t, -1, gen_Z(8 + i));
  add_scaled(t, 1, gen_Z(17 - i));
  return t;
}

IntTuple24 gen_X(int i) {
  if (i < 1 || i > 7) throw Error("X index out of range");
  IntTuple24 t{};
  const auto& coeffs = kXFromZ[static_cast<std::size_t>(i - 1)];
  for (int z = 1; z <= 16; ++z)
    add_scaled(t, coeffs[static_cast<std::size_t>(z - 1)], gen_Z(z));
  return t;
}

IntTuple24 tuple24_add(const IntTuple24& a, const IntTuple24& b) {
  IntTuple24 t = a;
  add_scaled(t, 1, b);
  return t;
}

IntTuple24 tuple24_scale(std::int64_t c, const IntTuple24& a) {
  IntTuple24 t{};
  add_scaled(t, c, a);
  return t;
}

ModTuple project(const IntTuple24& t, Modulus m) {
  ModTuple out{m};
  for (auto x : t) out.push_back(x);
  return out;
}

std::int64_t OSpec::a2() const {
  if (alpha < 0 || alpha > 1) throw Error("3-exponent must be 0 or 1");
  if (beta < 0) throw Error("negative 2-exponent");
  return sign * pow_check(3, alpha) * pow_check(2, beta);
}

IntTuple24 sample_E(const ESpec& spec) {
  if (spec.i0 < 1 || spec.i0 > 7) throw Error("i0 out of range");
  if (spec.sign != 1 && spec.sign != -1) throw Error("sign must be +-1");
  IntTuple24 t{};
  add_scaled(t, spec.sign, gen_X(spec.i0));
  for (int i = 1; i <= 8; ++i)
    add_scaled(t, 4 * spec.alpha_y[static_cast<std::size_t>(i - 1)],
               gen_Y(i));
  for (int i = 9; i <= 16; ++i)
    add_scaled(t, 8 * spec.alpha_z[static_cast<std::size_t>(i - 9)],
               gen_Z(i));
  return t;
}

IntTuple24 sample_O(const OSpec& spec) {
  const std::int64_t a2 = spec.a2();
  if (spec.a1 % 3 == 0 && a2 % 3 == 0)
    throw Error("O requires 3 does not divide gcd(a1, a2)");
  IntTuple24 t{};
  add_scaled(t, spec.a1, a1_tuple());
  add_scaled(t, a2, a2_tuple());
  return t;
}

IntTuple24 sample_U(const USpec& spec) {
  if (spec.mu < 1 || spec.mu % 2 == 0) throw Error("mu must be odd positive");
  if (spec.oprime.alpha != 0) throw Error("O' part must have a2 = +-2^beta");
  IntTuple24 t = tuple24_scale(spec.mu, sample_E(spec.e));
  IntTuple24 o{};
  add_scaled(o, spec.oprime.a1, a1_tuple());
  add_scaled(o, spec.oprime.a2(), a2_tuple());
  add_scaled(t, 4, o);
  return t;
}

IntTuple24 sample(const FamilyElementSpec& spec) {
  switch (spec.family) {
    case FamilyElementSpec::Family::kE:
      return sample_E(spec.e);
    case FamilyElementSpec::Family::kO:
    case FamilyElementSpec::Family::kOPrime:
      return sample_O(spec.o);
    case FamilyElementSpec::Family::kUMu:
      return sample_U(spec.u);
  }
  throw Error("unknown family");
}

bool in_F(const IntTuple24& t) {
  const std::vector<std::int64_t> v(t.begin(), t.end());
  for (auto x : row_times(v, nd0()))
    if (x != 0) return false;
  return true;
}

IntTuple24 a1_tuple() {
  IntTuple24 t{};
  for (std::size_t j = 0; j < 24; j += 3) {
    t[j] = 1;
    t[j + 2] = -1;
  }
  return t;
}

IntTuple24 a2_tuple() {
  return {0, 1, -1, -1, 3, -2, -2, 5, -3, -3, 7, -4,
          -4, 9, -5, -5, 11, -6, -6, 13, -7, -7, 15, -8};
}

IntTuple24 a0_tuple() {
  // X_1 - 4Y_5 - 4Y_8
  ESpec spec;
  spec.i0 = 1;
  spec.alpha_y[4] = -1;
  spec.alpha_y[7] = -1;
  return sample_E(spec);
}

IntTuple24 universal_A(std::int64_t mu) {
  if (mu < 1 || mu % 2 == 0) throw Error("mu must be odd positive");
  IntTuple24 t = tuple24_scale(mu, a0_tuple());
  add_scaled(t, 4, a2_tuple());
  return t;
}

std::int64_t mu_for_range(std::int64_t m0) {
  if (m0 < 2 || m0 % 2 != 0) throw Error("m0 must be even and >= 2");
  std::int64_t l = 1;
  for (std::int64_t n = 3; n < m0; n += 2) {
    const std::int64_t g = std::gcd(l, n);
    if (__builtin_mul_overflow(l / g, n, &l)) throw Error("lcm overflow");
  }
  return l;
}

namespace {

// The family hint must rebuild to t and be usable at modulus m.
void certify_membership(Modulus m, const IntTuple24& t,
                        const FamilyElementSpec& hint) {
  const std::int64_t mv = m.value();
  if (mv % 2 == 0) {
    if (hint.family != FamilyElementSpec::Family::kUMu)
      throw Error("even modulus requires a U_mu membership hint");
    if (!equal24(sample_U(hint.u), t))
      throw Error("hint does not rebuild the tuple");
    if (hint.u.mu % odd_part(mv) != 0)
      throw Error("odd part of m must divide mu");
  } else {
    // Odd m: pi_m(t) must be the projection of an O element.
    if (hint.family != FamilyElementSpec::Family::kO &&
        hint.family != FamilyElementSpec::Family::kOPrime &&
        hint.family != FamilyElementSpec::Family::kUMu)
      throw Error("odd modulus requires an O (or U_mu) membership hint");
    IntTuple24 o{};
    if (hint.family == FamilyElementSpec::Family::kUMu) {
      // pi_m(U) = pi_m(4 O') when m divides mu.
      if (hint.u.mu % mv != 0)
        throw Error("odd m must divide mu for the U_mu hint");
      if (!equal24(sample_U(hint.u), t))
        throw Error("hint does not rebuild the tuple");
      add_scaled(o, 4 * hint.u.oprime.a1, a1_tuple());
      add_scaled(o, 4 * hint.u.oprime.a2(), a2_tuple());
    } else {
      if (hint.family == FamilyElementSpec::Family::kOPrime &&
          hint.o.alpha != 0)
        throw Error("O' requires a2 = +-2^beta");
      o = sample_O(hint.o);
    }
    if (project(o, m) != project(t, m))
      throw Error("hint does not rebuild the tuple mod m");
  }
}

}  // namespace

BalancedPeriodResult balanced_period(Modulus m, const IntTuple24& t,
                                     const FamilyElementSpec& hint) {
  certify_membership(m, t, hint);
  const std::int64_t mv = m.value();
  const bool even = mv % 2 == 0;
  const std::int64_t len = even ? 12 * mv : 3 * mv;

  const ModTuple a24 = project(t, m);
  const IapSpec iap{a24, antisym_diff(a24)};
  ModTuple period = iap_window(iap, 0, len - 1);

  // Periodicity: the matrix predicate, done on the 3-interlace reduction for
  // odd m (len is then not a multiple of 24), plus a direct orbit check.
  bool periodic;
  if (even) {
    periodic = orbit_is_periodic_antisym(a24, len, 1);
  } else {
    const IapSpec reduced = iap_reduce(iap, len);
    periodic = orbit_is_periodic(reduced, len, len);
  }
  if (!periodic || !orbit_is_periodic(period, LocalRule::kNegated, len))
    throw Error("period guarantee failed: orbit is not (p,p)-periodic");

  for (std::int64_t lambda = 1; lambda <= 2; ++lambda) {
    if (!balanced_triangle_scan(repeat(period, lambda), LocalRule::kNegated)) {
      std::ostringstream os;
      os << "balance guarantee failed at m=" << mv << " lambda=" << lambda;
      throw Error(os.str());
    }
  }
  return BalancedPeriodResult{std::move(period), len, {1, 2}};
}

FamilyCheckReport check_mainthm(const ESpec& spec, int u, int lambda_max) {
  FamilyCheckReport report;
  const IntTuple24 t = sample_E(spec);
  const std::int64_t mv = std::int64_t{1} << u;
  const Modulus m{mv};
  const std::int64_t p = 12 * mv;
  const ModTuple a24 = project(t, m);
  std::ostringstream os;

  if (mv > 1) {
    const bool matrix_ok =
        p % 24 == 0 ? orbit_is_periodic_antisym(a24, p, 1) : true;
    const IapSpec iap{a24, antisym_diff(a24)};
    ModTuple period = iap_window(iap, 0, p - 1);
    if (!matrix_ok || !orbit_is_periodic(period, LocalRule::kNegated, p)) {
      report.ok = false;
      os << "orbit not (" << p << "," << p << ")-periodic mod " << mv << "; ";
    }
    for (std::int64_t lambda = 1; lambda <= lambda_max; ++lambda) {
      if (!balanced_triangle_scan(repeat(period, lambda),
                                  LocalRule::kNegated)) {
        report.ok = false;
        os << "unbalanced at lambda=" << lambda << " mod " << mv << "; ";
      }
    }
  }
  report.detail = os.str();
  return report;
}

bool odd_balance_predicate(std::int64_t a1, std::int64_t a2, Modulus m) {
  const std::int64_t mv = m.value();
  if (mv % 2 == 0) throw Error("odd modulus required");
  const bool value =
      std::gcd(std::gcd(a1, a2), mv) == 1 &&
      (std::gcd(a2, mv) == 1 || std::gcd(a2, mv) == 3);

  IntTuple24 t{};
  add_scaled(t, a1, a1_tuple());
  add_scaled(t, a2, a2_tuple());
  const ModTuple a24 = project(t, m);
  const IapSpec iap{a24, antisym_diff(a24)};
  const ModTuple window = iap_window(iap, 0, 3 * mv - 1);
  const bool balanced = balanced_triangle_scan(window, LocalRule::kNegated);

  if (value && !balanced)
    throw Error("balance assertion failed for an admissible (a1, a2)");
  if (!value && m.reduce(a2) == 0 && mv != 1 && mv != 3 && balanced)
    throw Error("unexpected balanced triangle for a multiple of A_1");
  return value;
}

}  // namespace steinhaus
