#include "steinhaus/families.hpp"

#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "steinhaus/binommat.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/triangle.hpp"

using namespace steinhaus;

namespace {

std::vector<std::int64_t> x24_product(const IntTuple24& t) {
  return row_times(std::vector<std::int64_t>(t.begin(), t.end()),
                   xmat_int(24));
}

IntTuple24 pattern8(std::int64_t a, std::int64_t b, std::int64_t c) {
  IntTuple24 t{};
  for (std::size_t j = 0; j < 24; j += 3) {
    t[j] = a;
    t[j + 1] = b;
    t[j + 2] = c;
  }
  return t;
}

ESpec random_espec(std::mt19937& rng) {
  ESpec s;
  s.i0 = 1 + static_cast<int>(rng() % 7);
  s.sign = (rng() % 2) ? 1 : -1;
  for (auto& c : s.alpha_y) c = static_cast<std::int64_t>(rng() % 7) - 3;
  for (auto& c : s.alpha_z) c = static_cast<std::int64_t>(rng() % 7) - 3;
  return s;
}

}  // namespace

TEST_CASE("generator tuples") {
  const IntTuple24 z1 = gen_Z(1);
  IntTuple24 want{};
  want[0] = 1;
  want[16] = -3;
  want[23] = 2;
  CHECK(z1 == want);
  CHECK_THROWS_AS(gen_Z(0), Error);
  CHECK_THROWS_AS(gen_Z(17), Error);
  CHECK_THROWS_AS(gen_Y(9), Error);
  CHECK_THROWS_AS(gen_X(8), Error);
}

TEST_CASE("exchange products of the generators") {
  for (int i = 1; i <= 8; ++i) {
    const auto prod = x24_product(gen_Y(i));
    for (auto x : prod) CHECK(x == 0);
  }
  const IntTuple24 x_pattern = pattern8(2, -4, 2);
  for (int i = 1; i <= 7; ++i) {
    const auto prod = x24_product(gen_X(i));
    CHECK(std::equal(prod.begin(), prod.end(), x_pattern.begin()));
  }
  // A_1 X = 0 and A_2 X = 8 (-1,2,-1)^8
  const auto a1x = x24_product(a1_tuple());
  for (auto x : a1x) CHECK(x == 0);
  const auto a2x = x24_product(a2_tuple());
  const IntTuple24 a2_pattern = pattern8(-8, 16, -8);
  CHECK(std::equal(a2x.begin(), a2x.end(), a2_pattern.begin()));
}

TEST_CASE("membership in the periodicity module F") {
  for (int i = 1; i <= 16; ++i) CHECK(in_F(gen_Z(i)));
  for (int i = 1; i <= 8; ++i) CHECK(in_F(gen_Y(i)));
  for (int i = 1; i <= 7; ++i) CHECK(in_F(gen_X(i)));
  CHECK(in_F(IntTuple24{}));
  CHECK(in_F(a1_tuple()));
  CHECK(in_F(a2_tuple()));
  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial)
    CHECK(in_F(sample_E(random_espec(rng))));
  IntTuple24 not_in = {};
  not_in[0] = 1;
  CHECK_FALSE(in_F(not_in));
}

TEST_CASE("the X tuples admit both published expansions") {
  // route 2: X_i = (Y combination) + 2(Z_9 - Z_11 + Z_12 - Z_14 + Z_15)
  const std::array<std::array<std::int64_t, 8>, 7> y_coeffs = {{
      {0, 0, 1, 1, 2, 3, 2, 2},
      {0, 0, 1, 3, 0, 3, 2, 0},
      {0, 0, 3, 3, 0, 1, 0, 0},
      {0, 2, 1, 3, 0, 1, 0, 0},
      {2, 0, 1, 1, 0, 3, 2, 0},
      {2, 0, 3, 3, 2, 1, 0, 2},
      {2, 2, 3, 1, 0, 3, 2, 0},
  }};
  IntTuple24 zsum{};
  for (int z : {9, 12, 15}) zsum = tuple24_add(zsum, gen_Z(z));
  for (int z : {11, 14})
    zsum = tuple24_add(zsum, tuple24_scale(-1, gen_Z(z)));
  for (int i = 1; i <= 7; ++i) {
    IntTuple24 expect = tuple24_scale(2, zsum);
    for (int y = 1; y <= 8; ++y)
      expect = tuple24_add(
          expect, tuple24_scale(
                      y_coeffs[static_cast<std::size_t>(i - 1)]
                              [static_cast<std::size_t>(y - 1)],
                      gen_Y(y)));
    CHECK(gen_X(i) == expect);
  }
}

TEST_CASE("A tuples in the Y/Z module") {
  // A_1 = Y_1 - Y_3 + Y_4 - Y_6 + Y_7
  IntTuple24 a1{};
  for (const auto& [c, i] : std::vector<std::pair<std::int64_t, int>>{
           {1, 1}, {-1, 3}, {1, 4}, {-1, 6}, {1, 7}})
    a1 = tuple24_add(a1, tuple24_scale(c, gen_Y(i)));
  CHECK(a1 == a1_tuple());
  CHECK(a1_tuple() == pattern8(1, 0, -1));

  // A_2 = Y_2 - Y_3 - Y_4 + 3Y_5 - 2Y_6 - 2Y_7 + 5Y_8
  //       - 8Z_9 + 8Z_11 - 8Z_12 + 8Z_14 - 8Z_15
  IntTuple24 a2{};
  for (const auto& [c, i] : std::vector<std::pair<std::int64_t, int>>{
           {1, 2}, {-1, 3}, {-1, 4}, {3, 5}, {-2, 6}, {-2, 7}, {5, 8}})
    a2 = tuple24_add(a2, tuple24_scale(c, gen_Y(i)));
  for (const auto& [c, i] : std::vector<std::pair<std::int64_t, int>>{
           {-8, 9}, {8, 11}, {-8, 12}, {8, 14}, {-8, 15}})
    a2 = tuple24_add(a2, tuple24_scale(c, gen_Z(i)));
  CHECK(a2 == a2_tuple());
}

TEST_CASE("the A0 representative") {
  const IntTuple24 want = {0, 0, 1, 1, -2, 3, 2, -2, 0, 2, 0, -1,
                           3, -4, 0, 2, -2, 0, -1, -2, 1, 1, -4, 2};
  CHECK(a0_tuple() == want);
  const auto prod = x24_product(a0_tuple());
  const IntTuple24 pattern = pattern8(2, -4, 2);
  CHECK(std::equal(prod.begin(), prod.end(), pattern.begin()));
}

TEST_CASE("binary and mod-4 projections of E") {
  const ModTuple binary = project(gen_X(1), Modulus(2));
  CHECK(to_digits(binary) == "001101000001100000101100");
  for (int i = 2; i <= 7; ++i)
    CHECK(project(gen_X(i), Modulus(2)) == binary);
  std::mt19937 rng(72);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(project(sample_E(random_espec(rng)), Modulus(2)) == binary);

  // |pi_4(E)| = 14: exactly the +-X_i projections
  std::set<ModTuple> mod4;
  for (int i = 1; i <= 7; ++i) {
    mod4.insert(project(gen_X(i), Modulus(4)));
    mod4.insert(project(tuple24_scale(-1, gen_X(i)), Modulus(4)));
  }
  CHECK(mod4.size() == 14);
  for (int trial = 0; trial < 30; ++trial)
    CHECK(mod4.count(project(sample_E(random_espec(rng)), Modulus(4))) == 1);
}

TEST_CASE("mod-4 projections match the published strings") {
  const std::array<const char*, 7> published = {
      "001123220203300220321102", "001303202203300000303102",
      "003301002003302002103302", "021301002223320002103122",
      "201103200201100200301100", "203321022001102022123300",
      "223103200021122200301320"};
  std::set<std::string> want(published.begin(), published.end());
  std::set<std::string> got;
  for (int i = 1; i <= 7; ++i)
    got.insert(to_digits(project(gen_X(i), Modulus(4))));
  CHECK(got == want);
}

TEST_CASE("odd multiples stay in E") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const ESpec spec = random_espec(rng);
    const IntTuple24 e = sample_E(spec);
    const std::int64_t mu = 1 + 2 * (rng() % 8);
    // mu e = sign' X_{i0} + (mu -+ 1) e' with the M-part coordinates shifted
    // through 4X_i in M; rebuild the E coordinates explicitly.
    const std::int64_t q = (mu % 4 == 1) ? mu / 4 : (mu + 1) / 4;
    const int sign = (mu % 4 == 1) ? spec.sign : -spec.sign;
    // 4 X_i = 4 (Y comb) + 8 (Z_9 - Z_11 + Z_12 - Z_14 + Z_15)
    static const std::array<std::array<std::int64_t, 8>, 7> y_coeffs = {{
        {0, 0, 1, 1, 2, 3, 2, 2},
        {0, 0, 1, 3, 0, 3, 2, 0},
        {0, 0, 3, 3, 0, 1, 0, 0},
        {0, 2, 1, 3, 0, 1, 0, 0},
        {2, 0, 1, 1, 0, 3, 2, 0},
        {2, 0, 3, 3, 2, 1, 0, 2},
        {2, 2, 3, 1, 0, 3, 2, 0},
    }};
    static const std::array<std::int64_t, 8> z_coeffs = {1, 0, -1, 1,
                                                         0, -1, 1, 0};
    ESpec out;
    out.i0 = spec.i0;
    out.sign = sign;
    const std::int64_t factor = static_cast<std::int64_t>(spec.sign) * q * 4;
    for (int j = 0; j < 8; ++j) {
      out.alpha_y[static_cast<std::size_t>(j)] =
          mu * spec.alpha_y[static_cast<std::size_t>(j)] +
          factor / 4 *
              y_coeffs[static_cast<std::size_t>(spec.i0 - 1)]
                      [static_cast<std::size_t>(j)];
      out.alpha_z[static_cast<std::size_t>(j)] =
          mu * spec.alpha_z[static_cast<std::size_t>(j)] +
          factor / 4 * z_coeffs[static_cast<std::size_t>(j)];
    }
    CHECK(sample_E(out) == tuple24_scale(mu, e));
  }
}

TEST_CASE("the universal family U_mu sits inside E") {
  // 4A_1 and 4A_2 live in M = <4Y, 8Z> with explicit coordinates, so a
  // U element mu e + 4(a1 A_1 + a2 A_2) rebuilds as an E element whose
  // M-part absorbs the O' contribution.
  static const std::array<std::int64_t, 8> a1_y = {1, 0, -1, 1, 0, -1, 1, 0};
  static const std::array<std::int64_t, 8> a2_y = {0, 1, -1, -1, 3, -2, -2, 5};
  static const std::array<std::int64_t, 8> a2_z = {-4, 0, 4, -4, 0, 4, -4, 0};
  std::mt19937 rng(74);
  for (int trial = 0; trial < 20; ++trial) {
    USpec u;
    u.mu = 1 + 2 * (rng() % 8);
    u.e = random_espec(rng);
    u.oprime.a1 = static_cast<std::int64_t>(rng() % 9) - 4;
    u.oprime.sign = (rng() % 2) ? 1 : -1;
    u.oprime.beta = static_cast<int>(rng() % 3);
    const IntTuple24 t = sample_U(u);
    CHECK(in_F(t));
    CHECK(project(t, Modulus(2)) ==
          project(gen_X(1), Modulus(2)));  // everything in E projects equally

    // mu e in E coordinates (as in the odd-multiple test)
    const std::int64_t mu = u.mu;
    const std::int64_t q = (mu % 4 == 1) ? mu / 4 : (mu + 1) / 4;
    static const std::array<std::array<std::int64_t, 8>, 7> y_coeffs = {{
        {0, 0, 1, 1, 2, 3, 2, 2},
        {0, 0, 1, 3, 0, 3, 2, 0},
        {0, 0, 3, 3, 0, 1, 0, 0},
        {0, 2, 1, 3, 0, 1, 0, 0},
        {2, 0, 1, 1, 0, 3, 2, 0},
        {2, 0, 3, 3, 2, 1, 0, 2},
        {2, 2, 3, 1, 0, 3, 2, 0},
    }};
    static const std::array<std::int64_t, 8> z_coeffs = {1, 0, -1, 1,
                                                         0, -1, 1, 0};
    ESpec combined;
    combined.i0 = u.e.i0;
    combined.sign = (mu % 4 == 1) ? u.e.sign : -u.e.sign;
    const std::int64_t a2 = u.oprime.a2();
    for (int j = 0; j < 8; ++j) {
      const auto js = static_cast<std::size_t>(j);
      combined.alpha_y[js] =
          mu * u.e.alpha_y[js] +
          u.e.sign * q *
              y_coeffs[static_cast<std::size_t>(u.e.i0 - 1)][js] +
          u.oprime.a1 * a1_y[js] + a2 * a2_y[js];
      combined.alpha_z[js] = mu * u.e.alpha_z[js] +
                             u.e.sign * q * z_coeffs[js] + a2 * a2_z[js];
    }
    CHECK(sample_E(combined) == t);
  }
}

TEST_CASE("integer combinations of A_1 and A_2 are periodic for every m") {
  std::mt19937 rng(75);
  for (std::int64_t m : {2, 3, 4, 5, 7, 9, 11, 16}) {
    for (int trial = 0; trial < 6; ++trial) {
      const std::int64_t a1 = static_cast<std::int64_t>(rng() % 7) - 3;
      const std::int64_t a2 = static_cast<std::int64_t>(rng() % 7) - 3;
      IntTuple24 t = tuple24_scale(a1, a1_tuple());
      t = tuple24_add(t, tuple24_scale(a2, a2_tuple()));
      const ModTuple a = project(t, Modulus(m));
      // the 24-interlace form: period (24m, 24m)
      CHECK(orbit_is_periodic_antisym(a, 24 * m, 1));
      // the 3-interlace reduction: period (3m, 3m)
      const ModTuple a3{Modulus(m), {a1, a2, -a1 - a2}};
      CHECK(orbit_is_periodic_antisym(a3, 3 * m, 1));
    }
  }
}

TEST_CASE("balanced periods project to balanced periods at every divisor") {
  const IntTuple24 a = universal_A(315);
  FamilyElementSpec hint;
  hint.family = FamilyElementSpec::Family::kUMu;
  hint.u.mu = 315;
  hint.u.e.i0 = 1;
  hint.u.e.alpha_y[4] = -1;
  hint.u.e.alpha_y[7] = -1;
  hint.u.oprime.a1 = 0;
  for (std::int64_t m : {4, 6, 8, 9, 10}) {
    const auto result = balanced_period(Modulus(m), a, hint);
    const MultiplicityMap mm =
        triangle_multiplicity_scan(result.period, LocalRule::kNegated);
    for (std::int64_t d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      CHECK(is_balanced(project(mm, d)));
    }
  }
}

TEST_CASE("universal tuples") {
  const IntTuple24 want = {0,    4,    311,  311,  -618,  937, 622, -610,
                           -12,  618,  28,   -331, 929,   -1224, -20, 610,
                           -586, -24,  -339, -578, 287,   287, -1200, 598};
  CHECK(universal_A(315) == want);
  CHECK(universal_A(1) == tuple24_add(a0_tuple(), tuple24_scale(4, a2_tuple())));
  CHECK_THROWS_AS(universal_A(314), Error);
}

TEST_CASE("odd lcm helper") {
  CHECK(mu_for_range(10) == 315);
  CHECK(mu_for_range(2) == 1);
  CHECK(mu_for_range(12) == 3465);
  CHECK_THROWS_AS(mu_for_range(9), Error);
}

TEST_CASE("balanced periods of the universal tuple") {
  const IntTuple24 a = universal_A(315);
  FamilyElementSpec hint;
  hint.family = FamilyElementSpec::Family::kUMu;
  hint.u.mu = 315;
  hint.u.e.i0 = 1;
  hint.u.e.alpha_y[4] = -1;
  hint.u.e.alpha_y[7] = -1;
  hint.u.oprime.a1 = 0;

  const auto r2 = balanced_period(Modulus(2), a, hint);
  CHECK(to_digits(r2.period) == "001101000001100000101100");
  CHECK(r2.orbit_period == 24);

  const auto r3 = balanced_period(Modulus(3), a, hint);
  CHECK(to_digits(r3.period) == "012201120");

  const auto r10 = balanced_period(Modulus(10), a, hint);
  CHECK(r10.period.size() == 120);

  // wrong hint parameters are rejected
  FamilyElementSpec bad = hint;
  bad.u.oprime.a1 = 1;
  CHECK_THROWS_AS(balanced_period(Modulus(2), a, bad), Error);
}

TEST_CASE("power-of-two family verification harness") {
  ESpec a0;
  a0.alpha_y[4] = -1;
  a0.alpha_y[7] = -1;
  CHECK(check_mainthm(a0, 3, 1).ok);
  CHECK(check_mainthm(a0, 0, 2).ok);  // trivial modulus
  ESpec x2;
  x2.i0 = 2;
  CHECK(check_mainthm(x2, 2, 2).ok);
  CHECK(check_mainthm(a0, 5, 2).ok);  // mod 32, sizes 384 and 768
}

TEST_CASE("odd balance predicate") {
  CHECK(odd_balance_predicate(0, 4, Modulus(315)));
  CHECK_FALSE(odd_balance_predicate(1, 0, Modulus(5)));
  CHECK(odd_balance_predicate(1, 0, Modulus(3)));
  CHECK(odd_balance_predicate(1, 1, Modulus(9)));
  CHECK_FALSE(odd_balance_predicate(3, 3, Modulus(9)));  // gcd(a1,a2,m) = 3
  CHECK_THROWS_AS(odd_balance_predicate(0, 1, Modulus(4)), Error);
}

TEST_CASE("the mod-8 projection of E has exactly 3584 elements") {
  // mod 8 the 8Z part vanishes and the 4Y coefficients only matter mod 2
  std::set<ModTuple> mod8;
  std::vector<IntTuple24> reps;
  for (int i0 = 1; i0 <= 7; ++i0)
    for (int sign : {1, -1})
      for (int mask = 0; mask < 256; ++mask) {
        ESpec spec;
        spec.i0 = i0;
        spec.sign = sign;
        for (int j = 0; j < 8; ++j)
          spec.alpha_y[static_cast<std::size_t>(j)] = (mask >> j) & 1;
        const IntTuple24 t = sample_E(spec);
        if (mod8.insert(project(t, Modulus(8))).second) reps.push_back(t);
      }
  CHECK(mod8.size() == 3584);
  // a seeded sample of the projections generates balanced triangles
  std::mt19937 rng(88);
  for (int trial = 0; trial < 40; ++trial) {
    const IntTuple24& t = reps[rng() % reps.size()];
    const ModTuple a = project(t, Modulus(8));
    CHECK(orbit_is_periodic_antisym(a, 96, 1));
    const IapSpec s{a, antisym_diff(a)};
    CHECK(balanced_triangle_scan(iap_window(s, 0, 95), LocalRule::kNegated));
    CHECK(balanced_triangle_scan(iap_window(s, 0, 191), LocalRule::kNegated));
  }
}

TEST_CASE("the small-entry slice of E has exactly 330 elements") {
  // Entries of an E element pin the module coefficients one coordinate at a
  // time: coordinate j only receives 4 alpha_j (через Y_j), and coordinate
  // 8+i receives 8 beta_i once the alphas are fixed, so the slice with all
  // entries in [-4, 4] enumerates in a few thousand branches.
  std::array<IntTuple24, 9> y{}, z{};
  for (int i = 1; i <= 8; ++i) {
    y[static_cast<std::size_t>(i)] = gen_Y(i);
    z[static_cast<std::size_t>(i)] = gen_Z(8 + i);
  }
  std::set<IntTuple24> found;
  for (int i0 = 1; i0 <= 7; ++i0)
    for (int sign : {1, -1}) {
      const IntTuple24 x = tuple24_scale(sign, gen_X(i0));
      std::array<std::int64_t, 9> alpha{}, beta{};
      IntTuple24 acc = x;
      auto add = [&](const IntTuple24& gen, std::int64_t c) {
        for (std::size_t j = 0; j < 24; ++j) acc[j] += c * gen[j];
      };
      std::function<void(int)> rec_beta = [&](int i) {
        if (i == 9) {
          for (std::size_t j = 0; j < 24; ++j)
            if (acc[j] < -4 || acc[j] > 4) return;
          found.insert(acc);
          return;
        }
        const std::int64_t v = acc[static_cast<std::size_t>(7 + i)];
        for (std::int64_t b = -3; b <= 3; ++b) {
          if (std::abs(v + 8 * b) > 4) continue;
          beta[static_cast<std::size_t>(i)] = b;
          add(z[static_cast<std::size_t>(i)], 8 * b);
          rec_beta(i + 1);
          add(z[static_cast<std::size_t>(i)], -8 * b);
        }
      };
      std::function<void(int)> rec_alpha = [&](int j) {
        if (j == 9) {
          rec_beta(1);
          return;
        }
        const std::int64_t v = acc[static_cast<std::size_t>(j - 1)];
        for (std::int64_t a = -3; a <= 3; ++a) {
          if (std::abs(v + 4 * a) > 4) continue;
          alpha[static_cast<std::size_t>(j)] = a;
          add(y[static_cast<std::size_t>(j)], 4 * a);
          rec_alpha(j + 1);
          add(y[static_cast<std::size_t>(j)], -4 * a);
        }
      };
      rec_alpha(1);
    }
  CHECK(found.size() == 330);
  // the published representative is in the slice
  CHECK(found.count(a0_tuple()) == 1);
}

TEST_CASE("A_8 from the A0 family") {
  // the first period of the mod-8 progression of A0
  const ModTuple a = project(a0_tuple(), Modulus(8));
  const IapSpec s{a, antisym_diff(a)};
  const ModTuple period = iap_window(s, 0, 95);
  CHECK(to_digits(period) ==
        "0011632602073402607611422433254224415024221233044055676646037446"
        "64365546647721026045106026527700");
  CHECK(balanced_triangle_scan(period, LocalRule::kNegated));
}
