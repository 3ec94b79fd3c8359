#include "steinhaus/binommat.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace steinhaus {

namespace {

// All S0/S1 values of one row i at once: closed[0][o] = S0(k,i,o) mod m and
// closed[1][o] = S1(k,i,o) mod m for o in -(k-1)..(k-1), indexed o+k-1.
// Single pass over binom(i,j) with an incremental exact quotient.
struct ClosedRow {
  std::vector<std::int64_t> s0v, s1v;  // size 2k-1, offset index o+k-1
};

ClosedRow closed_row(std::int64_t k, std::int64_t i, std::int64_t m) {
  ClosedRow out;
  out.s0v.assign(2 * k - 1, 0);
  out.s1v.assign(2 * k - 1, 0);
  mpz_class b = 1;  // binom(i, j)
  for (std::int64_t j = 0; j <= i; ++j) {
    const std::int64_t bm = mpz_class(b % m).get_si();
    const std::int64_t o = j % k;
    const std::int64_t alpha = j / k;
    // offset o with a = alpha, offset o-k with a = alpha+1
    out.s0v[o + k - 1] = (out.s0v[o + k - 1] + bm) % m;
    out.s1v[o + k - 1] = (out.s1v[o + k - 1] + (alpha % m) * bm) % m;
    if (o - k + k - 1 >= 0) {
      out.s0v[o - 1] = (out.s0v[o - 1] + bm) % m;
      out.s1v[o - 1] = (out.s1v[o - 1] + ((alpha + 1) % m) * bm) % m;
    }
    if (j < i) {
      b *= (i - j);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), j + 1);
    }
  }
  return out;
}

struct CTPair {
  ModMatrix c, t;
};

CTPair ct_identity(std::int64_t k, Modulus m) {
  return {ModMatrix::identity(m, k), ModMatrix(m, k, k)};
}

CTPair ct_base(std::int64_t k, Modulus m) {
  ModMatrix c(m, k, k), t(m, k, k);
  for (std::int64_t r = 0; r < k; ++r) {
    c.set(r, r, 1);
    c.set(r, (r + k - 1) % k, c.at(r, (r + k - 1) % k) + 1);
  }
  if (k >= 2)
    t.set(0, k - 1, 1);
  else
    t.set(0, 0, 1);  // k = 1: S1(1,1,0) = 1
  return {c, t};
}

// T^{a+b} = T^a C^b + C^a T^b.
CTPair ct_mul(const CTPair& a, const CTPair& b) {
  return {a.c * b.c, a.t * b.c + a.c * b.t};
}

CTPair ct_pow(std::int64_t k, std::int64_t i, Modulus m) {
  CTPair result = ct_identity(k, m);
  if (i == 0) return result;
  CTPair base = ct_base(k, m);
  std::int64_t e = i;
  while (e > 0) {
    if (e & 1) result = ct_mul(result, base);
    e >>= 1;
    if (e > 0) base = ct_mul(base, base);
  }
  return result;
}

void check_against_closed_form(std::int64_t k, std::int64_t i,
                               const CTPair& p) {
  const std::int64_t m = p.c.mod();
  const ClosedRow row = closed_row(k, i, m);
  for (std::int64_t r = 0; r < k; ++r)
    for (std::int64_t s = 0; s < k; ++s) {
      const std::int64_t circ = row.s0v[r - s + k - 1];
      const std::int64_t toep = row.s1v[r - s + k - 1];
      if (p.c.at(r, s) != circ || p.t.at(r, s) != toep) {
        std::ostringstream os;
        os << "binomial-sum matrix mismatch between recursion and closed form"
              " at k=" << k << " i=" << i << " m=" << m;
        throw Error(os.str());
      }
    }
}

CTPair ct_checked(std::int64_t k, std::int64_t i, Modulus m) {
  if (k < 1) throw Error("k must be >= 1");
  if (i < 0) throw Error("i must be >= 0");
  CTPair p = ct_pow(k, i, m);
  check_against_closed_form(k, i, p);
  return p;
}

}  // namespace

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Shared kernel: acc += weight(a) * binom(i, a*k + j) over the nonzero range.
template <typename Weight>
mpz_class binom_sum(std::int64_t k, std::int64_t i, std::int64_t j,
                    Weight weight) {
  if (k < 1) throw Error("k must be >= 1");
  if (i < 0) throw Error("i must be >= 0");
  mpz_class acc = 0, b;
  // nonzero terms need 0 <= a*k + j <= i
  const std::int64_t a_lo = floor_div(-j + k - 1, k) - 1;
  for (std::int64_t a = a_lo; a * k + j <= i; ++a) {
    const std::int64_t idx = a * k + j;
    if (idx < 0) continue;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i),
                 static_cast<unsigned long>(idx));
    acc += weight(a) * b;
  }
  return acc;
}

}  // namespace

mpz_class s0(std::int64_t k, std::int64_t i, std::int64_t j) {
  return binom_sum(k, i, j, [](std::int64_t) { return 1; });
}

mpz_class s1(std::int64_t k, std::int64_t i, std::int64_t j) {
  return binom_sum(k, i, j, [](std::int64_t a) { return a; });
}

ModMatrix cmat(std::int64_t k, std::int64_t i, Modulus m) {
  return ct_checked(k, i, m).c;
}

ModMatrix tmat(std::int64_t k, std::int64_t i, Modulus m) {
  return ct_checked(k, i, m).t;
}

std::pair<ModMatrix, ModMatrix> ctmat(std::int64_t k, std::int64_t i,
                                      Modulus m) {
  CTPair p = ct_checked(k, i, m);
  return {p.c, p.t};
}

ModMatrix ctmat_circ(std::int64_t k, std::int64_t i, Modulus m) {
  ClosedRow row = closed_row(k, i, m.value());
  ModMatrix out(m, k, k);
  for (std::int64_t r = 0; r < k; ++r)
    for (std::int64_t s = 0; s < k; ++s) {
      std::int64_t o = (r - s) % k;
      if (o < 0) o += k;
      out.set(r, s, row.s1v[o + k - 1]);
    }
  return out;
}

ModMatrix wendt(std::int64_t k, std::int64_t p, Modulus m) {
  ModMatrix w = cmat(k, p, m);
  const std::int64_t sign = (p % 2 == 0) ? -1 : 1;  // (-1)^{p+1}
  ModMatrix id = ModMatrix::identity(m, k);
  return w + sign * id;
}

IntMat xmat_int(std::int64_t k) {
  IntMat x(k, k);
  for (std::int64_t r = 1; r <= k; ++r) {
    x.at(r - 1, r - 1) += 1;
    x.at(r - 1, k - r) += 1;  // s with r = k - s + 1
  }
  return x;
}

ModMatrix xmat(std::int64_t k, Modulus m) { return ModMatrix(m, xmat_int(k)); }

ModMatrix mmat(std::int64_t k, std::int64_t p, Modulus m) {
  CTPair ct = ct_checked(k, p, m);
  const std::int64_t sign = (p % 2 == 0) ? -1 : 1;
  ModMatrix w = ct.c + sign * ModMatrix::identity(m, k);
  return w + xmat(k, m) * ct.t;
}

ModMatrix pmat_block(std::int64_t k, std::int64_t p, Modulus m) {
  CTPair ct = ct_checked(k, p, m);
  const std::int64_t sign = (p % 2 == 0) ? -1 : 1;
  ModMatrix w = ct.c + sign * ModMatrix::identity(m, k);
  ModMatrix top = ModMatrix::hconcat(w, ModMatrix(m, k, k));
  ModMatrix bottom = ModMatrix::hconcat(ct.t, w);
  return ModMatrix::vconcat(top, bottom);
}

ModMatrix iamat_block(std::int64_t k1, std::int64_t k2, Modulus m) {
  CTPair ct = ct_checked(k1, k2, m);
  const std::int64_t sign = (k2 % 2 == 0) ? -1 : 1;
  ModMatrix w = ct.c + sign * ModMatrix::identity(m, k1);
  ModMatrix top = ModMatrix::hconcat(w * w, ModMatrix(m, k1, k1));
  ModMatrix bottom = ModMatrix::hconcat(ct.t * w, w);
  return ModMatrix::vconcat(top, bottom);
}

ModMatrix aiamat_block(std::int64_t k1, std::int64_t k2, Modulus m) {
  CTPair ct = ct_checked(k1, k2, m);
  const std::int64_t sign = (k2 % 2 == 0) ? -1 : 1;
  ModMatrix w = ct.c + sign * ModMatrix::identity(m, k1);
  ModMatrix mm = w + xmat(k1, m) * ct.t;
  return ModMatrix::hconcat(mm * w, xmat(k1, m) * w);
}

bool composition_identities_check(std::int64_t k, std::int64_t i,
                                  std::int64_t j, Modulus m) {
  CTPair a = ct_checked(k, i, m);
  CTPair b = ct_checked(k, j, m);
  CTPair ab = ct_checked(k, i + j, m);
  if (ab.c != a.c * b.c) throw Error("C^{i+j} != C^i C^j");
  if (ab.t != a.t * b.c + a.c * b.t) throw Error("T^{i+j} != T^i C^j + C^i T^j");
  return true;
}

ModMatrix sut(const ModMatrix& m) {
  if (m.rows() != m.cols()) throw Error("SUT requires a square matrix");
  ModMatrix out(m.modulus(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t s = r + 1; s < m.cols(); ++s) out.set(r, s, m.at(r, s));
  return out;
}

IntMat sut(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error("SUT requires a square matrix");
  IntMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t s = r + 1; s < m.cols(); ++s) out.at(r, s) = m.at(r, s);
  return out;
}

namespace {

const std::vector<std::int64_t> kCd0Row = {2, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0,
                                           0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0};
const std::vector<std::int64_t> kCd1Row = {2, 0, 2, 0, 1, 0, 2, 0, 1, 0, 0, 0,
                                           2, 0, 0, 0, 1, 0, 2, 0, 1, 0, 2, 0};
const std::vector<std::int64_t> kTd0Col = {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
                                           0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0};
const std::vector<std::int64_t> kTd0Above = {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0,
                                             0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0,
                                             0};
const std::vector<std::int64_t> kTd1Col = {3, 0, 0, 0, 4, 0, 0, 0, 3, 0, 4, 0,
                                           6, 0, 4, 0, 4, 0, 4, 0, 6, 0, 4, 0};
const std::vector<std::int64_t> kTd1Above = {0, 0, 0, 4, 0, 0, 0, 2, 0, 4, 0,
                                             2, 0, 4, 0, 1, 0, 4, 0, 2, 0, 4,
                                             0};
const std::vector<std::int64_t> kCTd0Row = {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0,
                                            0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0};
const std::vector<std::int64_t> kCTd1Row = {3, 0, 4, 0, 6, 0, 4, 0, 4, 0, 4, 0,
                                            6, 0, 4, 0, 3, 0, 0, 0, 4, 0, 0, 0};

std::once_flag g_constants_checked;

void check_constants_once();

const IntMat& cd0_raw() {
  static const IntMat m = IntMat::circulant(kCd0Row);
  return m;
}
const IntMat& cd1_raw() {
  static const IntMat m = IntMat::circulant(kCd1Row);
  return m;
}
const IntMat& td0_raw() {
  static const IntMat m = IntMat::toeplitz(kTd0Col, kTd0Above);
  return m;
}
const IntMat& td1_raw() {
  static const IntMat m = IntMat::toeplitz(kTd1Col, kTd1Above);
  return m;
}
const IntMat& ctd0_raw() {
  static const IntMat m = IntMat::circulant(kCTd0Row);
  return m;
}
const IntMat& ctd1_raw() {
  static const IntMat m = IntMat::circulant(kCTd1Row);
  return m;
}

void check_constants_once() {
  std::call_once(g_constants_checked, [] {
    const Modulus m32{32};
    const auto [c, t] = ctmat(24, 96, m32);
    if (3 * c != ModMatrix(m32, cd0_raw() + 8 * cd1_raw()))
      throw Error("embedded Cd0/Cd1 failed the u=5 self-check");
    if (9 * t != ModMatrix(m32, td0_raw() + 4 * td1_raw()))
      throw Error("embedded Td0/Td1 failed the u=5 self-check");
    if (9 * ctmat_circ(24, 96, m32) !=
        ModMatrix(m32, ctd0_raw() + 4 * ctd1_raw()))
      throw Error("embedded CTd0/CTd1 failed the u=5 self-check");
  });
}

}  // namespace

const IntMat& cd0() {
  check_constants_once();
  return cd0_raw();
}
const IntMat& cd1() {
  check_constants_once();
  return cd1_raw();
}
const IntMat& td0() {
  check_constants_once();
  return td0_raw();
}
const IntMat& td1() {
  check_constants_once();
  return td1_raw();
}
const IntMat& ctd0() {
  check_constants_once();
  return ctd0_raw();
}
const IntMat& ctd1() {
  check_constants_once();
  return ctd1_raw();
}

const IntMat& nd0() {
  static const IntMat m =
      3 * cd0() - 9 * IntMat::identity(24) + xmat_int(24) * td0();
  return m;
}

const IntMat& nd1() {
  static const IntMat m = 6 * cd1() + xmat_int(24) * td1();
  return m;
}

const IntMat& md0() {
  static const IntMat m = [] {
    const IntMat x = xmat_int(24);
    const IntMat i24 = IntMat::identity(24);
    const IntMat left = (x * td0() - 9 * i24) * (cd0() - 3 * i24);
    const IntMat right = 9 * (x * (cd0() - 3 * i24));
    return IntMat::hconcat(left, right).divide_exact(3);
  }();
  return m;
}

const IntMat& md1_times6() {
  static const IntMat m = [] {
    const IntMat x = xmat_int(24);
    const IntMat i24 = IntMat::identity(24);
    const IntMat left = x * (2 * (td0() * cd1()) + td1() * (cd0() - 3 * i24));
    const IntMat right = 18 * (x * cd1());
    return IntMat::hconcat(left, right);
  }();
  return m;
}

std::pair<ModMatrix, ModMatrix> congruence_c24(int u) {
  if (u < 4) throw Error("C-congruence requires u >= 4");
  const Modulus m{std::int64_t{1} << u};
  ModMatrix lhs = 3 * cmat(24, std::int64_t{3} << u, m);
  ModMatrix rhs{m, cd0() + (std::int64_t{1} << (u - 2)) * cd1()};
  return {lhs, rhs};
}

std::pair<ModMatrix, ModMatrix> congruence_t24(int u) {
  if (u < 5) throw Error("T-congruence requires u >= 5");
  const Modulus m{std::int64_t{1} << u};
  ModMatrix lhs = 9 * tmat(24, std::int64_t{3} << u, m);
  ModMatrix rhs{m, td0() + (std::int64_t{1} << (u - 3)) * td1()};
  return {lhs, rhs};
}

}  // namespace steinhaus
