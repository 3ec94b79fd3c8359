#include "steinhaus/idap.hpp"

#include <algorithm>

namespace steinhaus {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool all_zero(const ModTuple& t) {
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t[j] != 0) return false;
  return true;
}

}  // namespace

IdapSpec::IdapSpec(ModMatrix a_, ModMatrix d1_, ModMatrix d2_)
    : modulus(a_.modulus()),
      k1(static_cast<std::int64_t>(a_.cols())),
      k2(static_cast<std::int64_t>(a_.rows())),
      a(std::move(a_)),
      d1(std::move(d1_)),
      d2(std::move(d2_)) {
  if (d1.rows() != a.rows() || d1.cols() != a.cols() ||
      d2.rows() != a.rows() || d2.cols() != a.cols())
    throw Error("block shape mismatch");
  if (d1.modulus() != modulus || d2.modulus() != modulus)
    throw Error("modulus mismatch");
}

std::int64_t idap_eval(const IdapSpec& s, std::int64_t i, std::int64_t j) {
  if (i < 0) throw Error("row index must be >= 0");
  const std::int64_t qi = i / s.k2, i0 = i % s.k2;
  const std::int64_t qj = floor_div(j, s.k1), j0 = j - qj * s.k1;
  const auto r = static_cast<std::size_t>(i0);
  const auto c = static_cast<std::size_t>(j0);
  return s.modulus.reduce(s.a.at(r, c) + s.modulus.reduce(qi) * s.d2.at(r, c) +
                          s.modulus.reduce(qj) * s.d1.at(r, c));
}

bool idap_orbit_predicate(const ModTuple& a, const ModTuple& d,
                          std::int64_t k2) {
  if (a.modulus() != d.modulus() || a.size() != d.size() || a.empty())
    throw Error("bad (A, D) pair");
  const auto k1 = static_cast<std::int64_t>(a.size());
  ModMatrix ia = iamat_block(k1, k2, a.modulus());
  return all_zero(row_times(concat(a, d), ia));
}

bool idap_orbit_antisym_predicate(const ModTuple& a, std::int64_t k2) {
  if (a.empty()) throw Error("empty tuple");
  const auto k1 = static_cast<std::int64_t>(a.size());
  ModMatrix aia = aiamat_block(k1, k2, a.modulus());
  return all_zero(row_times(a, aia));
}

IdapSpec idap_from_orbit(const ModTuple& a, const ModTuple& d,
                         std::int64_t k2) {
  if (!idap_orbit_predicate(a, d, k2))
    throw Error("orbit is not (k1,k2)-interlaced doubly arithmetic");
  const auto k1 = static_cast<std::int64_t>(a.size());
  const Modulus m = a.modulus();
  ModMatrix ma(m, static_cast<std::size_t>(k2), static_cast<std::size_t>(k1));
  ModMatrix md1 = ma, md2 = ma;
  const ModMatrix w = wendt(k1, k2, m);
  const ModMatrix tk2 = tmat(k1, k2, m);
  const ModTuple awdt = tuple_add(row_times(a, w), row_times(d, tk2));
  for (std::int64_t i = 0; i < k2; ++i) {
    const auto [c, t] = ctmat(k1, i, m);
    const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
    const std::int64_t sign2 = ((i + k2) % 2 == 0) ? 1 : -1;
    ma.set_row(static_cast<std::size_t>(i),
               tuple_scale(sign, tuple_add(row_times(a, c), row_times(d, t))));
    md1.set_row(static_cast<std::size_t>(i),
                tuple_scale(sign, row_times(d, c)));
    md2.set_row(static_cast<std::size_t>(i),
                tuple_scale(sign2, row_times(awdt, c)));
  }
  return IdapSpec{std::move(ma), std::move(md1), std::move(md2)};
}

ModMatrix delta_matrix(const ModTuple& a, std::int64_t k2) {
  if (a.empty()) throw Error("empty tuple");
  if (k2 < 1) throw Error("k2 must be >= 1");
  const auto k1 = static_cast<std::int64_t>(a.size());
  const ModMatrix c1 = cmat(k1, 1, a.modulus());
  ModMatrix out(a.modulus(), static_cast<std::size_t>(k2),
                static_cast<std::size_t>(k1));
  ModTuple row = a;
  for (std::int64_t i = 0; i < k2; ++i) {
    out.set_row(static_cast<std::size_t>(i), row);
    row = tuple_scale(-1, row_times(row, c1));
  }
  return out;
}

IdapSpec idap_rescale(const IdapSpec& s, std::int64_t lambda,
                      std::int64_t mu) {
  if (lambda < 1 || mu < 1) throw Error("lambda and mu must be >= 1");
  const std::int64_t nk1 = lambda * s.k1;
  const std::int64_t nk2 = mu * s.k2;
  ModMatrix a(s.modulus, static_cast<std::size_t>(nk2),
              static_cast<std::size_t>(nk1));
  ModMatrix d1 = a, d2 = a;
  for (std::int64_t i = 0; i < nk2; ++i) {
    const auto j = static_cast<std::size_t>(i % s.k2);
    for (std::int64_t c = 0; c < nk1; ++c) {
      const auto cc = static_cast<std::size_t>(c % s.k1);
      a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(c),
            idap_eval(s, i, c));
      d1.set(static_cast<std::size_t>(i), static_cast<std::size_t>(c),
             s.modulus.reduce(lambda) * s.d1.at(j, cc));
      d2.set(static_cast<std::size_t>(i), static_cast<std::size_t>(c),
             s.modulus.reduce(mu) * s.d2.at(j, cc));
    }
  }
  return IdapSpec{std::move(a), std::move(d1), std::move(d2)};
}

std::vector<ArithTriangleRef> decompose_triangle(const IdapSpec& s,
                                                 std::int64_t n) {
  if (s.k1 != s.k2) throw Error("decomposition requires k1 = k2");
  if (n < 1) throw Error("n must be >= 1");
  const std::int64_t k = s.k1;
  const std::int64_t q = n / k, r = n % k;
  std::vector<ArithTriangleRef> out;
  out.reserve(static_cast<std::size_t>(k * k));
  for (std::int64_t i0 = 0; i0 < k; ++i0)
    for (std::int64_t j0 = 0; j0 < k; ++j0) {
      std::int64_t eps;
      if (i0 + j0 <= r - 1)
        eps = 1;
      else if (i0 + j0 <= k + r - 1)
        eps = 0;
      else
        eps = -1;
      const std::int64_t size = std::max<std::int64_t>(q + eps, 0);
      const auto rr = static_cast<std::size_t>(i0);
      const auto cc = static_cast<std::size_t>(j0);
      out.push_back(ArithTriangleRef{
          ArithTriangle{s.modulus, s.a.at(rr, cc), s.d1.at(rr, cc),
                        s.d2.at(rr, cc), size},
          i0, j0});
    }
  return out;
}

}  // namespace steinhaus
