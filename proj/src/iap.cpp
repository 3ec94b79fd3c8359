#include "steinhaus/iap.hpp"

#include <numeric>

#include "json.hpp"

namespace steinhaus {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IapSpec::IapSpec(ModTuple a_, ModTuple d_)
    : modulus(a_.modulus()),
      k(static_cast<std::int64_t>(a_.size())),
      a(std::move(a_)),
      d(std::move(d_)) {
  if (a.modulus() != d.modulus()) throw Error("modulus mismatch");
  if (a.size() != d.size() || a.empty()) throw Error("bad interlace count");
}

std::int64_t iap_eval(const IapSpec& s, std::int64_t j) {
  const std::int64_t q = floor_div(j, s.k);
  const std::int64_t r = j - q * s.k;
  return s.modulus.reduce(s.a[static_cast<std::size_t>(r)] +
                          s.modulus.reduce(q) *
                              s.d[static_cast<std::size_t>(r)]);
}

ModTuple iap_window(const IapSpec& s, std::int64_t i1, std::int64_t i2) {
  if (i1 > i2) throw Error("empty window bounds");
  ModTuple out{s.modulus};
  for (std::int64_t j = i1; j <= i2; ++j) out.push_back(iap_eval(s, j));
  return out;
}

IapSpec iap_derive(const IapSpec& s) {
  const std::int64_t k = s.k;
  ModTuple a{s.modulus}, d{s.modulus};
  for (std::int64_t r = 0; r + 1 < k; ++r)
    a.push_back(-(s.a[static_cast<std::size_t>(r)] +
                  s.a[static_cast<std::size_t>(r + 1)]));
  a.push_back(-(s.a[static_cast<std::size_t>(k - 1)] + s.a[0] + s.d[0]));
  for (std::int64_t r = 0; r + 1 < k; ++r)
    d.push_back(-(s.d[static_cast<std::size_t>(r)] +
                  s.d[static_cast<std::size_t>(r + 1)]));
  d.push_back(-(s.d[static_cast<std::size_t>(k - 1)] + s.d[0]));
  return IapSpec{std::move(a), std::move(d)};
}

IapSpec iap_iterated(const IapSpec& s, std::int64_t i) {
  if (i < 0) throw Error("i must be >= 0");
  const auto [c, t] = ctmat(s.k, i, s.modulus);
  const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
  ModTuple a = tuple_scale(sign, tuple_add(row_times(s.a, c),
                                           row_times(s.d, t)));
  ModTuple d = tuple_scale(sign, row_times(s.d, c));
  return IapSpec{std::move(a), std::move(d)};
}

bool iap_is_periodic(const IapSpec& s, std::int64_t p) {
  if (p < 1 || p % s.k != 0) throw Error("p must be a positive multiple of k");
  const std::int64_t lambda = p / s.k;
  for (std::size_t r = 0; r < s.d.size(); ++r)
    if (s.modulus.reduce(lambda * s.d[r]) != 0) return false;
  return true;
}

bool orbit_is_periodic(const IapSpec& s, std::int64_t p1, std::int64_t p2) {
  if (!iap_is_periodic(s, p1)) return false;
  ModMatrix p = pmat_block(s.k, p2, s.modulus);
  ModTuple ad = concat(s.a, s.d);
  return row_times(ad, p) == ModTuple{s.modulus,
                                      std::vector<std::int64_t>(
                                          static_cast<std::size_t>(2 * s.k),
                                          0)};
}

ModTuple antisym_diff(const ModTuple& a) {
  return row_times(a, xmat(static_cast<std::int64_t>(a.size()), a.modulus()));
}

bool orbit_is_periodic_antisym(const ModTuple& a, std::int64_t p,
                               std::int64_t lambda) {
  const auto k = static_cast<std::int64_t>(a.size());
  if (k < 1) throw Error("empty tuple");
  if (p < 1 || p % k != 0) throw Error("p must be a positive multiple of k");
  if (lambda < 1) throw Error("lambda must be >= 1");
  const std::int64_t m = a.mod();
  const std::int64_t g = std::gcd(p / k, m);
  ModTuple ax = antisym_diff(a);
  for (std::size_t r = 0; r < ax.size(); ++r)
    if (ax[r] % (m / g) != 0) return false;
  ModMatrix mm = mmat(k, lambda * p, a.modulus());
  ModTuple prod = row_times(a, mm);
  for (std::size_t r = 0; r < prod.size(); ++r)
    if (prod[r] != 0) return false;
  return true;
}

IapSpec iap_reduce(const IapSpec& s, std::int64_t p) {
  if (p < 1) throw Error("p must be >= 1");
  // General p-periodicity: the sequence is mk-periodic, so comparing one
  // full mk window against its p-shift decides u_{j+p} = u_j for all j.
  const std::int64_t mk = s.modulus.value() * s.k;
  for (std::int64_t j = 0; j < mk; ++j)
    if (iap_eval(s, j + p) != iap_eval(s, j))
      throw Error("spec is not p-periodic");
  const std::int64_t g = std::gcd(s.k, p);
  // Bezout: alpha p + beta k = g.
  std::int64_t x0 = 0, x1 = 1, a0 = p, a1 = s.k;
  while (a1 != 0) {
    const std::int64_t q = a0 / a1;
    a0 -= q * a1;
    std::swap(a0, a1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  const std::int64_t beta = x0;  // coefficient of k
  ModTuple a{s.modulus}, d{s.modulus};
  for (std::int64_t r = 0; r < g; ++r) {
    a.push_back(s.a[static_cast<std::size_t>(r)]);
    d.push_back(s.modulus.reduce(beta) * s.d[static_cast<std::size_t>(r)]);
  }
  return IapSpec{std::move(a), std::move(d)};
}

std::string to_json(const IapSpec& s) {
  nlohmann::json j;
  j["m"] = s.modulus.value();
  j["k"] = s.k;
  j["A"] = s.a.values();
  j["D"] = s.d.values();
  return j.dump();
}

IapSpec iap_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Modulus m{j.at("m").get<std::int64_t>()};
  ModTuple a{m, j.at("A").get<std::vector<std::int64_t>>()};
  ModTuple d{m, j.at("D").get<std::vector<std::int64_t>>()};
  return IapSpec{std::move(a), std::move(d)};
}

}  // namespace steinhaus
