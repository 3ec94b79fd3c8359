#include "steinhaus/modlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace steinhaus {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  // Fermat; p prime and a != 0 mod p.
  std::int64_t result = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Row echelon form in place over GF(p) with leftmost-pivot, lowest-row order.
// Returns pivot columns.  When track != nullptr, the same row operations are
// applied to it (an augmented block with the same number of rows).
std::vector<std::int64_t> rref_gfp(std::vector<std::vector<std::int64_t>>& a,
                                   std::int64_t p,
                                   std::vector<std::vector<std::int64_t>>*
                                       track = nullptr) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    if (track) std::swap((*track)[pivot], (*track)[r]);
    const std::int64_t inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    if (track)
      for (auto& x : (*track)[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
      if (track)
        for (std::size_t j = 0; j < (*track)[i].size(); ++j)
          (*track)[i][j] = (((*track)[i][j] - f * (*track)[r][j]) % p + p) % p;
    }
    pivots.push_back(static_cast<std::int64_t>(c));
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::int64_t>> transpose_mod_p(const ModMatrix& m,
                                                       std::int64_t p) {
  std::vector<std::vector<std::int64_t>> t(
      m.cols(), std::vector<std::int64_t>(m.rows(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t[c][r] = m.at(r, c) % p;
  return t;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error("p must be prime");
}

}  // namespace

std::int64_t rank_gfp(const ModMatrix& m, std::int64_t p) {
  require_prime(p);
  if (m.mod() % p != 0) throw Error("matrix entries not reducible mod p");
  auto rows = transpose_mod_p(m, p);  // rank(M) = rank(M^T)
  return static_cast<std::int64_t>(rref_gfp(rows, p).size());
}

KernelBasis left_kernel_gfp(const ModMatrix& m, std::int64_t p) {
  require_prime(p);
  if (m.mod() % p != 0) throw Error("matrix entries not reducible mod p");
  const std::size_t n = m.rows();
  // Solve x M = 0, i.e. M^T x^T = 0.
  auto a = transpose_mod_p(m, p);
  const auto pivots = rref_gfp(a, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<std::int64_t>> raw;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::int64_t> v(n, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const auto pc = static_cast<std::size_t>(pivots[i]);
      v[pc] = ((-a[i][free_col]) % p + p) % p;
    }
    raw.push_back(std::move(v));
  }
  // Canonicalize: the kernel basis is reported as the RREF of its span, so
  // comparisons against published generator tables reduce to span membership.
  rref_gfp(raw, p);
  KernelBasis basis{Modulus(p), n, {}};
  for (auto& v : raw) {
    if (std::all_of(v.begin(), v.end(),
                    [](std::int64_t x) { return x == 0; }))
      continue;
    basis.vectors.emplace_back(Modulus(p), std::move(v));
  }
  return basis;
}

std::optional<ModTuple> solve_left_gfp(const ModMatrix& m, const ModTuple& x,
                                       std::int64_t p) {
  require_prime(p);
  if (x.size() != m.cols()) throw Error("rhs shape mismatch");
  // y M = x  <=>  M^T y^T = x^T; augment and reduce.
  auto a = transpose_mod_p(m, p);
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(x[r] % p);
  const std::size_t n = m.rows();
  const auto pivots = rref_gfp(a, p);
  std::vector<std::int64_t> y(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const auto c = static_cast<std::size_t>(pivots[i]);
    if (c == n) return std::nullopt;  // pivot in the augmented column
    y[c] = a[i][n];
  }
  // Rows past the pivots must have zero rhs.
  for (std::size_t i = pivots.size(); i < a.size(); ++i)
    if (a[i][n] != 0) return std::nullopt;
  return ModTuple{Modulus(p), std::move(y)};
}

bool in_span_gfp(const KernelBasis& basis, const ModTuple& v) {
  const std::int64_t p = basis.modulus.value();
  if (v.size() == 0) return true;
  std::vector<std::int64_t> w(v.values());
  for (auto& x : w) x = ((x % p) + p) % p;
  for (const auto& b : basis.vectors) {
    std::size_t lead = 0;
    while (lead < b.size() && b[lead] == 0) ++lead;
    if (lead == b.size()) continue;
    const std::int64_t f = w[lead];  // basis rows are monic at their lead
    if (f == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j)
      w[j] = ((w[j] - f * b[j]) % p + p) % p;
  }
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<ModTuple> enumerate_span_gfp(const KernelBasis& basis,
                                         std::int64_t cap) {
  const std::int64_t p = basis.modulus.value();
  const std::size_t dim = basis.vectors.size();
  double size = 1;
  for (std::size_t i = 0; i < dim; ++i) size *= static_cast<double>(p);
  if (size > static_cast<double>(cap)) {
    std::ostringstream os;
    os << "span enumeration of p^" << dim << " elements exceeds cap " << cap;
    throw BudgetError(os.str());
  }
  const std::size_t n = basis.ambient;
  std::vector<ModTuple> out;
  std::vector<std::int64_t> coeff(dim, 0);
  for (;;) {
    std::vector<std::int64_t> v(n, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] = (v[j] + coeff[i] * basis.vectors[i][j]) % p;
    }
    out.emplace_back(Modulus(p), std::move(v));
    std::size_t pos = 0;
    while (pos < dim && coeff[pos] == p - 1) coeff[pos++] = 0;
    if (pos == dim) break;
    ++coeff[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModTuple> LiftedSolutionSet::elements(std::int64_t cap) const {
  if (empty) return {};
  const std::int64_t p = translates.modulus.value();
  const std::int64_t pu = base->mod() / p;  // p^u
  std::vector<ModTuple> out;
  for (const auto& z : enumerate_span_gfp(translates, cap)) {
    ModTuple t{base->modulus()};
    for (std::size_t j = 0; j < base->size(); ++j)
      t.push_back((*base)[j] + pu * z[j]);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LiftedSolutionSet lift_kernel_step(const ModMatrix& m_next, std::int64_t p,
                                   int u, const ModTuple& a) {
  require_prime(p);
  std::int64_t pu = 1;
  for (int i = 0; i < u; ++i) pu *= p;
  const std::int64_t pu1 = pu * p;
  if (m_next.mod() != pu1) throw Error("matrix must be taken mod p^{u+1}");
  if (a.mod() != pu) throw Error("solution must be taken mod p^u");

  // A' = same entries viewed mod p^{u+1}.
  ModTuple lifted{Modulus(pu1), a.values()};
  ModTuple prod = row_times(lifted, m_next);
  ModTuple x{Modulus(p)};
  for (std::size_t j = 0; j < prod.size(); ++j) {
    if (prod[j] % pu != 0)
      throw Error("precondition violated: A M != 0 (mod p^u)");
    x.push_back(prod[j] / pu);
  }

  LiftedSolutionSet result{left_kernel_gfp(m_next, p)};
  auto y = solve_left_gfp(m_next, x, p);
  if (!y) return result;
  result.empty = false;
  ModTuple base{Modulus(pu1)};
  for (std::size_t j = 0; j < lifted.size(); ++j)
    base.push_back(lifted[j] - pu * (*y)[j]);
  result.base = std::move(base);
  return result;
}

std::vector<ModTuple> left_kernel_prime_power(
    const std::function<ModMatrix(int)>& matrix_at, std::int64_t p, int u,
    std::int64_t cap) {
  require_prime(p);
  if (u < 1) throw Error("u must be >= 1");
  std::vector<ModTuple> level = enumerate_span_gfp(
      left_kernel_gfp(matrix_at(1), p), cap);
  for (int v = 1; v < u; ++v) {
    const ModMatrix m_next = matrix_at(v + 1);
    std::vector<ModTuple> next;
    for (const auto& a : level) {
      LiftedSolutionSet lifted = lift_kernel_step(m_next, p, v, a);
      for (auto& t : lifted.elements(cap)) next.push_back(std::move(t));
      if (static_cast<std::int64_t>(next.size()) > cap) {
        std::ostringstream os;
        os << "kernel lifting exceeded cap " << cap << " at level " << v + 1;
        throw BudgetError(os.str());
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return level;
}

}  // namespace steinhaus
