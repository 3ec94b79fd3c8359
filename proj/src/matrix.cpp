#include "steinhaus/matrix.hpp"

#include <limits>

#include "json.hpp"

namespace steinhaus {

namespace {

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw Error("integer matrix entry overflow");
  return static_cast<std::int64_t>(x);
}

}  // namespace

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::circulant(const std::vector<std::int64_t>& first_row) {
  const std::size_t k = first_row.size();
  IntMat m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      m.at(r, s) = first_row[(s + k - r) % k];
  return m;
}

IntMat IntMat::toeplitz(const std::vector<std::int64_t>& col,
                        const std::vector<std::int64_t>& above_diag) {
  const std::size_t k = col.size();
  if (above_diag.size() != k - 1) throw Error("toeplitz size mismatch");
  IntMat m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s) {
      if (r >= s)
        m.at(r, s) = col[r - s];
      else
        m.at(r, s) = above_diag[s - r - 1];
    }
  return m;
}

IntMat operator+(const IntMat& x, const IntMat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw Error("matrix shape mismatch");
  IntMat out(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    out.a_[i] = narrow(static_cast<__int128>(x.a_[i]) + y.a_[i]);
  return out;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw Error("matrix shape mismatch");
  IntMat out(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    out.a_[i] = narrow(static_cast<__int128>(x.a_[i]) - y.a_[i]);
  return out;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols_ != y.rows_) throw Error("matrix shape mismatch");
  IntMat out(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t c = 0; c < y.cols_; ++c) {
      __int128 acc = 0;
      for (std::size_t t = 0; t < x.cols_; ++t)
        acc += static_cast<__int128>(x.at(r, t)) * y.at(t, c);
      out.at(r, c) = narrow(acc);
    }
  return out;
}

IntMat operator*(std::int64_t c, const IntMat& x) {
  IntMat out(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    out.a_[i] = narrow(static_cast<__int128>(c) * x.a_[i]);
  return out;
}

bool IntMat::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::divide_exact(std::int64_t c) const {
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] % c != 0) throw Error("inexact matrix division");
    out.a_[i] = a_[i] / c;
  }
  return out;
}

IntMat IntMat::hconcat(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_) throw Error("matrix shape mismatch");
  IntMat out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c)
      out.at(r, a.cols_ + c) = b.at(r, c);
  }
  return out;
}

std::vector<std::int64_t> row_times(const std::vector<std::int64_t>& v,
                                    const IntMat& m) {
  if (v.size() != m.rows()) throw Error("vector/matrix shape mismatch");
  std::vector<std::int64_t> out(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    __int128 acc = 0;
    for (std::size_t r = 0; r < v.size(); ++r)
      acc += static_cast<__int128>(v[r]) * m.at(r, c);
    out[c] = narrow(acc);
  }
  return out;
}

ModMatrix::ModMatrix(Modulus m, const IntMat& x)
    : m_(m), rows_(x.rows()), cols_(x.cols()), a_(x.rows() * x.cols()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      a_[r * cols_ + c] = m_.reduce(x.at(r, c));
}

ModMatrix ModMatrix::identity(Modulus m, std::size_t n) {
  ModMatrix out(m, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

ModTuple ModMatrix::row(std::size_t r) const {
  ModTuple t{m_};
  for (std::size_t c = 0; c < cols_; ++c) t.push_back(at(r, c));
  return t;
}

void ModMatrix::set_row(std::size_t r, const ModTuple& t) {
  if (t.modulus() != m_ || t.size() != cols_)
    throw Error("row shape/modulus mismatch");
  for (std::size_t c = 0; c < cols_; ++c) a_[r * cols_ + c] = t[c];
}

ModMatrix ModMatrix::reduced(std::int64_t d) const {
  if (!m_.divides(d)) throw Error("not a divisor");
  ModMatrix out(Modulus(d), rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] % d;
  return out;
}

ModMatrix operator+(const ModMatrix& x, const ModMatrix& y) {
  if (x.m_ != y.m_ || x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw Error("matrix shape/modulus mismatch");
  ModMatrix out(x.m_, x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    out.a_[i] = x.m_.reduce(x.a_[i] + y.a_[i]);
  return out;
}

ModMatrix operator-(const ModMatrix& x, const ModMatrix& y) {
  if (x.m_ != y.m_ || x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw Error("matrix shape/modulus mismatch");
  ModMatrix out(x.m_, x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    out.a_[i] = x.m_.reduce(x.a_[i] - y.a_[i]);
  return out;
}

ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
  if (x.m_ != y.m_ || x.cols_ != y.rows_)
    throw Error("matrix shape/modulus mismatch");
  ModMatrix out(x.m_, x.rows_, y.cols_);
  const std::int64_t m = x.mod();
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t c = 0; c < y.cols_; ++c) {
      std::int64_t acc = 0;
      for (std::size_t t = 0; t < x.cols_; ++t)
        acc = (acc + x.at(r, t) * y.at(t, c)) % m;
      out.a_[r * out.cols_ + c] = acc;
    }
  return out;
}

ModMatrix operator*(std::int64_t c, const ModMatrix& x) {
  const std::int64_t cr = x.m_.reduce(c);
  ModMatrix out(x.m_, x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    out.a_[i] = x.m_.reduce(cr * x.a_[i]);
  return out;
}

bool ModMatrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

ModMatrix ModMatrix::hconcat(const ModMatrix& a, const ModMatrix& b) {
  if (a.m_ != b.m_ || a.rows_ != b.rows_)
    throw Error("matrix shape/modulus mismatch");
  ModMatrix out(a.m_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols_; ++c)
      out.set(r, a.cols_ + c, b.at(r, c));
  }
  return out;
}

ModMatrix ModMatrix::vconcat(const ModMatrix& a, const ModMatrix& b) {
  if (a.m_ != b.m_ || a.cols_ != b.cols_)
    throw Error("matrix shape/modulus mismatch");
  ModMatrix out(a.m_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out.set(r, c, a.at(r, c));
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c)
      out.set(a.rows_ + r, c, b.at(r, c));
  return out;
}

ModTuple row_times(const ModTuple& v, const ModMatrix& m) {
  if (v.modulus() != m.modulus() || v.size() != m.rows())
    throw Error("vector/matrix shape mismatch");
  const std::int64_t mod = m.mod();
  ModTuple out{m.modulus()};
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::int64_t acc = 0;
    for (std::size_t r = 0; r < v.size(); ++r)
      acc = (acc + v[r] * m.at(r, c)) % mod;
    out.push_back(acc);
  }
  return out;
}

std::string to_json(const ModMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  nlohmann::json j;
  j["m"] = m.mod();
  j["rows"] = rows;
  return j.dump();
}

}  // namespace steinhaus
