#include "ternac/matrix.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ternac {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows in matrix");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ExactMatrix::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_real(); });
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector ExactMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto row_r = row(r);
    for (std::size_t c = 0; c < cols_; ++c) add_product(out[r], row_r[c], v[c]);
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) add_product(out(r, c), x, b(k, c));
    }
  }
  return out;
}

namespace {

// Element of Z[i].
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

using SparseRow = std::vector<std::pair<std::size_t, GaussInt>>;

// a * x - b * y, merged by column.
SparseRow combine(const GaussInt& a, const SparseRow& x, const GaussInt& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, mul(a, x[i].second));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      GaussInt t = mul(b, y[j].second);
      out.emplace_back(y[j].first, GaussInt{-t.re, -t.im});
      ++j;
    } else {
      GaussInt s = mul(a, x[i].second);
      GaussInt t = mul(b, y[j].second);
      GaussInt d{s.re - t.re, s.im - t.im};
      if (!d.is_zero()) out.emplace_back(x[i].first, std::move(d));
      ++i;
      ++j;
    }
  }
  return out;
}

void remove_content(SparseRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.im.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& [c, v] : row) {
    mpz_divexact(v.re.get_mpz_t(), v.re.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(v.im.get_mpz_t(), v.im.get_mpz_t(), g.get_mpz_t());
  }
}

SparseRow integral_row(std::span<const Scalar> row) {
  mpz_class l = 1;
  for (const Scalar& s : row) {
    if (s.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.real().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.imag().get_den_mpz_t());
  }
  SparseRow out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    const Scalar& s = row[c];
    if (s.is_zero()) continue;
    mpz_class re = s.real().get_num() * (l / s.real().get_den());
    mpz_class im = s.imag().get_num() * (l / s.imag().get_den());
    out.emplace_back(c, GaussInt{std::move(re), std::move(im)});
  }
  remove_content(out);
  return out;
}

Scalar to_scalar(const GaussInt& g) { return Scalar(mpq_class(g.re), mpq_class(g.im)); }

}  // namespace

struct RowEchelon::Impl {
  std::map<std::size_t, SparseRow> rows;  // keyed by pivot column
};

RowEchelon::RowEchelon(std::size_t cols) : cols_(cols), impl_(std::make_unique<Impl>()) {}
RowEchelon::RowEchelon(RowEchelon&&) noexcept = default;
RowEchelon& RowEchelon::operator=(RowEchelon&&) noexcept = default;
RowEchelon::~RowEchelon() = default;

bool RowEchelon::add_row(std::span<const Scalar> row) {
  if (row.size() != cols_) throw DimensionMismatch("row length does not match column count");
  SparseRow r = integral_row(row);
  while (!r.empty()) {
    auto it = impl_->rows.find(r.front().first);
    if (it == impl_->rows.end()) {
      std::size_t pivot = r.front().first;
      impl_->rows.emplace(pivot, std::move(r));
      return true;
    }
    const SparseRow& b = it->second;
    GaussInt lead_b = b.front().second;
    GaussInt lead_r = r.front().second;
    r = combine(lead_b, r, lead_r, b);
    remove_content(r);
  }
  return false;
}

std::size_t RowEchelon::rank() const { return impl_->rows.size(); }

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, r] : impl_->rows) out.push_back(p);
  return out;
}

std::vector<Vector> RowEchelon::reduced() const {
  std::vector<Vector> out;
  std::vector<std::size_t> piv;
  for (const auto& [p, r] : impl_->rows) {
    Vector v(cols_);
    Scalar lead_inv = to_scalar(r.front().second).inverse();
    for (const auto& [c, g] : r) v[c] = to_scalar(g) * lead_inv;
    out.push_back(std::move(v));
    piv.push_back(p);
  }
  // Back substitution, bottom to top.
  for (std::size_t k = out.size(); k-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      Scalar f = out[j][piv[k]];
      if (f.is_zero()) continue;
      for (std::size_t c = piv[k]; c < cols_; ++c) {
        if (!out[k][c].is_zero()) out[j][c] -= f * out[k][c];
      }
    }
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows() && e.rank() < m.cols(); ++r) e.add_row(m.row(r));
  return e.rank();
}

std::vector<Vector> canonical_basis(std::vector<Vector> vectors) {
  if (vectors.empty()) return {};
  RowEchelon e(vectors.front().size());
  for (const auto& v : vectors) e.add_row(v);
  return e.reduced();
}

std::vector<Vector> nullspace(const ExactMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows() && e.rank() < m.cols(); ++r) e.add_row(m.row(r));
  std::vector<Vector> rref = e.reduced();
  std::vector<std::size_t> piv = e.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : piv) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -rref[k][f];
    basis.push_back(std::move(v));
  }
  return canonical_basis(std::move(basis));
}

std::vector<Vector> column_space(const ExactMatrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return canonical_basis(std::move(cols));
}

}  // namespace ternac
