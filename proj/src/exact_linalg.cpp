#include "nilorb/exact_linalg.hpp"

#include <sstream>
#include <utility>

#include "nilorb/errors.hpp"

namespace nilorb {

namespace {

struct ExtendedGcd {
  Integer g, x, y;  // x*a + y*b == g >= 0
};

ExtendedGcd extended_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = a / b;
    Integer r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    Integer nx = x0 - q * x1;
    Integer ny = y0 - q * y1;
    x0 = std::move(x1);
    y0 = std::move(y1);
    x1 = std::move(nx);
    y1 = std::move(ny);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

// rows (i, j) <- [[p, q], [r, s]] * rows (i, j)
void mix_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
              const Integer& r, const Integer& s) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer a = m(i, c);
    Integer b = m(j, c);
    m(i, c) = p * a + q * b;
    m(j, c) = r * a + s * b;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += factor * m(source, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged rows");
    for (long long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return {view.begin(), view.end()};
}

bool IntMatrix::row_is_zero(std::size_t r) const {
  for (const auto& v : row(r))
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("IntMatrix: incompatible shapes for product");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      Integer a = h(pivot_row, col);
      Integer b = h(i, col);
      auto [g, x, y] = extended_gcd(a, b);
      Integer r = -(b / g);
      Integer s = a / g;
      mix_rows(h, pivot_row, i, x, y, r, s);
      mix_rows(u, pivot_row, i, x, y, r, s);
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const Integer pivot = h(pivot_row, col);
    for (std::size_t k = 0; k < pivot_row; ++k) {
      Integer q = floor_div(h(k, col), pivot);
      if (q == 0) continue;
      add_row_multiple(h, k, pivot_row, -q);
      add_row_multiple(u, k, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

LatticeBasis LatticeBasis::from_generators(std::size_t ambient_dim, std::span<const IntVector> generators) {
  LatticeBasis basis(ambient_dim);
  if (generators.empty()) return basis;
  auto hnf = hermite_normal_form(IntMatrix::from_rows(generators, ambient_dim)).h;
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    if (hnf.row_is_zero(r)) break;
    basis.vectors_.push_back(hnf.row_vector(r));
  }
  return basis;
}

LatticeBasis kernel_lattice(const IntMatrix& m) {
  // Rows of u whose image under m^T vanishes span the kernel; u is unimodular,
  // so those rows are a Z-basis of it.
  auto [h, u] = hermite_normal_form(m.transposed());
  std::vector<IntVector> kernel;
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (h.row_is_zero(r)) kernel.push_back(u.row_vector(r));
  return LatticeBasis::from_generators(m.cols(), kernel);
}

std::optional<IntVector> lattice_contains(const LatticeBasis& b, std::span<const Integer> v) {
  if (v.size() != b.ambient_dim())
    throw InputError("lattice_contains: vector has length " + std::to_string(v.size()) +
                     ", lattice lives in dimension " + std::to_string(b.ambient_dim()));
  IntVector residual(v.begin(), v.end());
  IntVector coefficients(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const auto& row = b.vectors()[i];
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    if (residual[pivot] % row[pivot] != 0) return std::nullopt;
    coefficients[i] = residual[pivot] / row[pivot];
    if (coefficients[i] == 0) continue;
    for (std::size_t c = pivot; c < row.size(); ++c) residual[c] -= coefficients[i] * row[c];
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  return coefficients;
}

IntVector multiply(const IntMatrix& m, std::span<const Integer> x) {
  if (x.size() != m.cols()) throw InputError("multiply: dimension mismatch");
  IntVector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  return y;
}

IntVector combine(const LatticeBasis& b, std::span<const Integer> coefficients) {
  if (coefficients.size() != b.rank()) throw InputError("combine: coefficient count mismatch");
  IntVector v(b.ambient_dim());
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += coefficients[i] * b.vectors()[i][c];
  return v;
}

IntVector to_int_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

}  // namespace nilorb
