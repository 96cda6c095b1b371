#include "taumatch/exactlinalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace taumatch {

Scalar parse_scalar(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  const auto slash = cleaned.find('/');
  std::string num = cleaned.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : cleaned.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Scalar sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

Matrix Matrix::column_at(std::size_t c) const { return select_columns({c}); }

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
  if (r + block.rows() > rows_ || c + block.cols() > cols_)
    throw std::out_of_range("block does not fit");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const {
  if (r + rows > rows_ || c + cols > cols_) throw std::out_of_range("block out of range");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(r + i, c + j);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("shape mismatch in *");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    m.set_block(0, c, b);
    c += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    m.set_block(r, 0, b);
    r += b.rows();
  }
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix power(const Matrix& m, std::size_t exponent) {
  if (!m.is_square()) throw std::invalid_argument("power of a non-square matrix");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

RowEchelon row_reduce(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const Scalar inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::size_t> kept(row);
  for (std::size_t i = 0; i < row; ++i) kept[i] = i;
  return {a.select_rows(kept), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], k) = -ech.reduced(r, free_cols[k]);
  }
  return basis;
}

Matrix column_space_basis(const Matrix& m) { return m.select_columns(row_reduce(m).pivots); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (rhs.rows() != m.rows()) throw std::invalid_argument("solve: rhs row count differs");
  const Matrix augmented = hstack({m, rhs}, m.rows());
  const RowEchelon ech = row_reduce(augmented);
  Matrix x(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const std::size_t p = ech.pivots[r];
    if (p >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(p, j) = ech.reduced(r, m.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix aux = Matrix::zero(n, n);  // M_0 = 0
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux + id * coeffs[n - k + 1];
    const Matrix am = m * aux;
    coeffs[n - k] = -am.trace() / Scalar(static_cast<long>(k));
  }
  return coeffs;
}

namespace {

Scalar evaluate(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Prime factorization of |n| by trial division; nullopt when the cofactor
// left after the bound is composite.
std::optional<std::map<mpz_class, unsigned>> factor(mpz_class n) {
  constexpr unsigned long kTrialBound = 1000000;
  std::map<mpz_class, unsigned> primes;
  n = abs(n);
  for (unsigned long p = 2; p <= kTrialBound && mpz_class(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++primes[mpz_class(p)];
      n /= p;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    ++primes[n];
  }
  return primes;
}

std::vector<mpz_class> divisors(const std::map<mpz_class, unsigned>& primes) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coefficients) {
  std::vector<Scalar> coeffs = coefficients;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::vector<Scalar> roots;
  if (coeffs.size() <= 1) return roots;
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (coeffs.size() <= 1) return roots;
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  const mpz_class constant = coeffs.front().get_num() * (lcm_den / coeffs.front().get_den());
  const mpz_class leading = coeffs.back().get_num() * (lcm_den / coeffs.back().get_den());
  const auto pf = factor(constant);
  const auto qf = factor(leading);
  if (!pf || !qf) return roots;
  const auto ps = divisors(*pf);
  const auto qs = divisors(*qf);
  std::vector<Scalar> found;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        Scalar candidate(p * sign, q);
        candidate.canonicalize();
        if (std::find(found.begin(), found.end(), candidate) != found.end()) continue;
        if (evaluate(coeffs, candidate) == 0) found.push_back(candidate);
      }
  std::sort(found.begin(), found.end());
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("nilpotency of a non-square matrix");
  return m.rows() == 0 || power(m, m.rows()).is_zero();
}

}  // namespace taumatch
