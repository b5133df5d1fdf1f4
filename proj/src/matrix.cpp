#include "ldp/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ldp {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix a = m;
  std::vector<Integer> minors;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // After the previous steps a(k,k) is the (k+1)-th leading minor.
    minors.push_back(a(k, k));
    if (a(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return minors;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw Error(ErrorKind::InvalidArgument, "solve: shape mismatch");
  RatMatrix a = m;
  std::vector<Rational> b = rhs;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorKind::InvalidArgument, "solve: singular matrix");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      std::swap(b[k], b[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      b[i] -= factor * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
    x[k] = acc / a(k, k);
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n, Rational(0));
    e[c] = 1;
    auto col = solve(m, e);
    for (std::size_t r = 0; r < n; ++r) out(r, c) = col[r];
  }
  return out;
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  Integer det = determinant(m);
  if (det == 0) throw Error(ErrorKind::InvalidArgument, "adjugate: singular matrix");
  RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Rational v = inv(r, c) * det;
      out(r, c) = numerator(v);
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
}

void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
  IntMatrix& d = s.d;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the nonzero entry of smallest absolute value in the remaining block.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (d(r, c) != 0 && (!found || abs(d(r, c)) < abs(d(pr, pc)))) {
          found = true;
          pr = r;
          pc = c;
        }
    if (!found) break;
    swap_rows(d, t, pr);
    swap_rows(s.u, t, pr);
    swap_cols(d, t, pc);
    swap_cols(s.v, t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        Integer q = d(r, t) / d(t, t);
        add_row(d, r, t, q);
        add_row(s.u, r, t, q);
        if (d(r, t) != 0) {
          swap_rows(d, t, r);
          swap_rows(s.u, t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        Integer q = d(t, c) / d(t, t);
        add_col(d, c, t, q);
        add_col(s.v, c, t, q);
        if (d(t, c) != 0) {
          swap_cols(d, t, c);
          swap_cols(s.v, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (std::size_t r = t + 1; r < rows && clean; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d(r, c) % d(t, t) != 0) {
            add_row(d, t, r, Integer(-1));
            add_row(s.u, t, r, Integer(-1));
            clean = false;
            break;
          }
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) s.u(t, c) = -s.u(t, c);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

}  // namespace ldp
