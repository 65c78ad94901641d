#include "schurk/toeplitz.hpp"

#include <algorithm>

#include "schurk/special.hpp"

namespace schurk {

FHSymbol::FHSymbol(int g, int d) : gamma(g), delta(d) {
  if (g < 0 || d < 0) throw MathError("FH symbol: gamma, delta must be nonnegative integers");
}

BigRat FHSymbol::coeff(int k) const {
  if (k < -delta || k > gamma) return 0;
  BigRat b(binomial(gamma + delta, delta + k));
  return k % 2 ? BigRat(-b) : b;
}

BigRat fh_coeff(int g, int d, int k) { return FHSymbol(g, d).coeff(k); }

Matrix<BigRat> toeplitz_matrix(int g, int d, int M) {
  FHSymbol s(g, d);
  if (M < 0) throw MathError("toeplitz: negative size");
  auto t = make_matrix<BigRat>(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j)
    for (int k = 0; k < M; ++k) t[j][k] = s.coeff(j - k);
  return t;
}

Matrix<BigRat> toeplitz_inverse_exact(int g, int d, int M) { return inverse(toeplitz_matrix(g, d, M)); }

namespace {

// C(a+m-1, m), equal to 1 at m = 0 for every a
BigInt multichoose(int a, int m) { return m == 0 ? BigInt(1) : binomial(a + m - 1, m); }

}  // namespace

Matrix<BigRat> toeplitz_inverse_closed(int g, int d, int M) {
  FHSymbol s(g, d);
  if (M < 1) throw MathError("toeplitz: size must be positive");
  auto r = make_matrix<BigRat>(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
  for (int j = 1; j <= M; ++j)
    for (int k = 1; k <= M; ++k) {
      BigRat sum = 0;
      for (int t = std::max(j, k); t <= M; ++t)
        sum += BigRat(factorial(t - 1), factorial(g + d + t - 1)) * BigRat(multichoose(d, t - j)) *
               BigRat(multichoose(g, t - k));
      BigRat pre(factorial(g + j - 1) * factorial(d + k - 1), factorial(j - 1) * factorial(k - 1));
      r[j - 1][k - 1] = pre * sum;
    }
  return r;
}

namespace {

// (M_z)_{jj} = Gamma(z+j)/(Gamma(j) Gamma(z+1)) = C(z+j-1, j-1)
Matrix<BigRat> diag_m(int z, int P) {
  auto m = make_matrix<BigRat>(static_cast<std::size_t>(P), static_cast<std::size_t>(P));
  for (int j = 1; j <= P; ++j) m[j - 1][j - 1] = BigRat(binomial(z + j - 1, j - 1));
  return m;
}

Matrix<BigRat> top_left(const Matrix<BigRat>& a, int M) {
  Matrix<BigRat> r;
  for (int i = 0; i < M; ++i) r.emplace_back(a[i].begin(), a[i].begin() + M);
  return r;
}

}  // namespace

DRBlocks duduchava_roch_blocks(int g, int d, int M) {
  (void)FHSymbol(g, d);
  // semi-infinite identity; pad past the band widths before truncating
  const int P = M + g + d + 2;
  auto tg = toeplitz_matrix(g, 0, P), td = toeplitz_matrix(0, d, P), tgd = toeplitz_matrix(g, d, P);
  auto lhs = matmul(matmul(tg, diag_m(g + d, P)), td);
  auto rhs = matmul(matmul(diag_m(d, P), tgd), diag_m(g, P));
  BigRat c(factorial(g) * factorial(d), factorial(g + d));
  for (auto& row : rhs)
    for (auto& v : row) v *= c;
  DRBlocks b{top_left(lhs, M), top_left(rhs, M), false};
  b.equal = b.lhs == b.rhs;
  return b;
}

bool duduchava_roch_check(int g, int d, int M) { return duduchava_roch_blocks(g, d, M).equal; }

BigRat circular_elementary_avg(int g, int d, int M, int a, int b) {
  FHSymbol s(g, d);
  if (a < 0 || b < 0 || a > M || b > M) throw MathError("circular average: index out of range");
  if (M == 0) return 1;
  auto m = make_matrix<BigRat>(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
  for (int r = 0; r < M; ++r)
    for (int c = 0; c < M; ++c) {
      int lr = r < a ? 1 : 0, mc = c < b ? 1 : 0;
      m[r][c] = s.coeff((mc + M - c) - (lr + M - r));
    }
  return det(std::move(m));
}

Matrix<BigRat> toeplitz_inverse_circular(int g, int d, int N) {
  if (N < 1) throw MathError("toeplitz: size must be positive");
  BigRat zn = det(toeplitz_matrix(g, d, N));
  if (zn == 0) throw MathError("toeplitz: singular matrix");
  auto r = make_matrix<BigRat>(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      BigRat v = circular_elementary_avg(g, d, N - 1, k, j) / zn;
      r[j][k] = (j + k) % 2 ? BigRat(-v) : v;
    }
  return r;
}

}  // namespace schurk
