#include "schurk/symfun.hpp"

namespace schurk {

BigRat schur_principal(const Partition& l, int M) {
  if (l.length() > M) return 0;
  BigRat r = 1;
  for (const auto& c : hook_content_data(l)) r = r * (M + c.content) / c.hook;
  return r;
}

QRat qdim(const Partition& mu, int M) {
  if (mu.length() > M) return QRat(0);
  QRat num(1), den(1);
  for (int j = 1; j <= M; ++j)
    for (int k = j + 1; k <= M; ++k) {
      num *= qnum_symmetric(mu[j - 1] - j - mu[k - 1] + k);
      den *= qnum_symmetric(k - j);
    }
  return num / den;
}

}  // namespace schurk
