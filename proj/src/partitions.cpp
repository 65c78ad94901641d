#include "schurk/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "schurk/arith.hpp"

namespace schurk {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  for (int x : p_)
    if (x < 0) throw MathError("partition parts must be nonnegative");
  if (!std::is_sorted(p_.begin(), p_.end(), std::greater<int>()))
    throw MathError("partition parts must be weakly decreasing");
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

std::vector<int> Partition::padded(int len) const {
  if (len < length()) throw MathError("partition longer than pad length");
  std::vector<int> r = p_;
  r.resize(static_cast<std::size_t>(len), 0);
  return r;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
  os << ")";
  return os.str();
}

Partition conjugate(const Partition& l) {
  std::vector<int> c;
  int first = l[0];
  for (int j = 1; j <= first; ++j) {
    int cnt = 0;
    for (int x : l.parts())
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

std::vector<Partition> enumerate_bounded(int L, int M) {
  if (L < 0 || M < 0) throw MathError("enumerate_bounded: negative bound");
  std::vector<Partition> out;
  std::vector<int> cur;
  // parts listed in descending lexicographic order for each target size
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == L) return;
    for (int p = std::min(maxpart, remaining); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  for (int s = 0; s <= L * M; ++s) rec(s, M);
  return out;
}

bool fits_in(const Partition& mu, int L, int M) { return mu.length() <= L && mu[0] <= M; }

Partition rectangle_complement(const Partition& mu, int L, int M) {
  if (!fits_in(mu, L, M)) throw MathError("rectangle_complement: " + mu.str() + " not inside the rectangle");
  std::vector<int> r(static_cast<std::size_t>(L));
  for (int j = 1; j <= L; ++j) r[static_cast<std::size_t>(j - 1)] = M - mu[L - j];
  return Partition(std::move(r));
}

std::vector<Cell> hook_content_data(const Partition& l) {
  Partition c = conjugate(l);
  std::vector<Cell> out;
  for (int i = 1; i <= l.length(); ++i)
    for (int j = 1; j <= l[i - 1]; ++j)
      out.push_back({i, j, l[i - 1] - j + c[j - 1] - i + 1, j - i});
  return out;
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw MathError("bad partition entry '" + tok + "'");
    }
  }
  return Partition(std::move(parts));
}

}  // namespace schurk
