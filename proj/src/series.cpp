#include "mcy/series.hpp"

#include <stdexcept>

namespace mcy {

Series Series::one(size_t len) {
  std::vector<Rat> c(len, Rat(0));
  if (len) c[0] = 1;
  return Series(std::move(c));
}

Series Series::truncated(size_t len) const {
  std::vector<Rat> c(c_.begin(), c_.begin() + std::min(len, c_.size()));
  c.resize(len, Rat(0));
  return Series(std::move(c));
}

Series operator+(const Series& a, const Series& b) {
  size_t n = std::min(a.length(), b.length());
  std::vector<Rat> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  size_t n = std::min(a.length(), b.length());
  std::vector<Rat> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
  return Series(std::move(c));
}

Series operator*(const Series& a, const Series& b) {
  size_t n = std::min(a.length(), b.length());
  std::vector<Rat> c(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(c));
}

Series& Series::operator*=(const Rat& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Series Series::inverse() const {
  if (c_.empty() || c_[0] == 0) throw std::invalid_argument("series not invertible");
  size_t n = c_.size();
  std::vector<Rat> inv(n, Rat(0));
  inv[0] = 1 / c_[0];
  for (size_t k = 1; k < n; ++k) {
    Rat s(0);
    for (size_t i = 1; i <= k; ++i) s += c_[i] * inv[k - i];
    inv[k] = -s / c_[0];
  }
  return Series(std::move(inv));
}

Series Series::derivative() const {
  if (c_.empty()) return *this;
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat((long)i) * c_[i];
  return Series(std::move(d));
}

Series Series::integral() const {
  std::vector<Rat> d(c_.size() + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / Rat((long)(i + 1));
  return Series(std::move(d));
}

Series Series::exp() const {
  if (!c_.empty() && c_[0] != 0) throw std::invalid_argument("exp needs zero constant term");
  size_t n = c_.size();
  std::vector<Rat> e(n, Rat(0));
  if (!n) return Series(e);
  e[0] = 1;
  // e' = c' e
  for (size_t k = 1; k < n; ++k) {
    Rat s(0);
    for (size_t i = 1; i <= k; ++i) s += Rat((long)i) * c_[i] * e[k - i];
    e[k] = s / Rat((long)k);
  }
  return Series(std::move(e));
}

Series Series::log() const {
  if (c_.empty() || c_[0] != 1) throw std::invalid_argument("log needs constant term 1");
  // log(f) = integral of f'/f
  Series d = derivative();
  Series q = d * inverse().truncated(d.length());
  Series l = q.integral();
  return l.truncated(c_.size());
}

Series Series::compose(const Series& inner) const {
  if (!inner.length() || inner[0] != 0)
    throw std::invalid_argument("composition needs inner constant term 0");
  size_t n = std::min(length(), inner.length());
  // Horner over powers of inner
  Series acc(std::vector<Rat>(n, Rat(0)));
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * inner.truncated(n);
    if (i < n) acc[0] += c_[i];
    // add c_[i]: constant coefficient only
  }
  return acc;
}

Series Series::reversion() const {
  if (length() < 2 || c_[0] != 0 || c_[1] == 0)
    throw std::invalid_argument("reversion needs f = c1 x + ... with c1 != 0");
  size_t n = length();
  // Newton iteration on g with f(g(x)) = x
  std::vector<Rat> g(n, Rat(0));
  g[1] = 1 / c_[1];
  for (size_t prec = 2; prec < n; prec *= 2) {
    size_t pn = std::min(2 * prec + 1, n);
    Series G(std::vector<Rat>(g.begin(), g.begin() + pn));
    Series f = truncated(pn);
    Series fg = f.compose(G);
    Series x(std::vector<Rat>(pn, Rat(0)));
    if (pn > 1) x[1] = 1;
    Series num = fg - x;
    Series fp = f.derivative().truncated(pn).compose(G);
    Series corr = num * fp.inverse();
    G = G - corr;
    for (size_t i = 0; i < pn; ++i) g[i] = G[i];
  }
  return Series(std::move(g));
}

}  // namespace mcy
