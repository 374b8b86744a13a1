#include "mcy/operator.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mcy {

namespace {
int sgn_int(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
}  // namespace

void ThetaOperator::assign(std::vector<std::vector<Int>> c) {
  size_t w = 0;
  for (auto& row : c) w = std::max(w, row.size());
  for (auto& row : c) row.resize(w, Int(0));
  c_ = std::move(c);
  normalize();
}

void ThetaOperator::normalize() {
  // trim trailing zero x-rows and theta-columns
  while (!c_.empty()) {
    bool zero = true;
    for (auto& v : c_.back())
      if (v != 0) zero = false;
    if (!zero) break;
    c_.pop_back();
  }
  size_t w = c_.empty() ? 0 : c_[0].size();
  while (w > 0) {
    bool zero = true;
    for (auto& row : c_)
      if (row[w - 1] != 0) zero = false;
    if (!zero) break;
    --w;
  }
  for (auto& row : c_) row.resize(w);
}

ThetaOperator ThetaOperator::canonical() const {
  auto c = c_;
  Int g = 0;
  for (auto& row : c)
    for (auto& v : row) g = gcd(g, v);
  if (g != 0 && g != 1)
    for (auto& row : c)
      for (auto& v : row) v /= g;
  int sgn = 0;
  for (auto& row : c) {
    for (auto it = row.rbegin(); it != row.rend(); ++it)
      if (*it != 0) {
        sgn = sgn_int(*it);
        break;
      }
    if (sgn) break;
  }
  if (sgn < 0)
    for (auto& row : c)
      for (auto& v : row) v = -v;
  return ThetaOperator(std::move(c));
}

Rat ThetaOperator::theta_poly_at(int i, const Rat& s) const {
  Rat acc(0);
  if (i < 0 || i >= (int)c_.size()) return acc;
  for (int j = order(); j >= 0; --j) acc = acc * s + Rat(c_[i][j]);
  return acc;
}

Series ThetaOperator::apply(const Series& s) const {
  size_t n = s.length();
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t m = 0; m + i < n; ++m) {
      if (s[m] == 0) continue;
      // theta^j contributes m^j
      Rat v = theta_poly_at((int)i, Rat((long)m)) * s[m];
      out[m + i] += v;
    }
  return Series(std::move(out));
}

ThetaOperator ThetaOperator::operator+(const ThetaOperator& o) const {
  std::vector<std::vector<Int>> c(std::max(c_.size(), o.c_.size()));
  size_t w = std::max(c_.empty() ? 0 : c_[0].size(), o.c_.empty() ? 0 : o.c_[0].size());
  for (auto& row : c) row.assign(w, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) c[i][j] += c_[i][j];
  for (size_t i = 0; i < o.c_.size(); ++i)
    for (size_t j = 0; j < o.c_[i].size(); ++j) c[i][j] += o.c_[i][j];
  return ThetaOperator(std::move(c));
}

ThetaOperator ThetaOperator::operator*(const ThetaOperator& o) const {
  // (x^a th^b) (x^i th^j) = x^{a+i} (th+i)^b th^j
  int D = degree() + o.degree();
  int R = order() + o.order();
  std::vector<std::vector<Int>> c(D + 1, std::vector<Int>(R + 1, Int(0)));
  for (int a = 0; a <= degree(); ++a)
    for (int b = 0; b <= order(); ++b) {
      if (c_[a][b] == 0) continue;
      for (int i = 0; i <= o.degree(); ++i)
        for (int j = 0; j <= o.order(); ++j) {
          if (o.c_[i][j] == 0) continue;
          Int base = c_[a][b] * o.c_[i][j];
          // expand (th + i)^b = sum_k C(b,k) i^{b-k} th^k
          for (int k = 0; k <= b; ++k) {
            Int term = base * binomial(b, k) * pow_int(Int(i), (unsigned long)(b - k));
            c[a + i][k + j] += term;
          }
        }
    }
  return ThetaOperator(std::move(c));
}

ThetaOperator ThetaOperator::scaled(const Int& k) const {
  auto c = c_;
  for (auto& row : c)
    for (auto& v : row) v *= k;
  return ThetaOperator(std::move(c));
}

ThetaOperator ThetaOperator::invert_and_conjugate(const Rat& cc) const {
  if (cc == 0) throw std::invalid_argument("c must be nonzero");
  int D = degree(), R = order();
  // x^i th^j -> c^i z^{D-i} (-th)^j, then th -> th + 1
  std::vector<std::vector<Rat>> t(D + 1, std::vector<Rat>(R + 1, Rat(0)));
  for (int i = 0; i <= D; ++i) {
    Rat ci(1);
    for (int k = 0; k < i; ++k) ci *= cc;
    for (int j = 0; j <= R; ++j) {
      if (c_[i][j] == 0) continue;
      Rat v = Rat(c_[i][j]) * ci;
      if (j % 2) v = -v;
      t[D - i][j] += v;
    }
  }
  // theta -> theta + 1: th^j = sum_k C(j,k) (shift) ... (th+1)^j expand
  std::vector<std::vector<Rat>> u(D + 1, std::vector<Rat>(R + 1, Rat(0)));
  for (int i = 0; i <= D; ++i)
    for (int j = 0; j <= R; ++j) {
      if (t[i][j] == 0) continue;
      for (int k = 0; k <= j; ++k) u[i][k] += t[i][j] * Rat(binomial(j, k));
    }
  // clear denominators
  Int den = 1;
  for (auto& row : u)
    for (auto& v : row) den = lcm(den, Int(v.get_den()));
  std::vector<std::vector<Int>> c(D + 1, std::vector<Int>(R + 1));
  for (int i = 0; i <= D; ++i)
    for (int j = 0; j <= R; ++j) {
      Rat v = u[i][j] * Rat(den);
      v.canonicalize();
      c[i][j] = Int(v.get_num());
    }
  return ThetaOperator(std::move(c)).canonical();
}

ThetaOperator ThetaOperator::rescale(const Rat& cc) const {
  int D = degree(), R = order();
  std::vector<std::vector<Rat>> t(D + 1, std::vector<Rat>(R + 1, Rat(0)));
  Rat ci(1);
  for (int i = 0; i <= D; ++i) {
    for (int j = 0; j <= R; ++j) t[i][j] = Rat(c_[i][j]) * ci;
    ci *= cc;
  }
  Int den = 1;
  for (auto& row : t)
    for (auto& v : row) den = lcm(den, Int(v.get_den()));
  std::vector<std::vector<Int>> c(D + 1, std::vector<Int>(R + 1));
  for (int i = 0; i <= D; ++i)
    for (int j = 0; j <= R; ++j) {
      Rat v = t[i][j] * Rat(den);
      v.canonicalize();
      c[i][j] = Int(v.get_num());
    }
  return ThetaOperator(std::move(c)).canonical();
}

std::string ThetaOperator::to_json() const {
  nlohmann::json j;
  j["var"] = "x";
  nlohmann::json rows = nlohmann::json::array();
  for (auto& row : c_) {
    nlohmann::json r = nlohmann::json::array();
    for (auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  j["coeffs"] = rows;
  return j.dump(2);
}

ThetaOperator ThetaOperator::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::vector<Int>> c;
  for (auto& row : j.at("coeffs")) {
    std::vector<Int> r;
    for (auto& v : row) r.emplace_back(v.get<std::string>());
    c.push_back(std::move(r));
  }
  return ThetaOperator(std::move(c));
}

ThetaOperator ThetaOperator::theta_power(int j) {
  std::vector<std::vector<Int>> c(1, std::vector<Int>(j + 1, Int(0)));
  c[0][j] = 1;
  return ThetaOperator(std::move(c));
}

ThetaOperator ThetaOperator::affine(const Int& a, const Int& b) {
  std::vector<std::vector<Int>> c(1, std::vector<Int>(2));
  c[0][0] = b;
  c[0][1] = a;
  return ThetaOperator(std::move(c));
}

ThetaOperator ThetaOperator::x_power(int i) {
  std::vector<std::vector<Int>> c(i + 1, std::vector<Int>(1, Int(0)));
  c[i][0] = 1;
  return ThetaOperator(std::move(c));
}

std::vector<std::vector<Rat>> rational_nullspace(const std::vector<std::vector<Rat>>& rows,
                                                 size_t ncols) {
  std::vector<std::vector<Rat>> M = rows;
  size_t m = M.size();
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < m; ++col) {
    size_t sel = m;
    for (size_t i = r; i < m; ++i)
      if (M[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == m) continue;
    std::swap(M[r], M[sel]);
    Rat pv = M[r][col];
    for (auto& v : M[r]) v /= pv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (size_t cgg = col; cgg < ncols; ++cgg) M[i][cgg] -= f * M[r][cgg];
    }
    piv.push_back(col);
    ++r;
  }
  std::vector<bool> is_piv(ncols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t fc = 0; fc < ncols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[fc] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -M[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

FitResult fit_operator(const Series& s, int max_order, int max_degree) {
  int N = (int)s.length() - 1;
  for (int R = 1; R <= max_order; ++R) {
    for (int D = 0; D <= max_degree; ++D) {
      int unknowns = (D + 1) * (R + 1);
      if (unknowns + 8 > N + 1) continue;  // need margin beyond the ansatz
      std::vector<std::vector<Rat>> rows;
      for (int n = 0; n <= N; ++n) {
        std::vector<Rat> row;
        row.reserve(unknowns);
        for (int i = 0; i <= D; ++i)
          for (int j = 0; j <= R; ++j) {
            int mm = n - i;
            if (mm < 0 || s[mm] == 0)
              row.emplace_back(0);
            else
              row.push_back(Rat(ipow(mm, j)) * s[mm]);
          }
        rows.push_back(std::move(row));
      }
      auto ker = rational_nullspace(rows, unknowns);
      if (ker.size() == 1) {
        Int den = 1;
        for (auto& v : ker[0]) den = lcm(den, Int(v.get_den()));
        std::vector<std::vector<Int>> c(D + 1, std::vector<Int>(R + 1));
        for (int i = 0; i <= D; ++i)
          for (int j = 0; j <= R; ++j) {
            Rat v = ker[0][i * (R + 1) + j] * Rat(den);
            v.canonicalize();
            c[i][j] = Int(v.get_num());
          }
        FitResult fr;
        fr.op = ThetaOperator(std::move(c)).canonical();
        fr.order = fr.op.order();
        fr.degree = fr.op.degree();
        // the minimal operator may have smaller formal order than R if the
        // top column vanished; keep searching in that case is unnecessary:
        // the nullspace was 1-dimensional at this grid.
        return fr;
      }
      if (ker.size() > 1)
        throw std::runtime_error(
            "annihilator not unique at grid order " + std::to_string(R) + ", degree " +
            std::to_string(D) + "; more series terms needed");
    }
  }
  throw std::runtime_error("no annihilating operator within the search grid");
}

}  // namespace mcy
