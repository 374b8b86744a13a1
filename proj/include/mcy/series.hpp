#pragma once

#include <vector>

#include "mcy/numbers.hpp"

namespace mcy {

// Truncated power series with exact rational coefficients; index = exponent.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Rat> c) : c_(std::move(c)) {}
  static Series one(size_t len);

  size_t length() const { return c_.size(); }
  const Rat& operator[](size_t i) const { return c_[i]; }
  Rat& operator[](size_t i) { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Series truncated(size_t len) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series& operator*=(const Rat& r);

  Series inverse() const;              // requires c_[0] != 0
  Series derivative() const;           // d/dx
  Series integral() const;             // antiderivative, constant 0
  Series exp() const;                  // requires c_[0] == 0
  Series log() const;                  // requires c_[0] == 1
  Series compose(const Series& inner) const;  // inner[0] must be 0
  Series reversion() const;            // requires c_[0]==0, c_[1]!=0

 private:
  std::vector<Rat> c_;
};

}  // namespace mcy
