// Copyright 2026 The Shatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHATTER_POLYNOMIAL_HPP
#define SHATTER_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "shatter/set_system.hpp"

namespace shatter {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Exponent vector over x1..x24 with every exponent in {0,1,2}. Variable x_i
// is in `once` when its exponent is at least 1 and also in `twice` when it
// is 2, so square-free monomials are exactly subsets of [n].
struct Monomial {
  Mask once = 0;
  Mask twice = 0;

  static Monomial square_free(Mask vars) { return {vars, 0}; }
  static Monomial square(int i) { return {element_bit(i), element_bit(i)}; }

  int exponent(int i) const {
    return ((once >> (i - 1)) & 1U) + ((twice >> (i - 1)) & 1U);
  }
  int degree() const { return popcount(once) + popcount(twice); }
  bool is_one() const { return once == 0; }
  bool is_square_free() const { return twice == 0; }
  bool divides(const Monomial& other) const {
    return is_subset(once, other.once) && is_subset(twice, other.twice);
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
// b / a; requires a | b.
Monomial quotient(const Monomial& b, const Monomial& a);
// a * b. Variables whose exponent would exceed 2 are reduced modulo
// x_i^2 - x_i when listed in `fold`; otherwise ExponentOverflow is thrown.
Monomial multiply(const Monomial& a, const Monomial& b, Mask fold = 0);

// "x1*x2^2", or "1" for the unit monomial.
std::string to_string(const Monomial& m);

// Exact sparse polynomial with rational coefficients. Zero coefficients are
// never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  static Polynomial constant(Rational c);
  static Polynomial variable(int i);
  static Polynomial term(const Monomial& m, Rational c);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  // Union of the variables occurring in any term.
  Mask variables() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiplied(b); }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

  Polynomial scaled(const Rational& c) const;
  Polynomial multiplied(const Polynomial& other, Mask fold = 0) const;
  Polynomial times_term(const Monomial& m, const Rational& c, Mask fold = 0) const;

  // Value at the 0/1 point whose coordinate i is 1 iff bit i-1 of `point` is set.
  Rational evaluate(Mask point) const;

  void add_term(const Monomial& m, const Rational& c);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

 private:
  Terms terms_;
};

// Terms in decreasing order under the identity lex order, e.g.
// "x1*x2 - x1 - x2 + 1". The zero polynomial prints as "0".
std::string to_string(const Polynomial& p);

// Lexicographic term order on x1..xn given by a permutation of [n], most
// significant variable first. The identity permutation is the usual lex
// order with x1 > x2 > ... > xn.
class LexOrder {
 public:
  // Throws ParameterOutOfRange unless `perm` is a permutation of [n].
  explicit LexOrder(std::vector<int> perm);
  static LexOrder identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& permutation() const { return perm_; }

  // Order-preserving integer image of a monomial over x1..xn.
  std::uint64_t key(const Monomial& m) const;
  bool less(const Monomial& a, const Monomial& b) const { return key(a) < key(b); }

  friend bool operator==(const LexOrder&, const LexOrder&) = default;

 private:
  std::vector<int> perm_;
};

std::string to_string(const LexOrder& ord);

}  // namespace shatter

#endif  // SHATTER_POLYNOMIAL_HPP
