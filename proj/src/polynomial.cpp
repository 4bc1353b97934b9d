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

#include "shatter/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "shatter/errors.hpp"

namespace shatter {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {a.once | b.once, a.twice | b.twice};
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!a.divides(b)) fail(ErrorCode::kPreconditionViolated, "monomial quotient needs a | b");
  // Per variable: (2,0)->2, (2,1)->1, (2,2)->0, (1,0)->1, (1,1)->0.
  return {(b.once & ~a.once) | (b.twice & a.once & ~a.twice), b.twice & ~a.once};
}

Monomial multiply(const Monomial& a, const Monomial& b, Mask fold) {
  const Mask overflow = (a.twice & b.once) | (b.twice & a.once);
  if ((overflow & ~fold) != 0) {
    fail(ErrorCode::kExponentOverflow,
         "exponent above 2 in " + to_string(a) + " * " + to_string(b));
  }
  // x^3 reduces to x^2 modulo x^2 - x.
  return {a.once | b.once, a.twice | b.twice | (a.once & b.once)};
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i : elements_of(m.once)) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (m.exponent(i) == 2) out += "^2";
  }
  return out;
}

Polynomial Polynomial::constant(Rational c) { return term(Monomial{}, c); }

Polynomial Polynomial::variable(int i) { return term(Monomial::square_free(element_bit(i)), 1); }

Polynomial Polynomial::term(const Monomial& m, Rational c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Mask Polynomial::variables() const {
  Mask vars = 0;
  for (const auto& [m, c] : terms_) vars |= m.once;
  return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.numerator() == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c.numerator() == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c, Mask fold) const {
  Polynomial out;
  for (const auto& [mono, coeff] : terms_) out.add_term(multiply(mono, m, fold), coeff * c);
  return out;
}

Polynomial Polynomial::multiplied(const Polynomial& other, Mask fold) const {
  Polynomial out;
  for (const auto& [m, c] : other.terms_) out += times_term(m, c, fold);
  return out;
}

Rational Polynomial::evaluate(Mask point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    if (is_subset(m.once, point)) sum += c;
  }
  return sum;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  int n = 1;
  const Mask vars = p.variables();
  if (vars != 0) n = 32 - std::countl_zero(vars);
  const LexOrder ord = LexOrder::identity(n);
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.key(a.first) > ord.key(b.first); });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != Rational(1)) out += to_string(mag) + '*';
      out += to_string(m);
    }
  }
  return out;
}

LexOrder::LexOrder(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = static_cast<int>(perm_.size());
  if (n > kMaxGroundSize) fail(ErrorCode::kGroundSetTooLarge, "lex order on too many variables");
  Mask seen = 0;
  for (int v : perm_) {
    if (v < 1 || v > n || (seen & element_bit(v)) != 0) {
      fail(ErrorCode::kParameterOutOfRange, "lex order is not a permutation of [" + std::to_string(n) + "]");
    }
    seen |= element_bit(v);
  }
}

LexOrder LexOrder::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  return LexOrder(std::move(perm));
}

std::uint64_t LexOrder::key(const Monomial& m) const {
  const int n = size();
  if ((m.once & ~universe(n)) != 0) {
    fail(ErrorCode::kParameterOutOfRange, "monomial " + to_string(m) + " uses variables outside the order");
  }
  std::uint64_t k = 0;
  for (int v : perm_) k = (k << 2) | static_cast<std::uint64_t>(m.exponent(v));
  return k;
}

std::string to_string(const LexOrder& ord) {
  std::string out;
  for (int v : ord.permutation()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace shatter
