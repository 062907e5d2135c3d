#include "gm/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace gm {

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  Monomial m;
  for (const auto& [idx, exp] : terms) {
    if (exp == 0) continue;
    if (!m.terms_.empty() && m.terms_.back().first == idx) {
      m.terms_.back().second += exp;
    } else {
      m.terms_.emplace_back(idx, exp);
    }
    m.degree_ += exp;
  }
  return m;
}

Monomial Monomial::from_indices(std::initializer_list<uint32_t> indices) {
  std::vector<Term> terms;
  for (uint32_t i : indices) terms.emplace_back(i, 1);
  return from_terms(std::move(terms));
}

Monomial Monomial::from_indices(const std::vector<uint32_t>& indices) {
  std::vector<Term> terms;
  for (uint32_t i : indices) terms.emplace_back(i, 1);
  return from_terms(std::move(terms));
}

Monomial Monomial::from_dense(const std::vector<uint32_t>& exps) {
  Monomial m;
  for (uint32_t j = 0; j < exps.size(); ++j) {
    if (exps[j] > 0) {
      m.terms_.emplace_back(j + 1, exps[j]);
      m.degree_ += exps[j];
    }
  }
  return m;
}

uint32_t Monomial::exponent_of(uint32_t index) const {
  for (const auto& [idx, exp] : terms_) {
    if (idx == index) return exp;
    if (idx > index) break;
  }
  return 0;
}

bool Monomial::divides(const Monomial& m) const {
  auto it = m.terms_.begin();
  for (const auto& [idx, exp] : terms_) {
    while (it != m.terms_.end() && it->first < idx) ++it;
    if (it == m.terms_.end() || it->first != idx || it->second < exp)
      return false;
  }
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r;
  r.degree_ = degree_ + other.degree_;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      r.terms_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::divide_exact(const Monomial& d) const {
  assert(d.divides(*this));
  Monomial r;
  r.degree_ = degree_ - d.degree_;
  auto b = d.terms_.begin();
  for (const auto& [idx, exp] : terms_) {
    uint32_t sub = 0;
    if (b != d.terms_.end() && b->first == idx) {
      sub = b->second;
      ++b;
    }
    if (exp > sub) r.terms_.emplace_back(idx, exp - sub);
  }
  return r;
}

std::vector<uint32_t> Monomial::to_dense(uint32_t n_vars) const {
  std::vector<uint32_t> out(n_vars, 0);
  for (const auto& [idx, exp] : terms_) {
    assert(idx >= 1 && idx <= n_vars);
    out[idx - 1] = exp;
  }
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->first != ib->first) {
      // The one holding the smaller index has a positive exponent where the
      // other has zero, so it is lex-larger.
      return ia->first < ib->first ? 1 : -1;
    }
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

std::string Monomial::str() const {
  if (terms_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, exp] : terms_) {
    if (!first) os << "*";
    os << "x" << idx;
    if (exp > 1) os << "^" << exp;
    first = false;
  }
  return os.str();
}

}  // namespace gm
