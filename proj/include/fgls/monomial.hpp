#pragma once

/// @file monomial.hpp
/// @brief Sparse monomials in the geometric variables, with weighted degree.
///
/// A monomial is a product of variable powers, stored as a vector of
/// (VarId, exponent) pairs sorted in the canonical variable order.  The empty
/// monomial is 1.  Monomials are ordered first by weighted degree, then within
/// a degree by the canonical "earlier variable, higher power first" rule, so
/// for example in degree 2:  x1^2 < x1*x2 < x1*y1 < x2^2 < ...  This total
/// order is what makes every printed series deterministic.

#include "fgls/variables.hpp"

#include <algorithm>
#include <compare>
#include <vector>

namespace fgls {

class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;  ///< the monomial 1

  static Monomial unit() { return Monomial(); }

  static Monomial variable(VarId v, int exp = 1) {
    detail::require(exp >= 1, "monomial exponent must be >= 1");
    Monomial m;
    m.factors_.emplace_back(v, exp);
    m.degree_ = exp * VarTable::instance().weight(v);
    return m;
  }

  /// Build from arbitrary (possibly unsorted, repeated) factors.
  static Monomial from_factors(std::vector<Factor> fs) {
    const VarTable& vt = VarTable::instance();
    std::sort(fs.begin(), fs.end(), [&](const Factor& a, const Factor& b) {
      return vt.less(a.first, b.first);
    });
    Monomial m;
    for (const Factor& f : fs) {
      detail::require(f.second >= 1, "monomial exponent must be >= 1");
      if (!m.factors_.empty() && m.factors_.back().first == f.first) {
        m.factors_.back().second += f.second;
      } else {
        m.factors_.emplace_back(f);
      }
      m.degree_ += f.second * vt.weight(f.first);
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int degree() const { return degree_; }

  int exponent(VarId v) const {
    for (const Factor& f : factors_)
      if (f.first == v) return f.second;
    return 0;
  }

  bool contains(VarId v) const { return exponent(v) != 0; }

  Monomial operator*(const Monomial& o) const {
    const VarTable& vt = VarTable::instance();
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
      if (factors_[i].first == o.factors_[j].first) {
        r.factors_.emplace_back(factors_[i].first,
                                factors_[i].second + o.factors_[j].second);
        ++i, ++j;
      } else if (vt.less(factors_[i].first, o.factors_[j].first)) {
        r.factors_.push_back(factors_[i++]);
      } else {
        r.factors_.push_back(o.factors_[j++]);
      }
    }
    for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
    for (; j < o.factors_.size(); ++j) r.factors_.push_back(o.factors_[j]);
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  /// This monomial with the power of v reduced by k (v must divide it k times).
  Monomial divided_by(VarId v, int k = 1) const {
    Monomial r;
    bool found = false;
    for (const Factor& f : factors_) {
      if (f.first == v) {
        found = true;
        detail::require(f.second >= k, "monomial not divisible");
        if (f.second > k) r.factors_.emplace_back(f.first, f.second - k);
      } else {
        r.factors_.push_back(f);
      }
    }
    detail::require(found || k == 0, "monomial not divisible");
    r.degree_ = degree_ - k * VarTable::instance().weight(v);
    return r;
  }

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Total order: weighted degree ascending, then within a degree the monomial
  /// whose earliest differing variable has the HIGHER exponent comes first.
  std::strong_ordering cmp(const Monomial& o) const {
    if (degree_ != o.degree_)
      return degree_ <=> o.degree_;
    const VarTable& vt = VarTable::instance();
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
      if (factors_[i].first == o.factors_[j].first) {
        if (factors_[i].second != o.factors_[j].second)
          return o.factors_[j].second <=> factors_[i].second;
        ++i, ++j;
      } else if (vt.less(factors_[i].first, o.factors_[j].first)) {
        return std::strong_ordering::less;   // we have a positive power earlier
      } else {
        return std::strong_ordering::greater;
      }
    }
    if (i < factors_.size()) return std::strong_ordering::less;
    if (j < o.factors_.size()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.cmp(b) < 0;
  }
};

}  // namespace fgls
