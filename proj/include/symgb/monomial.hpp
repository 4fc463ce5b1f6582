#ifndef SYMGB_MONOMIAL_HPP
#define SYMGB_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symgb
{

using Index = std::uint32_t;
using Exponent = std::uint32_t;

struct VarPower
{
  Index index;
  Exponent exponent;

  friend bool operator==(VarPower const &, VarPower const &) = default;
};

/// A monomial x_{i1}^{e1} ... x_{ik}^{ek} over the variables x1, x2, ...
///
/// Stored sparsely as (index, exponent) pairs sorted by ascending index with
/// no zero exponents, so the constant monomial 1 is the empty sequence.
class Monomial
{
public:
  Monomial() = default;

  /// Pairs may come in any order; repeated indices multiply and zero
  /// exponents are dropped. Index 0 is rejected.
  Monomial(std::initializer_list<VarPower> powers) : Monomial(std::vector<VarPower>(powers)) {}

  explicit Monomial(std::vector<VarPower> powers) : powers_(std::move(powers))
  {
    for (auto const &p : powers_)
      if (p.index == 0)
        throw std::invalid_argument("variable indices start at 1");
    std::sort(powers_.begin(), powers_.end(),
              [](VarPower const &a, VarPower const &b) { return a.index < b.index; });
    std::vector<VarPower> merged;
    merged.reserve(powers_.size());
    for (auto const &p : powers_) {
      if (!merged.empty() && merged.back().index == p.index)
        merged.back().exponent += p.exponent;
      else
        merged.push_back(p);
    }
    std::erase_if(merged, [](VarPower const &p) { return p.exponent == 0; });
    powers_ = std::move(merged);
  }

  static Monomial variable(Index i, Exponent e = 1) { return Monomial({VarPower{i, e}}); }

  /// Dense exponent vector, entry k is the exponent of x_{k+1}.
  static Monomial from_dense(std::span<Exponent const> exponents)
  {
    Monomial m;
    for (std::size_t k = 0; k < exponents.size(); ++k)
      if (exponents[k] != 0)
        m.powers_.push_back({static_cast<Index>(k + 1), exponents[k]});
    return m;
  }
  static Monomial from_dense(std::initializer_list<Exponent> exponents)
  {
    return from_dense(std::span<Exponent const>(exponents.begin(), exponents.size()));
  }

  std::span<VarPower const> powers() const noexcept { return powers_; }
  bool is_one() const noexcept { return powers_.empty(); }
  std::size_t support_size() const noexcept { return powers_.size(); }

  Exponent exponent(Index i) const noexcept
  {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), i,
                               [](VarPower const &p, Index k) { return p.index < k; });
    return (it != powers_.end() && it->index == i) ? it->exponent : 0;
  }

  Index max_index() const noexcept { return powers_.empty() ? 0 : powers_.back().index; }

  std::uint64_t total_degree() const noexcept
  {
    std::uint64_t d = 0;
    for (auto const &p : powers_)
      d += p.exponent;
    return d;
  }

  std::vector<Index> support() const
  {
    std::vector<Index> s;
    s.reserve(powers_.size());
    for (auto const &p : powers_)
      s.push_back(p.index);
    return s;
  }

  /// Exponents of x1..x_length; indices past `length` are dropped.
  std::vector<Exponent> dense(Index length) const
  {
    std::vector<Exponent> d(length, 0);
    for (auto const &p : powers_)
      if (p.index <= length)
        d[p.index - 1] = p.exponent;
    return d;
  }

  friend Monomial operator*(Monomial const &a, Monomial const &b)
  {
    Monomial r;
    r.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
      if (i->index < j->index)
        r.powers_.push_back(*i++);
      else if (j->index < i->index)
        r.powers_.push_back(*j++);
      else {
        r.powers_.push_back({i->index, i->exponent + j->exponent});
        ++i;
        ++j;
      }
    }
    r.powers_.insert(r.powers_.end(), i, a.powers_.end());
    r.powers_.insert(r.powers_.end(), j, b.powers_.end());
    return r;
  }

  /// True iff this monomial divides `other`.
  bool divides(Monomial const &other) const noexcept
  {
    if (powers_.size() > other.powers_.size())
      return false;
    auto j = other.powers_.begin();
    for (auto const &p : powers_) {
      while (j != other.powers_.end() && j->index < p.index)
        ++j;
      if (j == other.powers_.end() || j->index != p.index || j->exponent < p.exponent)
        return false;
    }
    return true;
  }

  /// `other / *this`; requires divides(other).
  Monomial quotient_of(Monomial const &other) const
  {
    if (!divides(other))
      throw std::invalid_argument("quotient of monomials that do not divide");
    Monomial r;
    auto i = powers_.begin();
    for (auto const &p : other.powers_) {
      Exponent e = p.exponent;
      if (i != powers_.end() && i->index == p.index)
        e -= (i++)->exponent;
      if (e != 0)
        r.powers_.push_back({p.index, e});
    }
    return r;
  }

  friend Monomial lcm(Monomial const &a, Monomial const &b)
  {
    Monomial r;
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
      if (i->index < j->index)
        r.powers_.push_back(*i++);
      else if (j->index < i->index)
        r.powers_.push_back(*j++);
      else {
        r.powers_.push_back({i->index, std::max(i->exponent, j->exponent)});
        ++i;
        ++j;
      }
    }
    r.powers_.insert(r.powers_.end(), i, a.powers_.end());
    r.powers_.insert(r.powers_.end(), j, b.powers_.end());
    return r;
  }

  friend bool coprime(Monomial const &a, Monomial const &b) noexcept
  {
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
      if (i->index == j->index)
        return false;
      if (i->index < j->index)
        ++i;
      else
        ++j;
    }
    return true;
  }

  friend bool operator==(Monomial const &, Monomial const &) = default;

  /// Lexicographic order with x1 < x2 < ...: exponents are compared from the
  /// highest index downward, so x2 > x1^k for every k.
  friend std::strong_ordering lex_compare(Monomial const &u, Monomial const &v) noexcept
  {
    auto i = u.powers_.rbegin(), j = v.powers_.rbegin();
    for (; i != u.powers_.rend() && j != v.powers_.rend(); ++i, ++j) {
      if (i->index != j->index)
        return i->index <=> j->index;
      if (i->exponent != j->exponent)
        return i->exponent <=> j->exponent;
    }
    if (i != u.powers_.rend())
      return std::strong_ordering::greater;
    if (j != v.powers_.rend())
      return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  friend std::strong_ordering operator<=>(Monomial const &u, Monomial const &v) noexcept
  {
    return lex_compare(u, v);
  }

  std::size_t hash() const noexcept
  {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto const &p : powers_)
      h = (h ^ (std::size_t{p.index} << 32U ^ p.exponent)) * 0x100000001b3ULL;
    return h;
  }

private:
  std::vector<VarPower> powers_;
};

/// v / u; throws unless u divides v.
inline Monomial quotient(Monomial const &v, Monomial const &u) { return u.quotient_of(v); }

} // namespace symgb

template<>
struct std::hash<symgb::Monomial>
{
  std::size_t operator()(symgb::Monomial const &m) const noexcept { return m.hash(); }
};

#endif // SYMGB_MONOMIAL_HPP
