#ifndef SYMGB_POLYNOMIAL_HPP
#define SYMGB_POLYNOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "monomial.hpp"
#include "permutation.hpp"

namespace symgb
{

template<Field F>
struct Term
{
  F coefficient;
  Monomial monomial;

  friend bool operator==(Term const &, Term const &) = default;
};

/// Sparse polynomial with terms kept in strictly decreasing lex order of
/// their monomials. The empty term list is the zero polynomial.
template<Field F>
class Polynomial
{
public:
  using field_type = F;
  using term_type = Term<F>;

  Polynomial() = default;

  /// Sorts, merges like terms and drops zero coefficients.
  explicit Polynomial(std::vector<term_type> terms) : terms_(std::move(terms))
  {
    std::sort(terms_.begin(), terms_.end(),
              [](term_type const &a, term_type const &b) { return a.monomial > b.monomial; });
    std::vector<term_type> merged;
    merged.reserve(terms_.size());
    for (auto &t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial)
        merged.back().coefficient += t.coefficient;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](term_type const &t) { return t.coefficient.is_zero(); });
    terms_ = std::move(merged);
  }

  explicit Polynomial(term_type t)
  {
    if (!t.coefficient.is_zero())
      terms_.push_back(std::move(t));
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::vector<term_type> const &terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  term_type const &leading_term() const
  {
    if (terms_.empty())
      throw std::domain_error("zero has no leading term");
    return terms_.front();
  }
  Monomial const &leading_monomial() const { return leading_term().monomial; }
  F const &leading_coefficient() const { return leading_term().coefficient; }

  Index max_index() const noexcept
  {
    Index n = 0;
    for (auto const &t : terms_)
      n = std::max(n, t.monomial.max_index());
    return n;
  }

  std::uint64_t total_degree() const noexcept
  {
    std::uint64_t d = 0;
    for (auto const &t : terms_)
      d = std::max(d, t.monomial.total_degree());
    return d;
  }

  /// Union of the supports of all terms, ascending.
  std::vector<Index> support() const
  {
    std::vector<Index> s;
    for (auto const &t : terms_)
      for (auto const &p : t.monomial.powers())
        s.push_back(p.index);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const
  {
    if (is_zero() || leading_coefficient().is_one())
      return *this;
    F const inv = leading_coefficient().inverse();
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (auto const &t : terms_)
      r.terms_.push_back({t.coefficient * inv, t.monomial});
    return r;
  }

  /// Everything but the leading term.
  Polynomial tail() const
  {
    Polynomial r;
    if (!terms_.empty())
      r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  Polynomial operator-() const
  {
    Polynomial r = *this;
    for (auto &t : r.terms_)
      t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(Polynomial const &a, Polynomial const &b) { return combine(a, b, false); }
  friend Polynomial operator-(Polynomial const &a, Polynomial const &b) { return combine(a, b, true); }

  friend Polynomial operator*(Polynomial const &a, Polynomial const &b)
  {
    Polynomial r;
    for (auto const &t : a.terms_)
      r = r + multiply_term(t, b);
    return r;
  }

  /// t * f. Monomial multiplication preserves lex order, so no re-sort.
  friend Polynomial multiply_term(term_type const &t, Polynomial const &f)
  {
    Polynomial r;
    if (t.coefficient.is_zero())
      return r;
    r.terms_.reserve(f.terms_.size());
    for (auto const &s : f.terms_)
      r.terms_.push_back({t.coefficient * s.coefficient, t.monomial * s.monomial});
    return r;
  }

  /// f - t * g, fused.
  friend Polynomial subtract_multiple(Polynomial const &f, term_type const &t, Polynomial const &g)
  {
    Polynomial r;
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    auto i = f.terms_.begin();
    auto j = g.terms_.begin();
    Monomial mj;
    bool have_j = false;
    auto load_j = [&] {
      have_j = j != g.terms_.end();
      if (have_j)
        mj = t.monomial * j->monomial;
    };
    load_j();
    while (i != f.terms_.end() && have_j) {
      auto const c = i->monomial <=> mj;
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.push_back({-(t.coefficient * j->coefficient), std::move(mj)});
        ++j;
        load_j();
      } else {
        F coeff = i->coefficient - t.coefficient * j->coefficient;
        if (!coeff.is_zero())
          r.terms_.push_back({std::move(coeff), i->monomial});
        ++i;
        ++j;
        load_j();
      }
    }
    for (; i != f.terms_.end(); ++i)
      r.terms_.push_back(*i);
    while (have_j) {
      r.terms_.push_back({-(t.coefficient * j->coefficient), std::move(mj)});
      ++j;
      load_j();
    }
    return r;
  }

  friend bool operator==(Polynomial const &, Polynomial const &) = default;

  /// Total order used for canonical sorting of polynomial lists: term by
  /// term, monomials in lex, then coefficients by their text form.
  friend bool canonical_less(Polynomial const &a, Polynomial const &b)
  {
    std::size_t const n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      auto const c = a.terms_[k].monomial <=> b.terms_[k].monomial;
      if (c != 0)
        return c < 0;
      if (!(a.terms_[k].coefficient == b.terms_[k].coefficient))
        return a.terms_[k].coefficient.to_string() < b.terms_[k].coefficient.to_string();
    }
    return a.size() < b.size();
  }

private:
  static Polynomial combine(Polynomial const &a, Polynomial const &b, bool negate)
  {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    auto signed_b = [negate](term_type const &t) {
      return negate ? term_type{-t.coefficient, t.monomial} : t;
    };
    while (i != a.terms_.end() && j != b.terms_.end()) {
      auto const c = i->monomial <=> j->monomial;
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.push_back(signed_b(*j++));
      } else {
        F coeff = negate ? i->coefficient - j->coefficient : i->coefficient + j->coefficient;
        if (!coeff.is_zero())
          r.terms_.push_back({std::move(coeff), i->monomial});
        ++i;
        ++j;
      }
    }
    for (; i != a.terms_.end(); ++i)
      r.terms_.push_back(*i);
    for (; j != b.terms_.end(); ++j)
      r.terms_.push_back(signed_b(*j));
    return r;
  }

  std::vector<term_type> terms_;
};

template<Field F>
Polynomial<F> make_polynomial(Monomial m, F c)
{
  return Polynomial<F>(Term<F>{std::move(c), std::move(m)});
}

/// sigma f: the exponent of x_i in f becomes the exponent of x_{sigma(i)}.
inline Monomial apply_permutation(Permutation const &sigma, Monomial const &m) { return sigma.apply(m); }

template<Field F>
Polynomial<F> apply_permutation(Permutation const &sigma, Polynomial<F> const &f)
{
  if (sigma.is_identity())
    return f;
  std::vector<Term<F>> moved;
  moved.reserve(f.size());
  for (auto const &t : f)
    moved.push_back({t.coefficient, sigma.apply(t.monomial)});
  return Polynomial<F>(std::move(moved));
}

} // namespace symgb

#endif // SYMGB_POLYNOMIAL_HPP
