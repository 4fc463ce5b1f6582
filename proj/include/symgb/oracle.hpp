#ifndef SYMGB_ORACLE_HPP
#define SYMGB_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "polynomial.hpp"

// Classical Buchberger over K[x1..xM]. Used only to cross-check the
// symmetric engine, so it deliberately shares nothing with reduction.hpp or
// the completion code beyond the polynomial arithmetic.

namespace symgb::oracle
{

template<Field F>
struct TruncatedIdeal
{
  std::vector<Polynomial<F>> generators;
  Index var_bound = 0;
};

/// <S_M F> in K[x1..xM], listing every image under every permutation of 1..M.
template<Field F>
TruncatedIdeal<F> orbit_ideal(std::span<Polynomial<F> const> gens, Index bound)
{
  TruncatedIdeal<F> ideal;
  ideal.var_bound = bound;
  std::vector<Index> perm(bound);
  std::iota(perm.begin(), perm.end(), Index{1});
  do {
    Permutation const sigma(perm);
    for (auto const &g : gens) {
      if (g.max_index() > bound)
        throw std::invalid_argument("generator exceeds the variable bound");
      auto img = apply_permutation(sigma, g);
      if (std::find(ideal.generators.begin(), ideal.generators.end(), img) == ideal.generators.end())
        ideal.generators.push_back(std::move(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ideal;
}

template<Field F>
TruncatedIdeal<F> orbit_ideal(std::vector<Polynomial<F>> const &gens, Index bound)
{
  return orbit_ideal(std::span<Polynomial<F> const>(gens), bound);
}

/// Multivariate division remainder by G (any term divisible by some lm(g)
/// is eliminated).
template<Field F>
Polynomial<F> classical_normal_form(Polynomial<F> f, std::vector<Polynomial<F>> const &g)
{
  Polynomial<F> r;
  while (!f.is_zero()) {
    auto const &lt = f.leading_term();
    auto it = std::find_if(g.begin(), g.end(),
                           [&](Polynomial<F> const &d) { return d.leading_monomial().divides(lt.monomial); });
    if (it == g.end()) {
      r = r + Polynomial<F>(lt);
      f = f - Polynomial<F>(lt);
      continue;
    }
    Term<F> const q{lt.coefficient / it->leading_coefficient(), quotient(lt.monomial, it->leading_monomial())};
    f = f - multiply_term(q, *it);
  }
  return r;
}

/// Reduced lex Gröbner basis of the ideal, monic, sorted by leading monomial.
template<Field F>
BasisSet<F> classical_gb(TruncatedIdeal<F> const &ideal)
{
  std::vector<Polynomial<F>> g;
  for (auto const &p : ideal.generators) {
    if (p.is_zero())
      throw std::invalid_argument("zero generator");
    if (p.max_index() > ideal.var_bound)
      throw std::invalid_argument("generator exceeds the variable bound");
    g.push_back(p.monic());
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    // smallest lcm first
    auto best = pairs.begin();
    Monomial best_lcm = lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
      if (l < best_lcm) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto const [i, j] = *best;
    pairs.erase(best);
    Monomial const &a = g[i].leading_monomial();
    Monomial const &b = g[j].leading_monomial();
    if (coprime(a, b))
      continue;
    Monomial const &l = best_lcm;
    Polynomial<F> const s = multiply_term(Term<F>{g[i].leading_coefficient().inverse(), quotient(l, a)}, g[i]) -
                            multiply_term(Term<F>{g[j].leading_coefficient().inverse(), quotient(l, b)}, g[j]);
    auto h = classical_normal_form(s, g);
    if (h.is_zero())
      continue;
    g.push_back(h.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k)
      pairs.emplace_back(k, g.size() - 1);
  }

  // minimize, then reduce every element by the others
  std::vector<Polynomial<F>> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool drop = false;
    for (std::size_t o = 0; o < g.size() && !drop; ++o) {
      if (o == k || !g[o].leading_monomial().divides(g[k].leading_monomial()))
        continue;
      drop = g[o].leading_monomial() != g[k].leading_monomial() || o < k;
    }
    if (!drop)
      minimal.push_back(g[k]);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial<F>> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k)
        others.push_back(minimal[o]);
    Polynomial<F> const head(minimal[k].leading_term());
    minimal[k] = (head + classical_normal_form(minimal[k].tail(), others)).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](Polynomial<F> const &x, Polynomial<F> const &y) {
    return x.leading_monomial() < y.leading_monomial();
  });

  BasisSet<F> out;
  out.elements = std::move(minimal);
  out.order_used = ideal.var_bound;
  return out;
}

template<Field F>
bool classical_membership(Polynomial<F> const &f, TruncatedIdeal<F> const &ideal)
{
  if (f.max_index() > ideal.var_bound)
    throw std::invalid_argument("x" + std::to_string(f.max_index()) + " exceeds the variable bound " +
                                std::to_string(ideal.var_bound));
  if (f.is_zero())
    return true;
  return classical_normal_form(f, classical_gb(ideal).elements).is_zero();
}

/// Same decision against an already computed classical basis.
template<Field F>
bool classical_membership(Polynomial<F> const &f, BasisSet<F> const &classical_basis)
{
  if (f.max_index() > classical_basis.order_used)
    throw std::invalid_argument("x" + std::to_string(f.max_index()) + " exceeds the variable bound " +
                                std::to_string(classical_basis.order_used));
  return classical_normal_form(f, classical_basis.elements).is_zero();
}

/// Every pairwise S-polynomial reduces to zero.
template<Field F>
bool satisfies_s_pair_criterion(std::vector<Polynomial<F>> const &g)
{
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Monomial const &a = g[i].leading_monomial();
      Monomial const &b = g[j].leading_monomial();
      Monomial const l = lcm(a, b);
      auto const s = multiply_term(Term<F>{g[i].leading_coefficient().inverse(), quotient(l, a)}, g[i]) -
                     multiply_term(Term<F>{g[j].leading_coefficient().inverse(), quotient(l, b)}, g[j]);
      if (!classical_normal_form(s, g).is_zero())
        return false;
    }
  return true;
}

} // namespace symgb::oracle

#endif // SYMGB_ORACLE_HPP
