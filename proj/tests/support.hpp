#ifndef SYMGB_TESTS_SUPPORT_HPP
#define SYMGB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <symgb/symgb.hpp>

namespace testing_support
{

using namespace symgb;

using Poly = Polynomial<Rational>;

inline RationalContext const qq;

inline Poly P(std::string const &text)
{
  return parse_polynomial<Rational>(text, qq);
}

inline Monomial M(std::string const &text)
{
  return parse_monomial(text);
}

inline std::vector<Poly> Ps(std::vector<std::string> const &texts)
{
  std::vector<Poly> out;
  for (auto const &t : texts)
    out.push_back(P(t));
  return out;
}

inline std::vector<std::string> strings(std::vector<Poly> const &polys)
{
  std::vector<std::string> out;
  for (auto const &p : polys)
    out.push_back(format_polynomial(p));
  return out;
}

using Rng = std::mt19937_64;

inline unsigned uniform(Rng &rng, unsigned lo, unsigned hi)
{
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

/// Exponent vector of length n with entries in [0, max_exp], sparse with
/// probability `zero` per slot.
inline Monomial random_monomial(Rng &rng, Index n, Exponent max_exp, double zero = 0.4)
{
  std::bernoulli_distribution skip(zero);
  std::vector<VarPower> powers;
  for (Index i = 1; i <= n; ++i) {
    if (skip(rng))
      continue;
    Exponent const e = uniform(rng, 0, max_exp);
    if (e != 0)
      powers.push_back({i, e});
  }
  return Monomial(std::move(powers));
}

inline Rational random_coefficient(Rng &rng)
{
  long num = static_cast<long>(uniform(rng, 1, 9));
  if (uniform(rng, 0, 1))
    num = -num;
  long const den = uniform(rng, 0, 3) == 0 ? static_cast<long>(uniform(rng, 1, 5)) : 1;
  return Rational(num, den);
}

inline Poly random_polynomial(Rng &rng, Index n, Exponent max_exp, unsigned max_terms)
{
  std::vector<Term<Rational>> terms;
  unsigned const count = uniform(rng, 1, max_terms);
  for (unsigned k = 0; k < count; ++k)
    terms.push_back({random_coefficient(rng), random_monomial(rng, n, max_exp)});
  return Poly(std::move(terms));
}

/// Random polynomial of total degree <= deg in x1..xn.
inline Poly random_polynomial_deg(Rng &rng, Index n, unsigned deg, unsigned max_terms)
{
  std::vector<Term<Rational>> terms;
  unsigned const count = uniform(rng, 1, max_terms);
  for (unsigned k = 0; k < count; ++k) {
    unsigned const d = uniform(rng, 0, deg);
    std::vector<Exponent> dense(n, 0);
    for (unsigned s = 0; s < d; ++s)
      ++dense[uniform(rng, 0, n - 1)];
    terms.push_back({random_coefficient(rng), Monomial::from_dense(std::span<Exponent const>(dense))});
  }
  return Poly(std::move(terms));
}

inline Permutation random_permutation(Rng &rng, Index n)
{
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{1});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

/// Every monomial in x1..xn with exponents <= e.
inline std::vector<Monomial> all_monomials(Index n, Exponent e)
{
  std::vector<Monomial> out;
  std::vector<Exponent> dense(n, 0);
  while (true) {
    out.push_back(Monomial::from_dense(std::span<Exponent const>(dense)));
    Index k = 0;
    while (k < n && dense[k] == e)
      dense[k++] = 0;
    if (k == n)
      break;
    ++dense[k];
  }
  return out;
}

} // namespace testing_support

#endif
