#ifndef SYMGB_REDUCTION_HPP
#define SYMGB_REDUCTION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "sym_order.hpp"

namespace symgb
{

template<Field F>
struct Summand
{
  Polynomial<F> multiplier;
  Permutation sigma;
  Polynomial<F> generator;
};

/// input = remainder + sum multiplier_k * sigma_k(generator_k).
template<Field F>
struct Certificate
{
  Polynomial<F> remainder;
  std::vector<Summand<F>> summands;
};

/// The SG step: f - (lt(f) / sigma(lt(g))) * sigma(g).
///
/// Requires f, g nonzero and sigma(lm(g)) | lm(f). The returned term is the
/// multiplier that was used.
template<Field F>
Polynomial<F> sg_step(Polynomial<F> const &f, Polynomial<F> const &g, Permutation const &sigma,
                      Term<F> *multiplier_out = nullptr)
{
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sg_step needs nonzero operands");
  Monomial const shifted = sigma.apply(g.leading_monomial());
  if (!shifted.divides(f.leading_monomial()))
    throw std::invalid_argument("sg_step: sigma(lm(g)) does not divide lm(f)");
  Term<F> const t{f.leading_coefficient() / g.leading_coefficient(),
                  quotient(f.leading_monomial(), shifted)};
  if (multiplier_out)
    *multiplier_out = t;
  return subtract_multiple(f, t, apply_permutation(sigma, g));
}

namespace detail
{

template<Field F>
void require_nonzero(std::span<Polynomial<F> const> basis)
{
  for (auto const &g : basis)
    if (g.is_zero())
      throw std::invalid_argument("zero polynomial cannot act as a reducer");
}

} // namespace detail

/// Division of f by the ordered list `basis` in the symmetric order.
///
/// The working polynomial's leading monomial is tested against each
/// element in turn; the first g with lm(g) ⪯ lm(p) is used with its
/// comparator witness. Irreducible leading terms move to the remainder, so
/// the remainder is fully reduced.
template<Field F>
Certificate<F> reduce_full(Polynomial<F> const &f, std::span<Polynomial<F> const> basis)
{
  detail::require_nonzero(basis);
  Certificate<F> cert;
  std::vector<Term<F>> remainder;
  Polynomial<F> p = f;
  while (!p.is_zero()) {
    bool divided = false;
    for (auto const &g : basis) {
      auto witness = sym_compare(g.leading_monomial(), p.leading_monomial());
      if (!witness)
        continue;
      Term<F> t;
      p = sg_step(p, g, witness->sigma, &t);
      cert.summands.push_back({Polynomial<F>(std::move(t)), std::move(witness->sigma), g});
      divided = true;
      break;
    }
    if (!divided) {
      remainder.push_back(p.leading_term());
      p = p.tail();
    }
  }
  cert.remainder = Polynomial<F>(std::move(remainder));
  return cert;
}

template<Field F>
Certificate<F> reduce_full(Polynomial<F> const &f, std::vector<Polynomial<F>> const &basis)
{
  return reduce_full(f, std::span<Polynomial<F> const>(basis));
}

/// The images tau(g), tau in S_N, of a list of generators, with duplicates
/// removed. Reduction against the pool uses plain divisibility of leading
/// monomials, i.e. classical division by the orbit.
template<Field F>
class OrbitPool
{
public:
  struct Entry
  {
    Polynomial<F> poly;     // tau(generator), monic when the generator is
    Monomial lead;
    std::size_t generator;  // index into generators()
    Permutation tau;
  };

  static constexpr std::size_t default_cap = 1'000'000;

  explicit OrbitPool(Index order, std::size_t cap = default_cap) : order_(order), cap_(cap) {}

  OrbitPool(std::span<Polynomial<F> const> generators, Index order, std::size_t cap = default_cap)
    : OrbitPool(order, cap)
  {
    for (auto const &g : generators)
      add(g);
  }

  Index order() const noexcept { return order_; }
  std::vector<Polynomial<F>> const &generators() const noexcept { return generators_; }
  std::vector<Entry> const &entries() const noexcept { return entries_; }

  /// Adds g and its distinct images; returns the positions of newly created
  /// entries (images already in the pool are skipped).
  std::vector<std::size_t> add(Polynomial<F> const &g)
  {
    if (g.is_zero())
      throw std::invalid_argument("zero polynomial cannot act as a reducer");
    if (g.max_index() > order_)
      throw std::invalid_argument("generator uses x" + std::to_string(g.max_index()) +
                                  " beyond orbit order " + std::to_string(order_));
    std::size_t const gen = generators_.size();
    generators_.push_back(g);
    std::vector<std::size_t> fresh;

    auto const supp = g.support();
    std::size_t const k = supp.size();
    std::vector<Index> image(k);
    std::vector<bool> used(order_ + 1, false);
    std::size_t work = 0;

    auto emit = [&] {
      if (++work > cap_)
        throw OrbitSearchLimit("orbit enumeration exceeded " + std::to_string(cap_) + " assignments");
      Permutation tau = extend(supp, image);
      Polynomial<F> img = apply_permutation(tau, g);
      if (!seen_.insert(img).second)
        return;
      Monomial lead = img.leading_monomial();
      fresh.push_back(entries_.size());
      entries_.push_back({std::move(img), std::move(lead), gen, std::move(tau)});
    };
    auto search = [&](auto &&self, std::size_t pos) -> void {
      if (pos == k) {
        emit();
        return;
      }
      for (Index j = 1; j <= order_; ++j) {
        if (used[j])
          continue;
        used[j] = true;
        image[pos] = j;
        self(self, pos + 1);
        used[j] = false;
      }
    };
    search(search, 0);
    return fresh;
  }

  /// First entry whose leading monomial divides m, or npos.
  std::size_t find_reducer(Monomial const &m) const noexcept
  {
    for (std::size_t e = 0; e < entries_.size(); ++e)
      if (entries_[e].lead.divides(m))
        return e;
    return npos;
  }

  Certificate<F> reduce(Polynomial<F> const &p) const
  {
    if (p.max_index() > order_)
      throw std::invalid_argument("polynomial uses x" + std::to_string(p.max_index()) +
                                  " beyond orbit order " + std::to_string(order_));
    Certificate<F> cert;
    std::vector<Term<F>> remainder;
    Polynomial<F> work = p;
    while (!work.is_zero()) {
      std::size_t const e = find_reducer(work.leading_monomial());
      if (e == npos) {
        remainder.push_back(work.leading_term());
        work = work.tail();
        continue;
      }
      auto const &entry = entries_[e];
      Term<F> t{work.leading_coefficient() / entry.poly.leading_coefficient(),
                quotient(work.leading_monomial(), entry.lead)};
      work = subtract_multiple(work, t, entry.poly);
      cert.summands.push_back({Polynomial<F>(std::move(t)), entry.tau, generators_[entry.generator]});
    }
    cert.remainder = Polynomial<F>(std::move(remainder));
    return cert;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  struct Less
  {
    bool operator()(Polynomial<F> const &a, Polynomial<F> const &b) const { return canonical_less(a, b); }
  };

  // supp[k] -> image[k]; the remaining points of 1..N go to the remaining
  // targets in increasing order.
  Permutation extend(std::vector<Index> const &supp, std::vector<Index> const &image) const
  {
    std::vector<Index> img(order_, 0);
    std::vector<bool> taken(order_ + 1, false);
    for (std::size_t k = 0; k < supp.size(); ++k) {
      img[supp[k] - 1] = image[k];
      taken[image[k]] = true;
    }
    Index next = 1;
    for (Index i = 1; i <= order_; ++i) {
      if (img[i - 1] != 0)
        continue;
      while (taken[next])
        ++next;
      img[i - 1] = next;
      taken[next] = true;
    }
    return Permutation(std::move(img));
  }

  Index order_;
  std::size_t cap_;
  std::vector<Polynomial<F>> generators_;
  std::vector<Entry> entries_;
  std::set<Polynomial<F>, Less> seen_;
};

/// Division of p by the orbit S_N B, N >= every index occurring in p and B.
template<Field F>
Certificate<F> reduce_by_orbit(Polynomial<F> const &p, std::span<Polynomial<F> const> basis, Index order,
                               std::size_t cap = OrbitPool<F>::default_cap)
{
  detail::require_nonzero(basis);
  return OrbitPool<F>(basis, order, cap).reduce(p);
}

template<Field F>
Certificate<F> reduce_by_orbit(Polynomial<F> const &p, std::vector<Polynomial<F>> const &basis, Index order,
                               std::size_t cap = OrbitPool<F>::default_cap)
{
  return reduce_by_orbit(p, std::span<Polynomial<F> const>(basis), order, cap);
}

/// Recomputes remainder + sum h sigma(g) and checks it equals `input`, and
/// that no summand's leading monomial exceeds lm(input).
template<Field F>
bool certificate_check(Polynomial<F> const &input, Certificate<F> const &cert)
{
  Polynomial<F> total = cert.remainder;
  for (auto const &s : cert.summands) {
    Polynomial<F> const piece = s.multiplier * apply_permutation(s.sigma, s.generator);
    if (!input.is_zero() && !piece.is_zero() && piece.leading_monomial() > input.leading_monomial())
      return false;
    total = total + piece;
  }
  return total == input;
}

} // namespace symgb

#endif // SYMGB_REDUCTION_HPP
