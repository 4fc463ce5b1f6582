#ifndef SYMGB_SYM_ORDER_HPP
#define SYMGB_SYM_ORDER_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "permutation.hpp"

namespace symgb
{

using IndexPair = std::pair<Index, Index>;

/// Certificate for v ⪯ w.
///
/// `match` holds the increasing support matching found by the greedy scan,
/// `assignment` the full matching of {1..order} after completion (pairs
/// (i, sigma(i)) in insertion order), and `sigma` the permutation it encodes.
struct Witness
{
  Permutation sigma;
  std::vector<IndexPair> match;
  std::vector<IndexPair> assignment;
  Index order = 0;
};

/// Decides v ⪯ w in the symmetric cancellation order and builds a witness.
///
/// Greedy scan: each support index i of v (ascending) takes the least
/// unused target j >= i, beyond every previous target, with v_i <= w_j.
/// The partial matching is then completed by walking j = N..1 and giving
/// each unmatched target the largest unmatched source. The completion
/// recipe matters: other completions can break the lex-compatibility the
/// witness must have.
inline std::optional<Witness> sym_compare(Monomial const &v, Monomial const &w)
{
  Index const n = w.max_index();
  if (v.max_index() > n)
    return std::nullopt;
  if (n == 0)
    return Witness{};

  auto const vd = v.dense(n);
  auto const wd = w.dense(n);

  Witness out;
  out.order = n;
  Index t = 1;
  for (Index i = 1; i <= n; ++i) {
    for (Index j = t; j <= n; ++j) {
      if (vd[i - 1] != 0 && vd[i - 1] <= wd[j - 1]) {
        t = j + 1;
        out.match.emplace_back(i, j);
        break;
      }
    }
    t = std::max(i + 1, t);
  }
  if (out.match.size() < v.support_size())
    return std::nullopt;

  std::vector<bool> source_used(n + 1, false), target_used(n + 1, false);
  out.assignment = out.match;
  for (auto const &[i, j] : out.match) {
    source_used[i] = true;
    target_used[j] = true;
  }
  Index largest_free = n;
  for (Index j = n; j >= 1; --j) {
    while (largest_free >= 1 && source_used[largest_free])
      --largest_free;
    if (!target_used[j]) {
      out.assignment.emplace_back(largest_free, j);
      source_used[largest_free] = true;
      target_used[j] = true;
    }
  }

  std::vector<Index> images(n);
  for (auto const &[i, j] : out.assignment)
    images[i - 1] = j;
  out.sigma = Permutation(std::move(images));
  return out;
}

/// Upward-shift test on the support of g: images strictly increasing along
/// ascending support and never below their preimage.
inline bool is_upward_shift(Permutation const &sigma, Monomial const &g)
{
  Index previous = 0;
  for (auto const &p : g.powers()) {
    Index const img = sigma(p.index);
    if (img < p.index || img <= previous)
      return false;
    previous = img;
  }
  return true;
}

/// True iff sigma is an upward shift of v and sigma(v) divides w.
inline bool validate_witness(Permutation const &sigma, Monomial const &v, Monomial const &w)
{
  return is_upward_shift(sigma, v) && sigma.apply(v).divides(w);
}

/// g ~ h under an upward shift.
struct ShiftRelation
{
  Monomial source;
  Monomial target;
  Permutation shift;
};

/// Succeeds iff g and h carry the same exponent sequence along their
/// ascending supports and each support index of h is at least the matching
/// index of g. The returned shift moves the complement order-preservingly.
inline std::optional<ShiftRelation> upward_shift_between(Monomial const &g, Monomial const &h)
{
  auto const gp = g.powers();
  auto const hp = h.powers();
  if (gp.size() != hp.size())
    return std::nullopt;
  for (std::size_t k = 0; k < gp.size(); ++k)
    if (gp[k].exponent != hp[k].exponent || hp[k].index < gp[k].index)
      return std::nullopt;

  Index const n = std::max(g.max_index(), h.max_index());
  std::vector<Index> images(n, 0);
  std::vector<bool> target_used(n + 1, false);
  for (std::size_t k = 0; k < gp.size(); ++k) {
    images[gp[k].index - 1] = hp[k].index;
    target_used[hp[k].index] = true;
  }
  Index next_target = 1;
  for (Index i = 1; i <= n; ++i) {
    if (images[i - 1] != 0)
      continue;
    while (target_used[next_target])
      ++next_target;
    images[i - 1] = next_target;
    target_used[next_target] = true;
  }
  return ShiftRelation{g, h, Permutation(std::move(images))};
}

/// Exhaustive reference for v ⪯ w: tries every strictly increasing map of
/// supp(v) into {1..N} with image >= preimage and checks divisibility.
/// Throws std::length_error when N = max_index(w) exceeds 12.
inline bool brute_force_sym_compare(Monomial const &v, Monomial const &w)
{
  constexpr Index guard = 12;
  Index const n = w.max_index();
  if (n > guard)
    throw std::length_error("oracle scale exceeded");
  auto const powers = v.powers();
  std::size_t const k = powers.size();
  if (k == 0)
    return true;
  std::vector<Index> image(k, 0);

  // depth-first over choices for image[pos]
  auto search = [&](auto &&self, std::size_t pos, Index lower) -> bool {
    if (pos == k)
      return true;
    Index const from = std::max(lower, powers[pos].index);
    for (Index j = from; j <= n; ++j) {
      if (powers[pos].exponent <= w.exponent(j)) {
        image[pos] = j;
        if (self(self, pos + 1, j + 1))
          return true;
      }
    }
    return false;
  };
  return search(search, 0, 1);
}

} // namespace symgb

#endif // SYMGB_SYM_ORDER_HPP
