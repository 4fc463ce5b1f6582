#ifndef SYMGB_GROEBNER_HPP
#define SYMGB_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "reduction.hpp"
#include "sym_order.hpp"

namespace symgb
{

template<Field F>
struct BasisSet
{
  std::vector<Polynomial<F>> elements;
  Index order_used = 0;
  bool groebner = false;
  bool minimal = false;
  bool heuristic_minimal = false;
};

struct GBConfig
{
  std::optional<Index> start_order;
  Index max_order = 20;
  unsigned confirm_iterations = 0;
  bool pair_pruning = true;
  std::size_t orbit_cap = OrbitPool<Rational>::default_cap;
};

struct TruncationStats
{
  std::size_t pairs = 0;       // S-polynomials formed
  std::size_t pruned = 0;      // pairs skipped by the criteria
  std::size_t reductions = 0;  // nonzero remainders adjoined
  std::size_t pool_size = 0;   // orbit elements at the end
};

template<Field F>
struct GBReport
{
  BasisSet<F> basis;
  std::vector<Index> orders_visited;
  std::vector<std::size_t> pair_counts;
  std::vector<std::size_t> reduction_counts;
  bool stabilized = false;
};

/// Raised by symmetric_gb when max_order is hit; carries the last truncated basis.
template<Field F>
class MaxOrderExceeded : public std::runtime_error
{
public:
  MaxOrderExceeded(Index max_order, BasisSet<F> last)
    : std::runtime_error("no stabilization up to order " + std::to_string(max_order)),
      last_(std::move(last))
  {}

  BasisSet<F> const &last_basis() const noexcept { return last_; }

private:
  BasisSet<F> last_;
};

/// Canonical basis order: lm in lex, then number of terms, then full terms.
template<Field F>
void canonical_sort(std::vector<Polynomial<F>> &polys)
{
  std::sort(polys.begin(), polys.end(), [](Polynomial<F> const &a, Polynomial<F> const &b) {
    auto const c = a.leading_monomial() <=> b.leading_monomial();
    if (c != 0)
      return c < 0;
    if (a.size() != b.size())
      return a.size() < b.size();
    return canonical_less(a, b);
  });
}

namespace detail
{

// Monic, deduplicated, canonically ordered; zero generators are rejected.
template<Field F>
std::vector<Polynomial<F>> prepare_generators(std::span<Polynomial<F> const> input)
{
  std::vector<Polynomial<F>> out;
  out.reserve(input.size());
  for (auto const &f : input) {
    if (f.is_zero())
      throw std::invalid_argument("the zero polynomial is not a valid generator");
    out.push_back(f.monic());
  }
  canonical_sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template<Field F>
std::optional<Polynomial<F>> unit_element(std::vector<Polynomial<F>> const &gens)
{
  for (auto const &g : gens)
    if (g.leading_monomial().is_one())
      return g;
  return std::nullopt;
}

template<Field F>
Index max_index_of(std::span<Polynomial<F> const> polys)
{
  Index n = 0;
  for (auto const &p : polys)
    n = std::max(n, p.max_index());
  return n;
}

template<Field F>
Polynomial<F> s_polynomial(Polynomial<F> const &a, Polynomial<F> const &b)
{
  Monomial const l = lcm(a.leading_monomial(), b.leading_monomial());
  Term<F> const ta{a.leading_coefficient().inverse(), quotient(l, a.leading_monomial())};
  Term<F> const tb{b.leading_coefficient().inverse(), quotient(l, b.leading_monomial())};
  return subtract_multiple(multiply_term(ta, a), tb, b);
}

} // namespace detail

/// Removes redundant elements and tail-reduces the rest in the symmetric
/// order until nothing changes; output is monic and canonically ordered.
template<Field F>
BasisSet<F> interreduce_minimize(BasisSet<F> const &input)
{
  auto elems = detail::prepare_generators<F>(input.elements);
  BasisSet<F> out;
  out.order_used = input.order_used;
  out.groebner = input.groebner;
  if (auto unit = detail::unit_element(elems)) {
    out.elements = {unit->monic()};
    out.minimal = true;
    return out;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      std::vector<Polynomial<F>> others;
      others.reserve(elems.size() - 1);
      for (std::size_t o = 0; o < elems.size(); ++o)
        if (o != k)
          others.push_back(elems[o]);
      auto r = reduce_full(elems[k], others).remainder;
      if (r.is_zero()) {
        elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
      r = r.monic();
      if (r != elems[k]) {
        elems[k] = std::move(r);
        changed = true;
      }
    }
    if (changed) {
      canonical_sort(elems);
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    }
  }

  // Drop leading monomials lying ⪯-above another retained one. After full
  // interreduction this finds nothing unless an element failed to reduce.
  std::vector<Polynomial<F>> kept;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    bool redundant = false;
    for (std::size_t o = 0; o < elems.size() && !redundant; ++o)
      redundant = o != k && elems[o].leading_monomial() != elems[k].leading_monomial() &&
                  sym_compare(elems[o].leading_monomial(), elems[k].leading_monomial()).has_value();
    if (!redundant)
      kept.push_back(elems[k]);
  }
  out.elements = std::move(kept);
  out.minimal = true;
  return out;
}

/// Truncated completion at order N.
///
/// Buchberger completion over the orbit S_N B of a working basis B that
/// starts as F: every critical pair of orbit elements is formed, reduced
/// by the orbit of the current basis, and nonzero remainders are adjoined
/// to B together with their orbits. Pairs are handled smallest lcm first.
/// The resulting orbit is interreduced in the symmetric order.
template<Field F>
BasisSet<F> truncated_gb(std::span<Polynomial<F> const> generators, Index order, bool pair_pruning = true,
                         std::size_t orbit_cap = OrbitPool<F>::default_cap, TruncationStats *stats = nullptr)
{
  auto gens = detail::prepare_generators(generators);
  if (order == 0)
    throw std::invalid_argument("truncation order must be positive");
  if (detail::max_index_of<F>(gens) > order)
    throw std::invalid_argument("truncation order " + std::to_string(order) + " is below the largest index x" +
                                std::to_string(detail::max_index_of<F>(gens)));
  TruncationStats local;
  TruncationStats &st = stats ? *stats : local;
  st = {};

  BasisSet<F> result;
  result.order_used = order;
  if (auto unit = detail::unit_element(gens)) {
    result.elements = {unit->monic()};
    result.minimal = true;
    return result;
  }

  OrbitPool<F> pool(order, orbit_cap);
  for (auto const &g : gens)
    pool.add(g);

  // (lcm, i, j) with i < j, smallest lcm first
  using PairKey = std::tuple<Monomial, std::size_t, std::size_t>;
  struct PairLess
  {
    bool operator()(PairKey const &a, PairKey const &b) const
    {
      auto const c = std::get<0>(a) <=> std::get<0>(b);
      if (c != 0)
        return c < 0;
      return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
    }
  };
  std::set<PairKey, PairLess> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    if (i > j)
      std::swap(i, j);
    auto const &e = pool.entries();
    queue.emplace(lcm(e[i].lead, e[j].lead), i, j);
    pending.emplace(i, j);
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    return pending.contains(i < j ? std::pair{i, j} : std::pair{j, i});
  };
  for (std::size_t j = 0; j < pool.entries().size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      enqueue(i, j);

  while (!queue.empty()) {
    auto const node = queue.extract(queue.begin());
    auto const &[l, i, j] = node.value();
    pending.erase({i, j});
    auto const &entries = pool.entries();

    if (pair_pruning) {
      if (coprime(entries[i].lead, entries[j].lead)) {
        ++st.pruned;
        continue;
      }
      // chain criterion: some lm_k | lcm with (i,k) and (j,k) already treated
      bool chain = false;
      for (std::size_t k = 0; k < entries.size() && !chain; ++k)
        chain = k != i && k != j && entries[k].lead.divides(l) && !is_pending(i, k) && !is_pending(j, k);
      if (chain) {
        ++st.pruned;
        continue;
      }
    }

    ++st.pairs;
    auto r = pool.reduce(detail::s_polynomial(entries[i].poly, entries[j].poly)).remainder;
    if (r.is_zero())
      continue;
    ++st.reductions;
    r = r.monic();
    if (r.leading_monomial().is_one()) {
      result.elements = {r};
      result.minimal = true;
      st.pool_size = pool.entries().size();
      return result;
    }
    auto const fresh = pool.add(r);
    std::size_t const total = pool.entries().size();
    for (std::size_t f : fresh)
      for (std::size_t o = 0; o < total; ++o)
        if (o != f && (o < fresh.front() || o < f))
          enqueue(o, f);
  }

  st.pool_size = pool.entries().size();
  // The whole orbit, not just its generators: images of one element can
  // have ⪯-incomparable leading monomials (x1^3*x2 and x1*x2^3).
  for (auto const &e : pool.entries())
    result.elements.push_back(e.poly);
  return interreduce_minimize(result);
}

template<Field F>
BasisSet<F> truncated_gb(std::vector<Polynomial<F>> const &generators, Index order, bool pair_pruning = true,
                         std::size_t orbit_cap = OrbitPool<F>::default_cap, TruncationStats *stats = nullptr)
{
  return truncated_gb(std::span<Polynomial<F> const>(generators), order, pair_pruning, orbit_cap, stats);
}

/// Symmetric Gröbner basis by increasing truncation order.
///
/// At order i the truncated basis F' of the current F is computed; when
/// every element of F' reduces to zero by S_i F the pair is stable and F'
/// is returned (after `confirm_iterations` further orders pass the same
/// test). Otherwise F := F' and the order grows. Throws MaxOrderExceeded
/// past max_order.
///
/// F' rather than F is returned: F may be an unsaturated input such as
/// {x1^3*x2}, whose orbit partner x1*x2^3 is not ⪯-above any element.
template<Field F>
GBReport<F> symmetric_gb(std::span<Polynomial<F> const> generators, GBConfig const &cfg = {})
{
  auto current = detail::prepare_generators(generators);
  if (current.empty())
    throw std::invalid_argument("at least one generator is required");
  Index const needed = std::max<Index>(detail::max_index_of<F>(current), 2);
  Index const start = cfg.start_order.value_or(needed);
  if (start < detail::max_index_of<F>(current))
    throw std::invalid_argument("start order is below the largest index in the generators");
  if (start > cfg.max_order)
    throw std::invalid_argument("start order exceeds max order");

  GBReport<F> report;
  std::optional<std::vector<Polynomial<F>>> candidate;
  unsigned confirmations = 0;
  BasisSet<F> last;

  for (Index order = start; order <= cfg.max_order; ++order) {
    TruncationStats st;
    last = truncated_gb<F>(current, order, cfg.pair_pruning, cfg.orbit_cap, &st);
    report.orders_visited.push_back(order);
    report.pair_counts.push_back(st.pairs);
    report.reduction_counts.push_back(st.reductions);

    OrbitPool<F> pool(current, order, cfg.orbit_cap);
    bool const stable = std::all_of(last.elements.begin(), last.elements.end(),
                                    [&](Polynomial<F> const &p) { return pool.reduce(p).remainder.is_zero(); });
    if (stable) {
      if (!candidate) {
        candidate = last.elements;
        confirmations = 0;
      } else {
        ++confirmations;
      }
      if (confirmations >= cfg.confirm_iterations) {
        BasisSet<F> b;
        b.elements = *candidate;
        b.order_used = order;
        b.groebner = true;
        report.basis = interreduce_minimize(b);
        report.stabilized = true;
        return report;
      }
      continue;
    }
    candidate.reset();
    current = last.elements;
  }
  throw MaxOrderExceeded<F>(cfg.max_order, last);
}

template<Field F>
GBReport<F> symmetric_gb(std::vector<Polynomial<F>> const &generators, GBConfig const &cfg = {})
{
  return symmetric_gb(std::span<Polynomial<F> const>(generators), cfg);
}

template<Field F>
struct MonomialOrbitBases
{
  BasisSet<F> full;
  BasisSet<F> minimal;
};

/// S_N-orbit basis of a monomial ideal, N the largest index in G, and the
/// minimal basis obtained by discarding orbit elements that are upward
/// shifts of another one. With mixed degrees the minimal set is further
/// filtered by ⪯ and flagged heuristic.
template<Field F>
MonomialOrbitBases<F> monomial_orbit_gb(std::span<Monomial const> gens, typename F::context_type const &ctx)
{
  if (gens.empty())
    throw std::invalid_argument("monomial_orbit_gb needs at least one monomial");
  Index n = 0;
  for (auto const &g : gens)
    n = std::max(n, g.max_index());

  std::vector<Monomial> orbit;
  for (auto const &g : gens) {
    auto const powers = g.powers();
    std::vector<bool> used(n + 1, false);
    std::vector<VarPower> image(powers.size());
    auto search = [&](auto &&self, std::size_t pos) -> void {
      if (pos == powers.size()) {
        orbit.push_back(Monomial(image));
        return;
      }
      for (Index j = 1; j <= n; ++j) {
        if (used[j])
          continue;
        used[j] = true;
        image[pos] = {j, powers[pos].exponent};
        self(self, pos + 1);
        used[j] = false;
      }
    };
    search(search, 0);
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());

  bool const single_degree = std::all_of(gens.begin(), gens.end(), [&](Monomial const &m) {
    return m.total_degree() == gens.front().total_degree();
  });

  std::vector<Monomial> minimal;
  for (auto const &h : orbit) {
    bool shifted = std::any_of(orbit.begin(), orbit.end(), [&](Monomial const &g) {
      return g != h && upward_shift_between(g, h).has_value();
    });
    if (!shifted)
      minimal.push_back(h);
  }
  if (!single_degree) {
    std::vector<Monomial> filtered;
    for (auto const &h : minimal) {
      bool above = std::any_of(minimal.begin(), minimal.end(), [&](Monomial const &g) {
        return g != h && sym_compare(g, h).has_value();
      });
      if (!above)
        filtered.push_back(h);
    }
    minimal = std::move(filtered);
  }

  auto to_basis = [&](std::vector<Monomial> const &ms) {
    BasisSet<F> b;
    for (auto const &m : ms)
      b.elements.push_back(make_polynomial(m, ctx.one()));
    canonical_sort(b.elements);
    b.order_used = n;
    b.groebner = true;
    return b;
  };
  MonomialOrbitBases<F> out{to_basis(orbit), to_basis(minimal)};
  out.minimal.minimal = single_degree;
  out.minimal.heuristic_minimal = !single_degree;
  return out;
}

template<Field F>
struct Membership
{
  bool member = false;
  Certificate<F> certificate;
};

/// f ∈ <basis> iff the symmetric remainder of f is zero; needs a Gröbner basis.
template<Field F>
Membership<F> is_member(Polynomial<F> const &f, BasisSet<F> const &basis)
{
  if (!basis.groebner)
    throw std::invalid_argument("membership requires a Gröbner basis");
  Membership<F> m;
  m.certificate = reduce_full(f, basis.elements);
  m.member = m.certificate.remainder.is_zero();
  return m;
}

} // namespace symgb

#endif // SYMGB_GROEBNER_HPP
