// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace testing_support;

namespace
{

using Clock = std::chrono::steady_clock;

struct Outcome
{
  bool ok = true;
  std::string note;

  void require(bool cond, std::string const &why)
  {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
};

int failures = 0;

void criterion(int id, char const *title, double budget_s, std::function<Outcome()> const &body)
{
  auto const start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (std::exception const &e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  double const secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s && o.ok) {
    o.ok = false;
    o.note = "over time budget";
  }
  if (!o.ok)
    ++failures;
  std::ostringstream line;
  line << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << " (" << secs << " s)";
  if (!o.note.empty())
    line << " -- " << o.note;
  std::cout << line.str() << std::endl;
}

std::vector<std::string> sorted_strings(std::vector<Poly> const &polys)
{
  auto s = strings(polys);
  std::sort(s.begin(), s.end());
  return s;
}

Monomial from_vector(std::vector<Exponent> const &e)
{
  return Monomial::from_dense(std::span<Exponent const>(e));
}

/// x1^c * (m with every index moved up by one)
Monomial shift_up(Monomial const &m, Exponent c)
{
  std::vector<VarPower> p;
  if (c)
    p.push_back({1, c});
  for (auto const &vp : m.powers())
    p.push_back({vp.index + 1, vp.exponent});
  return Monomial(std::move(p));
}

Monomial random_upward_image(Rng &rng, Monomial const &g)
{
  std::vector<VarPower> p;
  Index prev = 0;
  for (auto const &vp : g.powers()) {
    Index const lo = std::max(vp.index, prev + 1);
    prev = lo + uniform(rng, 0, 2);
    p.push_back({prev, vp.exponent});
  }
  return Monomial(std::move(p));
}

std::vector<Exponent> random_exponents(Rng &rng, Index n, Exponent max_exp)
{
  std::vector<Exponent> e(n);
  for (auto &x : e)
    x = uniform(rng, 0, max_exp);
  return e;
}

Outcome membership_instance(Rng &rng, int &queries, int &members)
{
  Outcome o;
  std::vector<Poly> gens;
  unsigned const count = uniform(rng, 1, 2);
  while (gens.size() < count) {
    auto p = random_polynomial_deg(rng, 3, 3, 3);
    if (!p.is_zero())
      gens.push_back(std::move(p));
  }
  auto const report = symmetric_gb(gens);
  Index const last = report.orders_visited.back();

  std::vector<Poly> tests;
  // members by construction
  for (int k = 0; k < 2; ++k) {
    Poly f;
    for (int s = 0; s < 2; ++s) {
      auto const sigma = random_permutation(rng, last);
      f = f + random_polynomial_deg(rng, last, 1, 2) * apply_permutation(sigma, gens[uniform(rng, 0, count - 1)]);
    }
    tests.push_back(f);
  }
  // arbitrary queries, some of them basis elements perturbed by a term
  tests.push_back(random_polynomial_deg(rng, last, 3, 3));
  tests.push_back(report.basis.elements.front() + random_polynomial_deg(rng, last, 2, 1));
  tests.push_back(make_polynomial(Monomial::variable(1), qq.one()));

  Index bound = last;
  for (auto const &f : tests)
    bound = std::max(bound, f.max_index());
  auto const classical = oracle::classical_gb(oracle::orbit_ideal(gens, bound));
  for (auto const &f : tests) {
    ++queries;
    bool const sym = is_member(f, report.basis).member;
    members += sym;
    bool const cls = oracle::classical_membership(f, classical);
    std::ostringstream why;
    why << "disagreement on " << format_polynomial(f) << " for {";
    for (auto const &g : gens)
      why << format_polynomial(g) << "; ";
    why << "} at M = " << bound << ": symmetric " << sym << ", classical " << cls;
    o.require(sym == cls, why.str());
  }
  return o;
}

} // namespace

int main()
{
  criterion(1, "symmetric_gb({x1+x2, x1*x2}) = {x1}", 1.0, [] {
    Outcome o;
    auto const r = symmetric_gb(Ps({"x1 + x2", "x1*x2"}));
    o.require(strings(r.basis.elements) == std::vector<std::string>{"x1"}, "basis differs");
    o.require(r.stabilized, "not stabilized");
    o.require(!r.orders_visited.empty() && r.orders_visited.front() == 2, "does not start at order 2");
    for (std::size_t k = 1; k < r.orders_visited.size(); ++k)
      o.require(r.orders_visited[k] == r.orders_visited[k - 1] + 1, "orders visited are not contiguous");
    return o;
  });

  criterion(2, "truncated_gb({x1+x2, x1*x2}, 2) = {x1+x2, x1^2}", 1.0, [] {
    Outcome o;
    auto const b = truncated_gb(Ps({"x1 + x2", "x1*x2"}), 2);
    o.require(b.elements == Ps({"x1^2", "x1 + x2"}), "basis differs");
    return o;
  });

  criterion(3, "monomial_orbit_gb({x1^2*x3}) orbit and minimal basis", 1.0, [] {
    Outcome o;
    std::vector<Monomial> g{M("x1^2*x3")};
    auto const r = monomial_orbit_gb<Rational>(g, qq);
    o.require(sorted_strings(r.full.elements) ==
                  sorted_strings(Ps({"x1*x2^2", "x1*x3^2", "x1^2*x2", "x2*x3^2", "x1^2*x3", "x2^2*x3"})),
              "orbit differs");
    o.require(sorted_strings(r.minimal.elements) == sorted_strings(Ps({"x1*x2^2", "x1^2*x2"})), "minimal differs");
    return o;
  });

  criterion(4, "reduce_full(x3^2*x2^2 + x2*x1, (x3*x1 + x2*x1))", 1.0, [] {
    Outcome o;
    auto const f = P("x3^2*x2^2 + x2*x1");
    auto const c = reduce_full(f, Ps({"x3*x1 + x2*x1"}));
    o.require(c.remainder == P("x2^3*x1 + x2*x1"), "remainder " + format_polynomial(c.remainder));
    o.require(c.summands.size() == 2, "expected two summands");
    o.require(certificate_check(f, c), "certificate rejected");
    return o;
  });

  criterion(5, "comparator traces", 1.0, [] {
    Outcome o;
    o.require(!sym_compare(from_vector({1, 2, 0, 2}), from_vector({0, 3, 4, 1})), "first trace should fail");
    auto const w = sym_compare(from_vector({3, 2, 0, 0, 5}), from_vector({5, 1, 4, 6, 9}));
    o.require(w.has_value(), "second trace should succeed");
    if (w) {
      auto a = w->assignment;
      std::sort(a.begin(), a.end());
      o.require(a == std::vector<IndexPair>{{1, 1}, {2, 3}, {3, 2}, {4, 4}, {5, 5}}, "assignment differs");
      o.require(w->sigma == Permutation::from_cycles("(23)"), "witness is " + w->sigma.cycles());
    }
    return o;
  });

  criterion(6, "motivating ideal basis equals the S_3-orbit basis", 300.0, [] {
    Outcome o;
    auto const ours = symmetric_gb(Ps({"x1^3*x3 + x1^2*x2^3", "x2^2*x3^2 - x2^2*x1 + x1*x3^2"})).basis.elements;
    std::vector<Poly> theirs;
    std::vector<Index> perm{1, 2, 3};
    auto const reps = Ps({"x3*x2*x1^2", "x3^2*x1 + x2^4*x1 - x2^2*x1", "x3*x1^3", "x2*x1^4", "x2^2*x1^2"});
    do {
      for (auto const &g : reps)
        theirs.push_back(apply_permutation(Permutation(perm), g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto const &g : ours)
      o.require(reduce_full(g, theirs).remainder.is_zero(), format_polynomial(g) + " does not reduce to 0");
    for (auto const &g : theirs)
      o.require(reduce_full(g, ours).remainder.is_zero(), format_polynomial(g) + " does not reduce to 0");
    return o;
  });

  criterion(7, "comparator agrees with brute force", 0, [] {
    Outcome o;
    auto const all = all_monomials(5, 3);
    for (auto const &v : all)
      for (auto const &w : all)
        if (sym_compare(v, w).has_value() != brute_force_sym_compare(v, w))
          o.require(false, format_monomial(v) + " vs " + format_monomial(w));
    Rng rng(701);
    for (int k = 0; k < 1000; ++k) {
      auto const v = random_monomial(rng, 8, 3, 0.5);
      auto const w = random_monomial(rng, 8, 4, 0.2);
      if (sym_compare(v, w).has_value() != brute_force_sym_compare(v, w))
        o.require(false, format_monomial(v) + " vs " + format_monomial(w));
    }
    return o;
  });

  criterion(8, "cancellation lm(u*sigma f) = u*sigma(lm f)", 0, [] {
    Outcome o;
    Rng rng(801);
    int cases = 0;
    while (cases < 500) {
      auto const f = random_polynomial(rng, 4, 3, 5);
      if (f.is_zero())
        continue;
      auto const w = random_monomial(rng, 7, 4, 0.2);
      auto const wit = sym_compare(f.leading_monomial(), w);
      if (!wit)
        continue;
      ++cases;
      Monomial const image = wit->sigma.apply(f.leading_monomial());
      Monomial const u = quotient(w, image);
      auto const prod = multiply_term(Term<Rational>{Rational(1), u}, apply_permutation(wit->sigma, f));
      o.require(prod.leading_monomial() == u * image,
                "fails for f = " + format_polynomial(f) + ", w = " + format_monomial(w));
    }
    return o;
  });

  criterion(9, "certificates of random reductions", 0, [] {
    Outcome o;
    Rng rng(901);
    int tampered = 0;
    for (int k = 0; k < 500; ++k) {
      std::vector<Poly> basis;
      unsigned const count = uniform(rng, 1, 3);
      while (basis.size() < count) {
        auto g = random_polynomial(rng, 4, 2, 3);
        if (!g.is_zero())
          basis.push_back(std::move(g));
      }
      auto const f = random_polynomial(rng, 5, 3, 6);
      auto const cert = reduce_full(f, basis);
      o.require(certificate_check(f, cert), "rejected a genuine certificate for " + format_polynomial(f));
      auto bad = cert;
      bad.remainder = bad.remainder + make_polynomial(M("x9"), Rational(1));
      o.require(!certificate_check(f, bad), "accepted a tampered remainder");
      if (!cert.summands.empty()) {
        bad = cert;
        bad.summands.back().multiplier = bad.summands.back().multiplier + P("1");
        o.require(!certificate_check(f, bad), "accepted a tampered multiplier");
        ++tampered;
      }
    }
    o.require(tampered >= 100, "too few nontrivial certificates");
    return o;
  });

  criterion(10, "symmetric vs classical membership", 0, [] {
    Outcome o;
    auto const intro = Ps({"x1 + x2", "x1*x2"});
    auto const x1 = P("x1");
    o.require(!oracle::classical_membership(x1, oracle::TruncatedIdeal<Rational>{intro, 2}),
              "x1 should not be a classical member at M = 2");
    o.require(is_member(x1, symmetric_gb(intro).basis).member, "x1 should be a symmetric member");
    Rng rng(1001);
    int queries = 0, members = 0;
    for (int k = 0; k < 200 && o.ok; ++k) {
      auto const r = membership_instance(rng, queries, members);
      o.require(r.ok, r.note);
    }
    o.require(members > 0 && members < queries, "queries did not cover both outcomes");
    if (o.ok)
      o.note = std::to_string(queries) + " queries, " + std::to_string(members) + " members";
    return o;
  });

  criterion(11, "shift relation families", 0, [] {
    Outcome o;
    Rng rng(1101);
    int n29 = 0, n210 = 0, n211 = 0, n214 = 0, n217 = 0;
    while (n29 < 200 || n210 < 200) {
      Index const n = uniform(rng, 1, 4);
      auto a = random_exponents(rng, n, 3);
      auto b = random_exponents(rng, n, 3);
      b.back() = std::max<Exponent>(b.back(), 1);
      auto const va = from_vector(a), vb = from_vector(b);
      if (!sym_compare(va, vb))
        continue;
      Exponent const c = uniform(rng, 0, 3);
      o.require(sym_compare(va, shift_up(vb, c)).has_value(), "one-shift family fails");
      ++n29;
      Exponent const lo = uniform(rng, 0, 3), hi = lo + uniform(rng, 0, 2);
      o.require(sym_compare(shift_up(va, lo), shift_up(vb, hi)).has_value(), "two-shift family fails");
      ++n210;
    }
    while (n211 < 200) {
      Index const n = uniform(rng, 1, 5);
      auto const u = from_vector(random_exponents(rng, n, 3));
      auto const v = from_vector(random_exponents(rng, n, 3));
      auto const wit = sym_compare(u, v);
      if (!wit)
        continue;
      Exponent const a = uniform(rng, 0, 3), b = a + uniform(rng, 0, 2);
      auto const ua = a ? u * Monomial::variable(n + 1, a) : u;
      auto const vb = b ? v * Monomial::variable(n + 1, b) : v;
      o.require(wit->sigma.degree() <= n, "witness leaves S_n");
      o.require(sym_compare(ua, vb).has_value(), "add-to-end family fails");
      ++n211;
    }
    while (n214 < 200) {
      auto const g = random_monomial(rng, 5, 3);
      auto const h = random_upward_image(rng, g);
      auto const k = random_upward_image(rng, h);
      auto const gh = upward_shift_between(g, h);
      auto const hk = upward_shift_between(h, k);
      o.require(gh && hk, "constructed shifts not recognized");
      if (!gh || !hk)
        continue;
      auto const gk = upward_shift_between(g, k);
      o.require(gk.has_value(), "shift relation not transitive");
      Permutation const composed = hk->shift * gh->shift;
      o.require(composed.apply(g) == k, "composed shift does not map g to k");
      o.require(is_upward_shift(composed, g), "composed shift is not upward on g");
      ++n214;
    }
    while (n217 < 200) {
      auto const g = random_monomial(rng, 6, 3);
      auto const h = random_upward_image(rng, g);
      auto const r = upward_shift_between(g, h);
      o.require(r.has_value(), "constructed shift not recognized");
      if (!r)
        continue;
      o.require(sym_compare(g, h).has_value(), "shift does not imply the order");
      o.require(r->shift.inverse().apply(h) == g, "inverse shift does not restore g");
      ++n217;
    }
    return o;
  });

  criterion(12, "parser round trip", 0, [] {
    Outcome o;
    Rng rng(1201);
    for (int k = 0; k < 1000; ++k) {
      auto const f = random_polynomial(rng, 7, 5, 6);
      auto const text = format_polynomial(f);
      o.require(P(text) == f, "round trip fails on " + text);
    }
    Poly const f1(std::vector<Term<Rational>>{{Rational(1), Monomial({{1, 3}, {3, 1}})},
                                               {Rational(1), Monomial({{1, 2}, {2, 3}})}});
    Poly const f2(std::vector<Term<Rational>>{{Rational(1), Monomial({{2, 2}, {3, 2}})},
                                               {Rational(-1), Monomial({{1, 1}, {2, 2}})},
                                               {Rational(1), Monomial({{1, 1}, {3, 2}})}});
    o.require(P("x1^3*x3 + x1^2*x2^3") == f1, "f1 parses differently");
    o.require(P("x2^2*x3^2 - x2^2*x1 + x1*x3^2") == f2, "f2 parses differently");
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
