#ifndef SYMGB_CLI_HPP
#define SYMGB_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groebner.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "sym_order.hpp"

namespace symgb::cli
{

enum ExitCode : int
{
  success = 0,
  not_member = 1,
  invalid_input = 2,
  max_order_exceeded = 3,
  oracle_discrepancy = 4,
};

struct Options
{
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> basis;
  std::string field = "q";
  std::optional<Index> order_start;
  Index max_order = 20;
  unsigned confirm = 0;
  bool oracle = false;
  bool no_pair_pruning = false;
  std::optional<Index> reduce_order;
};

/// Largest truncation order the --oracle cross-check will enumerate.
inline constexpr Index oracle_limit = 7;

namespace detail
{

// Each token names a corpus file if one exists at that path, otherwise it
// is parsed as an inline polynomial.
template<Field F>
std::vector<Polynomial<F>> load(std::vector<std::string> const &tokens, typename F::context_type const &ctx,
                                bool *marked_basis = nullptr)
{
  std::vector<Polynomial<F>> out;
  bool marked = !tokens.empty();
  for (auto const &tok : tokens) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(tok, ec)) {
      std::ifstream in(tok);
      std::string first;
      std::getline(in, first);
      marked = marked && first.rfind(basis_marker, 0) == 0;
      in.clear();
      in.seekg(0);
      auto polys = read_corpus<F>(in, ctx);
      out.insert(out.end(), polys.begin(), polys.end());
    } else {
      marked = false;
      out.push_back(parse_polynomial<F>(tok, ctx));
    }
  }
  if (marked_basis)
    *marked_basis = marked;
  return out;
}

inline std::string format_pairs(std::vector<IndexPair> const &pairs)
{
  std::string s = "{";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k > 0)
      s += ", ";
    s += "(" + std::to_string(pairs[k].first) + "," + std::to_string(pairs[k].second) + ")";
  }
  return s + "}";
}

inline GBConfig config_from(Options const &opt)
{
  GBConfig cfg;
  cfg.start_order = opt.order_start;
  cfg.max_order = opt.max_order;
  cfg.confirm_iterations = opt.confirm;
  cfg.pair_pruning = !opt.no_pair_pruning;
  return cfg;
}

template<Field F>
void require_oracle_scale(Index m)
{
  if (m > oracle_limit)
    throw std::length_error("oracle scale exceeded: truncation order " + std::to_string(m) + " > " +
                            std::to_string(oracle_limit));
}

template<Field F>
int run_gb(Options const &opt, typename F::context_type const &ctx, std::ostream &out, std::ostream &err)
{
  auto const gens = load<F>(opt.inputs, ctx);
  if (gens.empty())
    throw std::invalid_argument("no generators given");
  GBReport<F> report;
  try {
    report = symmetric_gb(gens, config_from(opt));
  } catch (MaxOrderExceeded<F> const &e) {
    err << "error: " << e.what() << "; last truncated basis:\n";
    write_polynomials(err, e.last_basis().elements);
    return max_order_exceeded;
  }
  if (opt.oracle) {
    Index const m = report.orders_visited.back();
    require_oracle_scale<F>(m);
    auto const expected = oracle::classical_gb(oracle::orbit_ideal(gens, m));
    auto const actual = oracle::classical_gb(oracle::orbit_ideal(report.basis.elements, m));
    if (expected.elements != actual.elements) {
      err << "oracle discrepancy at order " << m << "\n# classical basis of the input orbit:\n";
      write_polynomials(err, expected.elements);
      err << "# classical basis of the computed basis orbit:\n";
      write_polynomials(err, actual.elements);
      return oracle_discrepancy;
    }
  }
  write_report(out, report, ctx.name());
  if (opt.oracle)
    out << "# oracle: agrees at order " << report.orders_visited.back() << '\n';
  return success;
}

template<Field F>
BasisSet<F> basis_for_membership(Options const &opt, typename F::context_type const &ctx, std::ostream &out)
{
  bool marked = false;
  auto polys = load<F>(opt.basis, ctx, &marked);
  if (polys.empty())
    throw std::invalid_argument("--basis is required");
  if (marked) {
    BasisSet<F> b;
    b.elements = std::move(polys);
    b.groebner = true;
    return b;
  }
  out << "# basis input is not a symgb basis file; computing a Gröbner basis first\n";
  return symmetric_gb(polys, config_from(opt)).basis;
}

template<Field F>
int run_member(Options const &opt, typename F::context_type const &ctx, std::ostream &out, std::ostream &err)
{
  auto const queries = load<F>(opt.inputs, ctx);
  if (queries.empty())
    throw std::invalid_argument("no polynomial to test");
  BasisSet<F> basis;
  try {
    basis = basis_for_membership<F>(opt, ctx, out);
  } catch (MaxOrderExceeded<F> const &e) {
    err << "error: " << e.what() << '\n';
    return max_order_exceeded;
  }
  bool all = true;
  for (auto const &f : queries) {
    auto const m = is_member(f, basis);
    if (opt.oracle) {
      Index bound = std::max<Index>({f.max_index(), ::symgb::detail::max_index_of<F>(basis.elements), 2});
      require_oracle_scale<F>(bound);
      bool const classical = oracle::classical_membership(f, oracle::orbit_ideal(basis.elements, bound));
      if (classical != m.member) {
        err << "oracle discrepancy for " << format_polynomial(f) << ": symmetric " << m.member << ", classical "
            << classical << " at order " << bound << '\n';
        return oracle_discrepancy;
      }
    }
    out << (m.member ? "true" : "false") << '\n';
    out << "# steps: " << m.certificate.summands.size() << '\n';
    out << "# remainder: " << format_polynomial(m.certificate.remainder) << '\n';
    all = all && m.member;
  }
  return all ? success : not_member;
}

template<Field F>
int run_reduce(Options const &opt, typename F::context_type const &ctx, std::ostream &out)
{
  auto const polys = load<F>(opt.inputs, ctx);
  auto const basis = load<F>(opt.basis, ctx);
  if (basis.empty())
    throw std::invalid_argument("--basis is required");
  for (auto const &f : polys) {
    auto const cert = opt.reduce_order ? reduce_by_orbit(f, basis, *opt.reduce_order) : reduce_full(f, basis);
    out << format_polynomial(cert.remainder) << '\n';
    out << "# steps: " << cert.summands.size() << '\n';
    for (auto const &s : cert.summands)
      out << "#   " << format_polynomial(s.multiplier) << " * " << s.sigma.cycles() << " ("
          << format_polynomial(s.generator) << ")\n";
  }
  return success;
}

inline int run_compare(Options const &opt, std::ostream &out)
{
  if (opt.inputs.size() != 2)
    throw std::invalid_argument("compare takes exactly two monomials");
  Monomial const v = parse_monomial(opt.inputs[0]);
  Monomial const w = parse_monomial(opt.inputs[1]);
  auto const witness = sym_compare(v, w);
  if (!witness) {
    out << "incomparable\n";
    return success;
  }
  out << witness->sigma.cycles() << '\n';
  out << "# one-line: " << witness->sigma.one_line(witness->order) << '\n';
  out << "# match: " << format_pairs(witness->match) << '\n';
  out << "# assignment: " << format_pairs(witness->assignment) << '\n';
  return success;
}

template<Field F>
int run_orbit_gb(Options const &opt, typename F::context_type const &ctx, std::ostream &out)
{
  std::vector<Monomial> gens;
  for (auto const &p : load<F>(opt.inputs, ctx)) {
    if (p.size() != 1)
      throw std::invalid_argument("orbit-gb takes monomials, got " + format_polynomial(p));
    gens.push_back(p.leading_monomial());
  }
  auto const bases = monomial_orbit_gb<F>(gens, ctx);
  out << "# full (" << bases.full.elements.size() << ")\n";
  write_polynomials(out, bases.full.elements);
  out << "# minimal (" << bases.minimal.elements.size() << ")" << (bases.minimal.heuristic_minimal ? " heuristic" : "")
      << '\n';
  write_polynomials(out, bases.minimal.elements);
  return success;
}

template<Field F>
int dispatch(Options const &opt, typename F::context_type const &ctx, std::ostream &out, std::ostream &err)
{
  if (opt.command == "gb")
    return run_gb<F>(opt, ctx, out, err);
  if (opt.command == "member")
    return run_member<F>(opt, ctx, out, err);
  if (opt.command == "reduce")
    return run_reduce<F>(opt, ctx, out);
  if (opt.command == "orbit-gb")
    return run_orbit_gb<F>(opt, ctx, out);
  return run_compare(opt, out);
}

} // namespace detail

/// Runs one CLI invocation; `args` excludes the program name.
inline int run_command(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Symmetric Gröbner bases in K[x1, x2, ...]", "symgb"};
  app.require_subcommand(1);
  Options opt;

  auto add_field = [&](CLI::App *sub) {
    sub->add_option("--field", opt.field, "coefficient field: q or fp:P")->capture_default_str();
  };
  auto add_gb_flags = [&](CLI::App *sub) {
    sub->add_option("--order-start", opt.order_start, "first truncation order");
    sub->add_option("--max-order", opt.max_order, "give up past this order")->capture_default_str();
    sub->add_option("--confirm", opt.confirm, "extra stable orders to demand")->capture_default_str();
    sub->add_flag("--no-pair-pruning", opt.no_pair_pruning, "process every critical pair");
  };

  auto *gb = app.add_subcommand("gb", "symmetric Gröbner basis of the generators");
  gb->add_option("inputs", opt.inputs, "corpus files or polynomials")->required();
  add_field(gb);
  add_gb_flags(gb);
  gb->add_flag("--oracle", opt.oracle, "cross-check with classical Buchberger");

  auto *member = app.add_subcommand("member", "ideal membership");
  member->add_option("inputs", opt.inputs, "polynomials or corpus files")->required();
  member->add_option("--basis", opt.basis, "basis file written by gb, or generators")->required();
  add_field(member);
  add_gb_flags(member);
  member->add_flag("--oracle", opt.oracle, "cross-check with classical Buchberger");

  auto *reduce = app.add_subcommand("reduce", "symmetric reduction by an ordered list");
  reduce->add_option("inputs", opt.inputs, "polynomials or corpus files")->required();
  reduce->add_option("--basis", opt.basis, "reducers (files or polynomials)")->required();
  reduce->add_option("--order", opt.reduce_order, "reduce by the S_N orbit instead");
  add_field(reduce);

  auto *compare = app.add_subcommand("compare", "decide v ⪯ w and print a witness");
  compare->add_option("inputs", opt.inputs, "two monomials")->required()->expected(2);

  auto *orbit = app.add_subcommand("orbit-gb", "Gröbner basis of a monomial ideal");
  orbit->add_option("inputs", opt.inputs, "monomials or corpus files")->required();
  add_field(orbit);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return success;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    if (opt.field == "q")
      return detail::dispatch<Rational>(opt, RationalContext{}, out, err);
    if (opt.field.rfind("fp:", 0) == 0) {
      std::uint64_t const p = std::stoull(opt.field.substr(3));
      return detail::dispatch<ModP>(opt, ModPContext(p), out, err);
    }
    throw std::invalid_argument("unknown field '" + opt.field + "' (use q or fp:P)");
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
}

} // namespace symgb::cli

#endif // SYMGB_CLI_HPP
