#ifndef SYMGB_IO_HPP
#define SYMGB_IO_HPP

#include <cctype>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

// Text syntax, whitespace-insensitive:
//
//   poly     := ['-'] term (('+' | '-') term)*
//   term     := coeff ['*' monomial] | monomial
//   coeff    := integer ['/' positive-integer]
//   monomial := var ('*' var)*
//   var      := 'x' index ['^' exponent]
//
// Indices and exponents are positive. Printing lists terms in decreasing
// lex order and variables by decreasing index: "x2^3*x1 + x2*x1".

namespace symgb
{

namespace detail
{

class Scanner
{
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end()
  {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek()
  {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c)
  {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  std::size_t position() const noexcept { return pos_; }

  std::string digits()
  {
    skip_ws();
    std::size_t const start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected a number", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t positive_small(char const *what)
  {
    std::size_t const at = (skip_ws(), pos_);
    auto const d = digits();
    mpz_class const v(d);
    if (v == 0)
      throw ParseError(std::string(what) + " must be positive", at);
    if (v > 0xffffffffUL)
      throw ParseError(std::string(what) + " is too large", at);
    return static_cast<std::uint32_t>(v.get_ui());
  }

  [[noreturn]] void fail(std::string const &what) const { throw ParseError(what, pos_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Monomial parse_monomial_tail(Scanner &s)
{
  std::vector<VarPower> powers;
  do {
    if (!s.accept('x'))
      s.fail("expected a variable 'x<index>'");
    Index const i = s.positive_small("variable index");
    Exponent e = 1;
    if (s.accept('^'))
      e = s.positive_small("exponent");
    powers.push_back({i, e});
  } while (s.accept('*'));
  return Monomial(std::move(powers));
}

} // namespace detail

/// Parses a single monomial ("x1^3*x2^2*x5^5" or "1").
inline Monomial parse_monomial(std::string_view text)
{
  detail::Scanner s(text);
  if (s.peek() == '1') {
    s.digits();
    if (!s.at_end())
      s.fail("trailing input after monomial");
    return {};
  }
  Monomial m = detail::parse_monomial_tail(s);
  if (!s.at_end())
    s.fail("trailing input after monomial");
  return m;
}

template<Field F>
Polynomial<F> parse_polynomial(std::string_view text, typename F::context_type const &ctx)
{
  detail::Scanner s(text);
  if (s.at_end())
    s.fail("empty polynomial");
  std::vector<Term<F>> terms;
  bool negative = s.accept('-');
  while (true) {
    mpq_class coeff(1);
    Monomial mono;
    char const c = s.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class const num(s.digits());
      mpz_class den(1);
      if (s.accept('/')) {
        std::size_t const at = s.position();
        den = mpz_class(s.digits());
        if (den == 0)
          throw ParseError("division by zero in coefficient", at);
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      if (s.accept('*'))
        mono = detail::parse_monomial_tail(s);
    } else if (c == 'x') {
      mono = detail::parse_monomial_tail(s);
    } else {
      s.fail("expected a term");
    }
    if (negative)
      coeff = -coeff;
    terms.push_back({ctx.from_rational(coeff), std::move(mono)});
    if (s.at_end())
      break;
    if (s.accept('+'))
      negative = false;
    else if (s.accept('-'))
      negative = true;
    else
      s.fail("expected '+' or '-'");
  }
  return Polynomial<F>(std::move(terms));
}

/// Variables by decreasing index, exponent 1 suppressed; "1" for the unit.
inline std::string format_monomial(Monomial const &m)
{
  if (m.is_one())
    return "1";
  std::string out;
  auto const powers = m.powers();
  for (auto it = powers.rbegin(); it != powers.rend(); ++it) {
    if (!out.empty())
      out += '*';
    out += 'x';
    out += std::to_string(it->index);
    if (it->exponent != 1) {
      out += '^';
      out += std::to_string(it->exponent);
    }
  }
  return out;
}

template<Field F>
std::string format_polynomial(Polynomial<F> const &f)
{
  if (f.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto const &t : f) {
    bool const neg = t.coefficient.is_negative();
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string const mag = t.coefficient.abs_string();
    if (t.monomial.is_one())
      out += mag;
    else if (mag == "1")
      out += format_monomial(t.monomial);
    else
      out += mag + "*" + format_monomial(t.monomial);
  }
  return out;
}

/// One polynomial per line; '#' starts a comment line, blank lines skipped.
template<Field F>
std::vector<Polynomial<F>> read_corpus(std::istream &in, typename F::context_type const &ctx)
{
  std::vector<Polynomial<F>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    try {
      out.push_back(parse_polynomial<F>(line, ctx));
    } catch (ParseError const &e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  return out;
}

template<Field F>
void write_polynomials(std::ostream &out, std::vector<Polynomial<F>> const &polys)
{
  for (auto const &p : polys)
    out << format_polynomial(p) << '\n';
}

/// First line of every basis file written by `symgb gb`.
inline constexpr std::string_view basis_marker = "# symgb basis";

template<Field F>
void write_report(std::ostream &out, GBReport<F> const &report, std::string const &field_name)
{
  out << basis_marker << '\n';
  out << "# field: " << field_name << '\n';
  out << "# orders-visited:";
  for (auto o : report.orders_visited)
    out << ' ' << o;
  out << '\n';
  for (std::size_t k = 0; k < report.orders_visited.size(); ++k)
    out << "# order " << report.orders_visited[k] << ": pairs " << report.pair_counts[k] << ", reductions "
        << report.reduction_counts[k] << '\n';
  out << "# stabilized: " << (report.stabilized ? "true" : "false") << '\n';
  out << "# basis-size: " << report.basis.elements.size() << '\n';
  write_polynomials(out, report.basis.elements);
}

} // namespace symgb

#endif // SYMGB_IO_HPP
