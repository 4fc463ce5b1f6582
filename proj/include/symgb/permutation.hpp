#ifndef SYMGB_PERMUTATION_HPP
#define SYMGB_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace symgb
{

/// A finitary permutation of the positive integers.
///
/// Only the points up to the largest moved point are stored; everything above
/// is fixed. The inverse is kept alongside so both directions are O(1).
class Permutation
{
public:
  Permutation() = default;

  /// One-line notation: `images[k]` is the image of k + 1.
  explicit Permutation(std::vector<Index> images) : forward_(std::move(images))
  {
    inverse_.assign(forward_.size(), 0);
    for (std::size_t k = 0; k < forward_.size(); ++k) {
      Index const img = forward_[k];
      if (img == 0 || img > forward_.size() || inverse_[img - 1] != 0)
        throw std::invalid_argument("one-line notation is not a bijection of 1.." +
                                    std::to_string(forward_.size()));
      inverse_[img - 1] = static_cast<Index>(k + 1);
    }
    trim();
  }

  static Permutation transposition(Index a, Index b)
  {
    Index const n = std::max(a, b);
    std::vector<Index> img(n);
    for (Index k = 0; k < n; ++k)
      img[k] = k + 1;
    std::swap(img[a - 1], img[b - 1]);
    return Permutation(std::move(img));
  }

  /// Parses products of cycles such as "(32)(56)(341)", applied right to left.
  /// Single-digit entries may be juxtaposed; larger ones need ',' or ' '
  /// separators, as in "(10,11)". "()" and "(1)" denote the identity.
  static Permutation from_cycles(std::string_view text);

  Index operator()(Index i) const noexcept
  {
    return (i >= 1 && i <= forward_.size()) ? forward_[i - 1] : i;
  }
  Index preimage(Index i) const noexcept
  {
    return (i >= 1 && i <= inverse_.size()) ? inverse_[i - 1] : i;
  }

  /// Largest moved point, 0 for the identity.
  Index degree() const noexcept { return static_cast<Index>(forward_.size()); }
  bool is_identity() const noexcept { return forward_.empty(); }

  Permutation inverse() const
  {
    Permutation p;
    p.forward_ = inverse_;
    p.inverse_ = forward_;
    return p;
  }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(Permutation const &a, Permutation const &b)
  {
    Index const n = std::max(a.degree(), b.degree());
    std::vector<Index> img(n);
    for (Index i = 1; i <= n; ++i)
      img[i - 1] = a(b(i));
    return Permutation(std::move(img));
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;

  Monomial apply(Monomial const &m) const
  {
    std::vector<VarPower> moved;
    moved.reserve(m.support_size());
    for (auto const &p : m.powers())
      moved.push_back({(*this)(p.index), p.exponent});
    return Monomial(std::move(moved));
  }

  /// "[2 1 3]" listing images of 1..n, n = max(width, degree()).
  std::string one_line(Index width = 0) const
  {
    Index const n = std::max(width, degree());
    std::string s = "[";
    for (Index i = 1; i <= n; ++i) {
      if (i > 1)
        s += ' ';
      s += std::to_string((*this)(i));
    }
    return s + "]";
  }

  /// Disjoint cycle form, smallest point of each cycle first; "()" for identity.
  std::string cycles() const
  {
    if (is_identity())
      return "()";
    bool const wide = degree() >= 10;
    std::vector<bool> seen(degree() + 1, false);
    std::string s;
    for (Index start = 1; start <= degree(); ++start) {
      if (seen[start] || (*this)(start) == start)
        continue;
      s += '(';
      Index i = start;
      bool first = true;
      do {
        if (!first && wide)
          s += ',';
        s += std::to_string(i);
        seen[i] = true;
        first = false;
        i = (*this)(i);
      } while (i != start);
      s += ')';
    }
    return s;
  }

private:
  void trim()
  {
    while (!forward_.empty() && forward_.back() == forward_.size()) {
      forward_.pop_back();
      inverse_.pop_back();
    }
  }

  std::vector<Index> forward_;
  std::vector<Index> inverse_;
};

inline Permutation Permutation::from_cycles(std::string_view text)
{
  std::vector<std::vector<Index>> parsed;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size())
    throw ParseError("empty cycle notation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '('", pos);
    std::size_t const open = pos++;
    auto const close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw ParseError("unterminated cycle", open);
    std::string_view const body = text.substr(pos, close - pos);
    bool const separated = body.find_first_of(", ") != std::string_view::npos;
    std::vector<Index> cycle;
    std::size_t k = 0;
    while (k < body.size()) {
      char const c = body[k];
      if (c == ',' || c == ' ') {
        ++k;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("unexpected character in cycle", pos + k);
      std::size_t end = k + 1;
      if (separated)
        while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end])))
          ++end;
      Index const v = static_cast<Index>(std::stoul(std::string(body.substr(k, end - k))));
      if (v == 0)
        throw ParseError("cycle entries start at 1", pos + k);
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError("repeated entry in cycle", pos + k);
      cycle.push_back(v);
      k = end;
    }
    parsed.push_back(std::move(cycle));
    pos = close + 1;
    skip_ws();
  }

  Permutation result;
  for (auto const &cycle : parsed) {
    if (cycle.size() < 2)
      continue;
    Index const n = *std::max_element(cycle.begin(), cycle.end());
    std::vector<Index> img(n);
    for (Index i = 0; i < n; ++i)
      img[i] = i + 1;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    result = result * Permutation(std::move(img));
  }
  return result;
}

} // namespace symgb

#endif // SYMGB_PERMUTATION_HPP
