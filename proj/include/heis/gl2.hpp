#pragma once

#include "heis/detail/scanner.hpp"
#include "heis/integer.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/**
 * @file gl2.hpp
 * @brief GL(2,Z) matrices, words in the generators rho, tau, kappa and their
 * decomposition.
 *
 * The generators are realized by
 *
 *     A = [[1,1],[0,1]]  (rho),  B = [[1,0],[-1,1]]  (tau),  D = [[-1,0],[0,1]]  (kappa)
 *
 * subject to rho tau rho = tau rho tau, (rho tau rho)^4 = 1,
 * kappa tau kappa^-1 = tau^-1, kappa rho kappa^-1 = rho^-1 and kappa^2 = 1.
 */

namespace heis {

class invalid_matrix : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// 2x2 integer matrix with determinant +1 or -1.
class gl2_matrix {
public:
  gl2_matrix() : gl2_matrix(1, 0, 0, 1, unchecked) {}

  gl2_matrix(integer m11, integer m12, integer m21, integer m22)
      : e_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)}
  {
    integer d = e_[0] * e_[3] - e_[1] * e_[2];
    if (d != 1 && d != -1)
      throw invalid_matrix("determinant " + d.str() + " is not +1 or -1");
  }

  static gl2_matrix identity() { return {}; }

  const integer &m11() const { return e_[0]; }
  const integer &m12() const { return e_[1]; }
  const integer &m21() const { return e_[2]; }
  const integer &m22() const { return e_[3]; }

  /// +1 or -1.
  int det() const { return e_[0] * e_[3] - e_[1] * e_[2] == 1 ? 1 : -1; }

  friend bool operator==(const gl2_matrix &, const gl2_matrix &) = default;

  friend gl2_matrix mat_multiply(const gl2_matrix &l, const gl2_matrix &r)
  {
    return {l.e_[0] * r.e_[0] + l.e_[1] * r.e_[2], l.e_[0] * r.e_[1] + l.e_[1] * r.e_[3],
            l.e_[2] * r.e_[0] + l.e_[3] * r.e_[2], l.e_[2] * r.e_[1] + l.e_[3] * r.e_[3],
            unchecked};
  }

  friend gl2_matrix mat_inverse(const gl2_matrix &m)
  {
    int d = m.det();
    return {d * m.e_[3], -d * m.e_[1], -d * m.e_[2], d * m.e_[0], unchecked};
  }

private:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  gl2_matrix(integer m11, integer m12, integer m21, integer m22, unchecked_t)
      : e_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)}
  {}

  std::array<integer, 4> e_;
};

inline gl2_matrix operator*(const gl2_matrix &l, const gl2_matrix &r) { return mat_multiply(l, r); }

inline gl2_matrix matrix_a() { return {1, 1, 0, 1}; }
inline gl2_matrix matrix_b() { return {1, 0, -1, 1}; }
inline gl2_matrix matrix_d() { return {-1, 0, 0, 1}; }

/// Square-and-multiply power; negative exponents go through the inverse.
inline gl2_matrix mat_power(gl2_matrix base, integer n)
{
  if (n < 0) {
    base = mat_inverse(base);
    n = -n;
  }
  gl2_matrix result;
  while (n > 0) {
    if (n % 2 != 0)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

// --- generator words ---

enum class symbol { rho, tau, kappa };

struct letter {
  symbol sym;
  integer exp;

  friend bool operator==(const letter &, const letter &) = default;
};

/// A^e, B^e or D^e in closed form.
inline gl2_matrix letter_matrix(symbol s, const integer &e)
{
  switch (s) {
  case symbol::rho:
    return {1, e, 0, 1};
  case symbol::tau:
    return {1, 0, -e, 1};
  case symbol::kappa:
    break;
  }
  return e % 2 != 0 ? matrix_d() : gl2_matrix::identity();
}

/**
 * Sequence of generator powers, read left to right as a matrix product.
 *
 * Exponents are never zero. Adjacent letters may share a symbol; use
 * normalized() for the reduced form. Relator words are kept unreduced since
 * reducing kappa^2 would erase it.
 */
class generator_word {
public:
  generator_word() = default;

  generator_word(std::initializer_list<letter> letters)
  {
    for (const auto &l : letters)
      push_back(l.sym, l.exp);
  }

  void push_back(symbol s, integer e)
  {
    if (e == 0)
      throw std::invalid_argument("generator word letters must have nonzero exponent");
    letters_.push_back({s, std::move(e)});
  }

  const std::vector<letter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  generator_word &operator+=(const generator_word &tail)
  {
    letters_.insert(letters_.end(), tail.letters_.begin(), tail.letters_.end());
    return *this;
  }

  friend generator_word operator+(generator_word head, const generator_word &tail)
  {
    head += tail;
    return head;
  }

  generator_word inverse() const
  {
    generator_word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->sym, -it->exp});
    return w;
  }

  generator_word repeated(std::size_t times) const
  {
    generator_word w;
    for (std::size_t i = 0; i < times; ++i)
      w += *this;
    return w;
  }

  /// Merges equal neighbours, drops trivial letters and reduces kappa
  /// exponents modulo 2 (to +1). Idempotent.
  generator_word normalized() const
  {
    generator_word w;
    auto &out = w.letters_;
    for (const auto &l : letters_) {
      if (!out.empty() && out.back().sym == l.sym)
        out.back().exp += l.exp;
      else
        out.push_back(l);
      auto &top = out.back();
      if (top.sym == symbol::kappa)
        top.exp = top.exp % 2 != 0 ? 1 : 0;
      if (top.exp == 0)
        out.pop_back();
    }
    return w;
  }

  bool is_normalized() const
  {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i > 0 && letters_[i].sym == letters_[i - 1].sym)
        return false;
      if (letters_[i].sym == symbol::kappa && letters_[i].exp != 1 && letters_[i].exp != -1)
        return false;
    }
    return true;
  }

  friend bool operator==(const generator_word &, const generator_word &) = default;

private:
  std::vector<letter> letters_;
};

inline generator_word rho(integer e = 1) { return {{symbol::rho, std::move(e)}}; }
inline generator_word tau(integer e = 1) { return {{symbol::tau, std::move(e)}}; }
inline generator_word kappa(integer e = 1) { return {{symbol::kappa, std::move(e)}}; }

inline gl2_matrix eval_word(const generator_word &w)
{
  gl2_matrix m;
  for (const auto &l : w.letters())
    m = m * letter_matrix(l.sym, l.exp);
  return m;
}

/// Number of kappa letters counted with exponent.
inline integer kappa_count(const generator_word &w)
{
  integer n = 0;
  for (const auto &l : w.letters())
    if (l.sym == symbol::kappa)
      n += l.exp;
  return n;
}

// --- decomposition ---

enum class decompose_strategy {
  /// Left multiplication by A^k, B^k with floor quotients on the first column.
  left_floor,
  /// Right multiplication by A^k, B^k with nearest-integer quotients on the bottom row.
  right_nearest,
};

namespace detail {

struct raw2x2 {
  integer m11, m12, m21, m22;
};

// rho tau rho = [[0,1],[-1,0]], of order 4.
inline generator_word quarter_turn() { return rho() + tau() + rho(); }

} // namespace detail

/// Word w with eval_word(w) == m. Not canonical.
inline generator_word decompose(const gl2_matrix &m,
                                decompose_strategy strategy = decompose_strategy::left_floor)
{
  detail::raw2x2 w{m.m11(), m.m12(), m.m21(), m.m22()};
  bool flip = m.det() == -1;

  if (strategy == decompose_strategy::left_floor) {
    // m = D * w, then m = L1^-1 ... Lk^-1 * R with R upper triangular.
    generator_word out;
    if (flip) {
      out += kappa();
      w.m11 = -w.m11;
      w.m12 = -w.m12;
    }
    while (w.m21 != 0) {
      if (w.m11 == 0) {
        // multiply by (rho tau rho)^-1 = [[0,-1],[1,0]]
        w = {-w.m21, -w.m22, w.m11, w.m12};
        out += detail::quarter_turn();
      } else if (abs(w.m11) >= abs(w.m21)) {
        integer q = floor_div(w.m11, w.m21);
        w.m11 -= q * w.m21;
        w.m12 -= q * w.m22;
        out += rho(q);
      } else {
        integer q = floor_div(w.m21, w.m11);
        w.m21 -= q * w.m11;
        w.m22 -= q * w.m12;
        out += tau(-q);
      }
    }
    // w = [[s,k],[0,s]] with s = +-1; -I = (rho tau rho)^2.
    if (w.m11 == -1) {
      out += detail::quarter_turn().repeated(2);
      w.m12 = -w.m12;
    }
    if (w.m12 != 0)
      out += rho(w.m12);
    return out.normalized();
  }

  // m = w * D, then m = R * Rk^-1 ... R1^-1.
  if (flip) {
    w.m11 = -w.m11;
    w.m21 = -w.m21;
  }
  std::vector<generator_word> trail;
  while (w.m21 != 0) {
    if (w.m22 == 0) {
      // multiply by rho tau rho = [[0,1],[-1,0]] on the right
      w = {-w.m12, w.m11, -w.m22, w.m21};
      trail.push_back(detail::quarter_turn().inverse());
    } else if (abs(w.m22) >= abs(w.m21)) {
      integer q = round_div(w.m22, w.m21);
      w.m12 -= q * w.m11;
      w.m22 -= q * w.m21;
      trail.push_back(rho(q));
    } else {
      integer q = round_div(w.m21, w.m22);
      w.m11 -= q * w.m12;
      w.m21 -= q * w.m22;
      trail.push_back(tau(-q));
    }
  }
  generator_word out;
  if (w.m11 == -1) {
    // -I = (tau rho tau)^2
    out += (tau() + rho() + tau()).repeated(2);
    w.m12 = -w.m12;
  }
  if (w.m12 != 0)
    out += rho(w.m12);
  for (auto it = trail.rbegin(); it != trail.rend(); ++it)
    out += *it;
  if (flip)
    out += kappa();
  return out.normalized();
}

// --- presentation ---

struct relator {
  std::string name;
  generator_word word;
};

/// The five defining relators, each a word equal to the identity.
inline const std::vector<relator> &presentation_relators()
{
  static const std::vector<relator> relators = {
      {"rho tau rho = tau rho tau", rho() + tau() + rho() + (tau() + rho() + tau()).inverse()},
      {"(rho tau rho)^4 = 1", detail::quarter_turn().repeated(4)},
      {"kappa tau kappa^-1 = tau^-1", kappa() + tau() + kappa(-1) + tau()},
      {"kappa rho kappa^-1 = rho^-1", kappa() + rho() + kappa(-1) + rho()},
      {"kappa^2 = 1", kappa() + kappa()},
  };
  return relators;
}

struct relation_check {
  std::string name;
  bool holds;
};

inline std::vector<relation_check> check_presentation_relations()
{
  std::vector<relation_check> out;
  for (const auto &r : presentation_relators())
    out.push_back({r.name, eval_word(r.word) == gl2_matrix::identity()});
  return out;
}

// --- text forms: "[[a,b],[c,d]]" and "A B^-2 D" ---

namespace detail {

inline gl2_matrix read_matrix(scanner &in)
{
  in.expect('[');
  in.expect('[');
  integer m11 = in.read_integer();
  in.expect(',');
  integer m12 = in.read_integer();
  in.expect(']');
  in.expect(',');
  in.expect('[');
  integer m21 = in.read_integer();
  in.expect(',');
  integer m22 = in.read_integer();
  in.expect(']');
  in.expect(']');
  try {
    return {std::move(m11), std::move(m12), std::move(m21), std::move(m22)};
  } catch (const invalid_matrix &e) {
    in.fail(e.what());
  }
}

} // namespace detail

inline gl2_matrix parse_matrix(std::string_view text)
{
  detail::scanner in(text);
  gl2_matrix m = detail::read_matrix(in);
  in.expect_end();
  return m;
}

inline std::string to_string(const gl2_matrix &m)
{
  return "[[" + m.m11().str() + "," + m.m12().str() + "],[" + m.m21().str() + "," +
         m.m22().str() + "]]";
}

inline std::ostream &operator<<(std::ostream &os, const gl2_matrix &m) { return os << to_string(m); }

inline generator_word parse_word(std::string_view text)
{
  detail::scanner in(text);
  generator_word w;
  while (!in.at_end()) {
    symbol s{};
    switch (in.peek()) {
    case 'A':
      s = symbol::rho;
      break;
    case 'B':
      s = symbol::tau;
      break;
    case 'D':
      s = symbol::kappa;
      break;
    default:
      in.fail("expected generator letter A, B or D");
    }
    in.consume(in.peek());
    integer e = 1;
    if (in.consume('^')) {
      e = in.read_integer();
      if (e == 0)
        in.fail("zero exponent");
    }
    w.push_back(s, std::move(e));
  }
  return w;
}

inline std::string to_string(const generator_word &w)
{
  std::string out;
  for (const auto &l : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += l.sym == symbol::rho ? 'A' : l.sym == symbol::tau ? 'B' : 'D';
    if (l.exp != 1)
      out += "^" + l.exp.str();
  }
  return out;
}

inline std::ostream &operator<<(std::ostream &os, const generator_word &w) { return os << to_string(w); }

} // namespace heis
