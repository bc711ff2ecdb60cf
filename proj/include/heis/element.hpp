#pragma once

#include "heis/detail/scanner.hpp"
#include "heis/integer.hpp"

#include <ostream>
#include <string>
#include <string_view>

/**
 * @file element.hpp
 * @brief Arithmetic in the discrete Heisenberg group Heis(3,Z).
 *
 * An element is the integer triple (a,b,c) standing for the unipotent matrix
 *
 *     | 1 a c |
 *     | 0 1 b |
 *     | 0 0 1 |
 *
 * so the product is (a1+a2, b1+b2, c1+c2+a1*b2). With x = (1,0,0),
 * y = (0,1,0) and z = (0,0,1) every element factors as
 * (a,b,c) = z^c * y^b * x^a. Note that x^a * y^b = (a,b,ab) instead; the
 * z^c y^b x^a order is used throughout the library.
 */

namespace heis {

struct element {
  integer a;
  integer b;
  integer c;

  friend bool operator==(const element &, const element &) = default;
};

/// Image of the abelianization G -> H + P, (a,b,c) -> (a,b).
struct ab_pair {
  integer h;
  integer p;

  friend bool operator==(const ab_pair &, const ab_pair &) = default;

  friend ab_pair operator+(const ab_pair &l, const ab_pair &r) { return {l.h + r.h, l.p + r.p}; }
};

inline element identity_element() { return {0, 0, 0}; }
inline element gen_x() { return {1, 0, 0}; }
inline element gen_y() { return {0, 1, 0}; }
inline element gen_z() { return {0, 0, 1}; }

inline element multiply(const element &g1, const element &g2)
{
  return {g1.a + g2.a, g1.b + g2.b, g1.c + g2.c + g1.a * g2.b};
}

inline element operator*(const element &g1, const element &g2) { return multiply(g1, g2); }

inline element inverse(const element &g) { return {-g.a, -g.b, g.a * g.b - g.c}; }

/// n-th power for any integer n: (na, nb, nc + C(n,2)ab).
inline element power(const element &g, const integer &n)
{
  return {n * g.a, n * g.b, n * g.c + choose2(n) * g.a * g.b};
}

/// g1 g2 g1^-1 g2^-1
inline element commutator(const element &g1, const element &g2)
{
  return g1 * g2 * inverse(g1) * inverse(g2);
}

inline ab_pair lambda_project(const element &g) { return {g.a, g.b}; }

inline bool is_central(const element &g) { return g.a == 0 && g.b == 0; }

// --- text form "(a,b,c)" ---

namespace detail {

inline element read_element(scanner &in)
{
  in.expect('(');
  element g;
  g.a = in.read_integer();
  in.expect(',');
  g.b = in.read_integer();
  in.expect(',');
  g.c = in.read_integer();
  in.expect(')');
  return g;
}

} // namespace detail

inline element parse_element(std::string_view text)
{
  detail::scanner in(text);
  element g = detail::read_element(in);
  in.expect_end();
  return g;
}

inline std::string to_string(const element &g)
{
  return "(" + g.a.str() + "," + g.b.str() + "," + g.c.str() + ")";
}

inline std::ostream &operator<<(std::ostream &os, const element &g) { return os << to_string(g); }

inline std::string to_string(const ab_pair &v) { return "(" + v.h.str() + "," + v.p.str() + ")"; }

} // namespace heis
