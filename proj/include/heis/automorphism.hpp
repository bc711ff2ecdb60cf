#pragma once

#include "heis/element.hpp"
#include "heis/gl2.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

/**
 * @file automorphism.hpp
 * @brief Automorphisms of Heis(3,Z) and the splitting Aut(G) = (Z+Z) x| GL(2,Z).
 *
 * An automorphism is fixed by its values on the generators x = (1,0,0) and
 * y = (0,1,0). We store it as (M, r, u) with
 *
 *     w(x) = (m11, m21, r),    w(y) = (m12, m22, u),
 *
 * so M is its image under the projection Aut(G) -> GL(2,Z) and r, u are the
 * central offsets of the generator images. Every such triple with
 * det M = +-1 is an automorphism, and w(z) = (0,0,det M).
 */

namespace heis {

/// Class of (p,q,0) in G/C = Z+Z; also the coordinates of Ker(project).
struct inner_vector {
  integer p;
  integer q;

  friend bool operator==(const inner_vector &, const inner_vector &) = default;

  friend inner_vector operator+(const inner_vector &l, const inner_vector &r)
  {
    return {l.p + r.p, l.q + r.q};
  }
  friend inner_vector operator-(const inner_vector &l, const inner_vector &r)
  {
    return {l.p - r.p, l.q - r.q};
  }
  friend inner_vector operator-(const inner_vector &v) { return {-v.p, -v.q}; }
};

/// Natural action of GL(2,Z) on column vectors.
inline inner_vector operator*(const gl2_matrix &m, const inner_vector &v)
{
  return {m.m11() * v.p + m.m12() * v.q, m.m21() * v.p + m.m22() * v.q};
}

struct automorphism {
  gl2_matrix m;
  integer r;
  integer u;

  friend bool operator==(const automorphism &, const automorphism &) = default;
};

inline automorphism identity_automorphism() { return {gl2_matrix::identity(), 0, 0}; }

inline element image_of_x(const automorphism &w) { return {w.m.m11(), w.m.m21(), w.r}; }
inline element image_of_y(const automorphism &w) { return {w.m.m12(), w.m.m22(), w.u}; }

/**
 * w(z^c y^b x^a) = w(z)^c w(y)^b w(x)^a, expanded:
 *
 *     (a m11 + b m12,  a m21 + b m22,
 *      det(M) c + a r + b u + C(a,2) m11 m21 + C(b,2) m12 m22 + a b m12 m21)
 */
inline element apply(const automorphism &w, const element &g)
{
  const auto &m = w.m;
  return {g.a * m.m11() + g.b * m.m12(), g.a * m.m21() + g.b * m.m22(),
          m.det() * g.c + g.a * w.r + g.b * w.u + choose2(g.a) * m.m11() * m.m21() +
              choose2(g.b) * m.m12() * m.m22() + g.a * g.b * m.m12() * m.m21()};
}

/// g -> outer(inner_(g)).
inline automorphism compose(const automorphism &outer, const automorphism &inner_)
{
  return {outer.m * inner_.m, apply(outer, image_of_x(inner_)).c,
          apply(outer, image_of_y(inner_)).c};
}

inline automorphism operator*(const automorphism &l, const automorphism &r) { return compose(l, r); }

inline automorphism invert(const automorphism &w)
{
  // The unknown offset enters apply() with coefficient det(M) = +-1.
  gl2_matrix mi = mat_inverse(w.m);
  int d = w.m.det();
  integer r = -d * apply(w, element{mi.m11(), mi.m21(), 0}).c;
  integer u = -d * apply(w, element{mi.m12(), mi.m22(), 0}).c;
  return {std::move(mi), std::move(r), std::move(u)};
}

inline automorphism power(automorphism base, integer n)
{
  if (n < 0) {
    base = invert(base);
    n = -n;
  }
  automorphism result = identity_automorphism();
  while (n > 0) {
    if (n % 2 != 0)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

/// R_d: (a,b,c) -> (a + d b, b, c + b(b-1)d/2).
inline automorphism rd(const integer &d) { return {{1, d, 0, 1}, 0, 0}; }

/// [[1,0],[d,1]]: (a,b,c) -> (a, d a + b, c + a(a-1)d/2).
inline automorphism lower_shear(const integer &d) { return {{1, 0, d, 1}, 0, 0}; }

/// Lift of D: (a,b,c) -> (-a, b, -c - b).
inline automorphism reflection() { return {matrix_d(), 0, -1}; }

/// Conjugation g -> h g h^-1 by h = (p,q,0): (a,b,c) -> (a, b, c + p b - q a).
inline automorphism inner(const inner_vector &v) { return {gl2_matrix::identity(), -v.q, v.p}; }

/// Projection Aut(G) -> GL(2,Z).
inline const gl2_matrix &project(const automorphism &w) { return w.m; }

/// Automorphism assigned to one generator power by the section.
inline automorphism section_letter(const letter &l)
{
  switch (l.sym) {
  case symbol::rho:
    return rd(l.exp);
  case symbol::tau:
    return lower_shear(-l.exp);
  case symbol::kappa:
    break;
  }
  return l.exp % 2 != 0 ? reflection() : identity_automorphism();
}

inline automorphism section_of_word(const generator_word &w)
{
  automorphism out = identity_automorphism();
  for (const auto &l : w.letters())
    out = out * section_letter(l);
  return out;
}

/// The homomorphic section GL(2,Z) -> Aut(G) glued from R_d, the lower
/// shears and the reflection. Independent of the decomposition used.
inline automorphism section(const gl2_matrix &m,
                            decompose_strategy strategy = decompose_strategy::left_floor)
{
  return section_of_word(decompose(m, strategy));
}

/// For w with project(w) == I, the vector v with w == inner(v).
inline inner_vector kernel_vector(const automorphism &w) { return {w.u, -w.r}; }

struct semidirect_form {
  inner_vector v;
  gl2_matrix m;

  friend bool operator==(const semidirect_form &, const semidirect_form &) = default;
};

/// Unique (v, M) with w == inner(v) * section(M).
inline semidirect_form normal_form(const automorphism &w)
{
  automorphism residual = w * invert(section(w.m));
  return {kernel_vector(residual), w.m};
}

inline automorphism from_normal_form(const semidirect_form &f) { return inner(f.v) * section(f.m); }

/// c-coordinate of w((0,0,1)); always det(M).
inline integer center_image(const automorphism &w) { return apply(w, gen_z()).c; }

inline bool is_aut_plus(const automorphism &w) { return w.m.det() == 1; }

// --- text forms ---

namespace detail {

inline inner_vector read_inner_vector(scanner &in)
{
  in.expect('(');
  inner_vector v;
  v.p = in.read_integer();
  in.expect(',');
  v.q = in.read_integer();
  in.expect(')');
  return v;
}

inline automorphism read_automorphism(scanner &in)
{
  in.expect('{');
  in.expect('M');
  in.expect('=');
  gl2_matrix m = read_matrix(in);
  in.expect(',');
  in.expect('r');
  in.expect('=');
  integer r = in.read_integer();
  in.expect(',');
  in.expect('u');
  in.expect('=');
  integer u = in.read_integer();
  in.expect('}');
  return {std::move(m), std::move(r), std::move(u)};
}

} // namespace detail

inline inner_vector parse_inner_vector(std::string_view text)
{
  detail::scanner in(text);
  inner_vector v = detail::read_inner_vector(in);
  in.expect_end();
  return v;
}

inline std::string to_string(const inner_vector &v)
{
  return "(" + v.p.str() + "," + v.q.str() + ")";
}

inline std::ostream &operator<<(std::ostream &os, const inner_vector &v) { return os << to_string(v); }

inline automorphism parse_automorphism(std::string_view text)
{
  detail::scanner in(text);
  automorphism w = detail::read_automorphism(in);
  in.expect_end();
  return w;
}

inline std::string to_string(const automorphism &w)
{
  return "{M=" + to_string(w.m) + ", r=" + w.r.str() + ", u=" + w.u.str() + "}";
}

inline std::ostream &operator<<(std::ostream &os, const automorphism &w) { return os << to_string(w); }

inline std::string to_string(const semidirect_form &f)
{
  return "v=" + to_string(f.v) + ", M=" + to_string(f.m);
}

inline std::ostream &operator<<(std::ostream &os, const semidirect_form &f) { return os << to_string(f); }

} // namespace heis
