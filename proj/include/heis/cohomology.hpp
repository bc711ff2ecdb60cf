#pragma once

#include "heis/automorphism.hpp"
#include "heis/gl2.hpp"
#include "heis/lattice.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/**
 * @file cohomology.hpp
 * @brief 1-cocycles of GL(2,Z) with values in Z+Z, coboundaries, and the
 * torsor structure of the set of sections.
 *
 * A cocycle is a map phi with phi(g h) = phi(g) + g.phi(h) for the natural
 * matrix action. Since GL(2,Z) is generated by rho, tau and kappa, phi is
 * stored by its three generator values; any other value is obtained by
 * folding the cocycle identity along a word. A candidate triple is a cocycle
 * exactly when that fold vanishes on each defining relator.
 */

namespace heis {

class relator_violation : public std::domain_error {
public:
  relator_violation(std::string relator, const std::string &what)
      : std::domain_error(what), relator_(std::move(relator))
  {}

  const std::string &relator() const { return relator_; }

private:
  std::string relator_;
};

class inconsistent_system : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class invalid_section : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Generator values of a (candidate) cocycle.
struct cocycle_values {
  inner_vector rho;
  inner_vector tau;
  inner_vector kappa;

  const inner_vector &operator[](symbol s) const
  {
    return s == symbol::rho ? rho : s == symbol::tau ? tau : kappa;
  }

  friend bool operator==(const cocycle_values &, const cocycle_values &) = default;
};

inline const gl2_matrix &generator_matrix(symbol s)
{
  static const gl2_matrix a = matrix_a(), b = matrix_b(), d = matrix_d();
  return s == symbol::rho ? a : s == symbol::tau ? b : d;
}

namespace detail {

// phi(s^e) from phi(s) = v, by doubling phi(s^2k) = phi(s^k) + s^k phi(s^k).
inline inner_vector letter_value(gl2_matrix s, inner_vector v, integer e)
{
  if (e < 0) {
    s = mat_inverse(s);
    v = -(s * v); // phi(s^-1) = -s^-1 phi(s)
    e = -e;
  }
  gl2_matrix acc_m;
  inner_vector acc{0, 0};
  while (e > 0) {
    if (e % 2 != 0) {
      acc = acc + acc_m * v;
      acc_m = acc_m * s;
    }
    v = v + s * v;
    s = s * s;
    e >>= 1;
  }
  return acc;
}

inline inner_vector fold(const cocycle_values &phi, const generator_word &w)
{
  gl2_matrix g;
  inner_vector acc{0, 0};
  for (const auto &l : w.letters()) {
    acc = acc + g * letter_value(generator_matrix(l.sym), phi[l.sym], l.exp);
    g = g * letter_matrix(l.sym, l.exp);
  }
  return acc;
}

} // namespace detail

/// A triple of generator values that satisfies every relator.
class cocycle {
public:
  cocycle() = default; // the zero cocycle

  const cocycle_values &values() const { return values_; }
  const inner_vector &rho() const { return values_.rho; }
  const inner_vector &tau() const { return values_.tau; }
  const inner_vector &kappa() const { return values_.kappa; }

  friend bool operator==(const cocycle &, const cocycle &) = default;

  friend cocycle validate_cocycle(const cocycle_values &candidate);

private:
  explicit cocycle(cocycle_values v) : values_(std::move(v)) {}

  cocycle_values values_{{0, 0}, {0, 0}, {0, 0}};
};

/// Throws relator_violation naming the first relator the candidate fails.
inline cocycle validate_cocycle(const cocycle_values &candidate)
{
  for (const auto &r : presentation_relators()) {
    inner_vector value = detail::fold(candidate, r.word);
    if (value != inner_vector{0, 0})
      throw relator_violation(r.name, "not a cocycle: relator '" + r.name + "' evaluates to (" +
                                          value.p.str() + "," + value.q.str() + ")");
  }
  return cocycle(candidate);
}

inline cocycle validate_cocycle(inner_vector v_rho, inner_vector v_tau, inner_vector v_kappa)
{
  return validate_cocycle(cocycle_values{std::move(v_rho), std::move(v_tau), std::move(v_kappa)});
}

/// phi(eval_word(w)); depends only on the matrix.
inline inner_vector extend(const cocycle &phi, const generator_word &w)
{
  return detail::fold(phi.values(), w);
}

/// g -> g a - a.
inline cocycle coboundary(const inner_vector &a)
{
  auto delta = [&a](const gl2_matrix &g) { return g * a - a; };
  return validate_cocycle(delta(matrix_a()), delta(matrix_b()), delta(matrix_d()));
}

/// The unique a with coboundary(a) == phi.
inline inner_vector solve_coboundary(const cocycle &phi)
{
  // (A - I) a = (a.q, 0) and (B - I) a = (0, -a.p) pin a down.
  inner_vector a{-phi.tau().q, phi.rho().p};
  if (coboundary(a) != phi)
    throw inconsistent_system("cocycle is not a coboundary");
  return a;
}

/// Cocycle values flattened as (rho.p, rho.q, tau.p, tau.q, kappa.p, kappa.q).
inline int_vector flatten(const cocycle_values &v)
{
  return {v.rho.p, v.rho.q, v.tau.p, v.tau.q, v.kappa.p, v.kappa.q};
}

inline cocycle_values unflatten(const int_vector &x)
{
  return {{x.at(0), x.at(1)}, {x.at(2), x.at(3)}, {x.at(4), x.at(5)}};
}

struct cocycle_lattice_report {
  /// Row 2i, 2i+1: the fold along relator i as a linear form in the six unknowns.
  int_matrix relator_system;
  /// Z-basis of the solution lattice (the cocycles).
  std::vector<int_vector> basis;
  /// Images of the standard basis vectors under coboundary.
  std::vector<int_vector> coboundary_basis;
  bool equals_coboundary_lattice = false;

  std::size_t rank() const { return basis.size(); }
};

inline int_matrix relator_system()
{
  const auto &relators = presentation_relators();
  int_matrix sys(2 * relators.size(), 6);
  for (std::size_t j = 0; j < 6; ++j) {
    int_vector unit(6);
    unit[j] = 1;
    auto phi = unflatten(unit);
    for (std::size_t i = 0; i < relators.size(); ++i) {
      inner_vector column = detail::fold(phi, relators[i].word);
      sys(2 * i, j) = column.p;
      sys(2 * i + 1, j) = column.q;
    }
  }
  return sys;
}

inline cocycle_lattice_report cocycle_lattice()
{
  cocycle_lattice_report out;
  out.relator_system = relator_system();
  out.basis = integer_kernel(out.relator_system);
  out.coboundary_basis = {flatten(coboundary({1, 0}).values()),
                          flatten(coboundary({0, 1}).values())};
  out.equals_coboundary_lattice = lattice_equal(out.basis, out.coboundary_basis, 6);
  return out;
}

// --- sections ---

/**
 * A homomorphic section of the projection, given by the automorphisms it
 * assigns to rho, tau and kappa. Its value on an arbitrary matrix is the
 * product along any word for that matrix.
 */
struct section_data {
  automorphism rho;
  automorphism tau;
  automorphism kappa;

  const automorphism &operator[](symbol s) const
  {
    return s == symbol::rho ? rho : s == symbol::tau ? tau : kappa;
  }

  friend bool operator==(const section_data &, const section_data &) = default;
};

/// Generator data of section().
inline section_data standard_section()
{
  return {section_letter({symbol::rho, 1}), section_letter({symbol::tau, 1}),
          section_letter({symbol::kappa, 1})};
}

inline automorphism evaluate(const section_data &s, const generator_word &w)
{
  automorphism out = identity_automorphism();
  for (const auto &l : w.letters())
    out = out * power(s[l.sym], l.exp);
  return out;
}

inline automorphism evaluate(const section_data &s, const gl2_matrix &m)
{
  return evaluate(s, decompose(m));
}

/// Generator images project to A, B, D and each relator maps to the identity.
inline std::vector<relation_check> check_section_relations(const section_data &s)
{
  std::vector<relation_check> out;
  out.push_back({"projects to A, B, D", s.rho.m == matrix_a() && s.tau.m == matrix_b() &&
                                            s.kappa.m == matrix_d()});
  for (const auto &r : presentation_relators())
    out.push_back({r.name, evaluate(s, r.word) == identity_automorphism()});
  return out;
}

inline void validate_section(const section_data &s)
{
  for (const auto &check : check_section_relations(s))
    if (!check.holds)
      throw invalid_section("not a homomorphic section: '" + check.name + "' fails");
}

/// phi(g) = alpha2(g) alpha1(g)^-1, read as a vector of Ker(project).
inline cocycle section_difference(const section_data &alpha2, const section_data &alpha1)
{
  validate_section(alpha2);
  validate_section(alpha1);
  auto diff = [&](symbol s) { return kernel_vector(alpha2[s] * invert(alpha1[s])); };
  return validate_cocycle(diff(symbol::rho), diff(symbol::tau), diff(symbol::kappa));
}

/// g -> inner(phi(g)) sigma0(g).
inline section_data twist(const section_data &sigma0, const cocycle &phi)
{
  return {inner(phi.rho()) * sigma0.rho, inner(phi.tau()) * sigma0.tau,
          inner(phi.kappa()) * sigma0.kappa};
}

// --- text forms ---

inline cocycle_values parse_cocycle_values(std::string_view text)
{
  detail::scanner in(text);
  cocycle_values v;
  in.expect('{');
  in.expect("rho");
  in.expect('=');
  v.rho = detail::read_inner_vector(in);
  in.expect(',');
  in.expect("tau");
  in.expect('=');
  v.tau = detail::read_inner_vector(in);
  in.expect(',');
  in.expect("kappa");
  in.expect('=');
  v.kappa = detail::read_inner_vector(in);
  in.expect('}');
  in.expect_end();
  return v;
}

inline std::string to_string(const cocycle_values &v)
{
  return "{rho=" + to_string(v.rho) + ", tau=" + to_string(v.tau) + ", kappa=" +
         to_string(v.kappa) + "}";
}

inline std::string to_string(const cocycle &phi) { return to_string(phi.values()); }

inline std::ostream &operator<<(std::ostream &os, const cocycle &phi) { return os << to_string(phi); }

/// "{rho=<aut>, tau=<aut>, kappa=<aut>}"
inline section_data parse_section_data(std::string_view text)
{
  detail::scanner in(text);
  in.expect('{');
  in.expect("rho");
  in.expect('=');
  automorphism r = detail::read_automorphism(in);
  in.expect(',');
  in.expect("tau");
  in.expect('=');
  automorphism t = detail::read_automorphism(in);
  in.expect(',');
  in.expect("kappa");
  in.expect('=');
  automorphism k = detail::read_automorphism(in);
  in.expect('}');
  in.expect_end();
  return {std::move(r), std::move(t), std::move(k)};
}

inline std::string to_string(const section_data &s)
{
  return "{rho=" + to_string(s.rho) + ", tau=" + to_string(s.tau) + ", kappa=" +
         to_string(s.kappa) + "}";
}

} // namespace heis
