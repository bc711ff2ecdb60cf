#pragma once

#include "heis/automorphism.hpp"
#include "heis/cohomology.hpp"
#include "heis/element.hpp"
#include "heis/gl2.hpp"
#include "heis/random.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

/**
 * @file verify.hpp
 * @brief Seeded randomized verification of every algebraic law the library
 * relies on. Each suite draws from its own generator, derived from the
 * master seed and the suite name, so results do not depend on which other
 * suites were selected.
 */

namespace heis::verify {

struct failure {
  std::size_t sample = 0;
  std::string property;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct suite_report {
  std::string name;
  std::size_t samples = 0;
  std::size_t failure_count = 0;
  std::vector<failure> failures; // first few, in sample order
  std::optional<failure> minimal; // shortest printed inputs
  double elapsed_ms = 0;
  std::uint64_t seed = 0;

  bool passed() const { return failure_count == 0; }
};

struct report {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<suite_report> suites;
  double elapsed_ms = 0;

  bool passed() const
  {
    for (const auto &s : suites)
      if (!s.passed())
        return false;
    return true;
  }
};

class checker {
public:
  static constexpr std::size_t kept_failures = 5;

  explicit checker(suite_report &out) : out_(out) {}

  void at(std::size_t sample) { sample_ = sample; }

  template <class T>
  bool equal(std::string_view property, const T &expected, const T &actual, const std::string &inputs)
  {
    if (expected == actual)
      return true;
    record(property, inputs, show(expected), show(actual));
    return false;
  }

  bool holds(std::string_view property, bool ok, const std::string &inputs)
  {
    if (!ok)
      record(property, inputs, "true", "false");
    return ok;
  }

  /// Runs body, recording any exception it throws as a failure.
  template <class F>
  void guarded(std::string_view property, const std::string &inputs, F &&body)
  {
    try {
      body();
    } catch (const std::exception &e) {
      record(property, inputs, "no exception", e.what());
    }
  }

private:
  template <class T>
  static std::string show(const T &x)
  {
    if constexpr (std::is_same_v<T, bool>)
      return x ? "true" : "false";
    else if constexpr (std::is_arithmetic_v<T>)
      return std::to_string(x);
    else if constexpr (std::is_same_v<T, integer>)
      return x.str();
    else
      return to_string(x);
  }

  void record(std::string_view property, const std::string &inputs, std::string expected,
              std::string actual)
  {
    failure f{sample_, std::string(property), inputs, std::move(expected), std::move(actual)};
    ++out_.failure_count;
    if (!out_.minimal || f.inputs.size() < out_.minimal->inputs.size())
      out_.minimal = f;
    if (out_.failures.size() < kept_failures)
      out_.failures.push_back(std::move(f));
  }

  suite_report &out_;
  std::size_t sample_ = 0;
};

struct suite {
  std::string name;
  std::string description;
  /// False for suites that check a fixed finite list and ignore --samples.
  bool sampled = true;
  std::function<void(sampler &, checker &, std::size_t)> run;
};

namespace detail {

inline std::string join(std::initializer_list<std::string> parts)
{
  std::string out;
  for (const auto &p : parts) {
    if (!out.empty())
      out += ", ";
    out += p;
  }
  return out;
}

inline element iterate(const element &g, long n)
{
  element out = identity_element();
  element step = n >= 0 ? g : inverse(g);
  for (long i = 0; i < (n >= 0 ? n : -n); ++i)
    out = out * step;
  return out;
}

// w(z)^c w(y)^b w(x)^a by repeated multiplication.
inline element apply_by_expansion(const automorphism &w, long a, long b, long c)
{
  element wz{0, 0, w.m.det()};
  return iterate(wz, c) * iterate(image_of_y(w), b) * iterate(image_of_x(w), a);
}

inline std::uint64_t suite_seed(std::uint64_t seed, std::string_view name)
{
  std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
  for (char ch : name) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = seed ^ h; // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline cocycle random_cocycle(sampler &rng, const cocycle_lattice_report &lattice)
{
  int_vector x(6);
  for (const auto &b : lattice.basis) {
    integer k = rng.coordinate();
    for (std::size_t i = 0; i < 6; ++i)
      x[i] += k * b[i];
  }
  return validate_cocycle(unflatten(x));
}

} // namespace detail

// clang-format off
inline const std::vector<suite> &catalog()
{
  using detail::join;
  static const std::vector<suite> suites = {
    {"group-axioms", "associativity, identity and inverse laws in Heis(3,Z)", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto g1 = rng.any_element(), g2 = rng.any_element(), g3 = rng.any_element();
         auto in = join({to_string(g1), to_string(g2), to_string(g3)});
         ck.equal("associativity", (g1 * g2) * g3, g1 * (g2 * g3), in);
         ck.equal("left identity", g1, identity_element() * g1, in);
         ck.equal("right identity", g1, g1 * identity_element(), in);
         ck.equal("right inverse", identity_element(), g1 * inverse(g1), in);
         ck.equal("left inverse", identity_element(), inverse(g1) * g1, in);
       }
     }},
    {"power", "closed-form power against iterated multiplication, |n| <= 50", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto g = rng.any_element();
         long k = static_cast<long>(rng.uniform(-50, 50));
         ck.equal("power", detail::iterate(g, k), power(g, k), join({to_string(g), std::to_string(k)}));
       }
     }},
    {"generators", "z^c y^b x^a = (a,b,c) and [x,y] = z", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       ck.equal("[x,y] = z", gen_z(), commutator(gen_x(), gen_y()), "");
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto g = rng.any_element();
         ck.equal("z^c y^b x^a", g,
                  power(gen_z(), g.c) * power(gen_y(), g.b) * power(gen_x(), g.a), to_string(g));
       }
     }},
    {"center", "lambda is a homomorphism with kernel the center; centrality via x, y", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto g1 = rng.any_element(), g2 = rng.any_element();
         if (i % 2 == 0)
           g1.a = g1.b = 0;
         auto in = join({to_string(g1), to_string(g2)});
         ck.equal("lambda hom", lambda_project(g1) + lambda_project(g2), lambda_project(g1 * g2), in);
         ck.equal("kernel", lambda_project(g1) == ab_pair{0, 0}, is_central(g1), in);
         bool commutes = g1 * gen_x() == gen_x() * g1 && g1 * gen_y() == gen_y() * g1;
         ck.equal("commutes with x, y", commutes, is_central(g1), in);
       }
     }},
    {"words", "determinant parity and normalization of generator words", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w = rng.any_word();
         auto in = to_string(w);
         auto m = eval_word(w);
         ck.equal("det parity", kappa_count(w) % 2 == 0 ? 1 : -1, m.det(), in);
         auto nw = w.normalized();
         ck.holds("normalized form", nw.is_normalized(), in);
         ck.equal("normalization idempotent", nw, nw.normalized(), in);
         ck.equal("normalization preserves value", m, eval_word(nw), in);
       }
     }},
    {"decompose", "eval_word(decompose(M)) = M for both strategies", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto m = rng.any_matrix();
         auto in = to_string(m);
         ck.equal("left_floor roundtrip", m, eval_word(decompose(m, decompose_strategy::left_floor)), in);
         ck.equal("right_nearest roundtrip", m, eval_word(decompose(m, decompose_strategy::right_nearest)), in);
       }
     }},
    {"relations", "relators hold for matrices and the section; printed proof values", false,
     [](sampler &, checker &ck, std::size_t) {
       for (const auto &r : check_presentation_relations())
         ck.holds("matrix relator " + r.name, r.holds, "");
       auto a = section(matrix_a()), b = section(matrix_b()), d = section(matrix_d());
       auto id = identity_automorphism();
       ck.equal("ABA = BAB", b * a * b, a * b * a, "");
       ck.equal("(ABA)^4 = id", id, power(a * b * a, 4), "");
       ck.equal("DAD^-1 = A^-1", invert(a), d * a * invert(d), "");
       ck.equal("DBD^-1 = B^-1", invert(b), d * b * invert(d), "");
       ck.equal("D^2 = id", id, d * d, "");
       ck.equal("ABA(1,0,0)", element{0, -1, 1}, apply(a * b * a, gen_x()), "");
       ck.equal("BAB(1,0,0)", element{0, -1, 1}, apply(b * a * b, gen_x()), "");
       ck.equal("ABA(0,1,0)", element{1, 0, 0}, apply(a * b * a, gen_y()), "");
       ck.equal("BAB(0,1,0)", element{1, 0, 0}, apply(b * a * b, gen_y()), "");
       ck.equal("DAD^-1(0,1,0)", element{-1, 1, 0}, apply(d * a * invert(d), gen_y()), "");
       ck.equal("DAD^-1(1,0,0)", element{1, 0, 0}, apply(d * a * invert(d), gen_x()), "");
       ck.equal("DBD^-1(0,1,0)", element{0, 1, 0}, apply(d * b * invert(d), gen_y()), "");
       ck.equal("DBD^-1(1,0,0)", element{1, 1, 0}, apply(d * b * invert(d), gen_x()), "");
       for (const auto &r : check_section_relations(standard_section()))
         ck.holds("section relator " + r.name, r.holds, "");
     }},
    {"rd", "R_d is a homomorphism from Z and matches its defining formula", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         integer d1 = rng.uniform(-1'000'000, 1'000'000), d2 = rng.uniform(-1'000'000, 1'000'000);
         auto g = rng.any_element();
         auto in = join({d1.str(), d2.str(), to_string(g)});
         ck.equal("R_d1 R_d2 = R_(d1+d2)", rd(d1 + d2), rd(d1) * rd(d2), in);
         ck.equal("R_d formula", element{g.a + d1 * g.b, g.b, g.c + g.b * (g.b - 1) * d1 / 2},
                  apply(rd(d1), g), in);
       }
     }},
    {"apply-oracle", "closed-form apply against z^c y^b x^a expansion, |a|,|b|,|c| <= 30", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w = rng.any_automorphism();
         long a = static_cast<long>(rng.uniform(-30, 30)), b = static_cast<long>(rng.uniform(-30, 30)),
              c = static_cast<long>(rng.uniform(-30, 30));
         element g{a, b, c};
         ck.equal("apply", detail::apply_by_expansion(w, a, b, c), apply(w, g),
                  join({to_string(w), to_string(g)}));
       }
     }},
    {"aut-hom", "apply(w, g1 g2) = apply(w, g1) apply(w, g2)", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w = rng.any_automorphism();
         auto g1 = rng.any_element(), g2 = rng.any_element();
         ck.equal("homomorphism", apply(w, g1) * apply(w, g2), apply(w, g1 * g2),
                  join({to_string(w), to_string(g1), to_string(g2)}));
       }
     }},
    {"compose", "composition is pointwise; projection is multiplicative", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w2 = rng.any_automorphism(), w1 = rng.any_automorphism();
         auto g = rng.any_element();
         auto in = join({to_string(w2), to_string(w1), to_string(g)});
         ck.equal("pointwise", apply(w2, apply(w1, g)), apply(w2 * w1, g), in);
         ck.equal("project hom", project(w2) * project(w1), project(w2 * w1), in);
       }
     }},
    {"invert", "invert is a two-sided inverse", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w = rng.any_automorphism();
         ck.equal("w^-1 w = id", identity_automorphism(), invert(w) * w, to_string(w));
         ck.equal("w w^-1 = id", identity_automorphism(), w * invert(w), to_string(w));
       }
     }},
    {"section-hom", "section(M1 M2) = section(M1) section(M2) and project(section(M)) = M", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto m1 = rng.any_matrix(), m2 = rng.any_matrix();
         auto in = join({to_string(m1), to_string(m2)});
         ck.equal("homomorphism", section(m1) * section(m2), section(m1 * m2), in);
         ck.equal("project o section", m1, project(section(m1)), in);
       }
     }},
    {"section-well-defined", "section agrees across decomposition strategies and source words", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w = rng.any_word();
         auto m = eval_word(w);
         auto in = join({to_string(w), to_string(m)});
         auto s = section(m, decompose_strategy::left_floor);
         ck.equal("left_floor vs right_nearest", s, section(m, decompose_strategy::right_nearest), in);
         ck.equal("left_floor vs source word", s, section_of_word(w), in);
       }
     }},
    {"exactness", "Ker(project) = Im(inner), inner injective, inner is conjugation", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         automorphism w{gl2_matrix::identity(), rng.coordinate(), rng.coordinate()};
         ck.equal("kernel element is inner((u,-r))", inner({w.u, -w.r}), w, to_string(w));
         auto v1 = rng.any_vector(), v2 = rng.any_vector();
         auto g = rng.any_element();
         auto in = join({to_string(v1), to_string(v2), to_string(g)});
         ck.equal("injective", v1 == v2, inner(v1) == inner(v2), in);
         ck.equal("kernel_vector o inner", v1, kernel_vector(inner(v1)), in);
         ck.equal("project(inner) = I", gl2_matrix::identity(), project(inner(v1)), in);
         element h{v1.p, v1.q, 0};
         ck.equal("conjugation", h * g * inverse(h), apply(inner(v1), g), in);
       }
     }},
    {"normal-form", "(v, M) <-> w is a bijection", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w = rng.any_automorphism();
         ck.equal("w -> (v,M) -> w", w, from_normal_form(normal_form(w)), to_string(w));
         semidirect_form f{rng.any_vector(), rng.any_matrix()};
         ck.equal("(v,M) -> w -> (v,M)", f, normal_form(from_normal_form(f)), to_string(f));
       }
     }},
    {"naturality", "section(g) inner(v) section(g)^-1 = inner(g v)", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto g = rng.any_matrix();
         auto v = rng.any_vector();
         auto s = section(g);
         ck.equal("natural action", inner(g * v), s * inner(v) * invert(s),
                  join({to_string(g), to_string(v)}));
       }
     }},
    {"determinant", "w(0,0,1) = (0,0,det M); Aut+ is the stabilizer of (0,0,1)", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto w = rng.any_automorphism();
         auto in = to_string(w);
         ck.equal("center image", element{0, 0, w.m.det()}, apply(w, gen_z()), in);
         ck.equal("center_image", integer(w.m.det()), center_image(w), in);
         ck.equal("Aut+ criterion", apply(w, gen_z()) == gen_z(), is_aut_plus(w), in);
       }
     }},
    {"cocycle-identity", "extend(phi, w1 w2) = extend(phi, w1) + w1 extend(phi, w2)", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       auto lattice = cocycle_lattice();
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto phi = detail::random_cocycle(rng, lattice);
         auto w1 = rng.any_word(), w2 = rng.any_word();
         ck.equal("cocycle identity", extend(phi, w1) + eval_word(w1) * extend(phi, w2),
                  extend(phi, w1 + w2), join({to_string(phi), to_string(w1), to_string(w2)}));
       }
     }},
    {"word-independence", "extend depends only on the matrix", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       auto lattice = cocycle_lattice();
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto phi = detail::random_cocycle(rng, lattice);
         auto w = rng.any_word();
         auto m = eval_word(w);
         auto in = join({to_string(phi), to_string(w)});
         auto value = extend(phi, w);
         ck.equal("vs left_floor word", value, extend(phi, decompose(m)), in);
         ck.equal("vs right_nearest word", value,
                  extend(phi, decompose(m, decompose_strategy::right_nearest)), in);
         ck.equal("vs normalized word", value, extend(phi, w.normalized()), in);
       }
     }},
    {"coboundary", "coboundary is an injective homomorphism inverted by solve_coboundary", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto a = rng.any_vector(), b = rng.any_vector();
         auto in = join({to_string(a), to_string(b)});
         ck.guarded("solve", in, [&] {
           ck.equal("solve o coboundary", a, solve_coboundary(coboundary(a)), in);
           auto sum = coboundary(a + b).values();
           auto ca = coboundary(a).values(), cb = coboundary(b).values();
           ck.equal("additive", cocycle_values{ca.rho + cb.rho, ca.tau + cb.tau, ca.kappa + cb.kappa},
                    sum, in);
           ck.equal("injective", a == b, coboundary(a) == coboundary(b), in);
         });
       }
     }},
    {"lattice", "cocycle lattice has rank 2 and equals the coboundary lattice", false,
     [](sampler &, checker &ck, std::size_t) {
       auto lattice = cocycle_lattice();
       ck.equal("rank", std::size_t{2}, lattice.rank(), "");
       ck.holds("equals coboundary lattice", lattice.equals_coboundary_lattice, "");
       for (const auto &b : lattice.basis)
         ck.guarded("basis vector is a coboundary", "", [&] {
           solve_coboundary(validate_cocycle(unflatten(b)));
         });
     }},
    {"twist", "twist and section_difference are inverse; twisted sections satisfy the relators", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       auto sigma = standard_section();
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto a = rng.any_vector();
         auto in = to_string(a);
         ck.guarded("twist", in, [&] {
           auto phi = coboundary(a);
           auto twisted = twist(sigma, phi);
           for (const auto &r : check_section_relations(twisted))
             ck.holds("twisted relator " + r.name, r.holds, in);
           auto diff = section_difference(twisted, sigma);
           ck.equal("difference recovers phi", phi, diff, in);
           ck.equal("difference solves to a", a, solve_coboundary(diff), in);
         });
       }
     }},
    {"syntax", "parse(print(x)) = x for every value syntax", true,
     [](sampler &rng, checker &ck, std::size_t n) {
       for (std::size_t i = 0; i < n; ++i) {
         ck.at(i);
         auto g = rng.any_element();
         auto w = rng.any_word();
         auto aut = rng.any_automorphism();
         auto v = rng.any_vector();
         auto phi = coboundary(v);
         ck.guarded("parse", to_string(aut), [&] {
           ck.equal("element", g, parse_element(to_string(g)), to_string(g));
           ck.equal("matrix", aut.m, parse_matrix(to_string(aut.m)), to_string(aut.m));
           ck.equal("word", w, parse_word(to_string(w)), to_string(w));
           ck.equal("automorphism", aut, parse_automorphism(to_string(aut)), to_string(aut));
           ck.equal("vector", v, parse_inner_vector(to_string(v)), to_string(v));
           ck.equal("cocycle", phi.values(), parse_cocycle_values(to_string(phi)), to_string(phi));
         });
       }
     }},
  };
  return suites;
}
// clang-format on

inline std::vector<std::string> suite_names()
{
  std::vector<std::string> out;
  for (const auto &s : catalog())
    out.push_back(s.name);
  return out;
}

/// Runs the named suites ("all" selects every suite) in catalog order.
/// Throws std::invalid_argument on an unknown suite name or samples == 0.
inline report run(const std::vector<std::string> &selection, std::size_t samples, std::uint64_t seed)
{
  if (samples == 0)
    throw std::invalid_argument("samples must be at least 1");
  bool all = selection.empty();
  for (const auto &name : selection) {
    if (name == "all") {
      all = true;
      continue;
    }
    bool known = false;
    for (const auto &s : catalog())
      known = known || s.name == name;
    if (!known)
      throw std::invalid_argument("unknown suite '" + name + "'");
  }

  using clock = std::chrono::steady_clock;
  report out;
  out.seed = seed;
  out.samples = samples;
  auto start = clock::now();
  for (const auto &s : catalog()) {
    bool chosen = all;
    for (const auto &name : selection)
      chosen = chosen || name == s.name;
    if (!chosen)
      continue;
    suite_report rep;
    rep.name = s.name;
    rep.seed = seed;
    rep.samples = s.sampled ? samples : 1;
    sampler rng(detail::suite_seed(seed, s.name));
    checker ck(rep);
    auto t0 = clock::now();
    s.run(rng, ck, samples);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    out.suites.push_back(std::move(rep));
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return out;
}

inline void print(std::ostream &os, const report &r)
{
  os << "verify seed=" << r.seed << " samples=" << r.samples << "\n";
  std::size_t passed = 0;
  for (const auto &s : r.suites) {
    os << (s.passed() ? "PASS " : "FAIL ") << s.name << " samples=" << s.samples
       << " failures=" << s.failure_count << " elapsed_ms=" << static_cast<long>(s.elapsed_ms)
       << "\n";
    if (s.minimal) {
      const auto &f = *s.minimal;
      os << "  counterexample (sample " << f.sample << "): " << f.property << "\n"
         << "    inputs:   " << f.inputs << "\n"
         << "    expected: " << f.expected << "\n"
         << "    actual:   " << f.actual << "\n";
    }
    passed += s.passed() ? 1 : 0;
  }
  os << "summary: " << passed << "/" << r.suites.size() << " suites passed"
     << " elapsed_ms=" << static_cast<long>(r.elapsed_ms) << "\n";
}

} // namespace heis::verify
