// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "heis/heis.hpp"
#include "heis/random.hpp"
#include "heis/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace heis;

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0)
{
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

// Collects the first failure message of a criterion.
struct outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what)
  {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

outcome group_axioms()
{
  outcome o;
  sampler s(1);
  auto e = identity_element();
  auto t0 = clock_type::now();
  for (int i = 0; i < 10'000 && o.ok; ++i) {
    auto g = s.any_element(), h = s.any_element(), k = s.any_element();
    o.require((g * h) * k == g * (h * k), "associativity at " + to_string(g));
    o.require(g * e == g && e * g == g, "identity at " + to_string(g));
    o.require(g * inverse(g) == e && inverse(g) * g == e, "inverse at " + to_string(g));
  }
  double ms = ms_since(t0);
  o.require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
  if (o.ok)
    o.detail = "10000 triples in " + std::to_string(static_cast<long>(ms)) + " ms";
  return o;
}

outcome commutator_constant()
{
  outcome o;
  auto c = commutator(element{1, 0, 0}, element{0, 1, 0});
  o.require(c == element{0, 0, 1}, "got " + to_string(c));
  o.detail = o.ok ? "[(1,0,0),(0,1,0)] = " + to_string(c) : o.detail;
  return o;
}

outcome rd_homomorphism()
{
  outcome o;
  sampler s(3);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto d1 = s.coordinate(1'000'000), d2 = s.coordinate(1'000'000);
    o.require(compose(rd(d1), rd(d2)) == rd(d1 + d2),
              "rd(" + to_string(d1) + ") rd(" + to_string(d2) + ")");
  }
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto d = s.coordinate(1'000'000);
    auto g = s.any_element();
    element expected{g.a + d * g.b, g.b, g.c + g.b * (g.b - 1) * d / 2};
    o.require(apply(rd(d), g) == expected, "rd(" + to_string(d) + ") on " + to_string(g));
  }
  return o;
}

outcome relations()
{
  outcome o;
  auto a = rd(1), b = lower_shear(-1), d = reflection();
  auto id = identity_automorphism();
  o.require(a * b * a == b * a * b, "ABA = BAB");
  o.require(power(a * b * a, 4) == id, "(ABA)^4 = 1");
  o.require(d * a * invert(d) == invert(a), "DAD^-1 = A^-1");
  o.require(d * b * invert(d) == invert(b), "DBD^-1 = B^-1");
  o.require(d * d == id, "D^2 = 1");
  o.require(apply(a * b * a, {1, 0, 0}) == element{0, -1, 1}, "ABA(1,0,0)");
  o.require(apply(a * b * a, {0, 1, 0}) == element{1, 0, 0}, "ABA(0,1,0)");
  o.require(apply(d * a * invert(d), {0, 1, 0}) == element{-1, 1, 0}, "DAD^-1(0,1,0)");
  o.require(apply(d * b * invert(d), {1, 0, 0}) == element{1, 1, 0}, "DBD^-1(1,0,0)");
  for (const auto &c : check_presentation_relations())
    o.require(c.holds, "matrix relation " + c.name);
  return o;
}

outcome section_properties()
{
  outcome o;
  sampler s(5);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto m1 = s.any_matrix(), m2 = s.any_matrix();
    o.require(section(m1 * m2) == section(m1) * section(m2),
              "sigma(M1 M2) at " + to_string(m1) + ", " + to_string(m2));
  }
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto m = s.any_matrix();
    auto left = section(m, decompose_strategy::left_floor);
    o.require(left == section(m, decompose_strategy::right_nearest), "strategies differ at " + to_string(m));
    o.require(project(left) == m, "project(sigma(M)) at " + to_string(m));
  }
  return o;
}

outcome exactness()
{
  outcome o;
  sampler s(6);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    automorphism w{gl2_matrix::identity(), s.coordinate(), s.coordinate()};
    o.require(project(w) == gl2_matrix::identity(), "projection");
    o.require(w == inner({w.u, -w.r}), "kernel element " + to_string(w));
    o.require(kernel_vector(w) == inner_vector{w.u, -w.r}, "kernel vector of " + to_string(w));
  }
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto v1 = s.any_vector(), v2 = s.any_vector();
    o.require((inner(v1) == inner(v2)) == (v1 == v2), "theta at " + to_string(v1) + ", " + to_string(v2));
    o.require(kernel_vector(inner(v1)) == v1, "theta left inverse at " + to_string(v1));
    o.require(v1 == inner_vector{0, 0} || inner(v1) != identity_automorphism(), "theta kernel");
  }
  return o;
}

outcome normal_forms()
{
  outcome o;
  sampler s(7);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto w = s.any_automorphism();
    auto f = normal_form(w);
    o.require(from_normal_form(f) == w, "roundtrip at " + to_string(w));
    o.require(f.m == project(w) && normal_form(from_normal_form(f)).v == f.v, "uniqueness at " + to_string(w));
  }
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto g = s.any_matrix();
    auto v = s.any_vector();
    auto sg = section(g);
    o.require(sg * inner(v) * invert(sg) == inner(g * v), "naturality at " + to_string(g) + ", " + to_string(v));
  }
  return o;
}

outcome center_determinant()
{
  outcome o;
  sampler s(8);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto w = s.any_automorphism();
    o.require(apply(w, gen_z()) == element{0, 0, project(w).det()}, "center image of " + to_string(w));
    o.require(is_aut_plus(w) == (apply(w, gen_z()) == gen_z()), "Aut+ test for " + to_string(w));
  }
  return o;
}

outcome cohomology()
{
  outcome o;
  auto lattice = cocycle_lattice();
  o.require(lattice.rank() == 2, "rank " + std::to_string(lattice.rank()));
  o.require(lattice.equals_coboundary_lattice, "cocycle lattice differs from coboundaries");
  sampler s(9);
  auto sigma = standard_section();
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto a = s.any_vector();
    auto phi = coboundary(a);
    o.require(solve_coboundary(phi) == a, "solve at " + to_string(a));
    auto twisted = twist(sigma, phi);
    auto diff = section_difference(twisted, sigma);
    o.require(diff == phi, "twist/difference at " + to_string(a));
    o.require(twist(sigma, diff) == twisted, "difference/twist at " + to_string(a));
    bool valid = true;
    try {
      validate_cocycle(diff.values());
      validate_cocycle(section_difference(sigma, twisted).values());
    } catch (const std::exception &) {
      valid = false;
    }
    o.require(valid, "difference not a cocycle at " + to_string(a));
  }
  return o;
}

outcome word_engine()
{
  outcome o;
  sampler s(10);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    auto m = eval_word(s.any_word());
    o.require(eval_word(decompose(m)) == m, "left decomposition of " + to_string(m));
    o.require(eval_word(decompose(m, decompose_strategy::right_nearest)) == m,
              "right decomposition of " + to_string(m));
  }
  auto t0 = clock_type::now();
  auto r = verify::run({"all"}, 1000, 0);
  double ms = ms_since(t0);
  o.require(r.passed(), "verify all reported failures");
  o.require(ms < 30'000.0, "verify all took " + std::to_string(ms) + " ms");
  if (o.ok)
    o.detail = "verify all (" + std::to_string(r.suites.size()) + " suites, 1000 samples) in " +
               std::to_string(static_cast<long>(ms)) + " ms";
  return o;
}

} // namespace

int main()
{
  struct criterion {
    const char *title;
    std::function<outcome()> check;
  };
  const criterion criteria[] = {
      {"group axioms", group_axioms},
      {"commutator constant", commutator_constant},
      {"rd homomorphism and pointwise formula", rd_homomorphism},
      {"presentation relations and printed values", relations},
      {"section homomorphism and well-definedness", section_properties},
      {"exactness at Aut(H)", exactness},
      {"semidirect normal form and naturality", normal_forms},
      {"center and determinant", center_determinant},
      {"cocycle lattice, coboundaries and twists", cohomology},
      {"word engine and verify runtime", word_engine},
  };

  int failed = 0, index = 0;
  for (const auto &c : criteria) {
    ++index;
    outcome o;
    try {
      o = c.check();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "AC" << index << " " << c.title;
    if (!o.detail.empty())
      std::cout << ": " << o.detail;
    std::cout << "\n";
    failed += o.ok ? 0 : 1;
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
