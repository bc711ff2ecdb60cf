#pragma once

#include "heis/heis.hpp"
#include "heis/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

// Command-line front end: heis-aut <elem|aut|gl2|cocycle|verify> ...
//
// Exit codes: 0 success, 1 usage or parse error (including values that fail
// validation), 2 property violation.

namespace heis::cli {

using json = nlohmann::json;

enum exit_code : int { ok = 0, usage_error = 1, property_violation = 2 };

inline json to_json(const element &g) { return {{"a", g.a.str()}, {"b", g.b.str()}, {"c", g.c.str()}}; }

inline json to_json(const gl2_matrix &m)
{
  return json::array({json::array({m.m11().str(), m.m12().str()}),
                      json::array({m.m21().str(), m.m22().str()})});
}

inline json to_json(const inner_vector &v) { return json::array({v.p.str(), v.q.str()}); }

inline json to_json(const automorphism &w)
{
  return {{"M", to_json(w.m)}, {"r", w.r.str()}, {"u", w.u.str()}};
}

inline json to_json(const cocycle &phi)
{
  return {{"rho", to_json(phi.rho())}, {"tau", to_json(phi.tau())}, {"kappa", to_json(phi.kappa())}};
}

inline json to_json(const section_data &s)
{
  return {{"rho", to_json(s.rho)}, {"tau", to_json(s.tau)}, {"kappa", to_json(s.kappa)}};
}

inline json to_json(const verify::report &r)
{
  json suites = json::array();
  for (const auto &s : r.suites) {
    json failures = json::array();
    for (const auto &f : s.failures)
      failures.push_back({{"sample", f.sample},
                          {"property", f.property},
                          {"inputs", f.inputs},
                          {"expected", f.expected},
                          {"actual", f.actual}});
    json entry = {{"name", s.name},
                  {"passed", s.passed()},
                  {"samples", s.samples},
                  {"failures", s.failure_count},
                  {"counterexamples", failures},
                  {"elapsed_ms", s.elapsed_ms},
                  {"seed", s.seed}};
    if (s.minimal)
      entry["minimal"] = {{"sample", s.minimal->sample},
                          {"property", s.minimal->property},
                          {"inputs", s.minimal->inputs},
                          {"expected", s.minimal->expected},
                          {"actual", s.minimal->actual}};
    suites.push_back(std::move(entry));
  }
  return {{"seed", r.seed},       {"samples", r.samples},       {"passed", r.passed()},
          {"suites", suites},     {"elapsed_ms", r.elapsed_ms}};
}

namespace detail {

// Plain text goes out verbatim; --json wraps it together with structured fields.
class printer {
public:
  printer(std::ostream &out, const bool &as_json) : out_(out), json_(as_json) {}

  void emit(const std::string &text, json fields = json::object())
  {
    if (json_) {
      fields["result"] = text;
      out_ << fields.dump() << "\n";
    } else {
      out_ << text << "\n";
    }
  }

  template <class T>
  void value(const T &x)
  {
    emit(to_string(x), {{"value", to_json(x)}});
  }

  bool json_mode() const { return json_; }

private:
  std::ostream &out_;
  const bool &json_;
};

inline decompose_strategy parse_strategy(const std::string &name)
{
  if (name == "left")
    return decompose_strategy::left_floor;
  if (name == "right")
    return decompose_strategy::right_nearest;
  throw parse_error("unknown strategy '" + name + "' (expected left or right)");
}

inline section_data parse_section_arg(const std::string &text)
{
  if (text == "standard")
    return standard_section();
  return parse_section_data(text);
}

} // namespace detail

/// Runs one command line. args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact arithmetic in Heis(3,Z), its automorphism group and GL(2,Z) cocycles",
               "heis-aut"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured JSON output");
  detail::printer print(out, as_json);

  // Handlers run after parsing; each returns an exit code.
  std::function<int()> action;
  auto bind = [&action](CLI::App *cmd, std::function<int()> fn) {
    cmd->callback([&action, fn] { action = fn; });
  };

  // Positional string storage must outlive parsing.
  std::vector<std::string> s(4);
  std::string apply_to;
  std::string strategy = "left";
  std::string base = "standard";

  auto with_apply = [&](const automorphism &w) {
    if (apply_to.empty()) {
      print.value(w);
    } else {
      auto g = parse_element(apply_to);
      auto image = apply(w, g);
      print.emit(to_string(image), {{"automorphism", to_json(w)}, {"value", to_json(image)}});
    }
    return ok;
  };

  // --- elem ---
  auto *elem = app.add_subcommand("elem", "Heisenberg group elements \"(a,b,c)\"");
  elem->require_subcommand(1);
  {
    auto *c = elem->add_subcommand("mul", "g1 g2");
    c->add_option("g1", s[0])->required();
    c->add_option("g2", s[1])->required();
    bind(c, [&] { print.value(multiply(parse_element(s[0]), parse_element(s[1]))); return ok; });

    c = elem->add_subcommand("inv", "g^-1");
    c->add_option("g", s[0])->required();
    bind(c, [&] { print.value(inverse(parse_element(s[0]))); return ok; });

    c = elem->add_subcommand("pow", "g^n");
    c->add_option("g", s[0])->required();
    c->add_option("n", s[1])->required();
    bind(c, [&] { print.value(power(parse_element(s[0]), parse_integer(s[1]))); return ok; });

    c = elem->add_subcommand("comm", "g1 g2 g1^-1 g2^-1");
    c->add_option("g1", s[0])->required();
    c->add_option("g2", s[1])->required();
    bind(c, [&] { print.value(commutator(parse_element(s[0]), parse_element(s[1]))); return ok; });

    c = elem->add_subcommand("lambda", "abelianization (a,b)");
    c->add_option("g", s[0])->required();
    bind(c, [&] {
      auto v = lambda_project(parse_element(s[0]));
      print.emit(to_string(v), {{"value", json::array({v.h.str(), v.p.str()})}});
      return ok;
    });

    c = elem->add_subcommand("central", "whether g lies in the center");
    c->add_option("g", s[0])->required();
    bind(c, [&] {
      bool central = is_central(parse_element(s[0]));
      print.emit(central ? "true" : "false", {{"value", central}});
      return ok;
    });
  }

  // --- aut ---
  auto *aut = app.add_subcommand("aut", "automorphisms \"{M=[[m11,m12],[m21,m22]], r=<int>, u=<int>}\"");
  aut->require_subcommand(1);
  {
    auto *c = aut->add_subcommand("apply", "w(g)");
    c->add_option("w", s[0])->required();
    c->add_option("g", s[1])->required();
    bind(c, [&] { print.value(apply(parse_automorphism(s[0]), parse_element(s[1]))); return ok; });

    c = aut->add_subcommand("compose", "g -> w2(w1(g))");
    c->add_option("w2", s[0])->required();
    c->add_option("w1", s[1])->required();
    c->add_option("--apply", apply_to, "Apply the result to this element");
    bind(c, [&] { return with_apply(parse_automorphism(s[0]) * parse_automorphism(s[1])); });

    c = aut->add_subcommand("inverse", "w^-1");
    c->add_option("w", s[0])->required();
    c->add_option("--apply", apply_to, "Apply the result to this element");
    bind(c, [&] { return with_apply(invert(parse_automorphism(s[0]))); });

    c = aut->add_subcommand("section", "lift of a GL(2,Z) matrix");
    c->add_option("M", s[0])->required();
    c->add_option("--apply", apply_to, "Apply the result to this element");
    c->add_option("--strategy", strategy, "Decomposition strategy: left or right");
    bind(c, [&] { return with_apply(section(parse_matrix(s[0]), detail::parse_strategy(strategy))); });

    c = aut->add_subcommand("project", "matrix part M");
    c->add_option("w", s[0])->required();
    bind(c, [&] { print.value(project(parse_automorphism(s[0]))); return ok; });

    c = aut->add_subcommand("inner", "conjugation by (p,q,0)");
    c->add_option("v", s[0])->required();
    c->add_option("--apply", apply_to, "Apply the result to this element");
    bind(c, [&] { return with_apply(inner(parse_inner_vector(s[0]))); });

    c = aut->add_subcommand("normal-form", "w = inner(v) section(M)");
    c->add_option("w", s[0])->required();
    bind(c, [&] {
      auto f = normal_form(parse_automorphism(s[0]));
      print.emit(to_string(f), {{"v", to_json(f.v)}, {"M", to_json(f.m)}});
      return ok;
    });

    c = aut->add_subcommand("rd", "R_d: (a,b,c) -> (a+db, b, c+b(b-1)d/2)");
    c->add_option("d", s[0])->required();
    c->add_option("--apply", apply_to, "Apply the result to this element");
    bind(c, [&] { return with_apply(rd(parse_integer(s[0]))); });

    c = aut->add_subcommand("center", "c-coordinate of w((0,0,1))");
    c->add_option("w", s[0])->required();
    bind(c, [&] {
      auto c0 = center_image(parse_automorphism(s[0]));
      print.emit(c0.str(), {{"value", c0.str()}});
      return ok;
    });

    c = aut->add_subcommand("plus", "whether w lies in Aut+");
    c->add_option("w", s[0])->required();
    bind(c, [&] {
      bool plus = is_aut_plus(parse_automorphism(s[0]));
      print.emit(plus ? "true" : "false", {{"value", plus}});
      return ok;
    });
  }

  // --- gl2 ---
  auto *gl2 = app.add_subcommand("gl2", "GL(2,Z) matrices \"[[a,b],[c,d]]\" and words \"A B^-2 D\"");
  gl2->require_subcommand(1);
  {
    auto *c = gl2->add_subcommand("mul", "M1 M2");
    c->add_option("M1", s[0])->required();
    c->add_option("M2", s[1])->required();
    bind(c, [&] { print.value(parse_matrix(s[0]) * parse_matrix(s[1])); return ok; });

    c = gl2->add_subcommand("inv", "M^-1");
    c->add_option("M", s[0])->required();
    bind(c, [&] { print.value(mat_inverse(parse_matrix(s[0]))); return ok; });

    c = gl2->add_subcommand("eval-word", "matrix of a word in A, B, D");
    c->add_option("word", s[0])->required();
    bind(c, [&] { print.value(eval_word(parse_word(s[0]))); return ok; });

    c = gl2->add_subcommand("decompose", "word in A, B, D for a matrix");
    c->add_option("M", s[0])->required();
    c->add_option("--strategy", strategy, "left or right");
    bind(c, [&] {
      auto w = decompose(parse_matrix(s[0]), detail::parse_strategy(strategy));
      print.emit(to_string(w), {{"value", to_string(w)}});
      return ok;
    });

    c = gl2->add_subcommand("relations", "check the defining relators");
    bind(c, [&] {
      auto checks = check_presentation_relations();
      bool all = true;
      std::string text;
      json items = json::array();
      for (const auto &r : checks) {
        all = all && r.holds;
        if (!text.empty())
          text += "\n";
        text += (r.holds ? "PASS " : "FAIL ") + r.name;
        items.push_back({{"relator", r.name}, {"passed", r.holds}});
      }
      print.emit(text, {{"relators", items}, {"passed", all}});
      return all ? ok : property_violation;
    });
  }

  // --- cocycle ---
  auto *coc = app.add_subcommand("cocycle", "cocycles \"{rho=(p,q), tau=(p,q), kappa=(p,q)}\"");
  coc->require_subcommand(1);
  {
    auto *c = coc->add_subcommand("check", "validate a cocycle");
    c->add_option("phi", s[0])->required();
    bind(c, [&] {
      auto values = parse_cocycle_values(s[0]);
      try {
        validate_cocycle(values);
      } catch (const relator_violation &e) {
        print.emit(std::string("invalid: ") + e.what(), {{"valid", false}, {"relator", e.relator()}});
        return usage_error;
      }
      print.emit("valid", {{"valid", true}});
      return ok;
    });

    c = coc->add_subcommand("solve", "a with phi = coboundary(a)");
    c->add_option("phi", s[0])->required();
    bind(c, [&] {
      auto a = solve_coboundary(validate_cocycle(parse_cocycle_values(s[0])));
      print.emit("a=" + to_string(a), {{"a", to_json(a)}});
      return ok;
    });

    c = coc->add_subcommand("coboundary", "g -> g a - a");
    c->add_option("a", s[0])->required();
    bind(c, [&] { print.value(coboundary(parse_inner_vector(s[0]))); return ok; });

    c = coc->add_subcommand("extend", "phi evaluated on a word");
    c->add_option("phi", s[0])->required();
    c->add_option("word", s[1])->required();
    bind(c, [&] {
      print.value(extend(validate_cocycle(parse_cocycle_values(s[0])), parse_word(s[1])));
      return ok;
    });

    c = coc->add_subcommand("twist", "g -> inner(phi(g)) base(g)");
    c->add_option("phi", s[0])->required();
    c->add_option("--base", base, "Section \"{rho=<aut>, tau=<aut>, kappa=<aut>}\" or 'standard'");
    bind(c, [&] {
      auto sigma = detail::parse_section_arg(base);
      validate_section(sigma);
      print.value(twist(sigma, validate_cocycle(parse_cocycle_values(s[0]))));
      return ok;
    });

    c = coc->add_subcommand("diff", "cocycle alpha2(g) alpha1(g)^-1");
    c->add_option("alpha2", s[0])->required();
    c->add_option("alpha1", s[1])->required();
    bind(c, [&] {
      print.value(section_difference(detail::parse_section_arg(s[0]), detail::parse_section_arg(s[1])));
      return ok;
    });

    c = coc->add_subcommand("lattice", "solve the relator system for all cocycles");
    bind(c, [&] {
      auto lattice = cocycle_lattice();
      std::string text = "rank=" + std::to_string(lattice.rank()) + ", " +
                         (lattice.equals_coboundary_lattice ? "equals" : "differs from") +
                         " coboundary lattice";
      json basis = json::array();
      std::string line = "basis:";
      for (const auto &b : lattice.basis) {
        json v = json::array();
        std::string tuple;
        for (const auto &x : b) {
          v.push_back(x.str());
          tuple += (tuple.empty() ? "" : ",") + x.str();
        }
        basis.push_back(v);
        line += " (" + tuple + ")";
      }
      if (print.json_mode()) {
        print.emit(text, {{"rank", lattice.rank()},
                          {"equals_coboundary_lattice", lattice.equals_coboundary_lattice},
                          {"basis", basis}});
      } else {
        print.emit(text);
        print.emit(line);
      }
      return lattice.rank() == 2 && lattice.equals_coboundary_lattice ? ok : property_violation;
    });
  }

  // --- verify ---
  auto *ver = app.add_subcommand("verify", "seeded randomized verification suites");
  std::vector<std::string> suites;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  bool list = false;
  ver->add_option("suites", suites, "Suite names, or 'all' (default)");
  ver->add_option("--suite", suites, "Suite name (repeatable)");
  ver->add_option("--samples", samples, "Samples per suite")->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "Master seed");
  ver->add_flag("--list", list, "List suite names");
  bind(ver, [&] {
    if (list) {
      for (const auto &st : verify::catalog())
        out << st.name << "  " << st.description << "\n";
      return ok;
    }
    auto r = verify::run(suites, samples, seed);
    if (as_json)
      out << to_json(r).dump(2) << "\n";
    else
      verify::print(out, r);
    return r.passed() ? ok : property_violation;
  });

  std::vector<const char *> argv{"heis-aut"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? ok : usage_error;
  }

  try {
    return action ? action() : usage_error;
  } catch (const std::exception &e) {
    // parse_error, invalid_matrix, relator_violation, inconsistent_system,
    // invalid_section and bad verify arguments all land here.
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

} // namespace heis::cli
