#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "symk/alpha_trunc.hpp"
#include "symk/derivation.hpp"
#include "symk/divdiff.hpp"
#include "symk/elliptic.hpp"
#include "symk/parser.hpp"
#include "symk/suites.hpp"
#include "symk/wp_curve.hpp"

using namespace symk;
using nlohmann::json;

namespace {

// exit codes: 0 all checks pass, 1 verification failure or math error,
// 2 usage error (bad syntax, unknown suite, bad flags)
constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

Coeff parse_coeff(const std::string& text, const Field& f) {
  Registry scratch;
  scratch.close();
  RationalFunction value = parse_expr(text, scratch, f);
  if (!value.is_constant()) throw ParseError("expected a constant", 0);
  return value.constant_value();
}

std::vector<Coeff> parse_coeff_list(const std::string& text, const Field& f, std::size_t expect) {
  std::vector<Coeff> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!piece.empty()) out.push_back(parse_coeff(piece, f));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expect)
    throw ParseError("expected " + std::to_string(expect) + " comma-separated values", 0);
  return out;
}

std::map<VarId, Coeff> parse_assignment(const std::string& text, Registry& reg, const Field& f) {
  std::map<VarId, Coeff> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t eq = piece.find('=');
    if (eq == std::string::npos) throw ParseError("assignment entries look like name=value", start);
    std::string name = piece.substr(0, eq);
    auto id = reg.lookup(name);
    if (!id) throw ParseError("unknown variable '" + name + "' in assignment", start);
    out.emplace(*id, parse_coeff(piece.substr(eq + 1), f));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int emit_report(const Report& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_table();
  return rep.all_passed() ? kOk : kMathFailure;
}

void emit_value(const std::string& key, const std::string& value, bool as_json) {
  if (as_json)
    std::cout << json{{key, value}}.dump() << "\n";
  else
    std::cout << value << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symk: exact verification of symmetric-invariant field constructions"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 0x5eed0000u;
  std::string field_name = "Q";
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--seed", seed, "seed for randomized property sets");
  app.add_option("--field", field_name, "coefficient field: Q, F7, F9, F3^2, ...");

  // verify-suite
  std::string suite;
  auto* cmd_suite = app.add_subcommand("verify-suite", "run a verification suite");
  cmd_suite->add_option("--suite", suite, "suite name")->required();

  // eval
  std::string expr_text, assign_text;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression exactly");
  cmd_eval->add_option("--expr", expr_text, "expression")->required();
  cmd_eval->add_option("--assign", assign_text, "assignment var=value,...")->required();

  // parse
  std::string parse_text, perm_text;
  auto* cmd_parse = app.add_subcommand("parse", "parse and print the canonical form");
  cmd_parse->add_option("--expr", parse_text, "expression")->required();
  cmd_parse->add_option("--perm", perm_text, "apply a permutation in cycle notation, e.g. \"(u v)\"");

  // lie
  auto* cmd_lie = app.add_subcommand("lie", "derivation Lie algebra operations");
  cmd_lie->require_subcommand(1);
  std::string lie_f, lie_g, lie_basis;
  auto* lie_bracket = cmd_lie->add_subcommand("bracket", "[f d/dX, g d/dX]");
  lie_bracket->add_option("--f", lie_f)->required();
  lie_bracket->add_option("--g", lie_g)->required();
  auto* lie_closed = cmd_lie->add_subcommand("closed", "is the k-span closed under the bracket");
  lie_closed->add_option("--basis", lie_basis, "coefficient expressions separated by ';'")->required();
  auto* lie_nf = cmd_lie->add_subcommand("normal-form", "coordinate R with the basis in d/dR form");
  lie_nf->add_option("--basis", lie_basis, "coefficient expressions separated by ';'")->required();

  // divdiff
  int dd_n = 3, dd_points = 2;
  bool dd_symbolic = true;
  auto* cmd_dd = app.add_subcommand("divdiff", "divided-difference fixed elements");
  cmd_dd->add_option("--n", dd_n, "tower height");
  cmd_dd->add_option("--points", dd_points, "extra points");
  cmd_dd->add_flag("--symbolic", dd_symbolic, "fully symbolic parameters (default)");

  // ec
  auto* cmd_ec = app.add_subcommand("ec", "Weierstrass curve invariants");
  cmd_ec->require_subcommand(1);
  long long ec_char = 0;
  std::string ec_a, ec_w1, ec_w2, ec_aval;
  long long ec_q = 0;
  auto* ec_inv = cmd_ec->add_subcommand("invariants", "b-invariants, disc, j, twist datum");
  ec_inv->add_option("--p", ec_char, "field characteristic (0 for Q)");
  ec_inv->add_option("--a", ec_a, "a1,a2,a3,a4,a6")->required();
  auto* ec_iso = cmd_ec->add_subcommand("isomorphic", "brute-force isomorphism witness");
  ec_iso->add_option("--w1", ec_w1, "first quintuple a1,a2,a3,a4,a6")->required();
  ec_iso->add_option("--w2", ec_w2, "second quintuple")->required();
  auto* ec_beta = cmd_ec->add_subcommand("beta", "image basis and cokernel of b -> b^q - a b");
  ec_beta->add_option("--q", ec_q, "q, a power of the characteristic")->required();
  ec_beta->add_option("--a", ec_aval, "the coefficient a")->required();

  // wp
  auto* cmd_wp = app.add_subcommand("wp", "Weierstrass p-function subtraction formulas");
  cmd_wp->require_subcommand(1);
  cmd_wp->add_subcommand("verify", "symbolic identity suite");
  std::string wp_curve_s, wp_p1, wp_p2;
  auto* wp_sub = cmd_wp->add_subcommand("sub", "subtract two points, formulas vs chord law");
  wp_sub->add_option("--curve", wp_curve_s, "a,b of h^2 = 4g^3 + a g + b")->required();
  wp_sub->add_option("--p1", wp_p1, "g,h")->required();
  wp_sub->add_option("--p2", wp_p2, "g,h")->required();

  // alpha
  auto* cmd_alpha = app.add_subcommand("alpha", "truncated-ring automorphisms");
  cmd_alpha->require_subcommand(1);
  long long al_p = 2;
  int al_n = 1;
  std::string al_lambda = "X^2", al_vars = "u0,u1";
  auto* al_verify = cmd_alpha->add_subcommand("verify", "fixedness, composition, invertibility");
  al_verify->add_option("--p", al_p, "characteristic");
  al_verify->add_option("--n", al_n, "truncation exponent");
  al_verify->add_option("--lambda", al_lambda, "polynomial in X, exponents divisible by p^n");
  al_verify->add_option("--vars", al_vars, "comma-separated variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Field& field = Field::by_name(field_name);

    if (*cmd_suite) {
      if (!suites::is_suite_name(suite)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kUsage;
      }
      return emit_report(suites::run_suite(suite, seed), as_json);
    }

    if (*cmd_eval) {
      Registry reg;
      RationalFunction f = parse_expr(expr_text, reg, field);
      reg.close();
      auto at = parse_assignment(assign_text, reg, field);
      try {
        emit_value("value", f.eval(at).str(), as_json);
      } catch (const PoleError&) {
        std::cerr << "pole at assignment\n";
        return kMathFailure;
      } catch (const IncompleteAssignmentError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
      }
      return kOk;
    }

    if (*cmd_parse) {
      Registry reg;
      RationalFunction f = parse_expr(parse_text, reg, field);
      if (!perm_text.empty()) {
        reg.close();
        f = apply_substitution(f, parse_cycles(perm_text, reg));
      }
      emit_value("canonical", print_canonical(f, reg), as_json);
      return kOk;
    }

    if (*cmd_lie) {
      Registry reg;
      VarId x = reg.add("X");
      auto mk = [&](const std::string& s) { return lie::make_derivation(parse_expr(s, reg, field), x); };
      if (*lie_bracket) {
        lie::Derivation d = lie::bracket(mk(lie_f), mk(lie_g));
        emit_value("bracket", print_canonical(d.coeff, reg), as_json);
        return kOk;
      }
      std::vector<lie::Derivation> elems;
      std::size_t start = 0;
      while (start <= lie_basis.size()) {
        std::size_t semi = lie_basis.find(';', start);
        std::string piece =
            lie_basis.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (!piece.empty()) elems.push_back(mk(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      lie::LieBasis basis = lie::LieBasis::make(std::move(elems));
      if (*lie_closed) {
        bool closed = lie::is_closed(basis);
        emit_value("closed", closed ? "true" : "false", as_json);
        return kOk;
      }
      RationalFunction r =
          basis.size() == 2 ? lie::normal_form_2dim(basis) : lie::normal_form_3dim(basis);
      emit_value("R", print_canonical(r, reg), as_json);
      return kOk;
    }

    if (*cmd_dd) {
      (void)dd_symbolic;
      return emit_report(divdiff::verify_gn_invariants(dd_n, dd_points), as_json);
    }

    if (*cmd_ec) {
      const Field& K = *ec_iso || *ec_beta
                           ? field
                           : (ec_char == 0 ? Field::rationals() : Field::prime(ec_char));
      if (*ec_inv) {
        auto a = parse_coeff_list(ec_a, K, 5);
        ec::Quintuple<Coeff> w{a[0], a[1], a[2], a[3], a[4]};
        auto b = ec::b_invariants(w);
        json out = {{"field", K.name()}, {"b2", b.b2.str()},   {"b4", b.b4.str()},
                    {"b6", b.b6.str()},  {"b8", b.b8.str()},   {"disc", b.disc.str()}};
        if (!b.disc.is_zero()) {
          out["j"] = ec::j_invariant(w).str();
          if (w.a1.is_zero() && w.a2.is_zero() && w.a3.is_zero() && K.characteristic() != 2 &&
              K.characteristic() != 3) {
            auto [j, tw] = ec::short_form_invariants(w);
            (void)j;
            out["twist_n"] = tw.n;
            out["twist_gamma"] = tw.gamma.str();
          }
        } else {
          out["singular"] = true;
        }
        std::cout << (as_json ? out.dump() : out.dump(2)) << "\n";
        return kOk;
      }
      if (*ec_iso) {
        auto a1 = parse_coeff_list(ec_w1, K, 5);
        auto a2 = parse_coeff_list(ec_w2, K, 5);
        auto witness = ec::isomorphic_over(K, ec::Quintuple<Coeff>{a1[0], a1[1], a1[2], a1[3], a1[4]},
                                           ec::Quintuple<Coeff>{a2[0], a2[1], a2[2], a2[3], a2[4]});
        json out = {{"isomorphic", witness.has_value()}};
        if (witness)
          out["witness"] = {{"c", witness->c.str()},
                            {"d", witness->d.str()},
                            {"e", witness->e.str()},
                            {"f", witness->f.str()}};
        std::cout << out.dump() << "\n";
        return kOk;
      }
      // beta
      auto res = ec::beta_map(field, ec_q, parse_coeff(ec_aval, field));
      json basis = json::array();
      for (const auto& b : res.image_basis) basis.push_back(b.str());
      json out = {{"field", field.name()},
                  {"cokernel_size", res.cokernel_size},
                  {"image_basis", basis}};
      std::cout << out.dump() << "\n";
      return kOk;
    }

    if (*cmd_wp) {
      if (*wp_sub) {
        auto ab = parse_coeff_list(wp_curve_s, field, 2);
        auto c = wp::make_curve(ab[0], ab[1]);
        auto g1 = parse_coeff_list(wp_p1, field, 2);
        auto g2 = parse_coeff_list(wp_p2, field, 2);
        wp::Point p1 = wp::Point::affine(g1[0], g1[1]);
        wp::Point p2 = wp::Point::affine(g2[0], g2[1]);
        wp::Point diff = wp::chord_sub(p1, p2, c);
        json out = {{"on_curve_p1", wp::on_curve(p1, c)}, {"on_curve_p2", wp::on_curve(p2, c)}};
        out["chord"] =
            diff.infinity ? json("infinity") : json{{"g", diff.g.str()}, {"h", diff.h.str()}};
        if (p1.g != p2.g) {
          out["wp_x"] = wp::wp_sub_x(p1, p2, c).str();
          out["wp_y"] = wp::wp_sub_y(p1, p2, c).str();
        }
        std::cout << out.dump() << "\n";
        return kOk;
      }
      return emit_report(wp::verify_wp_identities(), as_json);
    }

    if (*cmd_alpha) {
      (void)al_verify;
      const Field& F = Field::prime(al_p);
      Registry reg;
      VarId sym = reg.add("X");
      RationalFunction lam_rf = parse_expr(al_lambda, reg, F);
      if (!lam_rf.is_polynomial()) throw ParseError("lambda must be a polynomial", 0);
      std::vector<VarId> vars;
      std::size_t start = 0;
      while (start <= al_vars.size()) {
        std::size_t comma = al_vars.find(',', start);
        std::string piece =
            al_vars.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) vars.push_back(reg.get_or_add(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (vars.size() < 2) throw ParseError("need at least two variables", 0);
      alpha::LambdaDatum d = alpha::make_lambda(al_p, al_n, lam_rf.num(), sym);
      Report rep;
      rep.suite = "alpha-cli";
      rep.records.push_back(run_check("fixed-generators", "determinant generators are fixed",
                                      [&](CheckRecord&) {
                                        std::vector<VarId> pair = {vars[0], vars[1]};
                                        return alpha::verify_fixed_generators({d}, pair);
                                      }));
      rep.records.push_back(run_check("composition", "xi_lambda . xi_lambda = xi_{2 lambda}",
                                      [&](CheckRecord&) {
                                        return alpha::compose_law_verify(d, d, vars);
                                      }));
      return emit_report(rep, as_json);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kMathFailure;
  }

  return kUsage;
}
