#include "symk/suites.hpp"

#include <algorithm>
#include <random>

#include "symk/alpha_trunc.hpp"
#include "symk/derivation.hpp"
#include "symk/divdiff.hpp"
#include "symk/elliptic.hpp"
#include "symk/invariant_fields.hpp"
#include "symk/parser.hpp"
#include "symk/wp_curve.hpp"

namespace symk::suites {

namespace {

Coeff random_coeff(std::mt19937_64& rng, const Field& f, int bound = 6) {
  if (f.kind() == Field::Kind::rationals) {
    std::uniform_int_distribution<long long> num(-bound, bound);
    std::uniform_int_distribution<long long> den(1, bound);
    return Coeff::rational(Rational(num(rng), den(rng)));
  }
  std::uniform_int_distribution<long long> pick(0, f.order() - 1);
  return all_elements(f)[(std::size_t)pick(rng)];
}

Polynomial random_poly(std::mt19937_64& rng, const Field& f, const std::vector<VarId>& vars,
                       int max_terms = 4, std::uint32_t max_deg = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> pickvar(0, vars.empty() ? 0 : vars.size() - 1);
  Polynomial p(f);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    if (!vars.empty()) {
      int factors = (int)deg(rng);
      for (int j = 0; j < factors; ++j) m = m * Monomial::var(vars[pickvar(rng)]);
    }
    p.add_term(m, random_coeff(rng, f));
  }
  return p;
}

Polynomial random_nonzero_poly(std::mt19937_64& rng, const Field& f, const std::vector<VarId>& vars,
                               int max_terms = 4, std::uint32_t max_deg = 3) {
  for (int tries = 0; tries < 100; ++tries) {
    Polynomial p = random_poly(rng, f, vars, max_terms, max_deg);
    if (!p.is_zero()) return p;
  }
  return Polynomial::one(f);
}

RationalFunction random_rf(std::mt19937_64& rng, const Field& f, const std::vector<VarId>& vars,
                           int max_terms = 3, std::uint32_t max_deg = 2) {
  return RationalFunction::make(random_poly(rng, f, vars, max_terms, max_deg),
                                random_nonzero_poly(rng, f, vars, max_terms, max_deg));
}

template <class Body>
void check(Report& rep, const std::string& id, const std::string& anchor, Body&& body) {
  rep.records.push_back(run_check(id, anchor, std::forward<Body>(body)));
}

std::vector<VariableMap> symmetric_group(std::vector<VarId> vars) {
  std::vector<VariableMap> out;
  std::vector<VarId> perm = vars;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::pair<VarId, VarId>> pairs;
    for (std::size_t i = 0; i < vars.size(); ++i) pairs.push_back({vars[i], perm[i]});
    out.push_back(VariableMap::from_pairs(pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Report criterion_identity_suite() { return inv::verify_identity_suite(); }

Report criterion_transposition_laws() {
  Report rep;
  rep.suite = "xi-transposition-laws";
  const Field& Q = Field::rationals();
  for (int which = 0; which < 2; ++which) {
    Registry reg;
    VarId x = reg.add("x"), y = reg.add("y"), z = reg.add("z");
    inv::XiChart chart = which == 0 ? inv::chart_c(Q, x, y) : inv::chart_d(Q, x, y, z);
    std::vector<VarId> aux;
    for (int i = 0; i < 5; ++i) aux.push_back(reg.add("u" + std::to_string(i)));
    inv::XiSpace space = inv::make_xi_space(reg, chart, aux);
    std::string tag = which == 0 ? "case-c" : "case-d";

    check(rep, tag + "-xu-law",
          "the transposition (x u) sends xi_v to xi_v/xi_u (and xi_u to its inverse)",
          [&](CheckRecord&) {
            for (VarId u : aux)
              for (VarId target : aux) {
                RationalFunction sym = RationalFunction::variable(Q, space.xi_symbol.at(target));
                RationalFunction img = inv::transposition_on_xi(space, inv::XiTransposition::xu, u, sym);
                RationalFunction xi_u = RationalFunction::variable(Q, space.xi_symbol.at(u));
                RationalFunction want = target == u ? xi_u.inverse() : sym / xi_u;
                if (img != want) return false;
              }
            return true;
          });
    check(rep, tag + "-xy-law", "the transposition (x y) sends xi_u to 1 - xi_u",
          [&](CheckRecord&) {
            for (VarId target : aux) {
              RationalFunction sym = RationalFunction::variable(Q, space.xi_symbol.at(target));
              RationalFunction img =
                  inv::transposition_on_xi(space, inv::XiTransposition::xy, aux[0], sym);
              if (img != RationalFunction::one(Q) - sym) return false;
            }
            return true;
          });
  }
  return rep;
}

Report criterion_cross_ratio_mobius() {
  Report rep;
  rep.suite = "cross-ratio";
  const Field& Q = Field::rationals();
  Registry reg;
  VarId t = reg.add("t"), u = reg.add("u"), v = reg.add("v"), w = reg.add("w");

  check(rep, "s4-orbit-six", "the S4 orbit of the cross-ratio is the classical six-element set",
        [&](CheckRecord& rec) {
          RationalFunction lambda = inv::cross_ratio(Q, t, u, v, w);
          auto orb = orbit(lambda, symmetric_group({t, u, v, w}));
          RationalFunction one = RationalFunction::one(Q);
          std::set<RationalFunction> classical = {lambda,
                                                  lambda.inverse(),
                                                  one - lambda,
                                                  (one - lambda).inverse(),
                                                  lambda / (lambda - one),
                                                  (lambda - one) / lambda};
          if (orb.size() != 6 || orb != classical) {
            rec.lhs = "orbit size " + std::to_string(orb.size());
            return false;
          }
          return true;
        });

  check(rep, "kd-mobius-invariance",
        "the cross-ratio is fixed by a fully symbolic Moebius substitution", [&](CheckRecord&) {
          auto kd = inv::make_generator(inv::InvariantGenerator::Family::kd, Q, {t, u, v, w});
          return inv::verify_group_invariance(kd, inv::GroupKind::mobius, reg);
        });

  check(rep, "kc-affine-invariance",
        "the affine generator is fixed by a fully symbolic affine substitution", [&](CheckRecord&) {
          auto kc = inv::make_generator(inv::InvariantGenerator::Family::kc, Q, {u, v, w});
          return inv::verify_group_invariance(kc, inv::GroupKind::affine, reg);
        });

  return rep;
}

Report criterion_lie(std::uint64_t seed) {
  Report rep;
  rep.suite = "lie";
  const Field& Q = Field::rationals();
  Registry reg;
  VarId x = reg.add("X");
  auto rf = [&](const std::string& s) { return parse_expr(s, reg, Q); };
  auto d = [&](const std::string& s) { return lie::make_derivation(rf(s), x); };

  check(rep, "sl2-closure", "the triple d/dX, X d/dX, X^2 d/dX closes under the bracket",
        [&](CheckRecord&) {
          return lie::is_closed(lie::LieBasis::make({d("1"), d("X"), d("X^2")}));
        });

  check(rep, "antisymmetry-jacobi", "bracket antisymmetry and the Jacobi identity, 100 seeded triples",
        [&](CheckRecord&) {
          std::mt19937_64 rng(seed ^ 0x11e);
          std::vector<VarId> vars = {x};
          for (int i = 0; i < 100; ++i) {
            lie::Derivation a = lie::make_derivation(random_rf(rng, Q, vars), x);
            lie::Derivation b = lie::make_derivation(random_rf(rng, Q, vars), x);
            lie::Derivation c = lie::make_derivation(random_rf(rng, Q, vars), x);
            if (lie::bracket(a, b).coeff != -lie::bracket(b, a).coeff) return false;
            RationalFunction jac = lie::bracket(a, lie::bracket(b, c)).coeff +
                                   lie::bracket(b, lie::bracket(c, a)).coeff +
                                   lie::bracket(c, lie::bracket(a, b)).coeff;
            if (!jac.is_zero()) return false;
          }
          return true;
        });

  check(rep, "normal-form-2dim", "the 2-dimensional standard basis recovers R = X",
        [&](CheckRecord& rec) {
          RationalFunction r = lie::normal_form_2dim(lie::LieBasis::make({d("1"), d("X")}));
          rec.lhs = r.str(reg);
          return r == rf("X");
        });

  check(rep, "normal-form-3dim", "the 3-dimensional standard basis recovers R = X",
        [&](CheckRecord& rec) {
          RationalFunction r = lie::normal_form_3dim(lie::LieBasis::make({d("1"), d("X"), d("X^2")}));
          rec.lhs = r.str(reg);
          return r == rf("X");
        });

  check(rep, "normal-form-conjugated",
        "the conjugated basis recovers R = X/(X+1) with bidirectional span equality",
        [&](CheckRecord& rec) {
          lie::LieBasis conj = lie::LieBasis::make({d("(X+1)^2"), d("X^2 + X"), d("X^2")});
          RationalFunction r = lie::normal_form_3dim(conj);
          rec.lhs = r.str(reg);
          return r == rf("X/(X+1)") && lie::span_equal(lie::standard_triple(r, x), conj.elements());
        });

  return rep;
}

Report criterion_divdiff(int max_n) {
  Report rep;
  rep.suite = "divdiff";
  for (int n = 0; n <= max_n; ++n) rep.append(divdiff::verify_gn_invariants(n, 2));

  // node symmetry of B^(s), s <= 3
  check(rep, "node-symmetry", "B^(s) is symmetric in the node pairs for s <= 3", [&](CheckRecord&) {
    Registry reg;
    const Field& Q = Field::rationals();
    divdiff::Context ctx = divdiff::make_context(reg, Q, 3, 1);
    for (int s = 1; s <= 3; ++s) {
      RationalFunction dd = divdiff::div_diff(ctx, 0, s);
      std::vector<int> idx((std::size_t)s);
      for (int i = 0; i < s; ++i) idx[(std::size_t)i] = i;
      do {
        std::vector<std::pair<VarId, VarId>> pairs;
        for (int i = 0; i < s; ++i) {
          pairs.push_back({ctx.node_a[(std::size_t)i], ctx.node_a[(std::size_t)idx[(std::size_t)i]]});
          pairs.push_back({ctx.node_b[(std::size_t)i], ctx.node_b[(std::size_t)idx[(std::size_t)i]]});
        }
        if (apply_substitution(dd, VariableMap::from_pairs(pairs)) != dd) return false;
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return true;
  });
  return rep;
}

Report criterion_elliptic(std::uint64_t seed) {
  Report rep;
  rep.suite = "ec";
  const Field& Q = Field::rationals();

  check(rep, "b8-relation", "4 b8 = b2 b6 - b4^2 holds identically in symbolic a1..a6",
        [&](CheckRecord&) {
          Registry reg;
          auto sym = [&](const char* n) { return RationalFunction::variable(Q, reg.add(n)); };
          ec::Quintuple<RationalFunction> w{sym("a1"), sym("a2"), sym("a3"), sym("a4"), sym("a6")};
          auto b = ec::b_invariants(w);
          RationalFunction four = RationalFunction::constant(Coeff::integer(Q, 4));
          return four * b.b8 == b.b2 * b.b6 - b.b4 * b.b4;
        });

  check(rep, "curve-y2-x3-minus-x", "y^2 = x^3 - x has j = 1728 and disc = 64",
        [&](CheckRecord& rec) {
          ec::Quintuple<Coeff> w{Coeff::zero(Q), Coeff::zero(Q), Coeff::zero(Q),
                                 Coeff::integer(Q, -1), Coeff::zero(Q)};
          auto b = ec::b_invariants(w);
          rec.lhs = ec::j_invariant(w).str() + ", disc " + b.disc.str();
          return ec::j_invariant(w) == Coeff::integer(Q, 1728) && b.disc == Coeff::integer(Q, 64);
        });

  check(rep, "j-invariance-100-transforms", "j is fixed by 100 seeded transforms over Q and F101",
        [&](CheckRecord&) {
          std::mt19937_64 rng(seed ^ 0xec);
          for (const Field* fp : {&Field::rationals(), &Field::prime(101)}) {
            const Field& f = *fp;
            ec::Quintuple<Coeff> w{Coeff::one(f), Coeff::zero(f), Coeff::integer(f, 3),
                                   Coeff::integer(f, -2), Coeff::integer(f, 4)};
            Coeff j = ec::j_invariant(w);
            int done = 0;
            while (done < 100) {
              Coeff c = random_coeff(rng, f);
              if (c.is_zero()) continue;
              ec::HTransform t{c, random_coeff(rng, f), random_coeff(rng, f), random_coeff(rng, f)};
              w = ec::h_transform(w, t);
              if (ec::j_invariant(w) != j) return false;
              ++done;
            }
          }
          return true;
        });

  check(rep, "char-2-reduction", "the generic disc and j reduce to the characteristic-2 forms",
        [&](CheckRecord&) { return ec::char_reduction_consistency(2); });
  check(rep, "char-3-reduction", "the generic disc and j reduce to the characteristic-3 forms",
        [&](CheckRecord&) { return ec::char_reduction_consistency(3); });
  check(rep, "char-2-negative-control", "a perturbed characteristic-2 form is rejected",
        [&](CheckRecord&) { return !ec::char_reduction_consistency(2, true); });

  return rep;
}

Report criterion_twist_oracle() {
  Report rep;
  rep.suite = "ec-twist-oracle";
  for (long long p : {5, 7, 11, 13}) {
    check(rep, "oracle-agreement-F" + std::to_string(p),
          "brute-force H-orbit partition agrees with the (j, twist-class) predicate on all "
          "smooth short curves",
          [&](CheckRecord& rec) {
            const Field& K = Field::prime(p);
            ec::ShortCurvePartition part = ec::h_orbit_partition(K);
            for (std::size_t i = 0; i < part.curves.size(); ++i) {
              auto [ji, ti] = ec::short_form_invariants(part.curves[i]);
              for (std::size_t j = i; j < part.curves.size(); ++j) {
                auto [jj, tj] = ec::short_form_invariants(part.curves[j]);
                bool predicate = ji == jj && ec::twist_equivalent(ti, tj);
                if (predicate != (part.class_id[i] == part.class_id[j])) {
                  rec.lhs = "disagreement at curves " + std::to_string(i) + ", " + std::to_string(j);
                  return false;
                }
              }
            }
            rec.rhs = std::to_string(part.curves.size()) + " curves, " +
                      std::to_string(part.classes) + " classes";
            return true;
          });
  }

  check(rep, "oracle-direct-F5", "isomorphic_over agrees with the partition on every F5 pair",
        [&](CheckRecord&) {
          const Field& K = Field::prime(5);
          ec::ShortCurvePartition part = ec::h_orbit_partition(K);
          for (std::size_t i = 0; i < part.curves.size(); ++i)
            for (std::size_t j = 0; j < part.curves.size(); ++j) {
              bool direct = ec::isomorphic_over(K, part.curves[i], part.curves[j]).has_value();
              if (direct != (part.class_id[i] == part.class_id[j])) return false;
            }
          return true;
        });

  check(rep, "beta-cokernels", "beta cokernel sizes match brute-force enumeration on F4, F8, F9, F27",
        [&](CheckRecord&) {
          for (auto [p, k] : {std::pair<long long, int>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
            const Field& K = Field::extension(p, k);
            for (long long q : {p, p * p}) {
              for (const Coeff& a : all_elements(K)) {
                auto res = ec::beta_map(K, q, a);
                std::set<std::vector<long long>> image;
                for (const Coeff& b : all_elements(K)) image.insert((b.pow(q) - a * b).components());
                if (res.cokernel_size != K.order() / (long long)image.size()) return false;
              }
            }
          }
          return true;
        });

  check(rep, "beta-F9-example", "the cokernel of b -> b^3 - b on F9 has size 3", [&](CheckRecord& rec) {
    const Field& F9 = Field::extension(3, 2);
    auto res = ec::beta_map(F9, 3, Coeff::one(F9));
    rec.lhs = std::to_string(res.cokernel_size);
    return res.cokernel_size == 3;
  });

  return rep;
}

Report criterion_wp() {
  Report rep = wp::verify_wp_identities();
  rep.suite = "wp";

  check(rep, "worked-instance-F13", "(0,0) - (6,2) lands at g = 11 (curve h^2 = 4g^3 + 4g over F13)",
        [&](CheckRecord& rec) {
          const Field& F13 = Field::prime(13);
          auto c = wp::make_curve(Coeff::integer(F13, 4), Coeff::zero(F13));
          wp::Point p1 = wp::Point::affine(Coeff::zero(F13), Coeff::zero(F13));
          wp::Point p2 = wp::Point::affine(Coeff::integer(F13, 6), Coeff::integer(F13, 2));
          if (!wp::on_curve(p1, c) || !wp::on_curve(p2, c)) return false;
          wp::Point diff = wp::chord_sub(p1, p2, c);
          rec.lhs = diff.g.str();
          return !diff.infinity && diff.g == Coeff::integer(F13, 11) &&
                 wp::wp_sub_x(p1, p2, c) == Coeff::integer(F13, 11);
        });

  for (long long p : {13, 17}) {
    check(rep, "exhaustive-F" + std::to_string(p),
          "wp_sub agrees with the chord oracle on all distinct-g pairs of three curves",
          [&, p](CheckRecord&) {
            const Field& F = Field::prime(p);
            for (auto [a, b] : {std::pair<long long, long long>{1, 0}, {0, 1}, {1, 1}}) {
              auto c = wp::make_curve(Coeff::integer(F, a), Coeff::integer(F, b));
              if (wp::curve_disc(c).is_zero()) return false;
              auto pts = wp::affine_points(F, c);
              for (const auto& p1 : pts)
                for (const auto& p2 : pts) {
                  if (p1.g == p2.g) continue;
                  wp::Point diff = wp::chord_sub(p1, p2, c);
                  if (diff.infinity) return false;
                  if (wp::wp_sub_x(p1, p2, c) != diff.g) return false;
                  if (wp::wp_sub_y(p1, p2, c) != diff.h) return false;
                }
            }
            return true;
          });
  }
  return rep;
}

Report criterion_alpha() {
  Report rep;
  rep.suite = "alpha";
  for (auto [p, n] : {std::pair<long long, int>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    std::string tag = "p" + std::to_string(p) + "n" + std::to_string(n);
    int m = 1;
    for (int i = 0; i < n; ++i) m *= (int)p;

    check(rep, tag + "-enabling-lemma", "lambda(u + cB) = lambda(u) for p^n-power lambda",
          [&, m](CheckRecord&) {
            Registry reg;
            const Field& F = Field::prime(p);
            VarId sym = reg.add("X"), u = reg.add("u"), cv = reg.add("c");
            alpha::LambdaDatum d = alpha::make_lambda(
                p, n, Polynomial::term(Coeff::one(F), Monomial::var(sym, (std::uint32_t)m)), sym);
            alpha::TruncatedElement shifted = alpha::TruncatedElement::variable(F, u, m);
            shifted.set_coeff(1, RationalFunction::variable(F, cv));
            std::map<VarId, alpha::TruncatedElement> arg1, arg2;
            arg1.emplace(sym, shifted);
            arg2.emplace(sym, alpha::TruncatedElement::variable(F, u, m));
            return alpha::eval_poly_truncated(d.lambda, arg1, m) ==
                   alpha::eval_poly_truncated(d.lambda, arg2, m);
          });

    check(rep, tag + "-composition", "xi_lambda . xi_lambda' = xi_{lambda + lambda'}",
          [&, m](CheckRecord&) {
            Registry reg;
            const Field& F = Field::prime(p);
            VarId sym = reg.add("X");
            std::vector<VarId> us = {reg.add("u0"), reg.add("u1")};
            auto mk = [&](std::uint32_t e, long long s) {
              return alpha::make_lambda(p, n,
                                        Polynomial::term(Coeff::integer(F, s), Monomial::var(sym, e)),
                                        sym);
            };
            return alpha::compose_law_verify(mk((std::uint32_t)m, 1), mk((std::uint32_t)(2 * m), p - 1),
                                             us) &&
                   alpha::compose_law_verify(mk((std::uint32_t)m, 1), mk((std::uint32_t)m, 1), us);
          });

    check(rep, tag + "-invertibility", "xi_lambda . xi_{(p-1) lambda} is the identity on generators",
          [&, m](CheckRecord&) {
            Registry reg;
            const Field& F = Field::prime(p);
            VarId sym = reg.add("X");
            std::vector<VarId> us = {reg.add("u0"), reg.add("u1")};
            alpha::LambdaDatum d = alpha::make_lambda(
                p, n, Polynomial::term(Coeff::one(F), Monomial::var(sym, (std::uint32_t)m)), sym);
            alpha::LambdaDatum neg = alpha::make_lambda(p, n, -d.lambda, sym);
            for (VarId u : us) {
              alpha::TruncatedElement gen = alpha::TruncatedElement::variable(F, u, m);
              if (alpha::xi_lambda_apply(d, us, alpha::xi_lambda_apply(neg, us, gen)) != gen)
                return false;
            }
            return true;
          });

    check(rep, tag + "-fixed-generators", "determinant generators are fixed for d <= 2",
          [&, m](CheckRecord&) {
            Registry reg;
            const Field& F = Field::prime(p);
            VarId sym = reg.add("X");
            std::vector<VarId> us2 = {reg.add("u0"), reg.add("u1")};
            std::vector<VarId> us3 = us2;
            us3.push_back(reg.add("u2"));
            auto mk = [&](std::uint32_t e) {
              return alpha::make_lambda(p, n, Polynomial::term(Coeff::one(F), Monomial::var(sym, e)),
                                        sym);
            };
            return alpha::verify_fixed_generators({mk((std::uint32_t)m)}, us2) &&
                   alpha::verify_fixed_generators({mk((std::uint32_t)m), mk((std::uint32_t)(2 * m))},
                                                  us3);
          });
  }
  return rep;
}

Report criterion_kernel(std::uint64_t seed) {
  Report rep;
  rep.suite = "kernel";
  const Field& Q = Field::rationals();

  check(rep, "canonical-soundness-1000", "rf_make(p r, q r) = rf_make(p, q) on 1000 seeded instances",
        [&](CheckRecord&) {
          std::mt19937_64 rng(seed ^ 0x6e);
          Registry reg;
          std::vector<VarId> vars = {reg.add("x"), reg.add("y"), reg.add("z")};
          for (int i = 0; i < 1000; ++i) {
            Polynomial p = random_poly(rng, Q, vars, 3, 2);
            Polynomial q = random_nonzero_poly(rng, Q, vars, 3, 2);
            Polynomial r = random_nonzero_poly(rng, Q, vars, 2, 2);
            if (RationalFunction::make(p * r, q * r) != RationalFunction::make(p, q)) return false;
          }
          return true;
        });

  check(rep, "roundtrip-1000", "parse(print(f)) = f on 1000 seeded canonical forms", [&](CheckRecord&) {
    std::mt19937_64 rng(seed ^ 0x77);
    Registry reg;
    std::vector<VarId> vars = {reg.add("x"), reg.add("y"), reg.add("z")};
    for (int i = 0; i < 700; ++i) {
      RationalFunction f = random_rf(rng, Q, vars);
      if (parse_expr(print_canonical(f, reg), reg) != f) return false;
    }
    for (const Field* f : {&Field::prime(5), &Field::extension(2, 2), &Field::extension(3, 2)}) {
      for (int i = 0; i < 100; ++i) {
        RationalFunction r = random_rf(rng, *f, vars);
        if (parse_expr(print_canonical(r, reg), reg, *f) != r) return false;
      }
    }
    return true;
  });

  check(rep, "eval-homomorphism-1000", "evaluation respects + and * on 1000 seeded instances",
        [&](CheckRecord&) {
          std::mt19937_64 rng(seed ^ 0x88);
          Registry reg;
          std::vector<VarId> vars = {reg.add("x"), reg.add("y")};
          int done = 0;
          while (done < 1000) {
            RationalFunction a = random_rf(rng, Q, vars);
            RationalFunction b = random_rf(rng, Q, vars);
            std::map<VarId, Coeff> at = {{vars[0], random_coeff(rng, Q)},
                                         {vars[1], random_coeff(rng, Q)}};
            try {
              Coeff ea = a.eval(at), eb = b.eval(at);
              if ((a + b).eval(at) != ea + eb) return false;
              if ((a * b).eval(at) != ea * eb) return false;
              ++done;
            } catch (const PoleError&) {
            }
          }
          return true;
        });

  check(rep, "finite-field-tables", "F4, F8, F9, F27 arithmetic matches independent dense tables",
        [&](CheckRecord&) {
          for (auto [p, k] : {std::pair<long long, int>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
            const Field& F = Field::extension(p, k);
            const auto& mod = F.modulus();
            auto mul_dense = [&](std::vector<long long> a, const std::vector<long long>& b) {
              std::vector<long long> prod(a.size() + b.size() - 1, 0);
              for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
              for (int d = (int)prod.size() - 1; d >= k; --d) {
                long long c = prod[(std::size_t)d];
                if (c == 0) continue;
                for (int i = 0; i <= k; ++i) {
                  auto& slot = prod[(std::size_t)(d - k + i)];
                  slot = ((slot - c * mod[(std::size_t)i]) % p + p) % p;
                }
              }
              prod.resize((std::size_t)k);
              return prod;
            };
            auto elems = all_elements(F);
            for (const Coeff& a : elems)
              for (const Coeff& b : elems) {
                if ((a * b).components() != mul_dense(a.components(), b.components())) return false;
                if (!a.is_zero() && !(a * a.inverse()).is_one()) return false;
              }
          }
          return true;
        });

  return rep;
}

std::vector<std::string> suite_names() {
  return {"all", "kernel", "invariant-fields", "alg-sub-kpsi", "lie", "divdiff", "ec", "wp", "alpha"};
}

bool is_suite_name(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const std::string& name, std::uint64_t seed) {
  Report rep;
  rep.suite = name;
  if (name == "alg-sub-kpsi") {
    return criterion_identity_suite();
  } else if (name == "kernel") {
    return criterion_kernel(seed);
  } else if (name == "invariant-fields") {
    rep.append(criterion_identity_suite());
    rep.append(criterion_transposition_laws());
    rep.append(criterion_cross_ratio_mobius());
  } else if (name == "lie") {
    return criterion_lie(seed);
  } else if (name == "divdiff") {
    return criterion_divdiff();
  } else if (name == "ec") {
    rep.append(criterion_elliptic(seed));
    rep.append(criterion_twist_oracle());
  } else if (name == "wp") {
    return criterion_wp();
  } else if (name == "alpha") {
    return criterion_alpha();
  } else if (name == "all") {
    for (const auto& sub : {"kernel", "invariant-fields", "lie", "divdiff", "ec", "wp", "alpha"})
      rep.append(run_suite(sub, seed));
  } else {
    throw PreconditionError("unknown suite '" + name + "'");
  }
  return rep;
}

}  // namespace symk::suites
