#include "symk/wp_curve.hpp"

namespace symk::wp {

Curve<Coeff> make_curve(Coeff a, Coeff b) {
  const Field& f = a.field();
  if (&f != &b.field()) throw FieldMismatchError("make_curve: mixed fields");
  if (f.characteristic() == 2) throw PreconditionError("make_curve: characteristic 2 is not supported");
  return Curve<Coeff>{std::move(a), std::move(b)};
}

Coeff curve_disc(const Curve<Coeff>& c) {
  const Field& f = c.a.field();
  return Coeff::integer(f, -16) * c.a.pow(3) + Coeff::integer(f, -432) * c.b * c.b;
}

bool on_curve(const Point& p, const Curve<Coeff>& c) {
  if (p.infinity) return true;
  const Field& f = c.a.field();
  Coeff rhs = Coeff::integer(f, 4) * p.g.pow(3) + c.a * p.g + c.b;
  return p.h * p.h == rhs;
}

Point negated(const Point& p) {
  if (p.infinity) return p;
  return Point::affine(p.g, -p.h);
}

Point chord_add(const Point& p1, const Point& p2, const Curve<Coeff>& c) {
  const Field& f = c.a.field();
  if (!on_curve(p1, c) || !on_curve(p2, c)) throw PreconditionError("chord_add: point not on the curve");
  if (p1.infinity) return p2;
  if (p2.infinity) return p1;
  Coeff lambda = Coeff::zero(f);
  if (p1.g == p2.g) {
    if (p1.h == -p2.h) return Point::at_infinity(f);  // covers the 2-torsion h = 0
    // tangent: 2h h' = 12g^2 + a
    lambda = (Coeff::integer(f, 12) * p1.g * p1.g + c.a) / (Coeff::integer(f, 2) * p1.h);
  } else {
    lambda = (p2.h - p1.h) / (p2.g - p1.g);
  }
  Coeff g3 = lambda * lambda / Coeff::integer(f, 4) - p1.g - p2.g;
  Coeff h3 = -(lambda * (g3 - p1.g) + p1.h);
  return Point::affine(std::move(g3), std::move(h3));
}

Point chord_sub(const Point& p1, const Point& p2, const Curve<Coeff>& c) {
  return chord_add(p1, negated(p2), c);
}

Coeff wp_sub_x(const Point& p1, const Point& p2, const Curve<Coeff>& c) {
  const Field& f = c.a.field();
  if (p1.infinity || p2.infinity) throw PreconditionError("wp_sub_x needs affine points");
  if (p1.g == p2.g) throw PoleError("wp_sub_x: g1 = g2 is a pole of the formula");
  return wp_sub_x_formula(p1.g, p1.h, p2.g, p2.h, Coeff::integer(f, 2));
}

Coeff wp_sub_y(const Point& p1, const Point& p2, const Curve<Coeff>& c) {
  const Field& f = c.a.field();
  if (p1.infinity || p2.infinity) throw PreconditionError("wp_sub_y needs affine points");
  if (p1.g == p2.g) throw PoleError("wp_sub_y: g1 = g2 is a pole of the formula");
  return wp_sub_y_formula(p1.g, p1.h, p2.g, p2.h, c.a, Coeff::integer(f, 2), Coeff::integer(f, 6));
}

std::vector<Point> affine_points(const Field& f, const Curve<Coeff>& c) {
  std::vector<Point> out;
  for (const Coeff& g : all_elements(f)) {
    Coeff rhs = Coeff::integer(f, 4) * g.pow(3) + c.a * g + c.b;
    for (const Coeff& h : all_elements(f))
      if (h * h == rhs) out.push_back(Point::affine(g, h));
  }
  return out;
}

// ---------------------------------------------------------------------------
// symbolic verification

namespace {

// rewrites h1^2 -> rel1 and h2^2 -> rel2 until the polynomial is reduced of
// degree <= 1 in each h; {h_i^2 - rel_i} is a Groebner basis for lex h1, h2
// so the normal form is canonical
Polynomial reduce_h(const Polynomial& p, VarId h1, const Polynomial& rel1, VarId h2,
                    const Polynomial& rel2) {
  const Field& f = p.field();
  Polynomial cur = p;
  for (auto [hv, rel] : {std::pair<VarId, const Polynomial*>{h1, &rel1}, {h2, &rel2}}) {
    Polynomial acc = Polynomial::zero(f);
    bool reduced_any = true;
    while (reduced_any) {
      reduced_any = false;
      acc = Polynomial::zero(f);
      for (const auto& [m, c] : cur.terms()) {
        std::uint32_t e = m.degree_in(hv);
        if (e >= 2) {
          Monomial rest = m.erase_var(hv);
          if (e % 2) rest = rest * Monomial::var(hv, 1);
          Polynomial repl = rel->pow(e / 2).mul_term(c, rest);
          acc = acc + repl;
          reduced_any = true;
        } else {
          acc.add_term(m, c);
        }
      }
      cur = acc;
    }
  }
  return cur;
}

struct SymbolicSetup {
  Registry reg;
  const Field& Q = Field::rationals();
  VarId g1 = reg.add("g1"), g2 = reg.add("g2");
  VarId h1 = reg.add("h1"), h2 = reg.add("h2");
  VarId va = reg.add("a"), vb = reg.add("b");
  RationalFunction G1 = RationalFunction::variable(Q, g1), G2 = RationalFunction::variable(Q, g2);
  RationalFunction H1 = RationalFunction::variable(Q, h1), H2 = RationalFunction::variable(Q, h2);
  RationalFunction A = RationalFunction::variable(Q, va), B = RationalFunction::variable(Q, vb);
  Polynomial rel1 = curve_rel(g1);
  Polynomial rel2 = curve_rel(g2);

  Polynomial curve_rel(VarId g) {
    // 4g^3 + a g + b
    Polynomial G = Polynomial::variable(Q, g);
    return Polynomial::constant(Coeff::integer(Q, 4)) * G * G * G +
           Polynomial::variable(Q, va) * G + Polynomial::variable(Q, vb);
  }

  // f1/d1 == f2/d2 modulo the curve ideal with h-free denominators
  bool equal_mod_ideal(const RationalFunction& lhs, const RationalFunction& rhs) {
    if (lhs.den().degree_in(h1) > 0 || lhs.den().degree_in(h2) > 0 ||
        rhs.den().degree_in(h1) > 0 || rhs.den().degree_in(h2) > 0)
      throw InternalError("denominator involves h; the localization argument does not apply");
    Polynomial cross = lhs.num() * rhs.den() - rhs.num() * lhs.den();
    return reduce_h(cross, h1, rel1, h2, rel2).is_zero();
  }
};

}  // namespace

Report verify_wp_identities() {
  Report rep;
  rep.suite = "wp-identities";
  SymbolicSetup s;

  RationalFunction two = RationalFunction::constant(Coeff::integer(s.Q, 2));
  RationalFunction six = RationalFunction::constant(Coeff::integer(s.Q, 6));
  RationalFunction wx = wp_sub_x_formula(s.G1, s.H1, s.G2, s.H2, two);
  RationalFunction wy = wp_sub_y_formula(s.G1, s.H1, s.G2, s.H2, s.A, two, six);

  // chord construction for P1 - P2: slope to the negated second point
  RationalFunction lambda = (s.H1 + s.H2) / (s.G1 - s.G2);
  RationalFunction cx = lambda * lambda / (two * two) - s.G1 - s.G2;
  RationalFunction cy = -(lambda * (cx - s.G1) + s.H1);

  rep.records.push_back(run_check("wp-on-curve", "the subtraction pair satisfies the curve equation",
                                  [&](CheckRecord&) {
                                    RationalFunction lhs = wy * wy;
                                    RationalFunction rhs =
                                        two * two * wx.pow(3) + s.A * wx + s.B;
                                    return s.equal_mod_ideal(lhs, rhs);
                                  }));

  rep.records.push_back(run_check("wp-x-matches-chord", "wp_sub_x equals the chord x-coordinate",
                                  [&](CheckRecord&) { return s.equal_mod_ideal(wx, cx); }));

  rep.records.push_back(run_check(
      "wp-y-matches-chord",
      "wp_sub_y equals the chord h-coordinate with no extra negation (the recorded sign convention)",
      [&](CheckRecord&) { return s.equal_mod_ideal(wy, cy); }));

  rep.records.push_back(run_check(
      "wp-y-verbatim-spelling-fails",
      "the 6g^2 + a spelling (in place of 6g^2 + a/2) violates the on-curve identity",
      [&](CheckRecord&) {
        RationalFunction d = s.G1 - s.G2;
        RationalFunction n = s.H1 + s.H2;
        RationalFunction bracket = (d * (six * s.G1 * s.G1 + s.A) - n * s.H1) / (d * d * d);
        RationalFunction wy_verbatim = n * bracket / two - s.H1;
        RationalFunction rhs = two * two * wx.pow(3) + s.A * wx + s.B;
        return !s.equal_mod_ideal(wy_verbatim * wy_verbatim, rhs);
      }));

  rep.records.push_back(run_check("wp-negative-control", "a + 1 perturbation of wp_sub_x must fail",
                                  [&](CheckRecord&) {
                                    RationalFunction one = RationalFunction::one(s.Q);
                                    return !s.equal_mod_ideal(wx + one, cx);
                                  }));

  return rep;
}

}  // namespace symk::wp
