#include "wnov/verify.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "wnov/check.hpp"
#include "wnov/classify.hpp"
#include "wnov/error.hpp"
#include "wnov/oracle.hpp"
#include "wnov/parser.hpp"
#include "wnov/render.hpp"

namespace wnov {

  namespace {

    Field const Q = Field::rationals();

    struct Outcome {
      bool        pass = true;
      std::string detail;

      void fail(std::string const& why) {
        if (pass) {
          detail.clear();
        }
        if (pass || detail.size() < 400) {
          detail += (detail.empty() ? "" : "; ") + why;
        }
        pass = false;
      }
      void note(std::string const& what) {
        if (pass) {
          detail += (detail.empty() ? "" : "; ") + what;
        }
      }
    };

    // Every multidegree on letters x1..x_letters of total degree 1..max.
    std::vector<Multidegree> multidegrees_up_to(unsigned letters,
                                                unsigned max) {
      std::vector<Multidegree> out;
      std::vector<unsigned>    counts(letters, 0);
      std::function<void(unsigned, unsigned)> rec = [&](unsigned i,
                                                        unsigned left) {
        if (i == letters) {
          if (left != max) {
            out.push_back(Multidegree::from_counts(counts));
          }
          return;
        }
        for (unsigned c = 0; c <= left; ++c) {
          counts[i] = c;
          rec(i + 1, left - c);
        }
        counts[i] = 0;
      };
      rec(0, max);
      return out;
    }

    // The multiplication tables transcribed row by row; every product not
    // listed is 0.
    WnElement expected_wn(WnBasisElement const& a, WnBasisElement const& b) {
      using E = WnBasisElement;
      WnElement out(Q);
      auto      add = [&](E const& e, int c) { out.add_term(e, Scalar(Q, c)); };
      if (a.kind() == WnKind::generator) {
        auto x = a[0];
        switch (b.kind()) {
          case WnKind::generator:
            add(E::pair(x, b[0]), 1);
            break;
          case WnKind::pair:
            add(E::t1(x, b[0], b[1]), 1);
            break;
          case WnKind::t1:  // x . y(zt) = -(x, zy, t)
            add(E::t3(x, b[1], b[0], b[2]), -1);
            break;
          case WnKind::t2:  // x . (y,t1,t2) = (y, x t1, t2)
            add(E::t3(b[0], x, b[1], b[2]), 1);
            break;
          default:
            break;
        }
        return out;
      }
      if (b.kind() != WnKind::generator) {
        return out;
      }
      auto y = b[0];
      switch (a.kind()) {
        case WnKind::pair:  // xz . y = (x,z,y) + x(zy)
          add(E::t2(a[0], a[1], y), 1);
          add(E::t1(a[0], a[1], y), 1);
          break;
        case WnKind::t1:  // x(zt) . y = (x,[z,t],y) + (z,xt,y)
          add(E::t3(a[0], a[1], a[2], y), 1);
          add(E::t3(a[0], a[2], a[1], y), -1);
          add(E::t3(a[1], a[0], a[2], y), 1);
          break;
        case WnKind::t2:  // (x,t1,t2) . y = Tch(x,t1,t2,y) + (x, t1 o t2, y)
          add(E::t4(a[0], a[1], a[2], y), 1);
          add(E::t3(a[0], a[1], a[2], y), 1);
          add(E::t3(a[0], a[2], a[1], y), 1);
          break;
        case WnKind::t4:
        case WnKind::t5: {
          std::vector<GeneratorId> ts(a.indices().begin() + 1,
                                     a.indices().end());
          ts.push_back(y);
          add(E::t5(a[0], ts), 1);
          break;
        }
        default:
          break;
      }
      return out;
    }

    WlcElement expected_wlc(WlcMonomial const& a, WlcMonomial const& b) {
      WlcElement out(Q);
      if (a.is_generator()) {
        auto q = a.base();
        if (b.is_generator()) {
          out.add_term(WlcMonomial(b.base(), {q}, {}), Scalar(Q, 1));
        } else if (b.rpart().empty()) {
          auto l = b.lpart();
          l.push_back(q);
          out.add_term(WlcMonomial(b.base(), l, {}), Scalar(Q, 1));
        } else if (b.lpart().size() == 1 && b.rpart().size() == 1) {
          auto i = b.base(), j = b.lpart()[0], k = b.rpart()[0];
          out.add_term(WlcMonomial(k, {i, j, q}, {}), Scalar(Q, 1));
          out.add_term(WlcMonomial(k, {q, i, j}, {}), Scalar(Q, -1));
        }
        return out;
      }
      if (b.is_generator()) {
        auto r = a.rpart();
        r.push_back(b.base());
        out.add_term(WlcMonomial(a.base(), a.lpart(), r), Scalar(Q, 1));
      }
      return out;
    }

    template <typename Basis, typename Mul, typename Expected>
    void compare_table(std::vector<Basis> const& elements,
                       std::vector<Basis> const& zero_checks, Mul mul,
                       Expected expected, std::string const& label,
                       Outcome& out) {
      std::size_t count = 0;
      auto        check = [&](Basis const& a, Basis const& b) {
        ++count;
        auto got  = mul(a, b);
        auto want = expected(a, b);
        if (!(got == want)) {
          out.fail(label + ": " + render(a) + " . " + render(b) + " = "
                   + render(got) + ", table says " + render(want));
        }
      };
      std::vector<Basis> gens;
      for (auto const& e : elements) {
        if (e.degree() == 1) {
          gens.push_back(e);
        }
      }
      for (auto const& g : gens) {
        for (auto const& e : elements) {
          check(g, e);
          if (e.degree() > 1) {
            check(e, g);
          }
        }
      }
      for (auto const& a : zero_checks) {
        for (auto const& b : zero_checks) {
          if (a.degree() > 1 && b.degree() > 1) {
            check(a, b);
          }
        }
      }
      out.note(label + ": " + std::to_string(count) + " products match");
    }

    Outcome criterion_tables() {
      Outcome                     out;
      std::vector<WnBasisElement> wn, wn_small;
      for (auto const& md : multidegrees_up_to(5, 5)) {
        for (auto const& e : wn_basis(md)) {
          wn.push_back(e);
        }
      }
      for (auto const& md : multidegrees_up_to(3, 4)) {
        for (auto const& e : wn_basis(md)) {
          wn_small.push_back(e);
        }
      }
      compare_table(
          wn, wn_small,
          [](auto const& a, auto const& b) { return wn_mul(a, b); },
          expected_wn, "wnov", out);

      std::vector<WlcMonomial> wlc, wlc_small;
      for (auto const& md : multidegrees_up_to(5, 4)) {
        for (auto const& m : wlc_basis(md)) {
          wlc.push_back(m);
        }
      }
      for (auto const& md : multidegrees_up_to(3, 4)) {
        for (auto const& m : wlc_basis(md)) {
          wlc_small.push_back(m);
        }
      }
      compare_table(
          wlc, wlc_small,
          [](auto const& a, auto const& b) { return wlc_mul(a, b); },
          expected_wlc, "wlc", out);
      return out;
    }

    Outcome criterion_identities() {
      Outcome out;
      struct Case {
        AlgebraKind algebra;
        char const* preset;
        bool        holds;
      };
      Case const cases[] = {
          {AlgebraKind::wnov, "rs", true},  {AlgebraKind::wnov, "wn", true},
          {AlgebraKind::wnov, "met", true}, {AlgebraKind::wlc, "wn", true},
          {AlgebraKind::wlc, "met", true},  {AlgebraKind::wlc, "lc", false},
          {AlgebraKind::wlc, "rs", false},
      };
      for (auto const& c : cases) {
        auto const set = preset(c.preset);
        for (auto const& f : set.identities()) {
          auto r = check_identity(c.algebra, f, 7);
          auto label = std::string(algebra_name(c.algebra)) + "/" + c.preset;
          if (r.holds != c.holds) {
            out.fail(label + (r.holds ? " holds" : " fails: " + r.value));
            continue;
          }
          if (!r.holds) {
            // The counterexample must re-evaluate to a nonzero element.
            auto sub = substitute(f, r.assignment);
            bool nonzero = c.algebra == AlgebraKind::wlc
                               ? !wlc_eval(sub).is_zero()
                               : !wn_eval(sub).is_zero();
            if (!nonzero) {
              out.fail(label + " counterexample does not re-evaluate");
              continue;
            }
            out.note(label + " counterexample " + r.value);
          } else {
            out.note(label + " holds (" + std::to_string(r.substitutions)
                     + " substitutions)");
          }
        }
      }
      return out;
    }

    Outcome criterion_dimensions() {
      Outcome out;
      for (unsigned n = 1; n <= 5; ++n) {
        for (auto const& md : partition_multidegrees(n)) {
          auto dn = quotient_dimension_cross_checked(preset("wnov2"), md,
                                                     {101, 1009});
          auto bn = wn_basis(md).size();
          if (dn != bn) {
            out.fail("wnov2 at " + md.str() + ": oracle " + std::to_string(dn)
                     + ", basis " + std::to_string(bn));
          }
          auto dl = quotient_dimension_cross_checked(preset("wlc2"), md,
                                                     {101, 1009});
          auto bl = wlc_basis(md).size();
          if (dl != bl) {
            out.fail("wlc2 at " + md.str() + ": oracle " + std::to_string(dl)
                     + ", basis " + std::to_string(bl));
          }
        }
      }
      std::vector<std::size_t> const wn_expected{2, 9, 16, 5};
      std::string                    wn_seen, wlc_seen;
      for (unsigned n = 2; n <= 5; ++n) {
        auto d = quotient_dimension(preset("wnov2"), Multidegree::multilinear(n));
        wn_seen += (n > 2 ? "," : "") + std::to_string(d);
        if (d != wn_expected[n - 2]) {
          out.fail("wnov2 multilinear degree " + std::to_string(n) + ": "
                   + std::to_string(d));
        }
      }
      std::vector<std::size_t> const wlc_expected{12, 72};
      for (unsigned n = 3; n <= 4; ++n) {
        auto d = quotient_dimension(preset("wlc2"), Multidegree::multilinear(n));
        wlc_seen += (n > 3 ? "," : "") + std::to_string(d);
        if (d != wlc_expected[n - 3]) {
          out.fail("wlc2 multilinear degree " + std::to_string(n) + ": "
                   + std::to_string(d));
        }
      }
      out.note("all partitions of degree <= 5 agree over Q, GF(101), "
               "GF(1009); wnov2 multilinear 2..5 = "
               + wn_seen + "; wlc2 multilinear 3..4 = " + wlc_seen);
      return out;
    }

    Outcome criterion_operator_patterns() {
      Outcome     out;
      std::size_t annihilated = 0;
      std::string rrr_witness;
      for (unsigned mask = 0; mask < 8; ++mask) {
        bool rrr = mask == 0;
        for (unsigned a = 1; a <= 5; ++a) {
          for (unsigned b = 1; b <= 5; ++b) {
            auto w = WnElement::basis(WnBasisElement::pair(gen(a), gen(b)), Q);
            // Depth-first over the operator letters, sharing prefixes.
            std::function<void(WnElement const&, unsigned, std::string const&)>
                apply = [&](WnElement const& e, unsigned depth,
                            std::string const& word) {
                  if (depth == 3) {
                    if (!rrr && !e.is_zero()) {
                      out.fail("pattern " + word + " on " + render(w)
                               + " gives " + render(e));
                    }
                    if (rrr && !e.is_zero() && rrr_witness.empty()) {
                      rrr_witness = render(w) + " " + word + " = " + render(e);
                    }
                    annihilated += !rrr;
                    return;
                  }
                  bool left = (mask >> (2 - depth)) & 1;
                  for (unsigned g = 1; g <= 5; ++g) {
                    OperatorWord op{{left ? OperatorLetter::Kind::L
                                          : OperatorLetter::Kind::R,
                                     gen(g)}};
                    apply(operator_word_apply<WnAlgebra>(e, op), depth + 1,
                          word + (depth ? " " : "") + (left ? "L" : "R")
                              + std::to_string(g));
                  }
                };
            apply(w, 0, "");
          }
        }
      }
      if (rrr_witness.empty()) {
        out.fail("RRR annihilates every degree-2 element");
      }
      out.note(std::to_string(annihilated)
               + " non-RRR applications vanish; witness " + rrr_witness);
      return out;
    }

    Outcome criterion_left_nilpotency() {
      Outcome out;
      auto    r = left_nilpotency_index(AlgebraKind::wnov, 6);
      if (!r.index || *r.index != 5) {
        out.fail("wnov index "
                 + (r.index ? std::to_string(*r.index) : "exceeds cap"));
      } else if (render(r.witness_word) != "x1*(x2*(x3*x4))"
                 || r.witness_value.empty() || r.witness_value == "0") {
        out.fail("unexpected witness " + render(r.witness_word) + " = "
                 + r.witness_value);
      } else {
        out.note("wnov index 5, witness x1*(x2*(x3*x4)) = " + r.witness_value);
      }
      auto deg5 = parse_generator_expr("x1*(x2*(x3*(x4*x5)))");
      auto deg4 = parse_generator_expr("x1*(x2*(x3*x4))");
      for (auto name : {"nov2", "wnov2"}) {
        auto ids = preset(name);
        bool in5 = membership(deg5, ids);
        bool in4 = membership(deg4, ids);
        if (!in5 || in4) {
          out.fail(std::string(name) + ": degree-5 word "
                   + (in5 ? "in" : "not in") + " T-ideal, degree-4 word "
                   + (in4 ? "in" : "not in"));
        } else {
          out.note(std::string(name) + ": degree-5 word in T-ideal, degree-4 not");
        }
      }
      return out;
    }

    Outcome criterion_corollaries() {
      Outcome       out;
      OracleOptions opts;
      opts.field = Field::prime(1009);
      for (auto extra : {"flex", "antiflex", "lie-nilp:2", "jordan-nilp:2"}) {
        auto ids = preset("wlc2") + preset(extra);
        auto p   = nilpotency_profile(ids, 5, opts);
        if (!p.nilpotent) {
          out.fail(std::string("wlc2+") + extra + " nonzero at "
                   + p.dimensions.back().first.str() + " (dim "
                   + std::to_string(p.dimensions.back().second) + ")");
        } else {
          out.note(std::string("wlc2+") + extra + ": all "
                   + std::to_string(p.dimensions.size())
                   + " degree-5 components vanish");
        }
      }
      return out;
    }

    Outcome criterion_classification() {
      Outcome out;
      auto    expect_bound = [&](MagmaPoly const& f, unsigned bound) {
        auto c = classify_multilinear(f);
        if (c.verdict != Classification::Verdict::nilpotent_bound
            || c.bound != bound) {
          out.fail(render(f) + ": expected NilpotentBound("
                   + std::to_string(bound) + ")");
        } else if (!c.oracle_confirmed || !*c.oracle_confirmed) {
          out.fail(render(f) + ": oracle does not confirm bound");
        }
        return c;
      };
      auto expect_candidate = [&](MagmaPoly const& f, std::string const& group) {
        auto c = classify_multilinear(f);
        if (c.verdict != Classification::Verdict::non_nilpotent_candidate
            || c.group != group) {
          out.fail(render(f) + ": expected candidate over " + group);
        }
        return c;
      };

      std::size_t deg2 = 0;
      for (auto text : {"x1*x2", "x2*x1", "x1*x2 + x2*x1", "x1*x2 - x2*x1",
                        "x1*x2 + 2 x2*x1", "x1*x2 - 1/3 x2*x1"}) {
        expect_bound(parse_generator_expr(text), 5);
        ++deg2;
      }

      // Degree 5: the bound n + 1 via f(w, x2, ..., x5) = w R2 R3 R4 R5.
      auto f5 = parse_generator_expr(
          "(((x1*x2)*x3)*x4)*x5 + 2 (((x2*x1)*x3)*x4)*x5 - x1*(x2*(x3*(x4*x5)))");
      auto c5 = expect_bound(f5, 6);
      auto w  = parse_generator_expr("(((((x1*x6)*x2)*x3)*x4)*x5)");
      if (c5.substituted_slot != "x1 -> x1*x6"
          || !(c5.witness_value == wn_eval(w))) {
        out.fail("degree-5 witness " + c5.substituted_slot + " gives "
                 + render(c5.witness_value));
      }

      // Degrees 3 and 4: every base element alone, candidates exactly for
      // the kinds spanning the group-orbit forms.
      std::size_t singles = 0, candidates = 0;
      for (unsigned n : {3u, 4u}) {
        WnElement all_orbit(Q), mixed(Q);
        int       k = 1;
        for (auto const& e : wn_basis(Multidegree::multilinear(n))) {
          auto f      = to_magma(e);
          bool orbit  = e.kind() == WnKind::t1 || e.kind() == WnKind::t3;
          ++singles;
          if (orbit) {
            ++candidates;
            auto c = expect_candidate(f, n == 4 ? "A4" : "S3");
            if (!c.degree5_dimension || *c.degree5_dimension == 0) {
              out.fail(render(f) + ": degree-5 component vanishes");
            }
            all_orbit.add_term(e, Scalar(Q, k++));
          } else {
            expect_bound(f, 5);
            mixed.add_term(e, Scalar(Q, 1));
          }
        }
        MagmaPoly orbit_poly(Q);
        for (auto const& [e, c] : all_orbit) {
          orbit_poly = orbit_poly + to_magma(e) * c;
        }
        auto c = expect_candidate(orbit_poly, n == 4 ? "A4" : "S3");
        if (c.orbit_form.size() != (n == 4 ? 12u : 6u)) {
          out.fail("orbit form has " + std::to_string(c.orbit_form.size())
                   + " terms at degree " + std::to_string(n));
        }
        for (auto const& t : c.orbit_form) {
          if (n == 4) {
            unsigned inv = 0;
            for (std::size_t i = 0; i < 4; ++i) {
              for (std::size_t j = i + 1; j < 4; ++j) {
                inv += t.permutation[i] > t.permutation[j];
              }
            }
            if (inv % 2) {
              out.fail("odd permutation in A4 orbit form");
            }
          }
        }
        MagmaPoly mixed_poly = orbit_poly;
        auto      extra = *mixed.begin();
        mixed_poly      = mixed_poly + to_magma(extra.first);
        expect_bound(mixed_poly, 5);
      }
      out.note(std::to_string(deg2) + " degree-2 identities bound 5; degree-5 "
               "sample bound 6 with witness " + render(c5.witness_value) + "; "
               + std::to_string(singles) + " single base elements of degree "
               "3-4 classified, " + std::to_string(candidates)
               + " candidates; all bounds oracle-confirmed");
      return out;
    }

    Outcome criterion_tch() {
      Outcome     out;
      std::size_t count = 0;
      for (unsigned code = 0; code < 256; ++code) {
        unsigned i[4];
        for (unsigned k = 0, c = code; k < 4; ++k, c /= 4) {
          i[k] = c % 4 + 1;
        }
        auto x = [&](unsigned k) { return "x" + std::to_string(i[k]); };
        auto text = "A(" + x(0) + "*" + x(1) + "," + x(2) + "," + x(3)
                    + ") - A(" + x(1) + "," + x(0) + "*" + x(2) + "," + x(3)
                    + ") - 2 A(" + x(0) + "," + x(1) + "*" + x(2) + "," + x(3)
                    + ")";
        auto got  = wn_eval(parse_generator_expr(text));
        auto want = WnElement::basis(
            WnBasisElement::t4(gen(i[0]), gen(i[1]), gen(i[2]), gen(i[3])), Q);
        ++count;
        if (!(got == want)) {
          out.fail(text + " = " + render(got));
        }
      }
      out.note(std::to_string(count) + " generator choices give T4");
      return out;
    }

    struct Criterion {
      char const* name;
      double      budget;
      Outcome (*run)();
    };

    Criterion const kCriteria[] = {
        {"table-consistency", 5, criterion_tables},
        {"defining-identities", 120, criterion_identities},
        {"dimension-cross-check", 300, criterion_dimensions},
        {"operator-patterns", 1, criterion_operator_patterns},
        {"left-nilpotency", 60, criterion_left_nilpotency},
        {"corollaries", 600, criterion_corollaries},
        {"classification", 300, criterion_classification},
        {"tch-coherence", 1, criterion_tch},
    };

  }  // namespace

  Suite parse_suite(std::string_view name) {
    if (name == "tables") {
      return Suite::tables;
    }
    if (name == "oracle") {
      return Suite::oracle;
    }
    if (name == "corollaries") {
      return Suite::corollaries;
    }
    if (name == "all") {
      return Suite::all;
    }
    throw Error("unknown suite '" + std::string(name)
                + "' (expected tables, oracle, corollaries or all)");
  }

  std::vector<unsigned> suite_criteria(Suite s) {
    switch (s) {
      case Suite::tables:
        return {1, 2, 4, 8};
      case Suite::oracle:
        return {3, 5};
      case Suite::corollaries:
        return {6, 7};
      case Suite::all:
        return {1, 2, 3, 4, 5, 6, 7, 8};
    }
    return {};
  }

  CriterionResult run_criterion(unsigned id) {
    if (id < 1 || id > std::size(kCriteria)) {
      throw Error("no criterion " + std::to_string(id));
    }
    auto const&     c = kCriteria[id - 1];
    CriterionResult r;
    r.id     = id;
    r.name   = c.name;
    r.budget = c.budget;
    auto t0  = std::chrono::steady_clock::now();
    try {
      auto o   = c.run();
      r.pass   = o.pass;
      r.detail = o.detail;
    } catch (std::exception const& e) {
      r.pass   = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (r.seconds > r.budget) {
      r.pass = false;
      r.detail += "; over time budget";
    }
    return r;
  }

  std::vector<CriterionResult> run_suite(
      Suite s, std::function<void(CriterionResult const&)> const& on_result) {
    std::vector<CriterionResult> out;
    for (auto id : suite_criteria(s)) {
      out.push_back(run_criterion(id));
      if (on_result) {
        on_result(out.back());
      }
    }
    return out;
  }

  std::string format_result(CriterionResult const& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.budget);
    return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id)
           + " " + r.name + " (" + timing + "): " + r.detail;
  }

}  // namespace wnov
