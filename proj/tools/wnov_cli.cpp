// Command-line front end: normal forms, oracle queries, identity checks,
// classification and the acceptance suites.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wnov/check.hpp"
#include "wnov/classify.hpp"
#include "wnov/error.hpp"
#include "wnov/evaluate.hpp"
#include "wnov/oracle.hpp"
#include "wnov/parser.hpp"
#include "wnov/render.hpp"
#include "wnov/verify.hpp"

using namespace wnov;
using nlohmann::json;

namespace {

  struct Options {
    std::string algebra    = "wnov";
    std::string field      = "q";
    std::string expr;
    std::string identities;
    std::string multidegree;
    std::string identity;
    std::string ops;
    std::string suite      = "all";
    unsigned    max_degree = 7;
    unsigned    slot_cap   = 0;
    unsigned    cap        = 6;
    bool        json       = false;
    bool        no_oracle  = false;
  };

  void emit(json const& j, std::string const& text, bool as_json) {
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  }

  json assignment_json(std::map<VariableId, MagmaPoly> const& a) {
    json out = json::object();
    for (auto const& [v, p] : a) {
      out["v" + std::to_string(index(v))] = render(p);
    }
    return out;
  }

  int normalize(Options const& o) {
    auto field = Field::parse(o.field);
    auto p     = change_field(parse_generator_expr(o.expr), field);
    auto algebra = parse_algebra(o.algebra);
    if (algebra == AlgebraKind::wlc) {
      auto e = evaluate<WlcAlgebra>(p);
      emit(to_json(e), render(e), o.json);
    } else {
      auto e = evaluate<WnAlgebra>(p);
      emit(to_json(e), render(e), o.json);
    }
    return 0;
  }

  int apply_ops(Options const& o) {
    auto field = Field::parse(o.field);
    auto p     = change_field(parse_generator_expr(o.expr), field);
    auto word  = parse_operator_word(o.ops);
    if (parse_algebra(o.algebra) == AlgebraKind::wlc) {
      auto e = operator_word_apply<WlcAlgebra>(evaluate<WlcAlgebra>(p), word);
      emit(to_json(e), render(e), o.json);
    } else {
      auto e = operator_word_apply<WnAlgebra>(evaluate<WnAlgebra>(p), word);
      emit(to_json(e), render(e), o.json);
    }
    return 0;
  }

  int dim(Options const& o) {
    auto ids = resolve_identities(o.identities);
    auto md  = Multidegree::parse(o.multidegree);
    OracleOptions opts;
    opts.field = Field::parse(o.field);
    auto d     = quotient_dimension(ids, md, opts);
    emit(json{{"identities", ids.name()},
              {"multidegree", md.str()},
              {"field", opts.field.name()},
              {"dimension", d}},
         std::to_string(d), o.json);
    return 0;
  }

  int basis(Options const& o) {
    auto ids = resolve_identities(o.identities);
    auto md  = Multidegree::parse(o.multidegree);
    OracleOptions opts;
    opts.field = Field::parse(o.field);
    auto words = quotient_basis(ids, md, opts);
    json j     = json::array();
    std::string text;
    for (auto const& w : words) {
      j.push_back(render(w));
      text += render(w) + "\n";
    }
    if (o.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
    return 0;
  }

  int check(Options const& o) {
    auto algebra = parse_algebra(o.algebra);
    auto f       = parse_identity(o.identity);
    auto r       = check_identity(algebra, f, o.max_degree, o.slot_cap);
    json j{{"identity", render(f)},
           {"algebra", std::string(algebra_name(algebra))},
           {"verdict", r.holds ? "holds" : "counterexample"},
           {"substitutions", r.substitutions},
           {"domain", r.domain}};
    std::string text = r.holds ? "holds" : "counterexample";
    if (!r.holds) {
      j["assignment"] = assignment_json(r.assignment);
      j["value"]      = r.value;
      for (auto const& [v, p] : r.assignment) {
        text += "\n  v" + std::to_string(index(v)) + " = " + render(p);
      }
      text += "\n  value: " + r.value;
    }
    text += "\n  (" + std::to_string(r.substitutions) + " substitutions; "
            + r.domain + ")";
    emit(j, text, o.json);
    return 0;
  }

  int member(Options const& o) {
    auto ids = resolve_identities(o.identities);
    OracleOptions opts;
    opts.field = Field::parse(o.field);
    bool in    = membership(parse_generator_expr(o.expr), ids, opts);
    emit(json{{"identities", ids.name()}, {"member", in}},
         in ? "true" : "false", o.json);
    return 0;
  }

  int classify(Options const& o) {
    ClassifyOptions opts;
    opts.cross_check = !o.no_oracle;
    auto c           = classify_multilinear(parse_generator_expr(o.expr), opts);
    json j{{"input", render(c.input)},
           {"degree", c.degree},
           {"coordinates", render(c.coordinates)},
           {"verdict", verdict_name(c.verdict)}};
    std::string text = verdict_name(c.verdict);
    if (c.verdict == Classification::Verdict::nilpotent_bound) {
      text += "(" + std::to_string(c.bound) + ")";
      text += "\n  substitution: " + c.substituted_slot;
      text += "\n  value: " + render(c.witness_value);
      j["bound"]         = c.bound;
      j["substitution"]  = c.substituted_slot;
      j["witness_value"] = render(c.witness_value);
      if (c.oracle_confirmed) {
        j["oracle_confirmed"] = *c.oracle_confirmed;
        text += std::string("\n  oracle: ")
                + (*c.oracle_confirmed ? "confirmed" : "NOT confirmed");
      }
    } else {
      text += " over " + c.group;
      j["group"] = c.group;
      json terms = json::array();
      for (auto const& t : c.orbit_form) {
        std::string perm;
        for (auto k : t.permutation) {
          perm += (perm.empty() ? "" : ",") + std::to_string(k);
        }
        terms.push_back({{"permutation", perm},
                         {"coefficient", t.coefficient.str()}});
        text += "\n  (" + perm + ") " + t.coefficient.str();
      }
      j["orbit_form"] = terms;
      if (c.degree5_dimension) {
        j["degree5_dimension"] = *c.degree5_dimension;
        text += "\n  degree-5 component dimension: "
                + std::to_string(*c.degree5_dimension);
      }
    }
    text += "\n  coordinates: " + render(c.coordinates);
    emit(j, text, o.json);
    return 0;
  }

  int nilpotency(Options const& o) {
    auto algebra = parse_algebra(o.algebra);
    auto r       = left_nilpotency_index(algebra, o.cap);
    std::string index = r.index ? std::to_string(*r.index) : "exceeds cap";
    emit(json{{"algebra", std::string(algebra_name(algebra))},
              {"cap", r.cap},
              {"index", index},
              {"witness", render(r.witness_word)},
              {"witness_value", r.witness_value}},
         index + "\n  witness: " + render(r.witness_word) + " = "
             + r.witness_value,
         o.json);
    return 0;
  }

  int verify(Options const& o) {
    bool ok = true;
    run_suite(parse_suite(o.suite), [&](CriterionResult const& r) {
      ok = ok && r.pass;
      std::cout << format_result(r) << std::endl;
    });
    return ok ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free metabelian weakly Novikov algebras: normal forms, "
               "T-ideal oracle, identity checks"};
  app.require_subcommand(1);
  Options o;

  auto algebra_opt = [&](CLI::App* c) {
    c->add_option("--algebra", o.algebra, "wlc or wnov")->capture_default_str();
  };
  auto field_opt = [&](CLI::App* c) {
    c->add_option("--field", o.field, "q or fp:<p>")->capture_default_str();
  };
  auto json_opt = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable output");
  };

  auto* norm = app.add_subcommand("normalize", "normal form of a generator expression");
  algebra_opt(norm);
  field_opt(norm);
  json_opt(norm);
  norm->add_option("expr", o.expr)->required();

  auto* ops = app.add_subcommand("apply-ops", "apply an operator word such as \"R3 R4 L5\"");
  algebra_opt(ops);
  field_opt(ops);
  json_opt(ops);
  ops->add_option("expr", o.expr)->required();
  ops->add_option("--ops", o.ops, "operator word (L, R, H, Th letters)")->required();

  auto* d = app.add_subcommand("dim", "dimension of a multidegree component");
  d->add_option("--identities", o.identities, "presets or files, comma separated")->required();
  d->add_option("--multidegree", o.multidegree, "e.g. 1,1,1")->required();
  field_opt(d);
  json_opt(d);

  auto* b = app.add_subcommand("basis", "representative words of a component");
  b->add_option("--identities", o.identities)->required();
  b->add_option("--multidegree", o.multidegree)->required();
  field_opt(b);
  json_opt(b);

  auto* ci = app.add_subcommand("check-identity", "check an identity in a table algebra");
  algebra_opt(ci);
  ci->add_option("--identity", o.identity, "\"<expr over v-vars> = 0\"")->required();
  ci->add_option("--max-degree", o.max_degree)->capture_default_str();
  ci->add_option("--slot-cap", o.slot_cap, "per-variable degree bound (0: none)");
  json_opt(ci);

  auto* m = app.add_subcommand("membership", "T-ideal membership of a generator polynomial");
  m->add_option("--identities", o.identities)->required();
  m->add_option("expr", o.expr)->required();
  field_opt(m);
  json_opt(m);

  auto* cl = app.add_subcommand("classify", "classify a multilinear identity");
  cl->add_option("expr", o.expr)->required();
  cl->add_flag("--no-oracle", o.no_oracle, "skip the oracle cross-check");
  json_opt(cl);

  auto* ln = app.add_subcommand("left-nilpotency", "left nilpotency index of a table algebra");
  algebra_opt(ln);
  ln->add_option("--cap", o.cap)->capture_default_str();
  json_opt(ln);

  auto* v = app.add_subcommand("verify", "run acceptance suites");
  v->add_option("--suite", o.suite, "tables, oracle, corollaries or all")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*norm) return normalize(o);
    if (*ops) return apply_ops(o);
    if (*d) return dim(o);
    if (*b) return basis(o);
    if (*ci) return check(o);
    if (*m) return member(o);
    if (*cl) return classify(o);
    if (*ln) return nilpotency(o);
    if (*v) return verify(o);
  } catch (ParseError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
