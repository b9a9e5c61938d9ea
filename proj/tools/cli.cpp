#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "rackkit/cohomology.hpp"
#include "rackkit/enveloping.hpp"
#include "rackkit/hopf.hpp"
#include "rackkit/io.hpp"
#include "rackkit/registry.hpp"
#include "rackkit/ydrack.hpp"

namespace rackkit::cli {

namespace {

using io::Json;

Json axiom(const AxiomResult& a, const std::vector<std::string>* labels = nullptr) {
  Json j;
  j["ok"] = a.ok;
  if (!a.ok) {
    j["detail"] = a.detail;
    Json w = Json::array();
    for (std::size_t i : a.witness) {
      if (labels != nullptr && i < labels->size()) {
        w.push_back((*labels)[i]);
      } else {
        w.push_back(i);
      }
    }
    j["witness"] = w;
  }
  return j;
}

template <class K>
Json rack_axioms(const RackBialgebra<K>& r) {
  const RackReport rep = r.check();
  const auto* lab = &r.labels();
  return Json{{"coassociative", axiom(rep.coassociative, lab)},
              {"counit", axiom(rep.counit, lab)},
              {"unit_grouplike", axiom(rep.unit_grouplike, lab)},
              {"selfdist", axiom(rep.selfdist, lab)},
              {"morphism", axiom(rep.morphism, lab)},
              {"counit_mult", axiom(rep.counit_mult, lab)},
              {"unit_right", axiom(rep.unit_right, lab)},
              {"unit_left", axiom(rep.unit_left, lab)}};
}

bool all_ok(const Json& axioms) {
  for (const auto& [k, v] : axioms.items()) {
    if (!v.at("ok").get<bool>()) return false;
  }
  return true;
}

io::AnyStructure load(const std::string& input) {
  if (std::filesystem::exists(input)) return io::parse_file(input);
  if (is_builtin(input)) {
    io::Structure<Rational> s;
    QRack r = builtin(input);
    s.coalgebra = r.coalgebra();
    s.rack = std::move(r);
    s.metadata = Json{{"name", input}};
    return s;
  }
  throw ParseError("no such file or built-in example: " + input);
}

QRack load_rack(const std::string& input) {
  auto any = load(input);
  auto* s = std::get_if<io::Structure<Rational>>(&any);
  if (s == nullptr) throw ParseError(input + ": this command needs ring \"Q\"");
  if (!s->rack) throw ParseError(input + ": no rack section");
  return *s->rack;
}

template <class K>
Json check_structure(const io::Structure<K>& s, bool braid) {
  Json rep;
  rep["dim"] = s.coalgebra.dim();
  rep["cocommutative"] = s.coalgebra.check_cocommutative();
  if (s.rack) {
    rep["kind"] = "rack";
    rep["axioms"] = rack_axioms(*s.rack);
    if (braid) rep["braid_relation"] = s.rack->satisfies_braid_relation();
  } else {
    rep["kind"] = "coalgebra";
    const auto* lab = &s.coalgebra.labels();
    Json ax{{"coassociative", axiom(s.coalgebra.check_coassociative(), lab)},
            {"counit", axiom(s.coalgebra.check_counit(), lab)}};
    if (s.coalgebra.has_unit()) ax["unit_grouplike"] = axiom(s.coalgebra.check_unit(), lab);
    rep["axioms"] = ax;
  }
  rep["ok"] = all_ok(rep["axioms"]);
  return rep;
}

FilteredBialgebra hopf_by_name(const std::string& name, int degree) {
  if (name == "k3") return polynomial_hopf_k3(degree);
  if (name == "kx") return polynomial_line(degree);
  if (name == "s3") return s3_group_algebra();
  if (name.rfind("cyclic:", 0) == 0) {
    const int n = std::stoi(name.substr(7));
    if (n < 1) throw ParseError("--over cyclic:N needs N ≥ 1");
    return cyclic_group_algebra(static_cast<std::size_t>(n));
  }
  throw ParseError("unknown --over target '" + name + "' (enveloping, k3, kx, s3, cyclic:N)");
}

QMap q_from_pairs(const QRack& r, const FilteredBialgebra& h, const std::vector<std::string>& pairs) {
  QMap q(h.dim(), r.dim());
  q.set_column(r.unit(), h.one());
  const auto& c = r.coalgebra();
  for (const auto& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw ParseError("--q expects label=Hlabel, got '" + p + "'");
    const std::size_t from = c.index_of(p.substr(0, eq));
    const std::string to = p.substr(eq + 1);
    q.set_column(from, to == "0" ? QVec(h.dim()) : h.basis(h.index_of(to)));
  }
  return q;
}

Json yd_json(const YDReport& r) {
  return Json{{"coalgebra_morphism_q", axiom(r.coalgebra_morphism_q)},
              {"eq_c", axiom(r.eq_c)},
              {"eq_d", axiom(r.eq_d)},
              {"module", axiom(r.module)},
              {"module_coalgebra", axiom(r.module_coalgebra)},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"ok", r.all()}};
}

Json coaction_json(const CoactionReport& r) {
  return Json{{"coassociative", axiom(r.coassociative)},
              {"counit", axiom(r.counit)},
              {"terms", Json::array({axiom(r.terms[0]), axiom(r.terms[1]), axiom(r.terms[2])})},
              {"yd", axiom(r.yd)},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"ok", r.all()}};
}

Json lm_json(const LMReport& r) {
  Json comp = Json::array();
  for (const auto& c : r.compatibility) comp.push_back(axiom(c));
  return Json{{"bimodule", axiom(r.bimodule)},
              {"bicomodule", axiom(r.bicomodule)},
              {"coactions_commute", axiom(r.coactions_commute)},
              {"compatibility", comp},
              {"bilinear", axiom(r.bilinear)},
              {"coderivation", axiom(r.coderivation)},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"ok", r.all()}};
}

template <class T>
Json optional_list(const std::vector<std::optional<T>>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x) {
      out.push_back(*x);
    } else {
      out.push_back(nullptr);
    }
  }
  return out;
}

Json bool_list(const std::vector<bool>& v) {
  Json out = Json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

Json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return Json::parse(arg);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("perturbation: invalid JSON: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open " + arg);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(arg + ": invalid JSON: " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of rack bialgebras given by structure constants", "rackkit"};
  app.require_subcommand(1);

  std::string input;
  int degree = 2, slack = 1;
  std::size_t max_n = 2, relations = 0;
  bool braid = false, series = false, coideal = false, action = false, coaction = false, loday = false, emit = false;
  std::string over = "enveloping", perturbation, example;
  std::vector<std::string> qpairs;

  auto* check = app.add_subcommand("check", "Verify coalgebra and rack bialgebra axioms");
  check->add_option("input", input, "Structure file or built-in name")->required();
  check->add_flag("--braid", braid, "Also test the braid relation for τ");

  auto* examples = app.add_subcommand("examples", "List built-in examples or dump one as a structure file");
  examples->add_option("name", example, "Built-in name");

  auto* env = app.add_subcommand("env", "Truncated universal enveloping algebra");
  env->add_option("input", input)->required();
  env->add_option("--degree", degree, "Filtration degree")->required()->check(CLI::Range(0, 12));
  env->add_option("--slack", slack, "Extra saturation degrees")->check(CLI::Range(0, 12));
  env->add_flag("--series", series, "Report dim F_k for k = 0..degree");
  env->add_option("--relations", relations, "Number of sample relations to print");
  env->add_flag("--coideal", coideal, "Check that J is a coideal and the induced coproduct");
  env->add_flag("--action", action, "Check that J acts as zero on C");

  auto* yd = app.add_subcommand("ydcheck", "Yetter-Drinfel'd rack structure");
  yd->add_option("input", input)->required();
  yd->add_option("--over", over, "enveloping | k3 | kx | s3 | cyclic:N");
  yd->add_option("--degree", degree, "Truncation degree")->check(CLI::Range(0, 12));
  yd->add_option("--slack", slack, "Saturation slack (enveloping only)")->check(CLI::Range(0, 12));
  yd->add_option("--q", qpairs, "q on basis labels, label=Hlabel (unlisted labels map to 0)");
  yd->add_flag("--coaction", coaction, "Also check the canonical coaction");

  auto* lm = app.add_subcommand("lm", "LM bialgebra object U(C)⊗Č with f(s⊗c) = s·q(c)");
  lm->add_option("input", input)->required();
  lm->add_option("--degree", degree)->check(CLI::Range(0, 8));
  lm->add_option("--slack", slack)->check(CLI::Range(0, 8));

  auto* coh = app.add_subcommand("cohomology", "Deformation complex of a cocommutative rack bialgebra");
  coh->add_option("input", input)->required();
  coh->add_option("--max-n", max_n, "Highest cochain degree")->check(CLI::Range(1, 6));
  coh->add_flag("--loday", loday, "Also report the Loday complex of the underlying Leibniz algebra");

  auto* emb = app.add_subcommand("leibniz-embed", "Embedding of the Loday complex");
  emb->add_option("input", input)->required();
  emb->add_option("--max-n", max_n)->check(CLI::Range(1, 6));

  auto* def = app.add_subcommand("deform", "First-order deformation over dual numbers");
  def->add_option("input", input)->required();
  def->add_option("--perturbation", perturbation, "JSON file or inline JSON object")->required();
  def->add_flag("--emit", emit, "Include the deformed structure file in the report");

  std::vector<std::string> argv_store{"rackkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  Json rep;
  auto error_exit = [&](const std::string& msg) {
    rep["ok"] = false;
    rep["error"] = msg;
    out << io::dump(rep);
    err << "rackkit: " << msg << "\n";
    return 1;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return error_exit(e.what());
  }

  const auto* sub = app.get_subcommands().front();
  rep["command"] = sub->get_name();
  if (!input.empty()) rep["input"] = input;

  try {
    if (sub == check) {
      auto any = load(input);
      std::visit(
          [&](const auto& s) {
            rep.update(check_structure(s, braid));
            rep["ring"] = std::is_same_v<std::decay_t<decltype(s)>, io::Structure<Rational>> ? "Q" : "Q[eps]";
          },
          any);
    } else if (sub == examples) {
      if (example.empty()) {
        rep["examples"] = builtin_names();
        rep["ok"] = true;
      } else {
        if (!is_builtin(example)) return error_exit("unknown example '" + example + "'");
        out << io::dump(io::serialize(builtin(example), Json{{"name", example}}));
        return 0;
      }
    } else if (sub == env) {
      const auto u = build_enveloping(load_rack(input), degree, slack);
      rep["degree"] = degree;
      rep["slack"] = slack;
      rep["dim"] = u.dim();
      rep["ideal_dim"] = u.ideal_dim();
      rep["stabilized"] = u.stabilized();
      rep["letters"] = u.letter_labels();
      bool ok = true;
      if (series) rep["series"] = u.hilbert_series();
      if (relations > 0) rep["relations"] = u.relations_sample(relations);
      if (coideal) {
        Json c{{"coideal", axiom(u.coideal_report())}};
        ok = ok && u.coideal();
        if (u.coideal()) {
          const auto b = u.to_bialgebra();
          const auto br = b.check();
          c["coassociative"] = axiom(br.coassociative);
          c["counit"] = axiom(br.counit);
          c["cocommutative"] = b.is_cocommutative();
          ok = ok && br.coassociative.ok && br.counit.ok;
        }
        rep["coideal"] = c;
      }
      if (action) {
        const auto a = u.check_action();
        rep["action"] = Json{{"instances", axiom(a.instances)}, {"ideal", axiom(a.ideal)}};
        ok = ok && a.instances.ok && a.ideal.ok;
      }
      rep["ok"] = ok;
    } else if (sub == yd) {
      const QRack r = load_rack(input);
      std::optional<YDRackStructure> s;
      if (over == "enveloping") {
        if (!qpairs.empty()) return error_exit("--q is fixed by the enveloping algebra");
        s = yd_over_enveloping(build_enveloping(r, degree, slack));
      } else {
        const auto h = hopf_by_name(over, degree);
        s = yd_from_q(r, h, q_from_pairs(r, h, qpairs));
      }
      rep["over"] = s->h.name();
      rep["yd"] = yd_json(check_yd_rack(*s));
      bool ok = rep["yd"]["ok"].get<bool>();
      if (coaction) {
        const auto cc = canonical_coaction(*s);
        rep["coaction"] = coaction_json(cc.report);
        ok = ok && cc.report.all();
      }
      rep["ok"] = ok;
    } else if (sub == lm) {
      const auto u = build_enveloping(load_rack(input), degree, slack);
      const auto obj = lm_bialgebra_object(u);
      rep["degree"] = degree;
      rep["lm"] = lm_json(obj.report);
      rep["ok"] = obj.report.all();
    } else if (sub == coh) {
      const QRack r = load_rack(input);
      const auto c = deformation_complex(r, max_n);
      bool ok = true;
      for (bool b : c.lands) ok = ok && b;
      for (std::size_t n = 1; n < c.d_squared_zero.size(); ++n) ok = ok && c.d_squared_zero[n];
      rep["max_n"] = max_n;
      rep["coder_dims"] = c.coder_dims;
      rep["ranks"] = c.ranks;
      rep["lands"] = bool_list(c.lands);
      rep["d_squared_zero"] = bool_list(c.d_squared_zero);
      rep["betti"] = optional_list(c.betti);
      if (loday) {
        const auto l = loday_complex(leibniz_of(r), max_n);
        rep["loday"] = Json{{"ranks", l.ranks},
                            {"d_squared_zero", bool_list(l.d_squared_zero)},
                            {"betti", optional_list(l.betti)}};
      }
      rep["ok"] = ok;
    } else if (sub == emb) {
      const auto l = leibniz_of(load_rack(input));
      bool ok = true;
      Json per = Json::array();
      for (std::size_t n = 1; n <= max_n; ++n) {
        const auto e = check_embedding_chain_map(l, n);
        per.push_back(Json{{"n", n},
                           {"coderivation", axiom(e.coderivation)},
                           {"injective", axiom(e.injective)},
                           {"chain_map", axiom(e.chain_map)}});
        ok = ok && e.coderivation.ok && e.injective.ok && e.chain_map.ok;
      }
      const auto lc = loday_complex(l, max_n);
      rep["embedding"] = per;
      rep["loday"] = Json{{"ranks", lc.ranks},
                          {"d_squared_zero", bool_list(lc.d_squared_zero)},
                          {"betti", optional_list(lc.betti)}};
      rep["ok"] = ok;
    } else if (sub == def) {
      const QRack r = load_rack(input);
      const auto p = io::parse_perturbation(r, read_json_arg(perturbation));
      const auto d = deform(r, p.dcomul, p.drack);
      rep["axioms"] = rack_axioms(d);
      rep["ok"] = all_ok(rep["axioms"]);
      if (emit) rep["structure"] = io::serialize(d);
    }
  } catch (const Error& e) {
    return error_exit(e.what());
  } catch (const std::exception& e) {
    return error_exit(e.what());
  }

  out << io::dump(rep);
  return rep.value("ok", false) ? 0 : 2;
}

}  // namespace rackkit::cli
