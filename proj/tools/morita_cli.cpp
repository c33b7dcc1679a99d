#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "morita/corpus.hpp"
#include "morita/errors.hpp"
#include "morita/io.hpp"
#include "morita/morita.hpp"
#include "morita/suite.hpp"

using namespace morita;
using nlohmann::json;

namespace {

  bool as_json = false;

  json report_json(ValidationReport const& report) {
    json out = json::array();
    for (auto const& v : report.violations()) {
      out.push_back({{"law", std::string(to_string(v.law))}, {"witness", v.witness}});
    }
    return out;
  }

  void emit(json const& j, std::string const& text) {
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }

  json principality_json(Principality const& p) {
    return {{"left_subductive", p.left_subductive},
            {"right_subductive", p.right_subductive},
            {"left_pre_principal", p.left_pre_principal},
            {"right_pre_principal", p.right_pre_principal}};
  }

  std::string yes(bool b) {
    return b ? "yes" : "no";
  }

  template <typename T>
  T load_as(std::string const& path) {
    auto object = load(path);
    if (!std::holds_alternative<T>(object)) {
      throw std::invalid_argument(path + " holds a " + to_string(kind_of(object)));
    }
    return std::get<T>(std::move(object));
  }

  int validate(std::string const& path) {
    auto const object = load(path);
    bool       ok     = true;
    json       j{{"file", path}, {"kind", to_string(kind_of(object))}};
    std::string text = path + ": valid " + to_string(kind_of(object)) + "\n";
    if (auto const* cert = std::get_if<MoritaCertificate>(&object)) {
      auto const check = check_certificate(*cert);
      ok               = check.ok;
      j["verified"]    = check.ok;
      if (!check.ok) {
        j["reason"] = check.reason;
        text        = path + ": certificate does not verify: " + check.reason + "\n";
      } else {
        text = path + ": valid certificate, verified\n";
      }
    }
    j["ok"] = ok;
    emit(j, text);
    return ok ? 0 : 1;
  }

  json groupoid_info(FiniteGroupoid const& g, std::string& text) {
    auto const orbits = orbit_space(g);
    json       orbit_list = json::array();
    std::ostringstream out;
    out << "objects: " << g.number_of_objects() << "\narrows: " << g.number_of_arrows()
        << "\norbits: " << orbits.size() << "\n";
    for (std::uint32_t c = 0; c < orbits.size(); ++c) {
      json names = json::array();
      out << "  {";
      bool first = true;
      for (auto o : orbits.members(c)) {
        names.push_back(g.object_name(o));
        out << (first ? "" : ", ") << g.object_name(o);
        first = false;
      }
      out << "}\n";
      orbit_list.push_back(names);
    }
    json isotropy = json::object();
    out << "isotropy orders:\n";
    for (Object o = 0; o < g.number_of_objects(); ++o) {
      auto const n = isotropy_group(g, o).size();
      isotropy[g.object_name(o)] = n;
      out << "  " << g.object_name(o) << ": " << n << "\n";
    }
    out << "fibrating: " << yes(is_fibrating(g)) << "\n";
    text += out.str();
    return {{"objects", g.number_of_objects()},
            {"arrows", g.number_of_arrows()},
            {"orbits", orbit_list},
            {"isotropy_orders", isotropy},
            {"fibrating", is_fibrating(g)}};
  }

  int info(std::string const& path) {
    auto const  object = load(path);
    std::string text   = "kind: " + to_string(kind_of(object)) + "\n";
    json        j{{"file", path}, {"kind", to_string(kind_of(object))}};
    if (auto const* g = std::get_if<FiniteGroupoid>(&object)) {
      j.update(groupoid_info(*g, text));
    } else if (auto const* a = std::get_if<Action>(&object)) {
      auto const orbits = action_orbit_space(*a);
      j["side"]         = a->side() == Side::left ? "left" : "right";
      j["carrier"]      = a->size();
      j["orbits"]       = orbits.size();
      j["free"]         = is_free(*a);
      text += "side: " + j["side"].get<std::string>() + "\ncarrier: " + std::to_string(a->size())
              + "\norbits: " + std::to_string(orbits.size()) + "\nfree: " + yes(is_free(*a)) + "\n";
    } else if (auto const* b = std::get_if<Bundle>(&object)) {
      j["carrier"]       = b->action().size();
      j["base"]          = b->base().size();
      j["pre_principal"] = is_pre_principal(*b);
      j["principal"]     = is_principal(*b);
      text += "carrier: " + std::to_string(b->action().size()) + "\nbase: "
              + std::to_string(b->base().size()) + "\npre-principal: " + yes(is_pre_principal(*b))
              + "\nprincipal: " + yes(is_principal(*b)) + "\n";
    } else if (auto const* b = std::get_if<Bibundle>(&object)) {
      j["carrier"]     = b->size();
      j["biprincipal"] = is_biprincipal(*b);
      text += "carrier: " + std::to_string(b->size()) + "\nbiprincipal: "
              + yes(is_biprincipal(*b)) + "\n";
    } else if (auto const* c = std::get_if<MoritaCertificate>(&object)) {
      j["carrier"]  = c->b.left.carrier.size();
      j["verified"] = verify_certificate(*c);
      text += "carrier: " + std::to_string(c->b.left.carrier.size()) + "\nverified: "
              + yes(verify_certificate(*c)) + "\n";
    }
    emit(j, text);
    return 0;
  }

  int compose(std::string const& first, std::string const& second, std::string const& out) {
    auto const b1 = load_as<Bibundle>(first);
    auto const b2 = load_as<Bibundle>(second);
    auto const c  = compose_bibundles(b1, b2);
    save(c.bibundle, out);
    emit({{"output", out}, {"classes", c.tensor.size()}, {"pairs", c.tensor.pairs().size()}},
         "wrote " + out + ": " + std::to_string(c.tensor.size()) + " classes from "
             + std::to_string(c.tensor.pairs().size()) + " pairs\n");
    return 0;
  }

  int check(std::string const& path) {
    auto const b  = load_as<Bibundle>(path);
    auto const p  = bibundle_principality(b);
    bool const bp = is_biprincipal(b);
    json       j  = principality_json(p);
    j["biprincipal"] = bp;
    emit(j, "left subductive: " + yes(p.left_subductive) + "\nright subductive: "
                + yes(p.right_subductive) + "\nleft pre-principal: " + yes(p.left_pre_principal)
                + "\nright pre-principal: " + yes(p.right_pre_principal)
                + "\nbiprincipal: " + yes(bp) + "\n");
    return bp ? 0 : 1;
  }

  int morita_verb(std::string const& g1, std::string const& g2, std::size_t budget,
                  std::string const& out) {
    auto const g      = load_as<FiniteGroupoid>(g1);
    auto const h      = load_as<FiniteGroupoid>(g2);
    auto const search = decide_morita(g, h, budget);
    json       j{{"found", search.certificate.has_value()},
                 {"budget", budget},
                 {"candidates_examined", search.candidates_examined},
                 {"exhausted", search.exhausted}};
    std::string text;
    if (search.certificate) {
      j["carrier"] = search.bibundle->size();
      text = "Morita equivalent: biprincipal bibundle on " + std::to_string(search.bibundle->size())
             + " points\n";
      if (!out.empty()) {
        save(*search.certificate, out);
        j["output"] = out;
        text += "certificate written to " + out + "\n";
      }
    } else {
      text = "no biprincipal bibundle with at most " + std::to_string(budget) + " points\n";
    }
    text += "candidates examined: " + std::to_string(search.candidates_examined) + "\n";
    emit(j, text);
    return search.certificate ? 0 : 1;
  }

  int suite(std::string const& name, std::string const& corpus_spec) {
    auto const corpus = generate_corpus(parse_corpus_spec(corpus_spec));
    auto const report = run_suite(corpus, name);
    emit(to_json(report), to_text(report));
    return report.ok() ? 0 : 1;
  }

  int fail(std::exception const& e, json extra = json::object()) {
    extra["error"] = e.what();
    if (as_json) {
      std::cout << extra.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoids, bibundles and Morita equivalence"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, second, out, name, corpus_spec = "max_objects=2,max_arrows=4,max_carrier=2";
  std::size_t budget = 2;

  auto* v = app.add_subcommand("validate", "Load and validate an object file");
  v->add_option("file", file)->required();
  auto* i = app.add_subcommand("info", "Orbits, isotropy and principality of an object");
  i->add_option("file", file)->required();
  auto* c = app.add_subcommand("compose", "Compose two bibundles");
  c->add_option("first", file)->required();
  c->add_option("second", second)->required();
  c->add_option("-o,--output", out)->required();
  auto* k = app.add_subcommand("check", "Principality flags of a bibundle");
  k->add_option("file", file)->required();
  auto* m = app.add_subcommand("morita", "Search for a Morita equivalence");
  m->add_option("first", file)->required();
  m->add_option("second", second)->required();
  m->add_option("--budget", budget, "Largest carrier to try")->required();
  m->add_option("-o,--output", out, "Where to write the certificate");
  auto* s = app.add_subcommand("suite", "Run a property suite over a generated corpus");
  s->add_option("name", name)->required()->check(CLI::IsMember(suite_names()));
  s->add_option("--corpus", corpus_spec, "e.g. max_objects=2,max_arrows=4,max_carrier=2,seed=0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) {
      return validate(file);
    }
    if (i->parsed()) {
      return info(file);
    }
    if (c->parsed()) {
      return compose(file, second, out);
    }
    if (k->parsed()) {
      return check(file);
    }
    if (m->parsed()) {
      return morita_verb(file, second, budget, out);
    }
    return suite(name, corpus_spec);
  } catch (ValidationError const& e) {
    return fail(e, {{"violations", report_json(e.report())}});
  } catch (ParseError const& e) {
    return fail(e, {{"line", e.line()}});
  } catch (std::exception const& e) {
    return fail(e);
  }
}
