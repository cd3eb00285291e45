#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <sstream>

#include "famop/duplicial.hpp"
#include "famop/errors.hpp"
#include "famop/json_io.hpp"

namespace famop::cli {

namespace {

struct Outcome {
  Json json;
  bool passed = true;
  std::string summary;
};

Outcome from_report(const LawReport& r) { return {report_to_json(r), r.passed(), r.summary()}; }

Presentation load_presentation(const std::string& preset_name, const std::string& input) {
  if (!input.empty()) return presentation_from_json(read_json_file(input));
  if (preset_name.empty()) throw ValidationError("give --preset or --input");
  return preset(preset_name);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("expected a comma separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

void require_params(const std::vector<int>& params, std::size_t count, int size) {
  if (params.size() != count)
    throw PreconditionError("this mode takes " + std::to_string(count) + " --param value(s)");
  for (int p : params)
    if (p < 0 || p >= size) throw PreconditionError("parameter " + std::to_string(p) + " is not in Ω");
}

void add_omega(CLI::App& app, std::function<Outcome()>& action) {
  auto* omega = app.add_subcommand("omega", "parameter structures")->require_subcommand(1);

  auto* check = omega->add_subcommand("check", "check the laws of a Cayley table structure");
  auto kind = std::make_shared<std::string>();
  auto input = std::make_shared<std::string>();
  check->add_option("--kind", *kind, "diassociative, duplicial, edus, associative, twist_associative, napnapprime, perm")
      ->required();
  check->add_option("--input", *input, "JSON Cayley tables")->required();
  check->callback([&action, kind, input] {
    action = [kind, input] {
      auto k = parse_law_kind(*kind);
      auto j = read_json_file(*input);
      return from_report(is_magma_kind(k) ? check_laws(magma_from_json(j), k) : check_laws(omega_from_json(j), k));
    };
  });

  auto* en = omega->add_subcommand("enumerate", "all labeled structures of a kind");
  auto size = std::make_shared<int>(2);
  auto kind2 = std::make_shared<std::string>();
  auto size4 = std::make_shared<bool>(false);
  en->add_option("--size", *size, "carrier size")->required();
  en->add_option("--kind", *kind2, "law kind")->required();
  en->add_flag("--allow-size4", *size4, "lift the default size bound to 4");
  en->callback([&action, size, kind2, size4] {
    action = [size, kind2, size4] {
      auto k = parse_law_kind(*kind2);
      EnumerationLimits limits;
      if (*size4) {
        limits.allow_size4 = true;
        limits.max_size = 4;
      }
      Json j;
      j["kind"] = to_string(k);
      j["size"] = *size;
      Json list = Json::array();
      if (is_magma_kind(k))
        for (const auto& m : enumerate_magmas(*size, k, limits)) list.push_back(magma_to_json(m));
      else
        for (const auto& o : enumerate_structures(*size, k, limits)) list.push_back(omega_to_json(o));
      j["count"] = list.size();
      j["structures"] = list;
      return Outcome{j, true, to_string(k) + " structures of size " + std::to_string(*size) + ": " + std::to_string(list.size())};
    };
  });
}

void add_trees(CLI::App& app, std::function<Outcome()>& action) {
  auto* trees = app.add_subcommand("trees", "typed trees")->require_subcommand(1);
  auto* product = trees->add_subcommand("product", "one product of two typed trees");
  auto mode = std::make_shared<std::string>();
  auto omega = std::make_shared<std::string>();
  auto params = std::make_shared<std::vector<int>>();
  auto left = std::make_shared<std::string>();
  auto right = std::make_shared<std::string>();
  product->add_option("--mode", *mode, "prec1, succ1, prec2 or succ2")
      ->required()
      ->check(CLI::IsMember({"prec1", "succ1", "prec2", "succ2"}));
  product->add_option("--omega", *omega, "JSON Cayley tables")->required();
  product->add_option("--param", *params, "ω for one-parameter modes, α β for two-parameter modes")->required();
  product->add_option("--left", *left, "left factor in the tree grammar")->required();
  product->add_option("--right", *right, "right factor in the tree grammar")->required();
  product->callback([&action, mode, omega, params, left, right] {
    action = [mode, omega, params, left, right] {
      auto o = omega_from_json(read_json_file(*omega));
      auto s = parse_tree(*left), t = parse_tree(*right);
      TypedTree r;
      if (*mode == "prec2" || *mode == "succ2") {
        require_params(*params, 2, o.size);
        r = *mode == "prec2" ? prec2(s, t, (*params)[0], (*params)[1], o) : succ2(s, t, (*params)[0], (*params)[1], o);
      } else {
        require_params(*params, 1, o.size);
        r = *mode == "prec1" ? prec1(s, t, (*params)[0], o) : succ1(s, t, (*params)[0], o);
      }
      Json j;
      j["mode"] = *mode;
      j["tree"] = serialize(r);
      j["json"] = tree_to_json(r);
      return Outcome{j, true, serialize(r)};
    };
  });
}

void add_family(CLI::App& app, std::function<Outcome()>& action) {
  auto* family = app.add_subcommand("family", "family algebras")->require_subcommand(1);

  auto* check = family->add_subcommand("check", "defining equations on typed trees");
  auto mode = std::make_shared<std::string>();
  auto omega = std::make_shared<std::string>();
  auto opts = std::make_shared<AxiomCheckOptions>();
  check->add_option("--mode", *mode, "two_param, one_param or graded")->required();
  check->add_option("--omega", *omega, "JSON Cayley tables")->required();
  check->add_option("--max-vertices", opts->max_vertices, "vertex bound per tree")->check(CLI::Range(1, 6));
  check->add_option("--x-size", opts->x_size, "number of decorations")->check(CLI::Range(1, 4));
  check->add_flag("--stop-at-first", opts->stop_at_first, "stop at the first violation");
  check->callback([&action, mode, omega, opts] {
    action = [mode, omega, opts] {
      auto m = parse_axiom_mode(*mode);
      return from_report(check_axioms(m, omega_from_json(read_json_file(*omega)), *opts));
    };
  });

  auto* laws = family->add_subcommand("laws", "family laws of a finite-dimensional family algebra");
  auto kind = std::make_shared<std::string>();
  auto omega2 = std::make_shared<std::string>();
  auto input = std::make_shared<std::string>();
  auto lenient = std::make_shared<bool>(false);
  laws->add_option("--kind", *kind, "dendriform2, duplicial2, prelie2, assoc_family, twisted_family, napnap_family")
      ->required();
  laws->add_option("--omega", *omega2, "JSON Cayley tables (a magma for the one-operation kinds)")->required();
  laws->add_option("--input", *input, "structure constants")->required();
  laws->add_flag("--skip-parameter-laws", *lenient, "do not require the parameter laws on Ω");
  laws->callback([&action, kind, omega2, input, lenient] {
    action = [kind, omega2, input, lenient] {
      auto k = parse_family_kind(*kind);
      auto a = family_from_json(read_json_file(*input));
      auto j = read_json_file(*omega2);
      FamilyCheckOptions o;
      o.require_parameter_laws = !*lenient;
      return from_report(uses_magma(k) ? check_family_laws(a, magma_from_json(j), k, o)
                                       : check_family_laws(a, omega_from_json(j), k, o));
    };
  });
}

void add_operad(CLI::App& app, std::function<Outcome()>& action) {
  auto* operad = app.add_subcommand("operad", "set operads")->require_subcommand(1);

  auto options_for = [](const std::string& which, std::optional<int> max, std::optional<int> total) {
    auto w = parse_operad_which(which);
    auto o = default_check_options(w);
    if (max) {
      o.max_size = *max;
      o.max_total = 3 * *max;
    }
    if (total) o.max_total = *total;
    return std::make_pair(w, o);
  };

  for (const char* name : {"check", "surject"}) {
    bool is_check = std::string(name) == "check";
    auto* sub = operad->add_subcommand(
        name, is_check ? "associativity, unit and relabeling laws" : "the map onto Perm is a surjective morphism");
    auto which = std::make_shared<std::string>();
    auto max = std::make_shared<std::optional<int>>();
    auto total = std::make_shared<std::optional<int>>();
    sub->add_option("--which", *which, is_check ? "twist, corolla, perm or orders" : "twist, corolla or orders")
        ->required();
    sub->add_option("--max", *max, "carrier size bound")->check(CLI::Range(1, 6));
    sub->add_option("--total", *total, "bound on the sum of carrier sizes")->check(CLI::Range(3, 18));
    sub->callback([&action, options_for, is_check, which, max, total] {
      action = [options_for, is_check, which, max, total] {
        auto [w, o] = options_for(*which, *max, *total);
        return from_report(is_check ? check_operad_laws(w, o) : perm_surjection(w, o));
      };
    });
  }

  auto* iso = operad->add_subcommand("iso", "quotient classes of the twist presentation against pairs");
  auto arity = std::make_shared<int>(4);
  iso->add_option("--max-arity", *arity, "largest arity")->check(CLI::Range(2, 5));
  iso->callback([&action, arity] { action = [arity] { return from_report(psi_phi_roundtrip(*arity)); }; });
}

void add_present(CLI::App& app, std::function<Outcome()>& action) {
  auto* present = app.add_subcommand("present", "presented operads")->require_subcommand(1);

  auto* quotient = present->add_subcommand("quotient", "equivalence classes of terms");
  auto pname = std::make_shared<std::string>();
  auto input = std::make_shared<std::string>();
  auto arity = std::make_shared<int>(3);
  auto list = std::make_shared<bool>(false);
  quotient->add_option("--preset", *pname, "dendriform, duplicial, prelie, associative, twist, napnap");
  quotient->add_option("--input", *input, "presentation JSON");
  quotient->add_option("--arity", *arity, "arity")->required()->check(CLI::Range(1, 6));
  quotient->add_flag("--list", *list, "include every class with its members");
  quotient->callback([&action, pname, input, arity, list] {
    action = [pname, input, arity, list] {
      auto p = load_presentation(*pname, *input);
      auto q = quotient_classes(p, *arity);
      Json j;
      if (!pname->empty()) j["preset"] = *pname;
      j["arity"] = *arity;
      j["terms"] = q.terms.size();
      j["classes"] = q.count();
      Json reps = Json::array();
      for (std::size_t c = 0; c < q.count(); ++c) reps.push_back(serialize(q.representative(c), p.generators));
      j["representatives"] = reps;
      if (*list) {
        Json all = Json::array();
        for (const auto& cls : q.classes) {
          Json members = Json::array();
          for (int m : cls) members.push_back(serialize(q.terms[static_cast<std::size_t>(m)], p.generators));
          all.push_back(members);
        }
        j["members"] = all;
      }
      j["warnings"] = q.warnings;
      return Outcome{j, true, std::to_string(q.count()) + " classes of " + std::to_string(q.terms.size()) + " terms"};
    };
  });

  auto* mix = present->add_subcommand("mix", "color mixing against a parameter structure");
  auto pname2 = std::make_shared<std::string>();
  auto input2 = std::make_shared<std::string>();
  auto omega = std::make_shared<std::string>();
  auto arity2 = std::make_shared<int>(3);
  auto coloring = std::make_shared<std::string>();
  auto output = std::make_shared<std::optional<int>>();
  mix->add_option("--preset", *pname2, "preset name");
  mix->add_option("--input", *input2, "presentation JSON");
  mix->add_option("--omega", *omega, "JSON Cayley tables or magma")->required();
  mix->add_option("--arity", *arity2, "arity")->required()->check(CLI::Range(1, 6));
  mix->add_option("--coloring", *coloring, "input colors, comma separated");
  mix->add_option("--output", *output, "output color");
  mix->callback([&action, pname2, input2, omega, arity2, coloring, output] {
    action = [pname2, input2, omega, arity2, coloring, output] {
      auto p = load_presentation(*pname2, *input2);
      auto j = read_json_file(*omega);
      auto tables = j.contains("table") ? color_tables(p, magma_from_json(j)) : color_tables(omega_from_json(j));
      if (coloring->empty() != !output->has_value()) throw ValidationError("--coloring and --output go together");
      if (coloring->empty()) return from_report(mixing_report(p, tables, *arity2));
      auto r = mixing_filter(p, tables, *arity2, parse_int_list(*coloring), **output);
      Json out;
      out["member_classes"] = r.member_classes;
      out["non_member_classes"] = r.non_member_classes;
      out["consistency"] = report_to_json(r.consistency);
      out["passed"] = r.consistency.passed();
      return Outcome{out, r.consistency.passed(),
                     std::to_string(r.member_classes.size()) + " member classes, " +
                         std::to_string(r.non_member_classes.size()) + " non-member classes"};
    };
  });
}

void add_dims(CLI::App& app, std::function<Outcome()>& action) {
  auto* dims = app.add_subcommand("dims", "dimension polynomials")->require_subcommand(1);

  auto* r = dims->add_subcommand("r", "the polynomial r_n");
  auto n = std::make_shared<int>(1);
  auto w = std::make_shared<std::optional<long long>>();
  auto verify = std::make_shared<bool>(false);
  r->add_option("--n", *n, "index")->required()->check(CLI::Range(1, 40));
  r->add_option("--eval", *w, "evaluate at w");
  r->add_flag("--verify", *verify, "also verify the identities up to n");
  r->callback([&action, n, w, verify] {
    action = [n, w, verify] {
      auto s = r_sequence(*n);
      auto j = poly_to_json(*n, s.at(*n), *w);
      Outcome o{j, true, "r_" + std::to_string(*n) + " = " + s.at(*n).pretty()};
      if (*verify) {
        auto rep = verify_identities(*n);
        o.json["verify"] = report_to_json(rep);
        o.passed = rep.passed();
        o.summary += "\n" + rep.summary();
      }
      return o;
    };
  });

  auto* count = dims->add_subcommand("count", "count basis trees and compare with r_n(w)");
  auto n2 = std::make_shared<int>(1);
  auto w2 = std::make_shared<int>(1);
  count->add_option("--n", *n2, "number of leaves")->required()->check(CLI::Range(1, 8));
  count->add_option("--w", *w2, "parameter set size")->required()->check(CLI::Range(1, 4));
  count->callback([&action, n2, w2] {
    action = [n2, w2] {
      auto c = count_basis_trees(*n2, *w2);
      auto expected = evaluate(r_sequence(*n2).at(*n2), BigInt(*w2));
      Json j;
      j["n"] = *n2;
      j["w"] = *w2;
      j["count"] = c.str();
      j["r_value"] = expected.str();
      j["passed"] = c == expected;
      return Outcome{j, c == expected, "count " + c.str() + ", r_n(w) = " + expected.str()};
    };
  });
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["passed"] = false;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite checks for family algebras, typed trees, set operads and presentations", "famop"};
  app.require_subcommand(1);
  std::function<Outcome()> action;
  add_omega(app, action);
  add_trees(app, action);
  add_family(app, action);
  add_operad(app, action);
  add_present(app, action);
  add_dims(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPassed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPassed;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  if (!action) {
    err << "usage error: no command\n";
    return kUsage;
  }

  try {
    auto o = action();
    out << o.json.dump() << "\n";
    err << o.summary << "\n";
    return o.passed ? kPassed : kFailed;
  } catch (const ResourceError& e) {
    out << error_json("resource", e.what()).dump() << "\n";
    err << "resource bound: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    out << error_json("input", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"famop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace famop::cli
