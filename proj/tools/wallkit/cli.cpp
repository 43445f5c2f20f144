#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "wallkit/case_studies.hpp"
#include "wallkit/classifier.hpp"
#include "wallkit/discriminant.hpp"
#include "wallkit/error.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/nikulin.hpp"
#include "wallkit/walls.hpp"

namespace wallkit::cli {

namespace {

void render_pretty(json const& j, std::ostream& out, std::string const& indent = "") {
  auto scalar = [](json const& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](json const& v) {
    return v.is_array() && std::none_of(v.begin(), v.end(),
                                        [](json const& x) { return x.is_structured(); });
  };
  if (j.is_object()) {
    for (auto const& [key, value] : j.items()) {
      if (value.is_structured() && !flat(value)) {
        out << indent << key << ":\n";
        render_pretty(value, out, indent + "  ");
      } else {
        out << indent << key << ": " << (flat(value) ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (auto const& value : j) {
      if (value.is_structured() && !flat(value)) {
        out << indent << "-\n";
        render_pretty(value, out, indent + "  ");
      } else {
        out << indent << "- " << (flat(value) ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else {
    out << indent << scalar(j) << "\n";
  }
}

void render_reports(std::vector<VerificationReport> const& reports, std::ostream& out) {
  for (auto const& r : reports) {
    out << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
    std::size_t width = 0;
    for (auto const& c : r.checks) width = std::max(width, c.description.size());
    for (auto const& c : r.checks) {
      out << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.description
          << std::string(width - c.description.size() + 2, ' ') << c.actual;
      if (!c.pass) out << "  (expected " << c.expected << ")";
      out << "\n";
    }
  }
}

json invariants_json(OrbitInvariants const& inv) {
  json j{{"q", to_json(inv.q)}, {"div", to_json(inv.div)}, {"e8_norm", to_json(inv.e8_norm)}};
  if (inv.ebar) j["ebar"] = to_json(inv.ebar->residues);
  if (inv.qbar) j["qbar"] = *inv.qbar;
  if (inv.hat_div1) j["hat_div1"] = *inv.hat_div1;
  return j;
}

WallRule parse_rule(std::string const& name) {
  if (name == "Nikulin") return WallRule::kNikulin;
  if (name == "K3") return WallRule::kK3;
  if (name == "K3[2]") return WallRule::kK3n2;
  throw Error(ErrorCode::kInvalidArgument, "unknown wall rule '" + name + "'");
}

WallRule rule_for(GramLattice const& ambient) {
  if (ambient.same_as(*make_standard("LambdaK3"))) return WallRule::kK3;
  if (ambient.same_as(*make_standard("LambdaK3[2]"))) return WallRule::kK3n2;
  return WallRule::kNikulin;
}

WallReport enumerate(PicardEmbedding const& pic, std::optional<LatticeVector> const& reference) {
  WallRule rule = rule_for(*pic.ambient());
  if (rule == WallRule::kNikulin) return walls_in_picard(pic, reference);
  return k3_family_walls(rule, pic);
}

int usage(std::ostream& err, std::string const& message) {
  err << json{{"error", "Usage"}, {"message", message}}.dump() << "\n";
  return kExitUsage;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice computations for wall divisors of Nikulin-type orbifolds", "wallkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::string lattice_name = "Lambda";
  std::string coords_text, name, pic_path, omega_text, alpha_text, v_text, w_text;
  std::string rule_name = "Nikulin", reference_text, suite = "all";
  bool with_orbits = false;

  json result;
  int exit_code = kExitOk;
  std::function<void()> action;

  auto* lattice_cmd = app.add_subcommand("lattice", "Standard lattices");
  lattice_cmd->require_subcommand(1);
  auto* lattice_show = lattice_cmd->add_subcommand("show", "Gram matrix and blocks");
  lattice_show->add_option("--lattice", lattice_name, "Lattice identifier")->required();
  lattice_show->callback([&] {
    action = [&] {
      auto l = make_standard(lattice_name);
      json blocks = json::array();
      for (auto const& b : l->blocks())
        blocks.push_back({{"name", b.name}, {"start", b.start}, {"length", b.length}});
      result = {{"name", l->name()},         {"rank", l->rank()},
                {"det", to_json(l->determinant())}, {"even", l->is_even()},
                {"blocks", blocks},          {"gram", to_json(l->gram())}};
    };
  });

  auto* class_cmd = app.add_subcommand("class", "Named classes");
  class_cmd->require_subcommand(1);
  auto* class_show = class_cmd->add_subcommand("show", "Coordinates and invariants of a named class");
  class_show->add_option("--name", name, "e.g. delta_prime, h1, e1, L_3, L2_-1")->required();
  class_show->callback([&] {
    action = [&] {
      auto v = named::by_name(name);
      if (!v) throw Error(ErrorCode::kUnknownName, "unknown class '" + name + "'");
      result = to_json(*v);
      result["name"] = name;
      result["q"] = to_json(norm(*v));
      result["div"] = to_json(divisibility(*v));
    };
  });

  auto* vec_cmd = app.add_subcommand("vec", "Vector operations");
  vec_cmd->require_subcommand(1);
  auto* vec_inv = vec_cmd->add_subcommand("invariants", "Norm and divisibility");
  vec_inv->add_option("--lattice", lattice_name, "Lattice identifier (default Lambda)");
  vec_inv->add_option("--coords", coords_text, "Comma-separated coordinates")->required();
  vec_inv->callback([&] {
    action = [&] {
      LatticeVector v(make_standard(lattice_name), parse_coords(coords_text));
      result = {{"q", to_json(norm(v))}, {"div", to_json(divisibility(v))},
                {"primitive", is_primitive(v)}};
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Monodromy orbit class and representative");
  classify_cmd->add_option("--lattice", lattice_name, "Lambda or LambdaHat (default Lambda)");
  classify_cmd->add_option("--coords", coords_text, "Comma-separated coordinates")->required();
  classify_cmd->callback([&] {
    action = [&] {
      LatticeVector v(make_standard(lattice_name), parse_coords(coords_text));
      OrbitClass c = classify(v);
      result = {{"ambient", ambient_name(c.ambient)},
                {"case", c.case_id},
                {"i", to_json(c.i)},
                {"representative", to_json(c.representative)},
                {"invariants", invariants_json(c.invariants)}};
    };
  });

  auto* wall_cmd = app.add_subcommand("wall", "Wall divisor membership");
  wall_cmd->require_subcommand(1);
  auto* wall_test = wall_cmd->add_subcommand("test", "Test one class");
  wall_test->add_option("--lattice", lattice_name, "Ambient lattice (default Lambda)");
  wall_test->add_option("--rule", rule_name, "Nikulin, K3 or K3[2] (default Nikulin)");
  wall_test->add_option("--coords", coords_text, "Comma-separated coordinates")->required();
  wall_test->callback([&] {
    action = [&] {
      LatticeVector v(make_standard(lattice_name), parse_coords(coords_text));
      bool wall = is_wall(v, parse_rule(rule_name));
      LatticeVector p = primitive_part(v);
      result = {{"is_wall", wall}, {"q", to_json(norm(p))}, {"div", to_json(divisibility(p))}};
    };
  });

  auto* walls_cmd = app.add_subcommand("walls", "Wall enumeration");
  walls_cmd->require_subcommand(1);
  auto* walls_enum = walls_cmd->add_subcommand("enum", "All wall rays of a definite Picard lattice");
  walls_enum->add_option("--pic", pic_path, "Picard JSON file")->required();
  walls_enum->add_option("--reference", reference_text, "Orient rays positively against this class");
  walls_enum->callback([&] {
    action = [&] {
      PicardEmbedding pic = read_picard_file(pic_path);
      std::optional<LatticeVector> reference;
      if (!reference_text.empty()) reference.emplace(pic.ambient(), parse_coords(reference_text));
      result = to_json(enumerate(pic, reference));
      result["ambient"] = pic.ambient()->name();
    };
  });

  auto* kahler_cmd = app.add_subcommand("kahler", "Kahler chamber tests");
  kahler_cmd->require_subcommand(1);
  auto* kahler_test = kahler_cmd->add_subcommand("test", "Is alpha in the chamber of omega");
  kahler_test->add_option("--pic", pic_path, "Picard JSON file")->required();
  kahler_test->add_option("--omega", omega_text, "Reference class")->required();
  kahler_test->add_option("--alpha", alpha_text, "Class to test")->required();
  kahler_test->callback([&] {
    action = [&] {
      PicardEmbedding pic = read_picard_file(pic_path);
      LatticeVector omega(pic.ambient(), parse_coords(omega_text));
      LatticeVector alpha(pic.ambient(), parse_coords(alpha_text));
      WallReport walls = enumerate(pic, std::nullopt);
      result = {{"inside", kahler_side_test(alpha, omega, walls)},
                {"walls", walls.walls.size()}};
    };
  });

  auto* disc_cmd = app.add_subcommand("disc", "Discriminant group");
  disc_cmd->add_option("--lattice", lattice_name, "Lattice identifier")->required();
  disc_cmd->add_flag("--orbits", with_orbits, "Orbits under the E8 simple-root reflections");
  disc_cmd->callback([&] {
    action = [&] {
      auto l = make_standard(lattice_name);
      auto group = discriminant_group(l);
      result = {{"invariant_factors", to_json(group.invariant_factors())},
                {"order", group.order()}};
      if (with_orbits) {
        Block const* e8 = nullptr;
        for (auto const& b : l->blocks())
          if (b.name.starts_with("E8")) e8 = &b;
        if (e8 == nullptr) {
          throw Error(ErrorCode::kPreconditionViolated, l->name() + " has no E8 block");
        }
        std::vector<std::vector<std::size_t>> generators;
        for (auto const& r : e8_simple_root_reflections(l, e8->name))
          generators.push_back(induced_disc_action(group, r));
        std::vector<std::size_t> sizes;
        for (auto const& o : orbits(generators, group.order())) sizes.push_back(o.size());
        std::sort(sizes.begin(), sizes.end());
        result["orbit_count"] = sizes.size();
        result["orbit_sizes"] = sizes;
      }
    };
  });

  auto* eichler_cmd = app.add_subcommand("eichler", "Isometry carrying v to w");
  eichler_cmd->add_option("--lattice", lattice_name, "Lattice with two U blocks")->required();
  eichler_cmd->add_option("--v", v_text, "Source vector")->required();
  eichler_cmd->add_option("--w", w_text, "Target vector")->required();
  eichler_cmd->callback([&] {
    action = [&] {
      auto l = make_standard(lattice_name);
      LatticeVector v(l, parse_coords(v_text));
      LatticeVector w(l, parse_coords(w_text));
      Isometry phi = eichler_normalize(v, w);
      auto action_perm = induced_disc_action(discriminant_group(l), phi);
      bool trivial = true;
      for (std::size_t k = 0; k < action_perm.size(); ++k) trivial = trivial && action_perm[k] == k;
      result = {{"matrix", to_json(phi.matrix())},
                {"image", to_json(apply(phi, v).coords())},
                {"disc_action_trivial", trivial}};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Golden-value verification suites");
  verify_cmd->add_option("--suite", suite, "all, generic, one-curve, two-curves, elliptic, involution");
  verify_cmd->callback([&] {
    action = [&] {
      auto reports = run_suites(suite);
      bool all_pass = true;
      json suites = json::array();
      for (auto const& r : reports) {
        json checks = json::array();
        for (auto const& c : r.checks)
          checks.push_back({{"check", c.description}, {"expected", c.expected},
                            {"actual", c.actual}, {"pass", c.pass}});
        suites.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}});
        all_pass = all_pass && r.pass();
      }
      result = {{"pass", all_pass}, {"suites", suites}};
      if (!all_pass) exit_code = kExitVerificationFailed;
      if (pretty) {
        std::ostringstream table;
        render_reports(reports, table);
        result["table"] = table.str();
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    return usage(err, e.what());
  }
  if (!action) return usage(err, "no command given");

  try {
    action();
  } catch (Error const& e) {
    bool usage_like = e.code() == ErrorCode::kUnknownName || e.code() == ErrorCode::kInvalidArgument;
    std::string message = e.what();
    auto prefix = std::string(error_code_name(e.code())) + ": ";
    if (message.starts_with(prefix)) message.erase(0, prefix.size());
    err << json{{"error", error_code_name(e.code())}, {"message", message}}.dump() << "\n";
    return usage_like ? kExitUsage : kExitPrecondition;
  }

  if (pretty && result.contains("table")) {
    out << result["table"].get<std::string>();
  } else if (pretty) {
    render_pretty(result, out);
  } else {
    out << result.dump() << "\n";
  }
  return exit_code;
}

}  // namespace wallkit::cli
