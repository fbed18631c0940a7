#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "specker/specker.hpp"

namespace specker::cli {
namespace {

using io::json;

class io_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A report that is printed but did not verify.
class verification_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_failure("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_failure("cannot read '" + path + "'");
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw structure_error("malformed JSON in '" + path + "': " + e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage error or unreadable file\n"
    "  2  schema violation (malformed JSON, unknown or missing fields, bad labels)\n"
    "  3  mathematical domain error (divisibility, unit preservation, overflow)\n"
    "  4  a verification report failed (result still printed on stdout)\n";

/// Prints the cone, optionally with a universal-property report.
void emit_cone(std::ostream& out, const Cone& c, const Diagram& d, bool full, bool verify) {
  if (!verify) {
    emit(out, full ? io::to_json(c) : io::to_json(c.apex));
    return;
  }
  const auto rep = verify_universal(c, d, laws::default_test_apexes());
  auto j = io::to_json(c);
  j["universal"] = io::to_json(rep);
  emit(out, j);
  if (!rep.ok()) throw verification_failure("universal property fails on the test apexes");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with finite boolean multispaces, their unital Specker l-groups, and MV-algebras."};
  app.name("specker");
  app.footer(kExitCodes);
  app.require_subcommand(1);

  // space / morph
  auto* space = app.add_subcommand("space", "Multispace commands");
  space->require_subcommand(1);
  std::string space_file;
  auto* space_check = space->add_subcommand("check", "Validate a multispace file");
  space_check->add_option("file", space_file, "space JSON")->required();

  auto* morph = app.add_subcommand("morph", "Morphism commands");
  morph->require_subcommand(1);
  std::string morph_file;
  auto* morph_check = morph->add_subcommand("check", "Validate a morphism file and report zeta");
  morph_check->add_option("file", morph_file, "morphism JSON")->required();

  std::string hx, hy;
  auto* hom = app.add_subcommand("hom", "Compare Hom(X,Y) with the unital l-homomorphisms S(Y) -> S(X)");
  hom->add_option("X", hx, "space JSON")->required();
  hom->add_option("Y", hy, "space JSON")->required();

  auto* dual = app.add_subcommand("dual", "Apply S or B to an object or a morphism");
  dual->require_subcommand(1);
  std::string dual_file;
  auto* dual_obj = dual->add_subcommand("obj", "space -> group (S), group -> space (B)");
  dual_obj->add_option("file", dual_file, "space or group JSON")->required();
  auto* dual_mor = dual->add_subcommand("mor", "morphism -> homomorphism (S), homomorphism -> morphism (B)");
  dual_mor->add_option("file", dual_file, "morphism or homomorphism JSON")->required();

  std::string a_file, b_file;
  bool full = false;
  bool verify = false;
  auto binary = [&](const char* name, const char* help, const char* a, const char* b) {
    auto* s = app.add_subcommand(name, help);
    s->add_option(a, a_file)->required();
    s->add_option(b, b_file)->required();
    s->add_flag("--cone,--cocone", full, "print the legs as well as the apex");
    s->add_flag("--verify", verify, "check the universal property against all test apexes with <= 2 points");
    return s;
  };
  auto* product_cmd = binary("product", "Product of two spaces (LCM multiplicities)", "A", "B");
  auto* coproduct_cmd = binary("coproduct", "Coproduct (disjoint union) of two spaces", "A", "B");
  auto* equalizer_cmd = binary("equalizer", "Equalizer of two parallel morphisms", "F", "G");
  auto* pullback_cmd = binary("pullback", "Pullback of two morphisms with a common codomain", "F", "G");

  std::string diagram_file;
  bool limit_verify = false;
  auto* limit_cmd = app.add_subcommand("limit", "Limit of a finite diagram");
  limit_cmd->add_option("--diagram", diagram_file, "diagram JSON")->required();
  limit_cmd->add_flag("--verify", limit_verify, "check the universal property against all test apexes with <= 2 points");

  std::string gamma_file;
  auto* gamma_cmd = app.add_subcommand("gamma", "Unit interval MV-algebra: cardinality, fibers, axioms");
  gamma_cmd->add_option("file", gamma_file, "group JSON")->required();

  laws::SweepConfig sweep;
  auto* laws_cmd = app.add_subcommand("laws", "Run the full invariant sweep");
  laws_cmd->add_option("--max-points", sweep.max_points, "largest test space")->check(CLI::Range(0, 3));
  laws_cmd->add_option("--max-mult", sweep.max_mult, "largest multiplicity")->check(CLI::Range(1, 6));
  laws_cmd->add_option("--seed", sweep.seed, "seed for the randomized parts");

  auto* omega_cmd = app.add_subcommand("omega", "Obstructions in the one-point compactification of the naturals");
  omega_cmd->require_subcommand(1);
  auto* demo = omega_cmd->add_subcommand("demo", "Run one obstruction demo");
  std::string which;
  std::size_t bound = 16;
  std::uint64_t seed = 0;
  demo->add_option("--which", which, "demo to run")->required()->check(CLI::IsMember({"not-specker", "power", "pushout"}));
  demo->add_option("--bound", bound, "K for pushout (default 16), k_max for power (default 10)");
  demo->add_option("--seed", seed, "seed for the randomized closure sample");

  std::string dot_file;
  auto* dot_cmd = app.add_subcommand("export-dot", "Render a morphism as DOT");
  dot_cmd->add_option("file", dot_file, "morphism JSON")->required();

  std::vector<std::string> argv_store{"specker"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return usage_or_io;
  }

  try {
    if (space_check->parsed()) {
      const auto x = io::space_from_json(read_json(space_file));
      emit(out, {{"valid", true}, {"points", x.size()}, {"space", io::to_json(x)}});
    } else if (morph_check->parsed()) {
      const auto m = io::morphism_from_json(read_json(morph_file));
      json zeta = json::object();
      for (std::size_t i = 0; i < m.dom().size(); ++i) zeta[m.dom().label(i)] = m.zeta(i);
      emit(out, {{"valid", true}, {"zeta", zeta}, {"isomorphism", is_isomorphism(m)}});
    } else if (hom->parsed()) {
      const auto x = io::space_from_json(read_json(hx));
      const auto y = io::space_from_json(read_json(hy));
      const auto rep = verify_hom_bijection(x, y);
      auto j = io::to_json(rep);
      json maps = json::array();
      for (const auto& m : enumerate_homs(x, y)) maps.push_back(io::map_json(m));
      j["morphisms"] = maps;
      emit(out, j);
      if (!rep.bijection) throw verification_failure("hom sets are not in bijection");
    } else if (dual_obj->parsed()) {
      const auto j = read_json(dual_file);
      if (j.is_object() && j.contains("points")) {
        emit(out, io::to_json(S_obj(io::space_from_json(j))));
      } else {
        emit(out, io::to_json(B_obj(io::group_from_json(j))));
      }
    } else if (dual_mor->parsed()) {
      const auto j = read_json(dual_file);
      if (j.is_object() && j.contains("map")) {
        emit(out, io::to_json(S_mor(io::morphism_from_json(j))));
      } else {
        emit(out, io::to_json(B_mor(io::lhom_from_json(j))));
      }
    } else if (product_cmd->parsed()) {
      const auto x = io::space_from_json(read_json(a_file));
      const auto y = io::space_from_json(read_json(b_file));
      emit_cone(out, product(x, y), product_diagram(x, y), full, verify);
    } else if (coproduct_cmd->parsed()) {
      const auto x = io::space_from_json(read_json(a_file));
      const auto y = io::space_from_json(read_json(b_file));
      const auto c = coproduct(x, y);
      if (!verify) {
        emit(out, full ? io::to_json(c) : io::to_json(c.apex));
      } else {
        const auto rep = verify_couniversal(c, product_diagram(x, y), laws::default_test_apexes());
        auto j = io::to_json(c);
        j["universal"] = io::to_json(rep);
        emit(out, j);
        if (!rep.ok()) throw verification_failure("couniversal property fails on the test targets");
      }
    } else if (equalizer_cmd->parsed()) {
      const auto f = io::morphism_from_json(read_json(a_file));
      const auto g = io::morphism_from_json(read_json(b_file));
      emit_cone(out, equalizer(f, g), equalizer_diagram(f, g), full, verify);
    } else if (pullback_cmd->parsed()) {
      const auto f = io::morphism_from_json(read_json(a_file));
      const auto g = io::morphism_from_json(read_json(b_file));
      emit_cone(out, pullback(f, g), pullback_diagram(f, g), full, verify);
    } else if (limit_cmd->parsed()) {
      const auto d = io::diagram_from_json(read_json(diagram_file));
      emit_cone(out, limit(d), d, true, limit_verify);
    } else if (gamma_cmd->parsed()) {
      const auto a = gamma_obj(io::group_from_json(read_json(gamma_file)));
      // Full triple sweeps stay below ~10^7 tuples; larger algebras are
      // checked chain by chain.
      const auto card = cardinality(a);
      const auto rep = card <= 216 ? verify_mv_axioms(a) : verify_mv_axioms_by_fibers(a);
      json fibers = json::array();
      for (const auto& f : fiber_decomposition(a)) fibers.push_back(io::to_json(f, a.group().base()));
      emit(out, {{"cardinality", card}, {"fibers", fibers}, {"axioms", rep.pass() ? "pass" : "fail"}});
      if (!rep.pass()) throw verification_failure(rep.violations.front());
    } else if (laws_cmd->parsed()) {
      const auto results = laws::run_all(sweep);
      json rows = json::array();
      std::size_t checked = 0, failures = 0;
      for (const auto& r : results) {
        rows.push_back({{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"messages", r.messages}});
        checked += r.checked;
        failures += r.failures;
      }
      emit(out, {{"max_points", sweep.max_points},
                 {"max_mult", sweep.max_mult},
                 {"seed", sweep.seed},
                 {"laws", rows},
                 {"checked", checked},
                 {"failures", failures}});
      if (failures) throw verification_failure(std::to_string(failures) + " law violations");
    } else if (demo->parsed()) {
      json j;
      bool pass = false;
      if (which == "not-specker") {
        const auto r = omega::verify_H_not_specker(seed);
        j = io::to_json(r);
        pass = r.pass();
      } else if (which == "power") {
        const auto r = omega::discontinuity_witness_power(demo->count("--bound") ? bound : 10);
        j = io::to_json(r);
        pass = r.pass();
      } else {
        const auto r = omega::pushout_obstruction(bound);
        j = io::to_json(r);
        pass = r.pass();
      }
      j["which"] = which;
      j["pass"] = pass;
      emit(out, j);
      if (!pass) throw verification_failure("omega demo '" + which + "' did not verify");
    } else if (dot_cmd->parsed()) {
      out << export_dot(io::morphism_from_json(read_json(dot_file)));
    }
  } catch (const io_failure& e) {
    error_line(err, "io", e.what());
    return usage_or_io;
  } catch (const structure_error& e) {
    error_line(err, "schema", e.what());
    return schema;
  } catch (const domain_error& e) {
    error_line(err, "domain", e.what());
    return math_domain;
  } catch (const json::exception& e) {
    error_line(err, "schema", e.what());
    return schema;
  } catch (const verification_failure& e) {
    error_line(err, "verification", e.what());
    return verification;
  }
  return ok;
}

}  // namespace specker::cli
