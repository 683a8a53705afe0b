// energized: command-line front end for the energized library.
//
//   energized gen      --complex "{{1,2,3}}" --generate
//   energized matrices --complex "{{1,2}}" --generate --kind gaussian --field list:1,i,2
//   energized det      --complex ... --kind quaternion --field random:3 --method all
//   energized check    --complex ... --identity all
//   energized phase    --complex ... --field roots:7 --output plots
//   energized group    --complex ... --field roots:7
//   energized kaehler  --complex ... --heatmap --output out
//
// Reports are JSON on stdout; `--output dir` also writes them to <dir>/<command>.json.
// Exit codes: 0 success, 1 an applicable identity failed, 2 bad input, 3 tracking ambiguity.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "energized/energized.hpp"
#include "energized/json_io.hpp"
#include "energized/svg.hpp"

namespace fs = std::filesystem;
using namespace energized;

namespace {

struct Config {
  std::string complex_text;
  std::string input_path;
  bool generate_closure = false;
  std::string kind = "complex";
  std::string field = "omega";
  std::optional<double> tolerance;
  std::string output_dir;

  // det
  std::string method = "all";
  std::string which = "both";
  bool pivots = false;
  // check
  std::vector<std::string> identities{"all"};
  // phase / group
  std::optional<std::size_t> steps;
  std::vector<std::size_t> wheels;
  bool parallel = false;
  std::size_t closure_cap = 1'000'000;
  // kaehler
  bool heatmap = false;
  bool with_form = false;
  // gen
  std::optional<std::uint64_t> random_seed;
  int max_vertices = 8;
  int max_generators = 5;
  int max_generator_size = 4;
};

std::optional<double> env_double(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    return std::stod(v);
  } catch (const std::exception&) {
    throw ParseError(std::string(name) + " is not a number: '" + v + "'");
  }
}

double tolerance(const Config& c) {
  if (c.tolerance) return *c.tolerance;
  return env_double("ENERGIZED_TOLERANCE").value_or(1e-9);
}

TrackOptions track_options(const Config& c) {
  TrackOptions opt;
  if (c.steps) {
    opt.steps = *c.steps;
  } else if (auto v = env_double("ENERGIZED_STEPS")) {
    opt.steps = static_cast<std::size_t>(*v);
  }
  if (auto v = env_double("ENERGIZED_MAX_STEP_FACTOR")) opt.max_refinement = static_cast<std::size_t>(*v);
  if (opt.steps < 2) throw Error("--steps must be at least 2");
  opt.parallel = c.parallel;
  return opt;
}

struct Input {
  SetSystem system;
  std::vector<std::string> labels;
};

Input load_input(const Config& c) {
  std::string text;
  if (!c.complex_text.empty() && !c.input_path.empty()) throw ParseError("give either --complex or --input, not both");
  if (!c.complex_text.empty()) {
    text = c.complex_text;
  } else if (c.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!c.input_path.empty()) {
    std::ifstream in(c.input_path);
    if (!in) throw ParseError("cannot read " + c.input_path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    throw ParseError("no set system given (use --complex or --input)");
  }
  auto parsed = parse_sets(text);
  if (parsed.sets.empty()) throw ParseError("empty set system");
  return {c.generate_closure ? generate(parsed.sets) : SetSystem(std::move(parsed.sets)), std::move(parsed.labels)};
}

json describe(const Input& in) {
  json j = {{"elements", to_json(in.system)}, {"n", in.system.size()}};
  if (!in.labels.empty()) j["labels"] = in.labels;
  return j;
}

void emit(const Config& c, std::string_view command, const json& report) {
  const std::string text = report.dump(2);
  std::cout << text << '\n';
  if (c.output_dir.empty()) return;
  fs::create_directories(c.output_dir);
  std::ofstream(fs::path(c.output_dir) / (std::string(command) + ".json")) << text << '\n';
}

void write_file(const Config& c, const std::string& name, const std::string& body) {
  const fs::path dir = c.output_dir.empty() ? fs::path(".") : fs::path(c.output_dir);
  fs::create_directories(dir);
  std::ofstream(dir / name) << body;
}

/// Calls f(T{}) with T the scalar type named by `kind`.
template <class F>
decltype(auto) with_kind(const std::string& kind, F&& f) {
  switch (parse_kind(kind)) {
    case ScalarKind::Real: return f(double{});
    case ScalarKind::Complex: return f(std::complex<double>{});
    case ScalarKind::Quaternion: return f(Quaternion{});
    case ScalarKind::Octonion: return f(Octonion{});
    case ScalarKind::GaussianRational: return f(GaussianRational{});
  }
  throw ParseError("unknown scalar kind");
}

template <class T>
json det_json(const DetResult<T>& r, bool pivots, std::size_t n, std::size_t cap) {
  json j = json::object();
  j["leibniz"] = r.leibniz ? to_json(*r.leibniz) : json(nullptr);
  if (!r.leibniz && n > cap) j["leibniz_skipped"] = "size " + std::to_string(n) + " exceeds the Leibniz cap " + std::to_string(cap);
  j["study"] = r.study;
  if constexpr (scalar_traits<T>::exact) j["study_squared"] = to_json(r.study_sq);
  if (r.dieudonne) {
    j["dieudonne"] = to_json(*r.dieudonne);
  } else if constexpr (!scalar_traits<T>::has_abelianization) {
    j["dieudonne"] = nullptr;
    j["dieudonne_skipped"] = "not defined over this scalar kind";
  }
  if (pivots) {
    json log = json::array();
    for (const auto& op : r.pivot_log) {
      if (op.kind == RowOp<T>::Kind::Swap)
        log.push_back({{"swap", json::array({op.target + 1, op.source + 1})}});
      else
        log.push_back({{"target", op.target + 1}, {"source", op.source + 1}, {"multiplier", to_json(op.multiplier)}});
    }
    j["pivot_log"] = std::move(log);
  }
  return j;
}

json identity_json(const IdentityReport& r) {
  json j = {{"name", r.name}, {"applicable", r.applicable}, {"holds", r.holds},
            {"max_abs_deviation", r.max_abs_deviation}, {"tolerance", r.tolerance}};
  if (!r.applicable) j["applicability"] = r.applicability;
  if (!r.witnesses.empty()) {
    json w = json::array();
    for (const auto& [x, y] : r.witnesses) w.push_back(json::array({x + 1, y + 1}));
    j["witnesses"] = std::move(w);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

IdentityReport not_applicable(std::string name, std::string why) {
  IdentityReport r;
  r.name = std::move(name);
  r.applicable = false;
  r.applicability = std::move(why);
  return r;
}

// ---------------------------------------------------------------------------

int cmd_gen(const Config& c) {
  Input in;
  if (c.random_seed) {
    Rng rng(*c.random_seed);
    ComplexShape shape;
    shape.max_vertices = c.max_vertices;
    shape.max_generators = c.max_generators;
    shape.max_generator_size = c.max_generator_size;
    in.system = random_complex(rng, shape);
  } else {
    in = load_input(c);
  }
  const auto& s = in.system;
  json j = describe(in);
  long euler = 0;
  for (const auto& x : s) euler += omega(x);
  j["dimension"] = s.dimension();
  j["simplicial_complex"] = is_simplicial_complex(s);
  j["antichain"] = is_antichain(s);
  j["euler_characteristic"] = euler;
  emit(c, "gen", j);
  return 0;
}

int cmd_matrices(const Config& c) {
  const Input in = load_input(c);
  return with_kind(c.kind, [&]<class T>(T) {
    const auto h = make_field<T>(c.field, in.system);
    const auto cm = build(in.system, h);
    json j = describe(in);
    j["kind"] = kind_name(scalar_traits<T>::kind);
    j["field"] = to_json(h);
    j["L"] = to_json(cm.L);
    j["g"] = to_json(cm.g);
    j["S"] = cm.signs;
    j["gbar_L"] = to_json(Matrix<T>(cm.g.conjugated() * cm.L));
    emit(c, "matrices", j);
    return 0;
  });
}

int cmd_det(const Config& c) {
  const Input in = load_input(c);
  DetMethod method = DetMethod::All;
  if (c.method == "leibniz") method = DetMethod::Leibniz;
  else if (c.method == "study") method = DetMethod::Study;
  else if (c.method == "dieudonne") method = DetMethod::Dieudonne;
  return with_kind(c.kind, [&]<class T>(T) {
    const auto h = make_field<T>(c.field, in.system);
    const auto cm = build(in.system, h);
    const DetOptions opt;
    json j = describe(in);
    j["kind"] = kind_name(scalar_traits<T>::kind);
    j["field"] = to_json(h);
    if (c.which != "g") j["L"] = det_json(determinants(cm.L, method, opt), c.pivots, in.system.size(), opt.leibniz_cap);
    if (c.which != "L") j["g"] = det_json(determinants(cm.g, method, opt), c.pivots, in.system.size(), opt.leibniz_cap);
    if (method == DetMethod::All) {
      const auto t = verify_product_formula(in.system, h, tolerance(c), opt);
      json e = {{"study", t.expected_study}};
      if (t.expected_dieudonne) e["dieudonne"] = to_json(*t.expected_dieudonne);
      e["holds"] = t.holds;
      j["product_formula"] = std::move(e);
    }
    emit(c, "det", j);
    return 0;
  });
}

int cmd_check(const Config& c) {
  const Input in = load_input(c);
  const auto& s = in.system;
  std::vector<std::string> wanted;
  for (const auto& id : c.identities) {
    if (id == "all") wanted = {"determinant", "greenstar", "energy", "gaussbonnet", "unimodular", "signature"};
    else wanted.push_back(id);
  }
  IdentityOptions opt;
  opt.tolerance = tolerance(c);
  return with_kind(c.kind, [&]<class T>(T) {
    const auto h = make_field<T>(c.field, s);
    std::vector<IdentityReport> reports;
    for (const auto& id : wanted) {
      if (id == "determinant") {
        const auto t = verify_product_formula(s, h, opt.tolerance);
        IdentityReport r;
        r.name = "determinant";
        r.tolerance = t.tolerance;
        r.max_abs_deviation = std::max(t.study_dev_L, t.study_dev_g);
        if (t.dieudonne_dev_L) r.max_abs_deviation = std::max({r.max_abs_deviation, *t.dieudonne_dev_L, *t.dieudonne_dev_g});
        r.holds = t.holds;
        r.notes.push_back("relative deviations of Study and Dieudonne values from the field product");
        if constexpr (!scalar_traits<T>::has_abelianization) r.notes.push_back("Dieudonne value not defined; Study only");
        reports.push_back(std::move(r));
      } else if (id == "greenstar") {
        reports.push_back(green_star_check(s, h, opt).identity);
      } else if (id == "energy") {
        reports.push_back(energy_theorem_check(s, h, opt));
      } else if (id == "gaussbonnet") {
        reports.push_back(gauss_bonnet_check(s, h, opt));
      } else if (id == "unimodular") {
        reports.push_back(unimodularity_check(s));
      } else if (id == "signature") {
        if constexpr (std::is_same_v<T, double>) {
          bool nonzero = true;
          for (double v : h) nonzero = nonzero && v != 0.0;
          reports.push_back(nonzero ? spectral_signature_check(s, h).identity
                                    : not_applicable("signature", "field vanishes somewhere"));
        } else {
          reports.push_back(not_applicable("signature", "needs a real field (--kind real)"));
        }
      } else {
        throw ParseError("unknown identity '" + id + "' (greenstar | energy | gaussbonnet | unimodular | signature | determinant | all)");
      }
    }
    bool failed = false;
    json list = json::array();
    for (const auto& r : reports) {
      failed = failed || r.failed();
      list.push_back(identity_json(r));
    }
    json j = describe(in);
    j["kind"] = kind_name(scalar_traits<T>::kind);
    j["field"] = to_json(h);
    j["identities"] = std::move(list);
    j["all_applicable_hold"] = !failed;
    emit(c, "check", j);
    return failed ? 1 : 0;
  });
}

EnergyFunction<cplx> complex_field(const Config& c, const SetSystem& s) {
  if (parse_kind(c.kind) != ScalarKind::Complex) throw Error("spectral monodromy needs --kind complex");
  return make_field<cplx>(c.field, s);
}

int cmd_phase(const Config& c) {
  const Input in = load_input(c);
  const auto h = complex_field(c, in.system);
  const auto opt = track_options(c);
  std::vector<std::size_t> wheels = c.wheels;
  if (wheels.empty())
    for (std::size_t k = 1; k <= in.system.size(); ++k) wheels.push_back(k);
  json list = json::array();
  for (std::size_t w : wheels) {
    if (w == 0 || w > in.system.size()) throw Error("wheel " + std::to_string(w) + " is out of range");
    const auto wp = make_wheel_permutation(track_wheel(in.system, h, w - 1, opt), opt.winding_tolerance);
    const std::string base = "phase_wheel" + std::to_string(w);
    write_file(c, base + ".csv", phase_csv(wp.path));
    write_file(c, base + ".svg", phase_svg(wp.path, to_string(in.system[w - 1])));
    list.push_back({{"wheel", w},
                    {"element", in.system[w - 1]},
                    {"steps", wp.steps_used},
                    {"cycles", cycle_notation(wp.perm)},
                    {"windings", wp.windings},
                    {"worst_ambiguity", wp.worst_ambiguity},
                    {"files", json::array({base + ".csv", base + ".svg"})}});
  }
  json j = describe(in);
  j["wheels"] = std::move(list);
  emit(c, "phase", j);
  return 0;
}

int cmd_group(const Config& c) {
  const Input in = load_input(c);
  const auto h = complex_field(c, in.system);
  const auto report = analyze_group(in.system, h, track_options(c), c.closure_cap);
  json j = describe(in);
  const json body = to_json(report);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(c, "group", j);
  return 0;
}

int cmd_kaehler(const Config& c) {
  const Input in = load_input(c);
  const auto r = kaehler_report(in.system, false);
  json j = describe(in);
  const json body = to_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (c.with_form) j["form"] = to_json(r.form);
  if (c.heatmap) write_file(c, "kaehler.svg", heatmap_svg(r.form));
  emit(c, "kaehler", j);
  return 0;
}

void add_input(CLI::App* sub, Config& c) {
  sub->add_option("--complex", c.complex_text, "set system inline, e.g. \"{{1,2},{2,3}}\"");
  sub->add_option("--input", c.input_path, "file holding the set system ('-' for stdin)");
  sub->add_flag("--generate", c.generate_closure, "replace the input by its downward closure");
  sub->add_option("--output", c.output_dir, "directory for report files");
}

void add_field(CLI::App* sub, Config& c) {
  sub->add_option("--kind", c.kind, "real | complex | quaternion | octonion | gaussian")->capture_default_str();
  sub->add_option("--field", c.field, "omega | ones | roots[:n] | random:seed[:kind] | list:v1,v2,...")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection matrices, determinants, spectral monodromy and Kaehler forms of finite set systems"};
  app.require_subcommand(1);
  Config c;
  int code = 0;

  auto* gen = app.add_subcommand("gen", "describe a set system or draw a random complex");
  add_input(gen, c);
  gen->add_option("--random", c.random_seed, "draw a random complex with this seed");
  gen->add_option("--max-vertices", c.max_vertices)->capture_default_str();
  gen->add_option("--max-generators", c.max_generators)->capture_default_str();
  gen->add_option("--max-generator-size", c.max_generator_size)->capture_default_str();
  gen->callback([&] { code = cmd_gen(c); });

  auto* mat = app.add_subcommand("matrices", "connection matrix L, Green matrix g, signs S and g*L");
  add_input(mat, c);
  add_field(mat, c);
  mat->callback([&] { code = cmd_matrices(c); });

  auto* det = app.add_subcommand("det", "Leibniz, Study and Dieudonne determinants of L and g");
  add_input(det, c);
  add_field(det, c);
  det->add_option("--method", c.method)->check(CLI::IsMember({"leibniz", "study", "dieudonne", "all"}))->capture_default_str();
  det->add_option("--matrix", c.which)->check(CLI::IsMember({"L", "g", "both"}))->capture_default_str();
  det->add_flag("--pivots", c.pivots, "include the row-reduction log");
  det->add_option("--tolerance", c.tolerance);
  det->callback([&] { code = cmd_det(c); });

  auto* check = app.add_subcommand("check", "verify identities; exit 1 iff an applicable one fails");
  add_input(check, c);
  add_field(check, c);
  check->add_option("--identity", c.identities, "greenstar | energy | gaussbonnet | unimodular | signature | determinant | all")
      ->delimiter(',');
  check->add_option("--tolerance", c.tolerance);
  check->callback([&] { code = cmd_check(c); });

  auto* phase = app.add_subcommand("phase", "track eigenvalues around wheels; CSV and SVG per wheel");
  add_input(phase, c);
  add_field(phase, c);
  phase->add_option("--steps", c.steps);
  phase->add_option("--wheel", c.wheels, "1-based wheel indices (default: all)")->delimiter(',');
  phase->callback([&] { code = cmd_phase(c); });

  auto* group = app.add_subcommand("group", "wheel permutations, group order and presentations");
  add_input(group, c);
  add_field(group, c);
  group->add_option("--steps", c.steps);
  group->add_flag("--parallel", c.parallel, "track wheels on worker threads");
  group->add_option("--cap", c.closure_cap, "largest group order enumerated")->capture_default_str();
  group->callback([&] { code = cmd_group(c); });

  auto* kae = app.add_subcommand("kaehler", "exact determinant and rank of the Kaehler form");
  add_input(kae, c);
  kae->add_flag("--form", c.with_form, "include the form in the report");
  kae->add_flag("--heatmap", c.heatmap, "write kaehler.svg");
  kae->callback([&] { code = cmd_kaehler(c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const TrackingAmbiguity& e) {
    std::cerr << "error: " << e.what() << "\nhint: rerun with --steps " << e.suggested_steps() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
