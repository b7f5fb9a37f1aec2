#include "loopcoprod/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopcoprod/coproduct.hpp"
#include "loopcoprod/expr.hpp"
#include "loopcoprod/io.hpp"
#include "loopcoprod/loopspace.hpp"

namespace loopcoprod {

namespace {

using nlohmann::json;

constexpr const char* kProgram = "loopcoprod";

long long cap_from_env() {
  const char* v = std::getenv("LOOPCOPROD_GENERATOR_CAP");
  if (!v || !*v) return kDefaultGeneratorCap;
  char* end = nullptr;
  const long long cap = std::strtoll(v, &end, 10);
  if (*end != '\0' || cap <= 0)
    fail(Errc::BadInput, std::string("bad LOOPCOPROD_GENERATOR_CAP value '") + v + "'");
  return cap;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Options shared by the verbs; each verb registers only what it uses.
struct Flags {
  std::string group_spec;
  std::string format = "md";
  std::string element;
  std::string a, b;
  std::string variant;
  std::string of = "group";
  std::string map_file;
  std::string kind;
  int n = 0;
  int max_degree = 3;
  long long max_k = 4;
  long long degree = 0;
  bool witness = false;
  bool via = false;
};

SpaceSpec space_from_flags(const Flags& f) {
  GroupPtr g = group_from_spec(f.group_spec);
  if (!g) return SpaceSpec::infinite_pi1(f.n);
  return SpaceSpec::sphere_quotient(f.n, std::move(g));
}

bool json_format(const Flags& f) {
  if (f.format != "md" && f.format != "json")
    fail(Errc::BadInput, "format must be md or json");
  return f.format == "json";
}

// Single monomial with coefficient one, the shape the witness op takes.
Monomial witness_monomial(const LoopClass& a) {
  if (a.terms().size() != 1 || a.terms().begin()->second != 1)
    fail(Errc::BadInput, "witness needs a single monomial with coefficient 1");
  return a.terms().begin()->first;
}

int cmd_group(const Flags& f, std::ostream& out) {
  GroupPtr g = group_from_spec(f.group_spec);
  if (!g) fail(Errc::BadInput, "the group verb needs a finite group");
  const auto classes = g->conjugacy_classes();
  std::vector<int> centralizer_orders;
  for (const auto& cls : classes)
    centralizer_orders.push_back(g->centralizer(cls.front()).group->order());

  if (json_format(f)) {
    json doc;
    doc["name"] = g->name();
    doc["order"] = g->order();
    doc["cyclic"] = g->is_cyclic();
    json orders = json::array();
    for (int x = 0; x < g->order(); ++x) orders.push_back(g->element_order(x));
    doc["element_orders"] = orders;
    doc["classes"] = classes;
    doc["centralizer_orders"] = centralizer_orders;
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "name: " << g->name() << "\norder: " << g->order()
      << "\ncyclic: " << (g->is_cyclic() ? "yes" : "no") << "\n";
  out << "element orders:";
  for (int x = 0; x < g->order(); ++x) out << " g" << x << ":" << g->element_order(x);
  out << "\nconjugacy classes:";
  for (size_t i = 0; i < classes.size(); ++i) {
    out << " {";
    for (size_t j = 0; j < classes[i].size(); ++j) out << (j ? " " : "") << "g" << classes[i][j];
    out << "} (centralizer order " << centralizer_orders[i] << ")";
  }
  out << "\n";
  return 0;
}

int cmd_coproduct(const Flags& f, std::ostream& out) {
  SpaceSpec space = space_from_flags(f);
  if (space.infinite()) {
    if (!f.element.empty())
      fail(Errc::BadInput, "elements need a finite group; drop --element for infinite pi1");
    TensorClass zero = infinite_pi1_rule(f.n);
    if (json_format(f))
      out << coproduct_to_json(LoopClass(space), zero);
    else
      out << "coproduct = 0 (declared-infinite fundamental group)\n";
    return 0;
  }
  if (f.element.empty()) fail(Errc::BadInput, "--element is required");
  LoopClass a = parse_loop_class(space, f.element);
  TensorClass t = coproduct(a);

  std::optional<WitnessResult> w;
  if (f.witness) {
    Monomial m = witness_monomial(a);
    w = coproduct_witness(space, m.g, m.k);
  }

  if (json_format(f)) {
    std::string doc = coproduct_to_json(a, t);
    if (w) {
      json j = json::parse(doc);
      switch (w->status) {
        case WitnessStatus::Found:
          j["witness"] = {{"status", "found"},
                          {"term", to_string(w->term->first) + " ⊗ " + to_string(w->term->second)}};
          break;
        case WitnessStatus::Exceptional:
          j["witness"] = {{"status", "exceptional"}};
          break;
        case WitnessStatus::NoneFound:
          j["witness"] = {{"status", "none"}};
          break;
      }
      doc = j.dump(2) + "\n";
    }
    out << doc;
    return 0;
  }
  out << "coproduct(" << to_string(a) << ") = " << to_string(t) << "\n";
  if (w) {
    switch (w->status) {
      case WitnessStatus::Found:
        out << "witness: " << to_string(w->term->first) << " ⊗ " << to_string(w->term->second)
            << "\n";
        break;
      case WitnessStatus::Exceptional:
        out << "witness: exceptional (no term with both legs non-trivial)\n";
        break;
      case WitnessStatus::NoneFound:
        out << "witness: none\n";
        break;
    }
  }
  return 0;
}

int cmd_circle(const Flags& f, std::ostream& out) {
  auto v = variant_from_name(f.variant);
  if (!v) fail(Errc::BadInput, "variant must be vee+ | vee- | lambda+ | lambda-");
  if (f.element.empty()) fail(Errc::BadInput, "--element is required");
  LaurentClass a = parse_laurent_class(f.element);
  LaurentTensor t = coproduct_circle(*v, a);
  if (json_format(f)) {
    out << laurent_coproduct_to_json(f.variant, a, t);
    return 0;
  }
  out << f.variant << "(" << to_string(a) << ") = " << to_string(t) << "\n";
  return 0;
}

// Shared reporting for the check verbs: success summary or counterexample
// plus a replay command, which decides the exit status.
struct CheckOutcome {
  std::string name;
  long long cases = 0;
  bool holds = true;
  std::vector<std::pair<std::string, std::string>> details;  // label, value
  std::string replay;
};

int report(const CheckOutcome& r, const Flags& f, std::ostream& out) {
  if (json_format(f)) {
    json doc;
    doc["check"] = r.name;
    doc["holds"] = r.holds;
    doc["cases"] = r.cases;
    if (!r.holds) {
      json c;
      for (const auto& [k, v] : r.details) c[k] = v;
      c["replay"] = r.replay;
      doc["counterexample"] = c;
    }
    out << doc.dump(2) << "\n";
  } else if (r.holds) {
    out << "check " << r.name << ": holds (" << r.cases << " cases)\n";
  } else {
    out << "check " << r.name << ": violated\n";
    for (const auto& [k, v] : r.details) out << "  " << k << " = " << v << "\n";
    out << "  replay: " << r.replay << "\n";
  }
  return r.holds ? 0 : 1;
}

int check_sullivan_cmd(const Flags& f, std::ostream& out) {
  SpaceSpec space = space_from_flags(f);
  if (space.infinite()) fail(Errc::BadInput, "sullivan check needs a finite group");
  CheckOutcome r;
  r.name = "sullivan";

  auto run_pair = [&](const LoopClass& a, const LoopClass& b) {
    SullivanReport rep = check_sullivan(a, b);
    ++r.cases;
    if (rep.holds) return true;
    r.holds = false;
    r.details = {{"a", to_string(a)},
                 {"b", to_string(b)},
                 {"sign", std::to_string(rep.sign)},
                 {"defect", to_string(rep.defect)}};
    r.replay = std::string(kProgram) + " check sullivan --group " + f.group_spec + " --n " +
               std::to_string(f.n) + " --a " + quoted(to_string(a)) + " --b " +
               quoted(to_string(b));
    return false;
  };

  if (!f.a.empty() || !f.b.empty()) {
    if (f.a.empty() || f.b.empty()) fail(Errc::BadInput, "--a and --b go together");
    run_pair(parse_loop_class(space, f.a), parse_loop_class(space, f.b));
    return report(r, f, out);
  }
  const int order = space.group->order();
  for (int ga = 0; ga < order && r.holds; ++ga)
    for (long long ka = 0; ka <= f.max_k && r.holds; ++ka)
      for (int gb = 0; gb < order && r.holds; ++gb)
        for (long long kb = 0; kb <= f.max_k && r.holds; ++kb)
          run_pair(LoopClass::monomial(space, ga, ka), LoopClass::monomial(space, gb, kb));
  return report(r, f, out);
}

int check_pi1_cmd(const Flags& f, std::ostream& out) {
  SpaceSpec space = space_from_flags(f);
  if (space.infinite()) fail(Errc::BadInput, "pi1 check needs a finite group");
  CheckOutcome r;
  r.name = "pi1";

  auto run_one = [&](const LoopClass& a) {
    Pi1Report rep = check_pi1_invariance(a);
    ++r.cases;
    if (rep.invariant) return true;
    r.holds = false;
    r.details = {{"element", to_string(a)}, {"tau", "g" + std::to_string(rep.failing_tau)}};
    r.replay = std::string(kProgram) + " check pi1 --group " + f.group_spec + " --n " +
               std::to_string(f.n) + " --element " + quoted(to_string(a));
    return false;
  };

  if (!f.element.empty()) {
    run_one(parse_loop_class(space, f.element));
    return report(r, f, out);
  }
  for (int g = 0; g < space.group->order() && r.holds; ++g)
    for (long long k = 0; k <= f.max_k && r.holds; ++k)
      run_one(LoopClass::monomial(space, g, k));
  return report(r, f, out);
}

int check_cover_cmd(const Flags& f, std::ostream& out) {
  SpaceSpec space = space_from_flags(f);
  if (space.infinite()) fail(Errc::BadInput, "cover check needs a finite group");
  MapData cover = MapData::covering(f.n, space.group);
  CheckOutcome r;
  r.name = "cover";

  auto replay_for = [&](const LoopClass& a) {
    return std::string(kProgram) + " check cover --group " + f.group_spec + " --n " +
           std::to_string(f.n) + " --element " + quoted(to_string(a));
  };
  // Downstairs element: assembled-upstairs coproduct against the direct one.
  auto run_down = [&](const LoopClass& a) {
    ++r.cases;
    if (coproduct_via_universal_cover(a) == coproduct(a)) return true;
    r.holds = false;
    r.details = {{"element", to_string(a)}, {"side", "universal cover assembly"}};
    r.replay = replay_for(a);
    return false;
  };
  // Upstairs element: fiber formula against the coproduct of the image.
  auto run_up = [&](const LoopClass& a) {
    ++r.cases;
    if (coproduct_via_f(cover, a) == coproduct(pushforward(cover, a))) return true;
    r.holds = false;
    r.details = {{"element", to_string(a)}, {"side", "fiber formula"}};
    r.replay = replay_for(a);
    return false;
  };

  if (!f.element.empty()) {
    run_down(parse_loop_class(space, f.element));
    return report(r, f, out);
  }
  for (int g = 0; g < space.group->order() && r.holds; ++g)
    for (long long k = 0; k <= f.max_k && r.holds; ++k)
      run_down(LoopClass::monomial(space, g, k));
  for (long long k = 0; k <= f.max_k && r.holds; ++k)
    run_up(LoopClass::monomial(cover.source(), 0, k));
  return report(r, f, out);
}

int check_degree_cmd(const Flags& f, std::ostream& out) {
  CheckOutcome r;
  r.name = "degree";

  auto run_one = [&](long long d, const LoopClass& a) {
    MapData self = MapData::sphere_self_map(f.n, d);
    ++r.cases;
    if (coproduct_via_f(self, a) == coproduct(pushforward(self, a))) return true;
    r.holds = false;
    r.details = {{"element", to_string(a)}, {"degree", std::to_string(d)}};
    r.replay = std::string(kProgram) + " check degree --n " + std::to_string(f.n) +
               " --degree " + std::to_string(d) + " --element " + quoted(to_string(a));
    return false;
  };

  SpaceSpec sphere = SpaceSpec::sphere(f.n);
  if (!f.element.empty()) {
    run_one(f.degree, parse_loop_class(sphere, f.element));
    return report(r, f, out);
  }
  for (long long d = -3; d <= 3 && r.holds; ++d)
    for (long long k = 0; k <= f.max_k && r.holds; ++k)
      run_one(d, LoopClass::monomial(sphere, 0, k));
  return report(r, f, out);
}

int check_circle_cmd(const Flags& f, std::ostream& out) {
  auto v = variant_from_name(f.variant);
  if (!v) fail(Errc::BadInput, "variant must be vee+ | vee- | lambda+ | lambda-");
  CheckOutcome r;
  r.name = "circle";

  auto run_pair = [&](const LaurentClass& a, const LaurentClass& b) {
    CircleSullivanReport rep = check_sullivan_circle(*v, a, b);
    ++r.cases;
    if (rep.holds) return true;
    r.holds = false;
    r.details = {{"variant", f.variant},
                 {"a", to_string(a)},
                 {"b", to_string(b)},
                 {"defect", to_string(rep.defect)}};
    r.replay = std::string(kProgram) + " check circle --variant " + f.variant + " --a " +
               quoted(to_string(a)) + " --b " + quoted(to_string(b));
    return false;
  };

  auto monomial = [](long long k) {
    LaurentClass c;
    laurent_add_term(c, k, 1);
    return c;
  };
  if (!f.a.empty() || !f.b.empty()) {
    if (f.a.empty() || f.b.empty()) fail(Errc::BadInput, "--a and --b go together");
    run_pair(parse_laurent_class(f.a), parse_laurent_class(f.b));
    return report(r, f, out);
  }
  for (long long ka = -f.max_k; ka <= f.max_k && r.holds; ++ka)
    for (long long kb = -f.max_k; kb <= f.max_k && r.holds; ++kb)
      run_pair(monomial(ka), monomial(kb));
  return report(r, f, out);
}

int cmd_pushforward(const Flags& f, std::ostream& out) {
  std::optional<MapData> map;
  if (!f.map_file.empty()) {
    map = load_map_file(f.map_file);
  } else if (f.kind == "covering") {
    GroupPtr g = group_from_spec(f.group_spec);
    if (!g) fail(Errc::BadInput, "covering target must be a finite group");
    map = MapData::covering(f.n, std::move(g));
  } else if (f.kind == "self") {
    map = MapData::sphere_self_map(f.n, f.degree);
  } else {
    fail(Errc::BadInput, "give --map-file, or --kind covering|self");
  }
  if (f.element.empty()) fail(Errc::BadInput, "--element is required");
  LoopClass a = parse_loop_class(map->source(), f.element);
  LoopClass image = pushforward(*map, a);
  std::optional<TensorClass> via;
  if (f.via) via = coproduct_via_f(*map, a);

  if (json_format(f)) {
    json doc;
    doc["map"] = {{"kind", map->kind_name()},
                  {"degree", map->degree()},
                  {"source_n", map->source().n}};
    doc["target"] = json::parse(space_to_json(map->target()));
    doc["element"] = to_string(a);
    doc["image"] = to_string(image);
    if (via) doc["coproduct_via"] = to_string(*via);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "pushforward(" << to_string(a) << ") = " << to_string(image) << "\n";
  if (via) out << "coproduct via map = " << to_string(*via) << "\n";
  return 0;
}

int cmd_homology(const Flags& f, std::ostream& out) {
  const long long cap = cap_from_env();
  GroupPtr g = group_from_spec(f.group_spec);
  if (!g) fail(Errc::BadInput, "homology verbs need a finite group");
  GradedAbelianGroup h;
  if (f.of == "group") {
    h = group_homology(g, f.max_degree, cap);
  } else if (f.of == "periodic") {
    if (!g->is_cyclic()) fail(Errc::BadInput, "the periodic resolution needs a cyclic group");
    h = cyclic_periodic_homology(g->order(), f.max_degree);
  } else if (f.of == "space") {
    h = quotient_space_homology(f.n, g, cap);
  } else {
    fail(Errc::BadInput, "--of must be group, periodic or space");
  }
  out << (json_format(f) ? graded_to_json(h) : graded_to_markdown(h));
  return 0;
}

int cmd_loopspace(const Flags& f, std::ostream& out) {
  const long long cap = cap_from_env();
  SpaceSpec space = space_from_flags(f);
  LoopSpaceTable table = full_table(space, f.max_degree, cap);
  out << (json_format(f) ? loop_table_to_json(table) : loop_table_to_markdown(table));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back(kProgram);
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"loop coproducts on spherical space forms"};
  app.require_subcommand(1);
  Flags f;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", f.format, "md or json")->capture_default_str();
  };
  auto add_group = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--group", f.group_spec,
                            "trivial | infinite | cyclic:M | quaternion:4M | file:PATH");
    if (required) o->required();
  };
  auto add_n = [&](CLI::App* c) { c->add_option("--n", f.n, "sphere dimension")->required(); };

  CLI::App* group = app.add_subcommand("group", "inspect a finite group");
  add_group(group);
  add_format(group);

  CLI::App* coproduct = app.add_subcommand("coproduct", "loop coproduct of an element");
  add_group(coproduct);
  add_n(coproduct);
  coproduct->add_option("--element", f.element, "element expression");
  coproduct->add_flag("--witness", f.witness, "also report a two-sided witness term");
  add_format(coproduct);

  CLI::App* circle = app.add_subcommand("circle", "circle coproducts on Z[x, x^-1]");
  circle->add_option("--variant", f.variant, "vee+ | vee- | lambda+ | lambda-")->required();
  circle->add_option("--element", f.element, "Laurent expression");
  add_format(circle);

  CLI::App* check = app.add_subcommand("check", "verify identities, exit 1 on a counterexample");
  check->require_subcommand(1);
  CLI::App* c_sullivan = check->add_subcommand("sullivan", "product relation of the coproduct");
  add_group(c_sullivan);
  add_n(c_sullivan);
  c_sullivan->add_option("--max-k", f.max_k, "exponent sweep bound")->capture_default_str();
  c_sullivan->add_option("--a", f.a, "first element (with --b: single pair mode)");
  c_sullivan->add_option("--b", f.b, "second element");
  add_format(c_sullivan);
  CLI::App* c_pi1 = check->add_subcommand("pi1", "deck invariance of coproduct images");
  add_group(c_pi1);
  add_n(c_pi1);
  c_pi1->add_option("--max-k", f.max_k, "exponent sweep bound")->capture_default_str();
  c_pi1->add_option("--element", f.element, "single element mode");
  add_format(c_pi1);
  CLI::App* c_cover = check->add_subcommand("cover", "universal cover consistency");
  add_group(c_cover);
  add_n(c_cover);
  c_cover->add_option("--max-k", f.max_k, "exponent sweep bound")->capture_default_str();
  c_cover->add_option("--element", f.element, "single element mode");
  add_format(c_cover);
  CLI::App* c_degree = check->add_subcommand("degree", "self map fiber formula");
  add_n(c_degree);
  c_degree->add_option("--max-k", f.max_k, "exponent sweep bound")->capture_default_str();
  c_degree->add_option("--degree", f.degree, "map degree (with --element)");
  c_degree->add_option("--element", f.element, "single element mode");
  add_format(c_degree);
  CLI::App* c_circle = check->add_subcommand("circle", "circle product relation");
  c_circle->add_option("--variant", f.variant, "vee+ | vee- | lambda+ | lambda-")->required();
  c_circle->add_option("--max-k", f.max_k, "exponent window bound")->capture_default_str();
  c_circle->add_option("--a", f.a, "first element (with --b: single pair mode)");
  c_circle->add_option("--b", f.b, "second element");
  add_format(c_circle);

  CLI::App* push = app.add_subcommand("pushforward", "apply a based map to loop classes");
  push->add_option("--map-file", f.map_file, "map document path");
  push->add_option("--kind", f.kind, "covering | self (instead of a file)");
  add_group(push, false);
  push->add_option("--n", f.n, "source sphere dimension");
  push->add_option("--degree", f.degree, "self map degree");
  push->add_option("--element", f.element, "source element");
  push->add_flag("--via", f.via, "also compute the coproduct through the map");
  add_format(push);

  CLI::App* homology = app.add_subcommand("homology", "integer homology tables");
  homology->add_option("--of", f.of, "group | periodic | space")->capture_default_str();
  add_group(homology);
  homology->add_option("--n", f.n, "space dimension (with --of space)");
  homology->add_option("--max-degree", f.max_degree, "top degree")->capture_default_str();
  add_format(homology);

  CLI::App* loopspace = app.add_subcommand("loopspace", "free loop space homology table");
  add_group(loopspace);
  add_n(loopspace);
  loopspace->add_option("--max-degree", f.max_degree, "top degree")->capture_default_str();
  add_format(loopspace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(group)) return cmd_group(f, out);
    if (app.got_subcommand(coproduct)) return cmd_coproduct(f, out);
    if (app.got_subcommand(circle)) return cmd_circle(f, out);
    if (app.got_subcommand(check)) {
      if (check->got_subcommand(c_sullivan)) return check_sullivan_cmd(f, out);
      if (check->got_subcommand(c_pi1)) return check_pi1_cmd(f, out);
      if (check->got_subcommand(c_cover)) return check_cover_cmd(f, out);
      if (check->got_subcommand(c_degree)) return check_degree_cmd(f, out);
      if (check->got_subcommand(c_circle)) return check_circle_cmd(f, out);
    }
    if (app.got_subcommand(push)) return cmd_pushforward(f, out);
    if (app.got_subcommand(homology)) return cmd_homology(f, out);
    if (app.got_subcommand(loopspace)) return cmd_loopspace(f, out);
    fail(Errc::BadInput, "no verb selected");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace loopcoprod
