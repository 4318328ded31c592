#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "legcable/acceptance.hpp"
#include "legcable/atlas.hpp"
#include "legcable/atlas_json.hpp"
#include "legcable/cables.hpp"
#include "legcable/links.hpp"
#include "legcable/links_json.hpp"
#include "legcable/oracle.hpp"
#include "legcable/render.hpp"

using namespace legcable;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnknown = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string atlas;  // empty: taken from the link document, else unknot
  std::string surgery_peaks;
  int p = 1;
  int q = 0;
  int n = 1;
  std::optional<int> t;
  std::string vec;
  std::string base;
  std::string sign = "+";
  std::optional<int> tb_min;
  std::string format = "ascii";
  std::optional<int> budget;
  std::string out;
  std::string overlay;
  std::string perm;
  std::string link1;
  std::string link2;
  std::uint64_t seed = kDefaultSeed;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON or a path to a JSON file.
std::string json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return slurp(arg);
}

KnotAtlas with_flags(KnotAtlas atlas, const Options& o) {
  if (!o.surgery_peaks.empty()) atlas = atlas.with_peak_surgery(tri_from_string(o.surgery_peaks));
  return atlas;
}

KnotAtlas load(const Options& o) { return with_flags(load_atlas(o.atlas.empty() ? "unknot" : o.atlas), o); }

// Without --atlas, a link document's own "atlas" field decides.
KnotAtlas load_for(const Options& o, const std::string& link_arg) {
  if (!o.atlas.empty() || link_arg.empty()) return load(o);
  json doc;
  try {
    doc = json::parse(json_arg(link_arg));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("atlas")) return load(o);
  const json& a = doc["atlas"];
  if (a.is_string()) return with_flags(load_atlas(a.get<std::string>()), o);
  return with_flags(atlas_from_json(a), o);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + o.out + "'");
  f << text;
}

std::string range_text(const Options& o, const MountainRange& mr, const std::optional<Overlay>& overlay = {}) {
  if (o.format == "svg") return svg_mountain(mr, overlay);
  if (o.format == "json") {
    json j;
    j["tb_min"] = mr.tb_min();
    j["entries"] = json::array();
    for (const auto& [pt, m] : mr.entries()) j["entries"].push_back({{"rot", pt.rot}, {"tb", pt.tb}, {"mult", m}});
    return j.dump(2);
  }
  return ascii_mountain(mr);
}

Link link_from_flags(const KnotAtlas& atlas, const Options& o) {
  if (o.base.empty()) throw Error(ErrorCode::ParseError, "a link needs --base <generator id> or a JSON document");
  const LegClass base = LegClass::named(atlas.index_of(o.base));
  const StabVec vec = o.vec.empty() ? StabVec{} : parse_stab_vec(o.vec);
  if (o.t) return make_integer_link(atlas, base, o.n, *o.t, vec);
  switch (regime(atlas, o.p, o.q)) {
    case Regime::Greater: return make_greater_link(atlas, base, o.n, o.p, o.q, vec);
    case Regime::IntegerLesser:
      return make_integer_link(atlas, base, o.n, invariants(atlas, base).tb - o.q, vec);
    case Regime::NonIntegerLesser:
      return make_lesser_link(atlas, base, o.sign == "-" ? Sign::Minus : Sign::Plus, o.n, o.p, o.q, vec);
    case Regime::UnsupportedWindow: break;
  }
  throw Error(ErrorCode::WrongRegime, "slope lies in the unsupported window");
}

Link link_arg(const KnotAtlas& atlas, const Options& o, const std::string& arg) {
  return arg.empty() ? link_from_flags(atlas, o) : parse_link(atlas, json_arg(arg));
}

int verdict_exit(const Verdict& v) { return v.is_unknown() ? kExitUnknown : kExitOk; }

// ---------------------------------------------------------------------------

int cmd_atlas_show(const Options& o) {
  const KnotAtlas atlas = load(o);
  if (o.format == "json") {
    emit(o, dump_atlas(atlas));
    return kExitOk;
  }
  std::ostringstream s;
  s << atlas.name() << ": tbb " << atlas.tbb() << ", width ceiling " << atlas.width_ceiling()
    << (atlas.uniformly_thick() ? ", uniformly thick" : "") << '\n';
  for (const auto& g : atlas.generators()) s << "  " << g.id << " (" << g.rot_tb.rot << "," << g.rot_tb.tb << ")\n";
  for (const auto& r : atlas.rules()) {
    s << "  " << atlas.generator(r.src).id << " +" << r.da << " -" << r.db << " -> "
      << (r.to_generic() ? std::string("generic") : atlas.generator(r.dst).id) << '\n';
  }
  emit(o, s.str());
  return kExitOk;
}

int cmd_peaks(const Options& o) {
  const KnotAtlas atlas = load(o);
  json j = json::array();
  std::ostringstream s;
  for (int g : peaks(atlas)) {
    const Generator& gen = atlas.generator(g);
    j.push_back({{"id", gen.id}, {"rot", gen.rot_tb.rot}, {"tb", gen.rot_tb.tb}});
    s << gen.id << " (" << gen.rot_tb.rot << "," << gen.rot_tb.tb << ")\n";
  }
  emit(o, o.format == "json" ? j.dump(2) : s.str());
  return kExitOk;
}

int cmd_mountain(const Options& o) {
  const KnotAtlas atlas = load(o);
  emit(o, range_text(o, mountain_range(atlas, o.tb_min.value_or(atlas.tbb() - 3))));
  return kExitOk;
}

int cmd_cable_mountain(const Options& o) {
  const KnotAtlas atlas = load(o);
  const Regime r = regime(atlas, o.p, o.q);
  MountainRange mr;
  if (r == Regime::Greater) {
    const int peak = o.p * o.q - o.q + o.p * atlas.tbb();
    mr = cable_mountain_range(atlas, o.p, o.q, o.tb_min.value_or(peak - 3));
  } else if (r == Regime::NonIntegerLesser) {
    mr = lesser_mountain_range(atlas, o.p, o.q, o.tb_min.value_or(o.p * o.q - 3));
  } else {
    throw Error(ErrorCode::WrongRegime, std::string("no cable mountain range for the ") + to_string(r) + " regime");
  }
  std::optional<Overlay> overlay;
  if (o.overlay == "ifsurg") overlay = ifsurg_overlay(o.p, o.q, mr.tb_min());
  emit(o, range_text(o, mr, overlay));
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  const KnotAtlas atlas = load(o);
  json j = json::array();
  std::ostringstream s;
  for (const Link& l : enumerate_nondestab_links(atlas, o.n, o.p, o.q)) {
    j.push_back(link_to_json(atlas, l));
    s << link_label(atlas, l) << '\n';
  }
  emit(o, o.format == "json" ? j.dump(2) : s.str());
  return kExitOk;
}

int cmd_isotopic(const Options& o) {
  const KnotAtlas atlas = load_for(o, o.link1);
  const Link l1 = parse_link(atlas, json_arg(o.link1));
  const Link l2 = parse_link(atlas, json_arg(o.link2));
  const Verdict v = isotopic(atlas, l1, l2);
  json j = verdict_to_json(v);
  if (o.budget) {
    SearchBudget b;
    b.depth = *o.budget;
    j["oracle"] = verdict_to_json(closure_equal(atlas, l1, l2, b));
  }
  emit(o, j.dump(2));
  return verdict_exit(v);
}

int cmd_componentwise(const Options& o) {
  const KnotAtlas atlas = load_for(o, o.link1);
  const Link l1 = parse_link(atlas, json_arg(o.link1));
  const Link l2 = parse_link(atlas, json_arg(o.link2));
  emit(o, json{{"componentwise", componentwise_isotopic(atlas, l1, l2)}}.dump(2));
  return kExitOk;
}

int cmd_permute(const Options& o) {
  const KnotAtlas atlas = load_for(o, o.link1);
  const Link l = link_arg(atlas, o, o.link1);
  std::vector<int> perm;
  try {
    perm = json::parse(o.perm).get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("--perm must be a JSON list of 1-based indices: ") + e.what());
  }
  for (int& v : perm) --v;
  const Verdict v = permutation_realizable(atlas, l, perm);
  json j = verdict_to_json(v);
  j["realizable"] = v.is_isotopic();
  emit(o, j.dump(2));
  return verdict_exit(v);
}

int cmd_selfcheck(const Options& o) {
  bool ok = true;
  std::ostringstream s;
  for (const auto& r : run_acceptance(o.seed)) {
    s << format_result(r) << '\n';
    ok = ok && r.pass;
  }
  emit(o, s.str());
  return ok ? kExitOk : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian cable links over knot atlases", "legcable"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--atlas", o.atlas, "builtin name (unknot, twist-even-N, k-minus-5) or atlas JSON file");
    c->add_option("--surgery-peaks", o.surgery_peaks, "set surgery distinctness of every peak pair (yes|no|unknown)")
        ->check(CLI::IsMember({"yes", "no", "unknown"}));
    c->add_option("--format", o.format, "ascii | svg | json")->check(CLI::IsMember({"ascii", "svg", "json"}));
    c->add_option("--out", o.out, "write output to this path");
  };
  auto slope = [&](CLI::App* c) {
    c->add_option("--p", o.p, "longitudinal count p >= 1");
    c->add_option("--q", o.q, "meridional count q");
  };
  auto link_flags = [&](CLI::App* c) {
    slope(c);
    c->add_option("--n", o.n, "number of components");
    c->add_option("--t", o.t, "twist count of an integer-sloped link");
    c->add_option("--vec", o.vec, "stabilizations as JSON [[a,b],...]");
    c->add_option("--base", o.base, "generator id of the base class");
    c->add_option("--sign", o.sign, "+ or - standard lesser cable")->check(CLI::IsMember({"+", "-"}));
  };

  auto* show = app.add_subcommand("atlas-show", "print an atlas");
  common(show);
  auto* pk = app.add_subcommand("peaks", "list non-destabilizable generators");
  common(pk);
  auto* mountain = app.add_subcommand("mountain", "mountain range of the atlas");
  common(mountain);
  mountain->add_option("--tb-min", o.tb_min, "lowest tb row");
  auto* cable = app.add_subcommand("cable-mountain", "mountain range of the (p,q)-cable");
  common(cable);
  slope(cable);
  cable->add_option("--tb-min", o.tb_min, "lowest tb row");
  cable->add_option("--overlay", o.overlay, "region overlay for svg output")->check(CLI::IsMember({"ifsurg"}));
  auto* en = app.add_subcommand("enumerate", "non-destabilizable cable links");
  common(en);
  slope(en);
  en->add_option("--n", o.n, "number of components");
  auto* iso = app.add_subcommand("isotopic", "decide isotopy of two link documents");
  common(iso);
  iso->add_option("link1", o.link1, "link JSON or file")->required();
  iso->add_option("link2", o.link2, "link JSON or file")->required();
  iso->add_option("--budget", o.budget, "also run the rewrite-closure oracle with this depth");
  auto* cw = app.add_subcommand("componentwise", "component-wise isotopy of two link documents");
  common(cw);
  cw->add_option("link1", o.link1, "link JSON or file")->required();
  cw->add_option("link2", o.link2, "link JSON or file")->required();
  auto* perm = app.add_subcommand("permute", "is a permutation of components realizable");
  common(perm);
  link_flags(perm);
  perm->add_option("link", o.link1, "link JSON or file (otherwise built from flags)");
  perm->add_option("--perm", o.perm, "1-based JSON list, component c goes to perm[c]")->required();
  auto* self = app.add_subcommand("selfcheck", "run the acceptance suite");
  common(self);
  self->add_option("--seed", o.seed, "seed for the randomized oracle comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*show) return cmd_atlas_show(o);
    if (*pk) return cmd_peaks(o);
    if (*mountain) return cmd_mountain(o);
    if (*cable) return cmd_cable_mountain(o);
    if (*en) return cmd_enumerate(o);
    if (*iso) return cmd_isotopic(o);
    if (*cw) return cmd_componentwise(o);
    if (*perm) return cmd_permute(o);
    if (*self) return cmd_selfcheck(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
