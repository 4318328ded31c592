#include "legcable/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "legcable/atlas_json.hpp"

namespace legcable {

using nlohmann::json;

namespace {

LegClass raw_stab(const LegClass& c, Sign s) {
  LegClass out = c;
  if (out.generic) {
    out.inv.rot += sign_value(s);
    out.inv.tb -= 1;
  } else {
    (s == Sign::Plus ? out.a : out.b) += 1;
  }
  return out;
}

bool all_at_least(const StabVec& v, int da, int db) {
  return std::all_of(v.begin(), v.end(), [&](const StabPair& s) { return s.a >= da && s.b >= db; });
}

StabVec shifted(StabVec v, int da, int db) {
  for (auto& s : v) {
    s.a += da;
    s.b += db;
  }
  return v;
}

}  // namespace

Oracle::Oracle(const KnotAtlas& atlas, SearchBudget budget) : atlas_(&atlas), budget_(budget) {}

Oracle::Oracle(const KnotAtlas& atlas, Regime regime, int n, int p, int q, SearchBudget budget)
    : atlas_(&atlas), budget_(budget), link_(true), regime_(regime), n_(n), p_(p), q_(q) {}

bool Oracle::valid_generic(RotTb inv) const {
  for (const auto& r : atlas_->rules()) {
    if (!r.to_generic()) continue;
    const RotTb g = atlas_->generator(r.src).rot_tb;
    const int twice_a = g.tb - inv.tb + inv.rot - g.rot;
    if (twice_a % 2 != 0) continue;
    const int a = twice_a / 2;
    const int b = g.tb - inv.tb - a;
    if (a >= r.da && b >= r.db) return true;
  }
  return false;
}

void Oracle::knot_moves(const LegClass& c, std::vector<LegClass>& out) const {
  if (c.generic) {
    for (const auto& r : atlas_->rules()) {
      if (!r.to_generic()) continue;
      const RotTb g = atlas_->generator(r.src).rot_tb;
      const int twice_a = g.tb - c.inv.tb + c.inv.rot - g.rot;
      if (twice_a % 2 != 0) continue;
      const int a = twice_a / 2;
      const int b = g.tb - c.inv.tb - a;
      if (a >= r.da && b >= r.db) out.push_back(LegClass::named(r.src, a, b));
    }
    return;
  }
  for (const auto& r : atlas_->rules()) {
    if (r.src == c.gen && c.a >= r.da && c.b >= r.db) {
      out.push_back(r.to_generic() ? LegClass::generic_at(invariants(*atlas_, c))
                                   : LegClass::named(r.dst, c.a - r.da, c.b - r.db));
    }
    if (!r.to_generic() && r.dst == c.gen) out.push_back(LegClass::named(r.src, c.a + r.da, c.b + r.db));
  }
}

std::vector<LegClass> Oracle::raw_destab(const LegClass& c, Sign s) const {
  if (c.generic) {
    const RotTb up{c.inv.rot - sign_value(s), c.inv.tb + 1};
    if (valid_generic(up)) return {LegClass::generic_at(up)};
    return {};
  }
  const int have = s == Sign::Plus ? c.a : c.b;
  if (have == 0) return {};
  LegClass out = c;
  (s == Sign::Plus ? out.a : out.b) -= 1;
  return {out};
}

OracleState Oracle::tidy(OracleState s) const {
  if (s.kind != OracleState::TorusDivide) s.sign = Sign::Plus;
  if (s.kind != OracleState::Twisted) s.t = 0;
  const bool keep_first = s.kind == OracleState::Twisted && s.t > 0 && !s.vec.empty();
  std::sort(s.vec.begin() + (keep_first ? 1 : 0), s.vec.end());
  return s;
}

OracleState Oracle::state_of(const LegClass& c) const {
  OracleState s;
  s.kind = OracleState::Knot;
  s.u = c;
  return s;
}

OracleState Oracle::state_of(const Link& l) const {
  OracleState s;
  switch (l.form) {
    case LinkForm::Cable: s.kind = OracleState::Cable; break;
    case LinkForm::Twisted: s.kind = OracleState::Twisted; break;
    case LinkForm::Ruling: s.kind = OracleState::Ruling; break;
    case LinkForm::TorusDivide: s.kind = OracleState::TorusDivide; break;
  }
  s.u = l.base;
  s.t = l.t;
  s.sign = l.sign;
  s.vec = l.vec;
  return tidy(s);
}

std::vector<OracleState> Oracle::neighbours(const OracleState& s) const {
  std::vector<OracleState> out;
  auto emit = [&](OracleState::Kind kind, const LegClass& u, int t, Sign sign, StabVec v) {
    out.push_back(tidy(OracleState{kind, u, t, sign, std::move(v)}));
  };

  std::vector<LegClass> moved;
  knot_moves(s.u, moved);
  for (const auto& m : moved) emit(s.kind, m, s.t, s.sign, s.vec);
  if (s.kind == OracleState::Knot) return out;

  const int tu = invariants(*atlas_, s.u).tb;
  const Sign signs[] = {Sign::Plus, Sign::Minus};
  // (da, db) for a shift of k along sign s
  auto along = [](Sign sg, int k) { return sg == Sign::Plus ? StabPair{k, 0} : StabPair{0, k}; };

  switch (s.kind) {
    case OracleState::Cable:
      for (Sign sg : signs) {
        const StabPair d = along(sg, p_);
        if (all_at_least(s.vec, d.a, d.b)) emit(s.kind, raw_stab(s.u, sg), 0, Sign::Plus, shifted(s.vec, -d.a, -d.b));
        for (const auto& up : raw_destab(s.u, sg)) emit(s.kind, up, 0, Sign::Plus, shifted(s.vec, d.a, d.b));
      }
      break;

    case OracleState::Twisted: {
      const std::size_t n = s.vec.size();
      if (s.t >= 1) {
        for (Sign sg : signs) {
          const StabPair d = along(sg, 1);
          if (s.vec[0].a < d.a || s.vec[0].b < d.b) continue;
          StabVec v = s.vec;
          v[0].a -= d.a;
          v[0].b -= d.b;
          for (std::size_t c = 1; c < n; ++c) {
            v[c].a += d.b;
            v[c].b += d.a;
          }
          emit(OracleState::Twisted, raw_stab(s.u, sg), s.t - 1, Sign::Plus, v);
        }
      }
      // the inverse move; with t = 0 any component may play component 1
      const std::size_t firsts = s.t == 0 ? n : 1;
      for (std::size_t f = 0; f < firsts; ++f) {
        StabVec v = s.vec;
        std::swap(v[0], v[f]);
        for (Sign sg : signs) {
          const StabPair d = along(sg, 1);
          bool ok = true;
          for (std::size_t c = 1; c < n; ++c) ok = ok && v[c].a >= d.b && v[c].b >= d.a;
          if (!ok) continue;
          for (const auto& up : raw_destab(s.u, sg)) {
            StabVec w = v;
            w[0].a += d.a;
            w[0].b += d.b;
            for (std::size_t c = 1; c < n; ++c) {
              w[c].a -= d.b;
              w[c].b -= d.a;
            }
            emit(OracleState::Twisted, up, s.t + 1, Sign::Plus, w);
          }
        }
      }
      if (s.t == 0) {
        for (Sign sg : signs) {
          const StabPair d = along(sg, 1);
          if (all_at_least(s.vec, d.a, d.b)) {
            emit(OracleState::Ruling, raw_stab(s.u, sg), 0, Sign::Plus, shifted(s.vec, -d.a, -d.b));
          }
        }
      }
      break;
    }

    case OracleState::Ruling:
      if (regime_ == Regime::IntegerLesser) {
        for (Sign sg : signs) {
          const StabPair d = along(sg, 1);
          if (all_at_least(s.vec, d.a, d.b)) emit(s.kind, raw_stab(s.u, sg), 0, Sign::Plus, shifted(s.vec, -d.a, -d.b));
          for (const auto& up : raw_destab(s.u, sg)) {
            const auto kind = tu + 1 == q_ ? OracleState::Twisted : OracleState::Ruling;
            emit(kind, up, 0, Sign::Plus, shifted(s.vec, d.a, d.b));
          }
        }
        break;
      }
      {
        const int c = window_tb(p_, q_);
        const int th0 = theta0(p_, q_);
        const int th1 = theta1(p_, q_);
        if (tu == c) {
          emit(OracleState::TorusDivide, s.u, 0, Sign::Plus, shifted(s.vec, 0, th0));
          emit(OracleState::TorusDivide, s.u, 0, Sign::Minus, shifted(s.vec, th0, 0));
          if (all_at_least(s.vec, th1, 0)) emit(s.kind, raw_stab(s.u, Sign::Plus), 0, Sign::Plus, shifted(s.vec, -th1, th0));
          if (all_at_least(s.vec, 0, th1)) emit(s.kind, raw_stab(s.u, Sign::Minus), 0, Sign::Plus, shifted(s.vec, th0, -th1));
        }
        if (tu == c - 1) {
          for (const auto& up : raw_destab(s.u, Sign::Plus)) {
            emit(OracleState::TorusDivide, up, 0, Sign::Plus, shifted(s.vec, th1, 0));
            if (all_at_least(s.vec, 0, th0)) emit(s.kind, up, 0, Sign::Plus, shifted(s.vec, th1, -th0));
          }
          for (const auto& up : raw_destab(s.u, Sign::Minus)) {
            emit(OracleState::TorusDivide, up, 0, Sign::Minus, shifted(s.vec, 0, th1));
            if (all_at_least(s.vec, th0, 0)) emit(s.kind, up, 0, Sign::Plus, shifted(s.vec, -th0, th1));
          }
        }
        if (tu <= c - 1) {
          for (Sign sg : signs) {
            const StabPair d = along(sg, p_);
            if (all_at_least(s.vec, d.a, d.b)) emit(s.kind, raw_stab(s.u, sg), 0, Sign::Plus, shifted(s.vec, -d.a, -d.b));
            if (tu <= c - 2) {
              for (const auto& up : raw_destab(s.u, sg)) emit(s.kind, up, 0, Sign::Plus, shifted(s.vec, d.a, d.b));
            }
          }
        }
      }
      break;

    case OracleState::TorusDivide: {
      const int th0 = theta0(p_, q_);
      const int th1 = theta1(p_, q_);
      const Sign sg = s.sign;
      const StabPair same = along(sg, th1);
      const StabPair other = along(opposite(sg), th0);
      if (all_at_least(s.vec, other.a, other.b)) {
        emit(OracleState::Ruling, s.u, 0, Sign::Plus, shifted(s.vec, -other.a, -other.b));
      }
      if (all_at_least(s.vec, same.a, same.b)) {
        emit(OracleState::Ruling, raw_stab(s.u, sg), 0, Sign::Plus, shifted(s.vec, -same.a, -same.b));
      }
      break;
    }

    case OracleState::Knot:
      break;
  }
  return out;
}

OrbitResult Oracle::orbit(const OracleState& start) const {
  OrbitResult res;
  std::map<OracleState, int> dist;
  const OracleState s0 = tidy(start);
  dist[s0] = 0;
  res.states.push_back(s0);
  res.complete = true;
  for (std::size_t head = 0; head < res.states.size(); ++head) {
    const OracleState cur = res.states[head];
    const int d = dist[cur];
    for (auto& nb : neighbours(cur)) {
      if (dist.count(nb)) continue;
      if (d >= budget_.depth || res.states.size() >= budget_.node_cap) {
        res.complete = false;
        continue;
      }
      dist[nb] = d + 1;
      res.states.push_back(std::move(nb));
    }
  }
  return res;
}

Verdict Oracle::closure_equal(const OracleState& x, const OracleState& y) const {
  const OracleState sx = tidy(x);
  const OracleState sy = tidy(y);
  std::map<OracleState, std::pair<int, int>> seen;  // state -> (distance, parent index)
  std::vector<OracleState> order{sx};
  seen[sx] = {0, -1};
  bool complete = true;
  auto path_to = [&](std::size_t idx) {
    std::vector<std::string> path;
    for (int i = static_cast<int>(idx); i >= 0; i = seen[order[static_cast<std::size_t>(i)]].second) {
      path.push_back(state_label(order[static_cast<std::size_t>(i)]));
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  if (sx == sy) return Verdict::isotopic("identical presentations", {state_label(sx)});
  for (std::size_t head = 0; head < order.size(); ++head) {
    const OracleState cur = order[head];
    const int d = seen[cur].first;
    for (auto& nb : neighbours(cur)) {
      if (seen.count(nb)) continue;
      if (d >= budget_.depth || order.size() >= budget_.node_cap) {
        complete = false;
        continue;
      }
      seen[nb] = {d + 1, static_cast<int>(head)};
      order.push_back(nb);
      if (nb == sy) return Verdict::isotopic("rewrite path found", path_to(order.size() - 1));
    }
  }
  if (complete) {
    return Verdict::not_isotopic("orbit exhausted after " + std::to_string(order.size()) + " states");
  }
  return Verdict::unknown(std::string(to_string(ErrorCode::BudgetExceeded)) + ": orbit not exhausted within budget");
}

OracleState Oracle::orbit_min(const OracleState& s) const {
  const OrbitResult r = orbit(s);
  if (!r.complete) throw Error(ErrorCode::BudgetExceeded, "orbit of " + state_label(s) + " not exhausted");
  return *std::min_element(r.states.begin(), r.states.end());
}

RotTb Oracle::state_invariants(const OracleState& s) const {
  const RotTb u = invariants(*atlas_, s.u);
  if (s.kind == OracleState::Knot) return u;
  const StabPair v = s.vec.empty() ? StabPair{} : s.vec[0];
  RotTb top{};
  switch (s.kind) {
    case OracleState::Cable:
    case OracleState::Ruling:
      top = {p_ * u.rot, p_ * q_ - std::abs(p_ * u.tb - q_)};
      break;
    case OracleState::Twisted:
      top = u;
      break;
    case OracleState::TorusDivide:
      top = {p_ * u.rot + sign_value(s.sign) * theta0(p_, q_), p_ * q_};
      break;
    case OracleState::Knot:
      break;
  }
  return {top.rot + v.a - v.b, top.tb - v.a - v.b};
}

std::string Oracle::state_label(const OracleState& s) const {
  static const char* names[] = {"knot", "cable", "twisted", "ruling", "torus-divide"};
  std::string out = names[s.kind];
  out += " " + label(*atlas_, s.u);
  if (s.kind == OracleState::Twisted) out += " t=" + std::to_string(s.t);
  if (s.kind == OracleState::TorusDivide) out += std::string(" ") + to_string(s.sign);
  if (s.kind != OracleState::Knot) {
    out += " [";
    for (std::size_t c = 0; c < s.vec.size(); ++c) {
      out += (c ? "," : "") + std::string("(") + std::to_string(s.vec[c].a) + "," + std::to_string(s.vec[c].b) + ")";
    }
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------------------

Verdict closure_equal(const KnotAtlas& atlas, const LegClass& c1, const LegClass& c2, SearchBudget budget) {
  Oracle o(atlas, budget);
  return o.closure_equal(o.state_of(c1), o.state_of(c2));
}

Verdict closure_equal(const KnotAtlas& atlas, const Link& l1, const Link& l2, SearchBudget budget) {
  if (l1.regime != l2.regime || l1.n != l2.n || l1.p != l2.p || l1.q != l2.q) {
    throw Error(ErrorCode::KindMismatch, "links differ in regime, slope or component count");
  }
  Oracle o(atlas, l1.regime, l1.n, l1.p, l1.q, budget);
  return o.closure_equal(o.state_of(l1), o.state_of(l2));
}

Verdict closure_equal(const KnotAtlas& atlas, const CableClass& c1, const CableClass& c2, SearchBudget budget) {
  if (c1.p != c2.p || c1.q != c2.q) throw Error(ErrorCode::KindMismatch, "cables have different slopes");
  Oracle o(atlas, Regime::Greater, 1, c1.p, c1.q, budget);
  auto st = [](const CableClass& c) {
    return OracleState{OracleState::Cable, c.u, 0, Sign::Plus, {{c.i, c.j}}};
  };
  return o.closure_equal(st(c1), st(c2));
}

namespace {

// Counts orbits of the seeds by invariants; each orbit is explored once.
MountainRange count_orbits(const Oracle& o, const std::vector<OracleState>& seeds, int tb_min) {
  std::set<OracleState> assigned;
  MountainRange mr(tb_min, true);
  for (const auto& seed : seeds) {
    if (assigned.count(seed)) continue;
    const OrbitResult r = o.orbit(seed);
    if (!r.complete) throw Error(ErrorCode::BudgetExceeded, "orbit of " + o.state_label(seed) + " not exhausted");
    assigned.insert(r.states.begin(), r.states.end());
    const OracleState rep = *std::min_element(r.states.begin(), r.states.end());
    mr.add(o.state_invariants(rep), o.state_label(rep));
  }
  return mr;
}

}  // namespace

MountainRange brute_mountain_range(const KnotAtlas& atlas, int tb_min, SearchBudget budget) {
  Oracle o(atlas, budget);
  std::vector<OracleState> seeds;
  for (std::size_t g = 0; g < atlas.generators().size(); ++g) {
    const int room = atlas.generators()[g].rot_tb.tb - tb_min;
    for (int a = 0; a <= room; ++a) {
      for (int b = 0; a + b <= room; ++b) seeds.push_back(o.state_of(LegClass::named(static_cast<int>(g), a, b)));
    }
  }
  return count_orbits(o, seeds, tb_min);
}

MountainRange brute_cable_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min, SearchBudget budget) {
  if (regime(atlas, p, q) != Regime::Greater) throw Error(ErrorCode::WrongRegime, "not a greater slope");
  Oracle o(atlas, Regime::Greater, 1, p, q, budget);
  std::vector<OracleState> seeds;
  for (std::size_t g = 0; g < atlas.generators().size(); ++g) {
    const int top = p * q - q + p * atlas.generators()[g].rot_tb.tb;
    for (int a = 0; top - p * a >= tb_min; ++a) {
      for (int b = 0; top - p * (a + b) >= tb_min; ++b) {
        const int room = top - p * (a + b) - tb_min;
        for (int i = 0; i <= room; ++i) {
          for (int j = 0; i + j <= room; ++j) {
            seeds.push_back(OracleState{OracleState::Cable, LegClass::named(static_cast<int>(g), a, b), 0,
                                        Sign::Plus, {{i, j}}});
          }
        }
      }
    }
  }
  return count_orbits(o, seeds, tb_min);
}

MountainRange brute_lesser_mountain_range(const KnotAtlas& atlas, int p, int q, int tb_min, SearchBudget budget) {
  if (regime(atlas, p, q) != Regime::NonIntegerLesser) throw Error(ErrorCode::WrongRegime, "not a non-integer lesser slope");
  Oracle o(atlas, Regime::NonIntegerLesser, 1, p, q, budget);
  const int c = window_tb(p, q);
  const int room = p * q - tb_min;
  std::vector<OracleState> seeds;
  for (std::size_t g = 0; g < atlas.generators().size(); ++g) {
    const int tg = atlas.generators()[g].rot_tb.tb;
    if (tg < c) {
      const int rroom = o.state_invariants({OracleState::Ruling, LegClass::named(static_cast<int>(g)), 0, Sign::Plus, {{0, 0}}}).tb - tb_min;
      for (int i = 0; i <= rroom; ++i) {
        for (int j = 0; i + j <= rroom; ++j) {
          seeds.push_back({OracleState::Ruling, LegClass::named(static_cast<int>(g)), 0, Sign::Plus, {{i, j}}});
        }
      }
      continue;
    }
    for (int a = 0; a <= tg - c; ++a) {
      const LegClass base = LegClass::named(static_cast<int>(g), a, tg - c - a);
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        for (int i = 0; i <= room; ++i) {
          for (int j = 0; i + j <= room; ++j) seeds.push_back({OracleState::TorusDivide, base, 0, s, {{i, j}}});
        }
      }
    }
  }
  return count_orbits(o, seeds, tb_min);
}

ConfluenceReport check_confluence(const KnotAtlas& atlas, int depth) {
  ConfluenceReport report;
  std::map<LegClass, std::set<LegClass>> memo;
  std::function<const std::set<LegClass>&(const LegClass&)> finals = [&](const LegClass& c) -> const std::set<LegClass>& {
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
    std::set<LegClass> out;
    bool any = false;
    if (!c.generic) {
      for (const auto& r : atlas.rules()) {
        if (r.src != c.gen || c.a < r.da || c.b < r.db) continue;
        any = true;
        const LegClass next = r.to_generic() ? LegClass::generic_at(invariants(atlas, c))
                                             : LegClass::named(r.dst, c.a - r.da, c.b - r.db);
        const auto& sub = finals(next);
        out.insert(sub.begin(), sub.end());
      }
    }
    if (!any) out.insert(c);
    return memo.emplace(c, std::move(out)).first->second;
  };
  for (std::size_t g = 0; g < atlas.generators().size(); ++g) {
    for (int a = 0; a <= depth; ++a) {
      for (int b = 0; a + b <= depth; ++b) {
        const LegClass start = LegClass::named(static_cast<int>(g), a, b);
        const auto& nf = finals(start);
        ++report.checked;
        if (nf.size() > 1) report.divergences.push_back({start, {nf.begin(), nf.end()}});
      }
    }
  }
  return report;
}

json oracle_report(const std::vector<OracleRecord>& records) {
  json out = json::array();
  for (const auto& r : records) {
    out.push_back({{"input", r.input},
                   {"verdict", to_string(r.verdict.kind)},
                   {"reason", r.verdict.reason},
                   {"path-witness", r.verdict.witness}});
  }
  return out;
}

json confluence_report(const KnotAtlas& atlas, const ConfluenceReport& report) {
  json j;
  j["atlas"] = atlas.name();
  j["checked"] = report.checked;
  j["divergences"] = json::array();
  for (const auto& d : report.divergences) {
    json forms = json::array();
    for (const auto& f : d.normal_forms) forms.push_back(label(atlas, f));
    j["divergences"].push_back({{"start", label(atlas, d.start)}, {"normal_forms", forms}});
  }
  return j;
}

}  // namespace legcable
