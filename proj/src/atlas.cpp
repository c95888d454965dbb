#include "qsym/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "qsym/cubic.hpp"

namespace qsym {

namespace fs = std::filesystem;

Json pair_config_to_json(const PairConfig& cfg) {
  return Json{{"field", cfg.field.str()},
              {"screen_prime", cfg.screen_prime},
              {"bound", cfg.bound},
              {"order", cfg.order},
              {"construction", cfg.sl ? "SL" : "GL"},
              {"budget",
               {{"max_reduction_steps", cfg.budget.max_reduction_steps},
                {"max_basis_size", cfg.budget.max_basis_size},
                {"max_basis_terms", cfg.budget.max_basis_terms}}}};
}

namespace {

std::string cache_file(const std::string& dir, const std::string& key, int bound) {
  return (fs::path(dir) / (key + ".b" + std::to_string(bound) + ".json")).string();
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  write_text_file(tmp, text);
  fs::rename(tmp, path);
}

bool is_definite(VerdictStatus s) { return s == VerdictStatus::ZeroCertified || s == VerdictStatus::NonzeroCertified; }

GbStats stats_from_json(const Json& s) {
  GbStats st;
  st.reduction_steps = s.value("reduction_steps", 0ull);
  st.obstructions_processed = s.value("obstructions_processed", 0ull);
  st.zero_reductions = s.value("zero_reductions", 0ull);
  st.elements_added = s.value("elements_added", 0ull);
  st.elements_removed = s.value("elements_removed", 0ull);
  st.seconds = s.value("seconds", 0.0);
  return st;
}

}  // namespace

template <class S>
RunRecord cached_run(const Presentation<S>& pres, const FieldSpec& field, const PairConfig& cfg) {
  CompleteOptions opts;
  opts.budget = cfg.budget;
  auto record = [&](const GBState<S>& st) {
    RunRecord r;
    r.verdict = verdict(st, field);
    r.verdict.bound = cfg.bound;
    r.stats = st.stats;
    return r;
  };
  if (cfg.cache_dir.empty()) return record(complete(pres, cfg.bound, opts));

  fs::create_directories(cfg.cache_dir);
  const std::string key = content_hash(emit(pres, EmitFormat::Json) + "field " + field.str() + "\n");
  auto store = [&](const GBState<S>& st, const RunRecord& r) {
    if (r.verdict.status == VerdictStatus::BudgetExceeded) return;
    Json j{{"key", key}, {"bound", cfg.bound}, {"verdict", verdict_to_json(r.verdict)},
           {"stats", stats_to_json(r.stats)}, {"checkpoint", nullptr}};
    if (st.basis.size() <= cfg.checkpoint_limit) j["checkpoint"] = gbstate_to_json(st, pres.gens);
    write_atomically(cache_file(cfg.cache_dir, key, cfg.bound), j.dump() + "\n");
  };
  auto from_file = [&](const Json& j) {
    RunRecord r;
    r.verdict = verdict_from_json(j.at("verdict"));
    r.verdict.bound = cfg.bound;
    r.stats = stats_from_json(j.at("stats"));
    r.from_cache = true;
    return r;
  };

  const std::string exact = cache_file(cfg.cache_dir, key, cfg.bound);
  if (fs::exists(exact)) return from_file(read_json_file(exact));
  // A lower-bound entry is final when definite and resumable when it holds
  // a checkpoint.
  for (int b = cfg.bound - 1; b >= 1; --b) {
    const std::string path = cache_file(cfg.cache_dir, key, b);
    if (!fs::exists(path)) continue;
    const Json j = read_json_file(path);
    RunRecord r = from_file(j);
    if (is_definite(r.verdict.status)) return r;
    if (j.at("checkpoint").is_null()) break;
    const GBState<S> saved = gbstate_from_json<S>(j.at("checkpoint"));
    const GBState<S> st = resume(saved, pres.ngens(), cfg.bound, opts);
    RunRecord out = record(st);
    out.resumed = true;
    store(st, out);
    return out;
  }
  const GBState<S> st = complete(pres, cfg.bound, opts);
  RunRecord out = record(st);
  store(st, out);
  return out;
}

template RunRecord cached_run<Rational>(const Presentation<Rational>&, const FieldSpec&, const PairConfig&);
template RunRecord cached_run<Zp>(const Presentation<Zp>&, const FieldSpec&, const PairConfig&);

namespace {

RunRecord run_in(const Presentation<Rational>& pres, const FieldSpec& field, const PairConfig& cfg) {
  return with_field(field, [&](auto tag) {
    using S = typename decltype(tag)::type;
    return cached_run<S>(presentation_cast<S>(pres), field, cfg);
  });
}

}  // namespace

PairResult classify_presentation(const Presentation<Rational>& pres, const PairConfig& cfg, std::string left,
                                 std::string right) {
  if (cfg.bound < 2) throw std::invalid_argument("bound must be at least 2");
  PairResult out;
  out.left = std::move(left);
  out.right = std::move(right);
  const Presentation<Rational> p = with_order(pres, parse_order(cfg.order, pres.gens, pres.order));
  if (!cfg.field.is_prime_field()) {
    try {
      out.screen = run_in(p, FieldSpec::prime(cfg.screen_prime), cfg);
    } catch (const DivisionByZero&) {
      // A denominator vanishes mod the screening prime: certify directly.
    }
    if (out.screen && !is_definite(out.screen->verdict.status)) {
      out.verdict = out.screen->verdict;
      return out;
    }
  }
  out.exact = run_in(p, cfg.field, cfg);
  out.verdict = out.exact->verdict;
  out.certified = true;
  return out;
}

PairResult classify_pair(const TwistedSuperpotential<Rational>& e, const TwistedSuperpotential<Rational>& f,
                         const PairConfig& cfg, std::string left, std::string right) {
  const Presentation<Rational> pres = cfg.sl ? build_SL(e, f) : build_GL(e, f);
  return classify_presentation(pres, cfg, std::move(left), std::move(right));
}

namespace {

Json run_to_json(const RunRecord& r, bool with_timing) {
  Json j{{"verdict", verdict_to_json(r.verdict)}, {"stats", stats_to_json(r.stats, with_timing)}};
  if (with_timing) {
    j["from_cache"] = r.from_cache;
    j["resumed"] = r.resumed;
  }
  return j;
}

}  // namespace

Json pair_result_to_json(const PairResult& r, bool with_timing) {
  return Json{{"left", r.left},
              {"right", r.right},
              {"status", to_string(r.verdict.status)},
              {"witness_degree", r.verdict.witness_degree},
              {"bound", r.verdict.bound},
              {"field", r.verdict.field},
              {"certified", r.certified},
              {"screen", r.screen ? run_to_json(*r.screen, with_timing) : Json(nullptr)},
              {"exact", r.exact ? run_to_json(*r.exact, with_timing) : Json(nullptr)}};
}

AtlasItem reference_item() {
  AtlasItem it;
  it.id = kReferenceId;
  it.expected = "ASreg";
  it.description = Json{{"family", "f_poly"}, {"algebra", "k[x1,x2,x3]"}};
  it.superpotential = poly_superpotential<Rational>(3);
  return it;
}

AtlasItem family_item(const SurfaceFamily& fam, const ParamMap& params, const std::array<Rational, 4>& a,
                      const Rational& lambda) {
  const FamilyInstance inst = build_family_superpotential(fam, params, a, lambda);
  AtlasItem it;
  it.id = fam.name;
  const bool a_zero = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
  const bool a_generic = std::none_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
  if (!a_zero) {
    it.id += "@a=";
    for (std::size_t k = 0; k < 4; ++k) it.id += (k ? "," : "") + a[k].str();
  }
  if (!lambda.is_one()) it.id += "@lambda=" + lambda.str();
  for (const auto& [k, v] : inst.params) {
    auto d = fam.defaults.find(k);
    if (d == fam.defaults.end() || !(d->second == v)) it.id += "@" + k + "=" + v.str();
  }
  it.degenerate = inst.degenerate;
  if (inst.degenerate) {
    it.expected = "degenerate";
  } else if (a_zero) {
    it.expected = fam.expected;
  } else if (a_generic) {
    it.expected = "ASreg";  // conjectured for every row once w0 is generic
  }
  Json params_json = Json::object();
  for (const auto& [k, v] : inst.params) params_json[k] = v.str();
  Json a_json = Json::array();
  for (const auto& x : a) a_json.push_back(x.str());
  it.description = Json{{"family", fam.name}, {"params", params_json}, {"a", a_json}, {"lambda", lambda.str()},
                        {"catalog_label", fam.expected}};
  it.superpotential = inst.superpotential;
  return it;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void sort_items(std::vector<AtlasItem>& items) {
  std::sort(items.begin(), items.end(), [](const AtlasItem& x, const AtlasItem& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i].id == items[i - 1].id) throw std::invalid_argument("duplicate atlas item '" + items[i].id + "'");
}

}  // namespace

ComponentReport fold_report(std::vector<AtlasItem> items, std::vector<PairResult> pairs) {
  sort_items(items);
  std::sort(pairs.begin(), pairs.end(),
            [](const PairResult& x, const PairResult& y) { return std::tie(x.left, x.right) < std::tie(y.left, y.right); });
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < items.size(); ++i) pos[items[i].id] = i;
  auto at = [&](const std::string& id) {
    auto it = pos.find(id);
    if (it == pos.end()) throw std::invalid_argument("pair refers to unknown item '" + id + "'");
    return it->second;
  };

  UnionFind certified(items.size()), joined(items.size());
  for (const auto& p : pairs) {
    const auto s = p.verdict.status;
    if (s == VerdictStatus::NonzeroCertified) certified.unite(at(p.left), at(p.right));
    if (s == VerdictStatus::NonzeroCertified || s == VerdictStatus::Inconclusive) joined.unite(at(p.left), at(p.right));
  }
  for (const auto& p : pairs)
    if (p.verdict.status == VerdictStatus::ZeroCertified && certified.find(at(p.left)) == certified.find(at(p.right)))
      throw InconsistentEvidence("ZeroCertified edge " + p.left + " -- " + p.right +
                                 " inside a NonzeroCertified component");

  ComponentReport out;
  std::map<std::size_t, Component> comps;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].degenerate) continue;
    comps[joined.find(i)].members.push_back(items[i].id);
  }
  for (auto& [root, c] : comps) {
    std::set<std::size_t> roots;
    std::set<std::string> labels;
    for (const auto& id : c.members) {
      roots.insert(certified.find(at(id)));
      if (!items[at(id)].expected.empty()) labels.insert(items[at(id)].expected);
    }
    c.conjectural = roots.size() > 1;
    for (const auto& l : labels) c.labels += (c.labels.empty() ? "" : "/") + l;
  }
  for (const auto& p : pairs)
    if (p.verdict.status == VerdictStatus::ZeroCertified && joined.find(at(p.left)) == joined.find(at(p.right)))
      comps[joined.find(at(p.left))].contradicted = true;
  for (auto& [root, c] : comps) out.components.push_back(std::move(c));

  for (const auto& p : pairs) {
    const std::string& el = items[at(p.left)].expected;
    const std::string& er = items[at(p.right)].expected;
    if (el.empty() || er.empty()) continue;
    LabelComparison t;
    t.left = p.left;
    t.right = p.right;
    const bool same = el == er;
    t.expected = same ? "same" : "different";
    switch (p.verdict.status) {
      case VerdictStatus::ZeroCertified:
        t.outcome = same ? "contradicts catalog" : "consistent with catalog";
        break;
      case VerdictStatus::NonzeroCertified:
        t.outcome = same ? "consistent with catalog" : "contradicts catalog";
        break;
      case VerdictStatus::Inconclusive:
        t.outcome = same ? "consistent with catalog" : "unresolved";
        t.conjectural = same;
        break;
      case VerdictStatus::BudgetExceeded:
        t.outcome = "unresolved";
        break;
    }
    out.comparisons.push_back(std::move(t));
  }
  out.items = std::move(items);
  out.pairs = std::move(pairs);
  return out;
}

ComponentReport component_report(std::vector<AtlasItem> items, const PairConfig& cfg, PairSelection selection,
                                 int threads) {
  sort_items(items);
  struct Job {
    std::size_t e, f;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[i].degenerate || items[j].degenerate) continue;
      const bool ref_i = items[i].id == kReferenceId, ref_j = items[j].id == kReferenceId;
      if (selection == PairSelection::ReferenceOnly && !ref_i && !ref_j) continue;
      // The reference always plays f, as in GL_3(e, f_poly).
      jobs.push_back(ref_i ? Job{j, i} : Job{i, j});
    }

  std::vector<PairResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        const AtlasItem& e = items[jobs[k].e];
        const AtlasItem& f = items[jobs[k].f];
        results[k] = classify_pair(*e.superpotential, *f.superpotential, cfg, e.id, f.id);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  // Pairs are keyed by sorted ids regardless of which side played f.
  for (auto& r : results)
    if (r.right < r.left) std::swap(r.left, r.right);
  return fold_report(std::move(items), std::move(results));
}

Json report_to_json(const ComponentReport& r, bool with_timing) {
  Json items = Json::array();
  for (const auto& it : r.items)
    items.push_back(Json{{"id", it.id}, {"expected", it.expected}, {"degenerate", it.degenerate},
                         {"description", it.description}});
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(pair_result_to_json(p, with_timing));
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"members", c.members}, {"conjectural", c.conjectural}, {"contradicted", c.contradicted},
                         {"labels", c.labels}});
  Json comparisons = Json::array();
  for (const auto& t : r.comparisons)
    comparisons.push_back(Json{{"left", t.left}, {"right", t.right}, {"expected", t.expected}, {"outcome", t.outcome},
                               {"conjectural", t.conjectural}});
  return Json{{"items", items}, {"pairs", pairs}, {"components", comps}, {"comparisons", comparisons}};
}

std::string report_table(const ComponentReport& r) {
  std::size_t w = 6;
  for (const auto& it : r.items) w = std::max(w, it.id.size());
  auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(s.size(), n), ' ');
    return s;
  };
  std::map<std::pair<std::string, std::string>, std::string> outcome;
  for (const auto& t : r.comparisons) outcome[{t.left, t.right}] = t.outcome + (t.conjectural ? " (conjectural)" : "");
  std::string out = pad("left", w) + "  " + pad("right", w) + "  " + pad("status", 12) + "  wdeg  field     catalog\n";
  for (const auto& p : r.pairs) {
    auto it = outcome.find({p.left, p.right});
    out += pad(p.left, w) + "  " + pad(p.right, w) + "  " + pad(to_string(p.verdict.status), 12) + "  " +
           pad(p.verdict.witness_degree < 0 ? "-" : std::to_string(p.verdict.witness_degree), 4) + "  " +
           pad(p.verdict.field, 8) + "  " + (it == outcome.end() ? "-" : it->second) + "\n";
  }
  for (const auto& it : r.items)
    if (it.degenerate) out += it.id + ": degenerate\n";
  out += "components:\n";
  for (const auto& c : r.components) {
    out += "  {";
    for (std::size_t k = 0; k < c.members.size(); ++k) out += (k ? ", " : "") + c.members[k];
    out += "}  catalog: " + (c.labels.empty() ? std::string("-") : c.labels);
    if (c.conjectural) out += "  [conjectural]";
    if (c.contradicted) out += "  [contradicted by a ZeroCertified edge]";
    out += "\n";
  }
  return out;
}

}  // namespace qsym
