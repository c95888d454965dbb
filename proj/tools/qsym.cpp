// Command-line driver: superpotential checks, pair classification, atlas
// reports, quantum dimensions and Hilbert series.
//
// Exit codes: 0 success (any verdict), 2 degenerate input, 3 parse or
// validation error, 4 budget exceeded, 1 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsym/atlas.hpp"
#include "qsym/cubic.hpp"
#include "qsym/families.hpp"
#include "qsym/io.hpp"
#include "qsym/presentation.hpp"
#include "qsym/superpotential.hpp"

namespace {

using namespace qsym;

constexpr int kExitDegenerate = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;

struct RunConfig {
  std::string field = "Q";
  int bound = 8;
  std::string order = "default";
  std::uint64_t budget_terms = Budget{}.max_basis_terms;
  std::string cache_dir;
  bool emit_magma = false;
  unsigned seed = 0;
  bool sl = false;
  int threads = 1;
  bool timing = false;
  std::string out;

  // Family inputs.
  std::string catalog = std::string(QSYM_DATA_DIR) + "/cubic_surfaces.json";
  std::vector<std::string> a{"0", "0", "0", "0"};
  std::string lambda = "1";

  PairConfig pair() const {
    if (bound < 2) throw std::invalid_argument("--bound must be at least 2");
    if (budget_terms == 0) throw std::invalid_argument("--budget-terms must be positive");
    PairConfig c;
    c.field = FieldSpec::parse(field);
    c.bound = bound;
    c.order = order;
    c.sl = sl;
    c.budget.max_basis_terms = budget_terms;
    c.cache_dir = cache_dir;
    return c;
  }

  Json to_json() const {
    Json j = pair_config_to_json(pair());
    j["seed"] = seed;
    j["cache_dir"] = cache_dir;
    return j;
  }
};

struct Input {
  std::string id;
  Tensor<Rational> tensor{1, 1};
  Json description;
  bool degenerate = false;
};

std::array<Rational, 4> parse_a(const RunConfig& cfg) {
  if (cfg.a.size() != 4) throw ParseError("--a needs four values");
  std::array<Rational, 4> a;
  for (std::size_t k = 0; k < 4; ++k) a[k] = Rational::parse_fraction(cfg.a[k]);
  return a;
}

// "f_poly", "family:<name>", or a JSON file holding a tensor or an m = 2
// coefficient matrix {"matrix": [[...]]}.
Input load_input(const std::string& spec, const RunConfig& cfg) {
  Input in;
  if (spec == kReferenceId) {
    in.id = spec;
    in.tensor = poly_superpotential<Rational>(3).tensor;
    in.description = {{"family", "f_poly"}};
    return in;
  }
  if (spec.rfind("family:", 0) == 0) {
    const auto catalog = load_catalog(cfg.catalog);
    const SurfaceFamily& fam = find_family(catalog, spec.substr(7));
    const AtlasItem item = family_item(fam, sample_params(fam, cfg.seed), parse_a(cfg),
                                       Rational::parse_fraction(cfg.lambda));
    in.id = item.id;
    in.description = item.description;
    in.degenerate = item.degenerate;
    in.tensor = build_family_superpotential(fam, sample_params(fam, cfg.seed), parse_a(cfg),
                                            Rational::parse_fraction(cfg.lambda))
                    .tensor;
    return in;
  }
  const Json j = read_json_file(spec);
  in.id = std::filesystem::path(spec).stem().string();
  in.description = {{"file", spec}};
  if (j.contains("matrix")) {
    const Matrix<Rational> e = matrix_from_json<Rational>(j.at("matrix"));
    if (e.rows() != e.cols() || e.rows() == 0) throw ParseError("matrix must be square and nonempty");
    in.tensor = Tensor<Rational>(2, static_cast<int>(e.rows()));
    for (Index r = 0; r < e.rows(); ++r)
      for (Index c = 0; c < e.cols(); ++c) in.tensor.add({static_cast<int>(r), static_cast<int>(c)}, e(r, c));
  } else {
    in.tensor = tensor_from_json<Rational>(j);
  }
  in.degenerate = !is_nondegenerate(in.tensor);
  return in;
}

std::string input_hash(const std::vector<Input>& inputs) {
  std::string text;
  for (const auto& in : inputs) text += tensor_to_json(in.tensor, FieldSpec::rationals()).dump() + "\n";
  return content_hash(text);
}

void emit_json(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

template <class S>
Json matrix_or_identity(const Matrix<S>& m) {
  if (m == identity<S>(m.rows())) return "I";
  return matrix_to_json(m);
}

int cmd_check(const std::string& spec, int d, const RunConfig& cfg) {
  const Input in = load_input(spec, cfg);
  const FieldSpec field = FieldSpec::parse(cfg.field);
  if (d < 0) d = in.tensor.arity();
  Json report{{"input", in.id}, {"input_hash", input_hash({in})}, {"config", cfg.to_json()}};
  const bool nondeg = with_field(field, [&](auto tag) {
    using S = typename decltype(tag)::type;
    const Tensor<S> t = tensor_cast<S>(in.tensor);
    if (!is_nondegenerate(t)) return false;
    report["nondeg"] = true;
    const auto p = find_twist(t);
    report["twist"] = p ? matrix_or_identity<S>(*p) : Json(nullptr);
    report["cy" + std::to_string(d)] = is_cy_shape(t, d);
    if (p) {
      const TwistedSuperpotential<S> sp{t, *p, true};
      for (int l = 2; l <= t.arity(); ++l) report["traceable" + std::to_string(l)] = is_L_traceable(sp, l);
      report["qdim"] = scalar_text(qdim_trace<S>(*p));
    }
    return true;
  });
  if (!nondeg) report["nondeg"] = false;
  emit_json(report, cfg.out);
  return nondeg ? 0 : kExitDegenerate;
}

int cmd_pair(const std::string& e_spec, const std::string& f_spec, const RunConfig& cfg) {
  const Input e = load_input(e_spec, cfg), f = load_input(f_spec, cfg);
  Json report{{"left", e.id}, {"right", f.id}, {"input_hash", input_hash({e, f})}, {"config", cfg.to_json()}};
  if (e.degenerate || f.degenerate) {
    report["status"] = "degenerate";
    report["degenerate"] = Json::array();
    if (e.degenerate) report["degenerate"].push_back(e.id);
    if (f.degenerate) report["degenerate"].push_back(f.id);
    emit_json(report, cfg.out);
    return kExitDegenerate;
  }
  const PairConfig pc = cfg.pair();
  const auto se = make_superpotential(e.tensor), sf = make_superpotential(f.tensor);
  const Presentation<Rational> pres = pc.sl ? build_SL(se, sf) : build_GL(se, sf);
  if (cfg.emit_magma) {
    const std::string path = cfg.out.empty() ? std::string("pair.magma")
                                             : std::filesystem::path(cfg.out).replace_extension(".magma").string();
    const Presentation<Rational> ordered = with_order(pres, parse_order(pc.order, pres.gens, pres.order));
    write_text_file(path, emit(ordered, EmitFormat::MagmaScript, pc.field, pc.bound));
    report["magma_script"] = path;
  }
  const PairResult r = classify_presentation(pres, pc, e.id, f.id);
  report["result"] = pair_result_to_json(r, cfg.timing);
  report["status"] = to_string(r.verdict.status);
  emit_json(report, cfg.out);
  return r.verdict.status == VerdictStatus::BudgetExceeded ? kExitBudget : 0;
}

std::vector<std::string> select_families(const std::vector<SurfaceFamily>& catalog, const std::string& selection) {
  std::vector<std::string> names;
  if (selection == "all" || selection == "zero" || selection == "asreg") {
    for (const auto& f : catalog) {
      const bool zero = f.expected == "B" || f.expected == "C" || f.expected == "D";
      if (selection == "all" || (selection == "zero" && zero) || (selection == "asreg" && f.expected == "ASreg"))
        names.push_back(f.name);
    }
    return names;
  }
  std::stringstream in(selection);
  std::string name;
  while (std::getline(in, name, ',')) {
    find_family(catalog, name);
    names.push_back(name);
  }
  return names;
}

int cmd_atlas(const std::string& selection, const std::string& pairs, bool table, const RunConfig& cfg) {
  const auto catalog = load_catalog(cfg.catalog);
  const PairConfig pc = cfg.pair();
  std::vector<AtlasItem> items{reference_item()};
  for (const auto& name : select_families(catalog, selection)) {
    const SurfaceFamily& fam = find_family(catalog, name);
    items.push_back(family_item(fam, sample_params(fam, cfg.seed), parse_a(cfg), Rational::parse_fraction(cfg.lambda)));
  }
  std::string catalog_text;
  {
    std::ifstream f(cfg.catalog);
    std::stringstream ss;
    ss << f.rdbuf();
    catalog_text = ss.str();
  }
  const PairSelection sel = pairs == "reference" ? PairSelection::ReferenceOnly : PairSelection::All;
  const ComponentReport rep = component_report(items, pc, sel, cfg.threads);
  Json j{{"config", cfg.to_json()},
         {"selection", selection},
         {"pairs_selected", pairs},
         {"input_hash", content_hash(catalog_text + selection + pairs)},
         {"report", report_to_json(rep, cfg.timing)}};
  if (table) std::cout << report_table(rep);
  if (!table || !cfg.out.empty()) emit_json(j, cfg.out);
  for (const auto& p : rep.pairs)
    if (p.verdict.status == VerdictStatus::BudgetExceeded) return kExitBudget;
  return 0;
}

int cmd_qdim(const std::string& spec, const RunConfig& cfg) {
  const Input in = load_input(spec, cfg);
  if (in.degenerate) {
    emit_json(Json{{"input", in.id}, {"nondeg", false}}, cfg.out);
    return kExitDegenerate;
  }
  const auto sp = make_superpotential(in.tensor);
  Json report{{"input", in.id},
              {"input_hash", input_hash({in})},
              {"twist", matrix_or_identity<Rational>(sp.twist)},
              {"qdim_trace", scalar_text(qdim_trace<Rational>(sp.twist))},
              {"qdim_subspace", scalar_text(qdim_subspace(Subspace<Rational>::full(sp.dim(), 1), sp.twist))}};
  if (sp.arity() == 2) report["trace_invariant"] = scalar_text(m2_trace_invariant<Rational>(m2_unpack(sp)));
  emit_json(report, cfg.out);
  return 0;
}

int cmd_hilb(const std::string& spec, int n, int d, int trunc, const RunConfig& cfg) {
  const Input in = load_input(spec, cfg);
  if (in.degenerate) {
    emit_json(Json{{"input", in.id}, {"nondeg", false}}, cfg.out);
    return kExitDegenerate;
  }
  const auto sp = make_superpotential(in.tensor);
  if (d < 0) d = sp.arity();
  const AlgebraData<Rational> alg = make_algebra(sp, n);
  Json report{{"input", in.id}, {"input_hash", input_hash({in})}, {"N", n}, {"d", d}, {"trunc", trunc}};
  report["quantum"] = qseries_to_json(quantum_hilbert_series(alg, d, trunc));
  const FieldSpec field = FieldSpec::parse(cfg.field);
  const Presentation<Rational> pres = build_algebra(alg);
  const auto counts = with_field(field, [&](auto tag) {
    using S = typename decltype(tag)::type;
    const Presentation<S> ps = presentation_cast<S>(pres);
    CompleteOptions opts;
    opts.budget.max_basis_terms = cfg.budget_terms;
    const GBState<S> st = complete(ps, std::max(trunc, ps.max_degree()), opts);
    return truncated_hilbert(st, ps.ngens(), trunc);
  });
  report["ordinary"] = counts;
  report["field"] = field.str();
  emit_json(report, cfg.out);
  return 0;
}

int cmd_emit(const std::string& e_spec, const std::string& f_spec, const std::string& format, const RunConfig& cfg) {
  const Input e = load_input(e_spec, cfg), f = load_input(f_spec, cfg);
  const PairConfig pc = cfg.pair();
  const auto se = make_superpotential(e.tensor), sf = make_superpotential(f.tensor);
  Presentation<Rational> pres = pc.sl ? build_SL(se, sf) : build_GL(se, sf);
  pres = with_order(pres, parse_order(pc.order, pres.gens, pres.order));
  const std::string text = emit(pres, emit_format_from_string(format), pc.field, pc.bound);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-symmetric equivalence of superpotential algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Q or Fp:<p>");
    sub->add_option("--bound", cfg.bound, "Degree bound for Groebner completion");
    sub->add_option("--order", cfg.order, "Generator precedence: default or comma-separated names");
    sub->add_option("--budget-terms", cfg.budget_terms, "Maximal number of basis terms")->envname("QSYM_BUDGET_TERMS");
    sub->add_option("--cache-dir", cfg.cache_dir, "Checkpoint cache directory")->envname("QSYM_CACHE_DIR");
    sub->add_option("--seed", cfg.seed, "Parameter sampling seed; 0 uses the catalog defaults");
    auto* sl = sub->add_flag("--sl", cfg.sl, "Use SL_m instead of GL_m");
    sub->add_flag_callback("--gl", [&cfg] { cfg.sl = false; }, "Use GL_m (default)")->excludes(sl);
    sub->add_option("--catalog", cfg.catalog, "Surface family catalog");
    sub->add_option("--a", cfg.a, "w0 coefficients a0 a1 a2 a3 for family inputs")->expected(4);
    sub->add_option("--lambda", cfg.lambda, "Scale of the cubic part for family inputs");
    sub->add_flag("--timing", cfg.timing, "Include timing and cache fields in reports");
    sub->add_option("--out,-o", cfg.out, "Write the report here instead of stdout");
  };

  std::string e_spec, f_spec, format = "canonical-text", selection = "all", pairs = "all";
  int d = -1, n = 2, trunc = 6;
  bool table = false;

  auto* check = app.add_subcommand("check", "Nondegeneracy, twist, CY shape and traceability of a tensor");
  check->add_option("input", e_spec, "Tensor file, f_poly or family:<name>")->required();
  check->add_option("--d", d, "Dimension for the CY-shape test (default m)");
  common(check);

  auto* pair = app.add_subcommand("pair", "Vanishing verdict for GL_m(e,f) or SL_m(e,f)");
  pair->add_option("e", e_spec)->required();
  pair->add_option("f", f_spec)->required();
  pair->add_flag("--emit-magma", cfg.emit_magma, "Write a Magma script beside the report");
  common(pair);

  auto* atlas = app.add_subcommand("atlas", "Component report over catalog families and f_poly");
  atlas->add_option("--select", selection, "all, zero, asreg or comma-separated family names");
  atlas->add_option("--pairs", pairs, "all or reference")->check(CLI::IsMember({"all", "reference"}));
  atlas->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  atlas->add_flag("--table", table, "Print a human-readable table");
  common(atlas);

  auto* qdim = app.add_subcommand("qdim", "Quantum dimension of V by the trace formula and by subspace trace");
  qdim->add_option("input", e_spec)->required();
  common(qdim);

  auto* hilb = app.add_subcommand("hilb", "Quantum and ordinary truncated Hilbert series of A(e,N)");
  hilb->add_option("input", e_spec)->required();
  hilb->add_option("--N", n, "Relation degree");
  hilb->add_option("--d", d, "Global dimension in the resolution formula (default m)");
  hilb->add_option("--trunc", trunc, "Truncation degree");
  common(hilb);

  auto* emitc = app.add_subcommand("emit", "Serialize the GL_m(e,f) presentation");
  emitc->add_option("e", e_spec)->required();
  emitc->add_option("f", f_spec)->required();
  emitc->add_option("--format", format, "canonical-text, magma-script or json");
  common(emitc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*check) return cmd_check(e_spec, d, cfg);
    if (*pair) return cmd_pair(e_spec, f_spec, cfg);
    if (*atlas) return cmd_atlas(selection, pairs, table, cfg);
    if (*qdim) return cmd_qdim(e_spec, cfg);
    if (*hilb) return cmd_hilb(e_spec, n, d, trunc, cfg);
    if (*emitc) return cmd_emit(e_spec, f_spec, format, cfg);
  } catch (const Degenerate& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
