// Pairwise vanishing classification of superpotentials and component
// reports over the surface-family catalog.
//
// classify_pair builds GL_m(e,f) (or SL_m) over Q, screens it over F_p and
// certifies over Q whenever the screen is definite.  Completions can be
// cached on disk, keyed by a content hash of (presentation, order, field);
// a cached truncated state is resumed when a higher bound is requested.

#ifndef QSYM_ATLAS_HPP_
#define QSYM_ATLAS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/families.hpp"
#include "qsym/io.hpp"
#include "qsym/ncgb.hpp"
#include "qsym/presentation.hpp"

namespace qsym {

struct InconsistentEvidence : std::logic_error {
  using std::logic_error::logic_error;
};

struct PairConfig {
  // Q: screen over F_screen_prime, then certify definite screens over Q.
  // F_p: that field only.
  FieldSpec field = FieldSpec::rationals();
  std::uint32_t screen_prime = kDefaultPrime;
  int bound = 8;
  std::string order = "default";  // see parse_order
  bool sl = false;
  Budget budget;
  std::string cache_dir;                // empty disables the cache
  std::size_t checkpoint_limit = 50000;  // largest basis stored as a checkpoint
};

Json pair_config_to_json(const PairConfig& cfg);

struct RunRecord {
  Verdict verdict;
  GbStats stats;
  bool from_cache = false;
  bool resumed = false;
};

struct PairResult {
  std::string left, right;
  Verdict verdict;                 // final answer
  std::optional<RunRecord> screen;  // F_p run when the field is Q
  std::optional<RunRecord> exact;   // run over the configured field
  bool certified = false;           // verdict computed over the configured field
};

// Truncated completion through the cache.  Exposed for tests of the cache
// and resume behaviour.
template <class S>
RunRecord cached_run(const Presentation<S>& pres, const FieldSpec& field, const PairConfig& cfg);

// Completion of a presentation already built over Q.
PairResult classify_presentation(const Presentation<Rational>& pres, const PairConfig& cfg, std::string left = "e",
                                 std::string right = "f");

PairResult classify_pair(const TwistedSuperpotential<Rational>& e, const TwistedSuperpotential<Rational>& f,
                         const PairConfig& cfg, std::string left = "e", std::string right = "f");

// Timing and cache fields appear only with with_timing.
Json pair_result_to_json(const PairResult& r, bool with_timing);

struct AtlasItem {
  std::string id;
  std::string expected;  // Catalog label; "ASreg" for the reference
  Json description;      // family, parameters, a, lambda
  bool degenerate = false;
  std::optional<TwistedSuperpotential<Rational>> superpotential;
};

inline const std::string kReferenceId = "f_poly";

// The superpotential of k[x1,x2,x3].
AtlasItem reference_item();

AtlasItem family_item(const SurfaceFamily& fam, const ParamMap& params, const std::array<Rational, 4>& a,
                      const Rational& lambda);

enum class PairSelection { All, ReferenceOnly };

struct Component {
  std::vector<std::string> members;
  bool conjectural = false;  // joined through an Inconclusive edge
  bool contradicted = false;  // a ZeroCertified edge lies inside
  std::string labels;        // Catalog labels of the members, joined by "/"
};

struct LabelComparison {
  std::string left, right;
  std::string expected;  // "same" or "different" component per the catalog
  std::string outcome;   // "consistent with catalog", "contradicts catalog" or "unresolved"
  bool conjectural = false;
};

struct ComponentReport {
  std::vector<AtlasItem> items;  // sorted by id
  std::vector<PairResult> pairs;  // sorted by (left, right)
  std::vector<Component> components;
  std::vector<LabelComparison> comparisons;
};

// Pairwise classification over a worker pool followed by a deterministic
// fold.  Throws InconsistentEvidence when a ZeroCertified edge joins two
// items already linked by NonzeroCertified edges.
ComponentReport component_report(std::vector<AtlasItem> items, const PairConfig& cfg,
                                 PairSelection selection = PairSelection::All, int threads = 1);

// Aggregation step alone, for precomputed pair results.
ComponentReport fold_report(std::vector<AtlasItem> items, std::vector<PairResult> pairs);

Json report_to_json(const ComponentReport& r, bool with_timing);
std::string report_table(const ComponentReport& r);

}  // namespace qsym

#endif  // QSYM_ATLAS_HPP_
