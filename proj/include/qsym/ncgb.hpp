// Degree-truncated noncommutative Groebner bases in the free algebra.
//
// Completion is Buchberger's procedure for two-sided ideals with the normal
// selection strategy: obstructions (overlap ambiguities of leading words) are
// processed strictly by ascending length of the overlap word, first in first
// out within a length.  Inclusion ambiguities are removed eagerly: whenever a
// new leading word divides an existing one, the old element leaves the basis
// and is fed back through the queue.  Word length is the truncation measure,
// every generator counting 1.

#ifndef QSYM_NCGB_HPP_
#define QSYM_NCGB_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsym/presentation_types.hpp"
#include "qsym/word.hpp"

namespace qsym {

struct Budget {
  std::uint64_t max_reduction_steps = 4'000'000'000ull;
  std::size_t max_basis_size = 400'000;
  std::uint64_t max_basis_terms = 60'000'000ull;
};

struct GbStats {
  std::uint64_t reduction_steps = 0;
  std::uint64_t obstructions_processed = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t elements_added = 0;
  std::uint64_t elements_removed = 0;
  std::uint64_t chain_skipped = 0;
  double seconds = 0;
};

enum class StopReason { Exhausted, BoundReached, ZeroFound, BudgetExceeded };

struct Inhomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InsufficientDegree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class S>
struct GBState {
  std::vector<NcPoly<S>> basis;  // monic, sorted ascending by leading word
  MonomialOrder order;
  int bound = 0;
  int processed_degree = 0;
  bool queue_empty = false;
  StopReason stop = StopReason::BoundReached;
  int witness_degree = -1;       // degree of the obstruction that produced 1
  std::string witness_source;    // which relation/overlap produced 1
  bool homogeneous_input = false;
  GbStats stats;

  bool has_constant() const {
    return std::any_of(basis.begin(), basis.end(), [](const NcPoly<S>& p) { return p.is_constant(); });
  }
};

enum class VerdictStatus { ZeroCertified, NonzeroCertified, Inconclusive, BudgetExceeded };

std::string to_string(VerdictStatus s);
VerdictStatus verdict_status_from_string(const std::string& s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  int witness_degree = -1;
  int bound = 0;
  std::string field;
  std::vector<int> order;  // precedence, largest generator first
};

namespace detail {

// Prefix tree over leading words.  Finds a basis leading word occurring in a
// given word, scanning start positions left to right.
class LeadTrie {
 public:
  explicit LeadTrie(int alphabet = 1) : alpha_(alphabet) { new_node(); }

  void insert(Word w, int id) {
    int node = 0;
    for (int i = 0; i < w.size(); ++i) {
      int& next = child_[static_cast<std::size_t>(node * alpha_ + w[i])];
      if (next < 0) {
        const int fresh = new_node();
        child_[static_cast<std::size_t>(node * alpha_ + w[i])] = fresh;
        node = fresh;
      } else {
        node = next;
      }
    }
    terminal_[static_cast<std::size_t>(node)] = id;
  }

  void erase(Word w) {
    int node = 0;
    for (int i = 0; i < w.size() && node >= 0; ++i) node = child_[static_cast<std::size_t>(node * alpha_ + w[i])];
    if (node >= 0) terminal_[static_cast<std::size_t>(node)] = -1;
  }

  // True when a stored word equals w[start, end') for some end' <= end.
  bool matches_within(Word w, int start, int end) const {
    int node = 0;
    for (int k = start; k < end; ++k) {
      node = child_[static_cast<std::size_t>(node * alpha_ + w[k])];
      if (node < 0) return false;
      if (terminal_[static_cast<std::size_t>(node)] >= 0) return true;
    }
    return false;
  }

  // Returns basis id and sets pos, or -1.
  int find(Word w, int& pos) const {
    const int n = w.size();
    for (int s = 0; s < n; ++s) {
      int node = 0;
      for (int k = s; k < n; ++k) {
        node = child_[static_cast<std::size_t>(node * alpha_ + w[k])];
        if (node < 0) break;
        const int id = terminal_[static_cast<std::size_t>(node)];
        if (id >= 0) {
          pos = s;
          return id;
        }
      }
    }
    return -1;
  }

 private:
  int new_node() {
    child_.resize(child_.size() + static_cast<std::size_t>(alpha_), -1);
    terminal_.push_back(-1);
    return static_cast<int>(terminal_.size()) - 1;
  }

  int alpha_;
  std::vector<int> child_;
  std::vector<int> terminal_;
};

// Open-addressing map Word -> S for the reduction loop, cleared in O(1) by
// bumping a generation stamp.  A zero value marks a cancelled entry.
template <class S>
class WordAccumulator {
 public:
  WordAccumulator() { resize(1 << 12); }

  void clear() {
    if (++gen_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      gen_ = 1;
    }
    used_ = 0;
  }

  // Adds c to the entry for w; true when w was not present before.
  bool add(Word w, const S& c) {
    if (2 * (used_ + 1) > keys_.size()) grow();
    std::size_t i = slot(w);
    if (stamp_[i] != gen_) {
      stamp_[i] = gen_;
      keys_[i] = w;
      vals_[i] = c;
      ++used_;
      return true;
    }
    vals_[i] += c;
    return false;
  }

  // Removes and returns the value stored for w (zero when absent).
  S take(Word w) {
    const std::size_t i = slot(w);
    if (stamp_[i] != gen_) return S(0);
    S out = vals_[i];
    vals_[i] = S(0);
    return out;
  }

 private:
  std::size_t slot(Word w) const {
    std::size_t i = WordHash{}(w) & mask_;
    while (stamp_[i] == gen_ && keys_[i] != w) i = (i + 1) & mask_;
    return i;
  }

  void resize(std::size_t cap) {
    keys_.assign(cap, Word());
    vals_.assign(cap, S(0));
    stamp_.assign(cap, 0);
    mask_ = cap - 1;
  }

  void grow() {
    std::vector<Word> keys;
    std::vector<S> vals;
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (stamp_[i] == gen_) {
        keys.push_back(keys_[i]);
        vals.push_back(vals_[i]);
      }
    resize(keys_.size() * 2);
    gen_ = 1;
    used_ = 0;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      const std::size_t i = slot(keys[k]);
      stamp_[i] = gen_;
      keys_[i] = keys[k];
      vals_[i] = vals[k];
      ++used_;
    }
  }

  std::vector<Word> keys_;
  std::vector<S> vals_;
  std::vector<std::uint32_t> stamp_;
  std::size_t mask_ = 0;
  std::size_t used_ = 0;
  std::uint32_t gen_ = 1;
};

}  // namespace detail

// Stateful completion engine; complete() below is the usual entry point.
template <class S>
class Completion {
 public:
  using PackedTerm = std::pair<Word, S>;
  using PackedPoly = std::vector<PackedTerm>;  // descending, leading first

  Completion(int ngens, const MonomialOrder& order, int bound, Budget budget = {})
      : order_(order), bound_(bound), budget_(budget), trie_(std::max(ngens, 1)) {
    if (order.ngens() != ngens) throw std::invalid_argument("monomial order does not match generator count");
    if (ngens > 255) throw std::invalid_argument("at most 255 generators supported");
    if (bound < 1 || bound > Word::kMaxLength)
      throw std::invalid_argument("degree bound must lie in 1.." + std::to_string(Word::kMaxLength));
    code_.resize(static_cast<std::size_t>(ngens));
    gen_of_code_.resize(static_cast<std::size_t>(ngens));
    for (int g = 0; g < ngens; ++g) {
      const int c = ngens - 1 - order.rank(g);
      code_[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(c);
      gen_of_code_[static_cast<std::size_t>(c)] = g;
    }
  }

  Word pack(const GenWord& w) const {
    if (static_cast<int>(w.size()) > Word::kMaxLength)
      throw std::length_error("word longer than " + std::to_string(Word::kMaxLength));
    Word out;
    for (int g : w) out = out * Word::letter(code_[static_cast<std::size_t>(g)]);
    return out;
  }

  GenWord unpack(Word w) const {
    GenWord out(static_cast<std::size_t>(w.size()));
    for (int i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(i)] = gen_of_code_[w[i]];
    return out;
  }

  PackedPoly pack(const NcPoly<S>& p) const {
    PackedPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.emplace_back(pack(t.word), t.coeff);
    std::sort(out.begin(), out.end(), [](const PackedTerm& a, const PackedTerm& b) { return a.first > b.first; });
    return out;
  }

  NcPoly<S> unpack(const PackedPoly& p) const {
    std::vector<Term<S>> terms;
    terms.reserve(p.size());
    for (const auto& [w, c] : p) terms.push_back({unpack(w), c});
    return NcPoly<S>::from_terms(std::move(terms), order_);
  }

  // Queues an input polynomial (a relation or a checkpointed element).
  void add_input(const NcPoly<S>& p, std::string label = {}) {
    if (p.is_zero()) return;
    if (p.degree() > bound_) throw std::invalid_argument("relation degree exceeds the degree bound");
    pending_.push_back({pack(p), std::move(label)});
    push({static_cast<std::uint32_t>(p.degree()), seq_++, static_cast<int>(pending_.size()) - 1, -1, 0});
  }

  // Installs an element known to be part of an inter-reduced basis (resume),
  // queueing only its obstructions of degree above `skip_through`.
  void add_trusted(const NcPoly<S>& p, int skip_through) {
    insert(pack(p.monic()), skip_through);
  }

  // Adds a reducer without inter-reduction or obstructions (normal forms
  // against an arbitrary basis).
  void add_reducer(const NcPoly<S>& p) {
    if (p.is_zero()) return;
    PackedPoly q = make_monic(pack(p));
    const int id = static_cast<int>(elems_.size());
    trie_.insert(q.front().first, id);
    elems_.push_back(std::move(q));
    alive_.push_back(true);
    ++alive_count_;
  }

  void run() {
    const auto start = std::chrono::steady_clock::now();
    stop_ = StopReason::BoundReached;
    while (!queue_.empty()) {
      const Obstruction ob = queue_.top();
      if (static_cast<int>(ob.degree) > bound_) break;
      queue_.pop();
      PackedPoly spoly;
      std::string source;
      if (ob.j < 0) {
        spoly = std::move(pending_[static_cast<std::size_t>(ob.i)].poly);
        source = pending_[static_cast<std::size_t>(ob.i)].label;
      } else {
        if (!alive_[static_cast<std::size_t>(ob.i)] || !alive_[static_cast<std::size_t>(ob.j)]) continue;
        if (chain_criterion_ && interior_lead(overlap_word(ob.i, ob.j, ob.k))) {
          ++stats_.chain_skipped;
          continue;
        }
        spoly = s_polynomial(ob.i, ob.j, ob.k);
        source = "overlap(" + std::to_string(ob.i) + "," + std::to_string(ob.j) + "," + std::to_string(ob.k) + ")";
      }
      ++stats_.obstructions_processed;
      processed_degree_ = std::max(processed_degree_, static_cast<int>(ob.degree));
      PackedPoly r = reduce_packed(std::move(spoly));
      if (r.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (r.front().first.empty()) {
        witness_degree_ = static_cast<int>(ob.degree);
        witness_source_ = source.empty() ? "input" : source;
        stop_ = StopReason::ZeroFound;
        break;
      }
      insert(make_monic(std::move(r)), 0);
      if (over_budget()) {
        stop_ = StopReason::BudgetExceeded;
        break;
      }
    }
    if (stop_ == StopReason::BoundReached && queue_.empty() && !has_obstruction_above_bound())
      stop_ = StopReason::Exhausted;
    stats_.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void set_chain_criterion(bool on) { chain_criterion_ = on; }

  // Full normal form of p with respect to the current basis.
  NcPoly<S> normal_form(const NcPoly<S>& p) { return unpack(reduce_packed(pack(p))); }

  GBState<S> state(bool reduce_tails) {
    GBState<S> st;
    st.order = order_;
    st.bound = bound_;
    st.stop = stop_;
    st.stats = stats_;
    st.witness_degree = witness_degree_;
    st.witness_source = witness_source_;
    if (stop_ == StopReason::ZeroFound) {
      st.basis.push_back(NcPoly<S>::constant(S(1)));
      st.processed_degree = witness_degree_;
      st.queue_empty = true;
      return st;
    }
    std::vector<int> ids;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (alive_[i]) ids.push_back(static_cast<int>(i));
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return lead(a) < lead(b); });
    for (int id : ids) {
      PackedPoly p = elems_[static_cast<std::size_t>(id)];
      if (reduce_tails && p.size() > 1) {
        PackedPoly tail(p.begin() + 1, p.end());
        PackedPoly red = reduce_packed(std::move(tail));
        p.resize(1);
        p.insert(p.end(), red.begin(), red.end());
      }
      st.basis.push_back(unpack(p));
    }
    st.queue_empty = stop_ == StopReason::Exhausted;
    st.processed_degree = stop_ == StopReason::Exhausted ? std::max(processed_degree_, 0) : bound_;
    if (stop_ == StopReason::BudgetExceeded) st.processed_degree = last_complete_degree();
    return st;
  }

  StopReason stop() const { return stop_; }

  // Memory diagnostics: live basis terms, retired terms, pending terms, queue size.
  const GbStats& stats() const { return stats_; }

 private:
  struct Obstruction {
    std::uint32_t degree;
    std::uint64_t seq;
    int i, j, k;  // j < 0: pending input i
    bool operator>(const Obstruction& o) const {
      return degree != o.degree ? degree > o.degree : seq > o.seq;
    }
  };
  struct Pending {
    PackedPoly poly;
    std::string label;
  };

  Word lead(int id) const { return elems_[static_cast<std::size_t>(id)].front().first; }

  Word overlap_word(int i, int j, int k) const { return lead(i) * lead(j).suffix_from(k); }

  // A live leading word occurring in w away from both ends makes the
  // obstruction with overlap word w a consequence of two shorter ones, which
  // the normal strategy has already resolved.
  bool interior_lead(Word w) const {
    const int n = w.size();
    for (int p = 1; p + 1 < n; ++p)
      if (trie_.matches_within(w, p, n - 1)) return true;
    return false;
  }

  void push(Obstruction ob) { queue_.push(ob); }

  int last_complete_degree() const {
    return queue_.empty() ? processed_degree_ : static_cast<int>(queue_.top().degree) - 1;
  }

  bool over_budget() const {
    return stats_.reduction_steps > budget_.max_reduction_steps || alive_count_ > budget_.max_basis_size ||
           basis_terms_ > budget_.max_basis_terms;
  }

  PackedPoly make_monic(PackedPoly p) const {
    const S inv = p.front().second.inverse();
    if (!p.front().second.is_one())
      for (auto& t : p) t.second *= inv;
    return p;
  }

  // f_i * Z - X * f_j where lead(i) = X Y, lead(j) = Y Z, |Y| = k.
  PackedPoly s_polynomial(int i, int j, int k) const {
    const PackedPoly& f = elems_[static_cast<std::size_t>(i)];
    const PackedPoly& g = elems_[static_cast<std::size_t>(j)];
    const Word li = f.front().first, lj = g.front().first;
    const Word x = li.prefix(li.size() - k);
    const Word z = lj.suffix_from(k);
    PackedPoly out;
    out.reserve(f.size() + g.size());
    for (std::size_t t = 1; t < f.size(); ++t) out.emplace_back(f[t].first * z, f[t].second);
    for (std::size_t t = 1; t < g.size(); ++t) out.emplace_back(x * g[t].first, -g[t].second);
    return out;
  }

  // Words enter the heap once: reduction only ever creates words smaller
  // than the one being rewritten, so a popped word never comes back.
  PackedPoly reduce_packed(PackedPoly p) {
    acc_.clear();
    heap_.clear();
    for (auto& [w, c] : p) accumulate(w, c);
    PackedPoly result;
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end());
      const Word w = heap_.back();
      heap_.pop_back();
      const S c = acc_.take(w);
      if (c.is_zero()) continue;
      int pos = 0;
      const int id = trie_.find(w, pos);
      if (id < 0) {
        result.emplace_back(w, c);
        continue;
      }
      ++stats_.reduction_steps;
      const PackedPoly& g = elems_[static_cast<std::size_t>(id)];
      const Word u = w.prefix(pos);
      const Word v = w.suffix_from(pos + g.front().first.size());
      const S neg = -c;
      for (std::size_t t = 1; t < g.size(); ++t) accumulate(u * g[t].first * v, neg * g[t].second);
    }
    return result;
  }

  void accumulate(Word w, const S& c) {
    if (c.is_zero()) return;
    if (acc_.add(w, c)) {
      heap_.push_back(w);
      std::push_heap(heap_.begin(), heap_.end());
    }
  }

  void insert(PackedPoly p, int skip_through) {
    const Word lw = p.front().first;
    // Elements whose leading word contains lw leave the basis and are requeued.
    if (auto hit = factors_.find(lw); hit != factors_.end()) {
      std::vector<int> victims;
      for (int i : hit->second)
        if (alive_[static_cast<std::size_t>(i)]) victims.push_back(i);
      std::sort(victims.begin(), victims.end());
      victims.erase(std::unique(victims.begin(), victims.end()), victims.end());
      for (int i : victims) retire(i);
    }
    const int id = static_cast<int>(elems_.size());
    basis_terms_ += p.size();
    elems_.push_back(std::move(p));
    alive_.push_back(true);
    ++alive_count_;
    ++stats_.elements_added;
    trie_.insert(lw, id);
    index(lw, id);
    queue_overlaps(id, skip_through);
  }

  void retire(int i) {
    const Word li = lead(i);
    alive_[static_cast<std::size_t>(i)] = false;
    --alive_count_;
    basis_terms_ -= elems_[static_cast<std::size_t>(i)].size();
    trie_.erase(li);
    ++stats_.elements_removed;
    pending_.push_back({elems_[static_cast<std::size_t>(i)], "requeued"});
    push({static_cast<std::uint32_t>(li.size()), seq_++, static_cast<int>(pending_.size()) - 1, -1, 0});
  }

  // Registers the proper prefixes, proper suffixes and all factors of a lead.
  void index(Word lw, int id) {
    const int n = lw.size();
    for (int k = 1; k < n; ++k) {
      prefixes_[lw.prefix(k)].push_back(id);
      suffixes_[lw.suffix_from(n - k)].push_back(id);
    }
    for (int start = 0; start < n; ++start)
      for (int len = 1; start + len <= n; ++len) factors_[lw.sub(start, len)].push_back(id);
  }

  // Obstructions between the new element and every live element, including
  // its self-overlaps; lead(i) = X Y, lead(j) = Y Z with |Y| = k.
  void queue_overlaps(int id, int skip_through) {
    const Word lw = lead(id);
    const int n = lw.size();
    auto emit = [&](int i, int j, int k) {
      const int degree = lead(i).size() + lead(j).size() - k;
      if (degree <= skip_through) return;
      if (degree > bound_) {
        ++dropped_above_bound_;
        return;
      }
      push({static_cast<std::uint32_t>(degree), seq_++, i, j, k});
    };
    for (int k = 1; k < n; ++k) {
      if (auto it = prefixes_.find(lw.suffix_from(n - k)); it != prefixes_.end())
        for (int j : it->second)
          if (alive_[static_cast<std::size_t>(j)]) emit(id, j, k);
      if (auto it = suffixes_.find(lw.prefix(k)); it != suffixes_.end())
        for (int i : it->second)
          if (i != id && alive_[static_cast<std::size_t>(i)]) emit(i, id, k);
    }
  }

  bool has_obstruction_above_bound() const {
    if (dropped_above_bound_ == 0) return false;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!alive_[i]) continue;
      const Word li = lead(static_cast<int>(i));
      for (int k = 1; k < li.size(); ++k) {
        auto it = prefixes_.find(li.suffix_from(li.size() - k));
        if (it == prefixes_.end()) continue;
        for (int j : it->second)
          if (alive_[static_cast<std::size_t>(j)] && li.size() + lead(j).size() - k > bound_) return true;
      }
    }
    return false;
  }

  MonomialOrder order_;
  int bound_;
  Budget budget_;
  std::vector<std::uint8_t> code_;
  std::vector<int> gen_of_code_;

  std::vector<PackedPoly> elems_;
  std::vector<bool> alive_;
  std::size_t alive_count_ = 0;
  std::uint64_t basis_terms_ = 0;
  detail::LeadTrie trie_;
  std::unordered_map<Word, std::vector<int>, WordHash> prefixes_, suffixes_, factors_;
  std::uint64_t dropped_above_bound_ = 0;
  bool chain_criterion_ = true;
  std::vector<Pending> pending_;
  std::priority_queue<Obstruction, std::vector<Obstruction>, std::greater<>> queue_;
  std::uint64_t seq_ = 0;

  detail::WordAccumulator<S> acc_;
  std::vector<Word> heap_;

  StopReason stop_ = StopReason::BoundReached;
  int processed_degree_ = 0;
  int witness_degree_ = -1;
  std::string witness_source_;
  GbStats stats_;
};

struct CompleteOptions {
  Budget budget;
  bool reduce_tails = true;
  bool chain_criterion = true;
};

template <class S>
GBState<S> complete(const Presentation<S>& pres, int bound, const MonomialOrder& order,
                    const CompleteOptions& opts = {}) {
  if (bound < pres.max_degree())
    throw std::invalid_argument("degree bound below the maximal relation degree");
  Completion<S> engine(pres.ngens(), order, bound, opts.budget);
  engine.set_chain_criterion(opts.chain_criterion);
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    NcPoly<S> r = pres.relations[i];
    r.sort(order);
    engine.add_input(r, "relation " + std::to_string(i));
  }
  engine.run();
  GBState<S> st = engine.state(opts.reduce_tails);
  st.homogeneous_input = pres.is_homogeneous();
  return st;
}

template <class S>
GBState<S> complete(const Presentation<S>& pres, int bound, const CompleteOptions& opts = {}) {
  return complete(pres, bound, pres.order, opts);
}

// Continues a truncated state to a higher bound.  Obstructions among the
// saved basis up to the old processed degree are known to resolve.
template <class S>
GBState<S> resume(const GBState<S>& saved, int ngens, int bound, const CompleteOptions& opts = {}) {
  if (saved.stop == StopReason::ZeroFound || saved.stop == StopReason::Exhausted || bound <= saved.bound) {
    GBState<S> st = saved;
    return st;
  }
  Completion<S> engine(ngens, saved.order, bound, opts.budget);
  engine.set_chain_criterion(opts.chain_criterion);
  for (const auto& p : saved.basis) engine.add_trusted(p, saved.processed_degree);
  engine.run();
  GBState<S> st = engine.state(opts.reduce_tails);
  st.homogeneous_input = saved.homogeneous_input;
  st.stats.seconds += saved.stats.seconds;
  return st;
}

// Normal form with respect to a monic basis.
template <class S>
NcPoly<S> reduce(const NcPoly<S>& p, const std::vector<NcPoly<S>>& basis, const MonomialOrder& order) {
  Completion<S> engine(order.ngens(), order, Word::kMaxLength);
  for (const auto& g : basis) engine.add_reducer(g);
  NcPoly<S> q = p;
  q.sort(order);
  return engine.normal_form(q);
}

// S-polynomials of all proper overlaps lead(f) = X Y, lead(g) = Y Z, and of
// the inclusion lead(f) = X lead(g) Z when f != g.
template <class S>
std::vector<NcPoly<S>> overlaps(const NcPoly<S>& f, const NcPoly<S>& g, const MonomialOrder& order) {
  std::vector<NcPoly<S>> out;
  if (f.is_zero() || g.is_zero()) return out;
  const NcPoly<S> fm = f.monic(), gm = g.monic();
  const GenWord& lf = fm.leading().word;
  const GenWord& lg = gm.leading().word;
  auto combine = [&](const GenWord& fl, const GenWord& fr, const GenWord& gl, const GenWord& gr) {
    PolyBuilder<S> b;
    for (const auto& t : fm.terms()) {
      GenWord w = fl;
      w.insert(w.end(), t.word.begin(), t.word.end());
      w.insert(w.end(), fr.begin(), fr.end());
      b.add(w, t.coeff);
    }
    for (const auto& t : gm.terms()) {
      GenWord w = gl;
      w.insert(w.end(), t.word.begin(), t.word.end());
      w.insert(w.end(), gr.begin(), gr.end());
      b.add(w, -t.coeff);
    }
    out.push_back(b.finish(order));
  };
  const std::size_t maxk = std::min(lf.size(), lg.size());
  for (std::size_t k = 1; k < maxk; ++k) {
    if (!std::equal(lf.end() - static_cast<long>(k), lf.end(), lg.begin())) continue;
    GenWord z(lg.begin() + static_cast<long>(k), lg.end());
    GenWord x(lf.begin(), lf.end() - static_cast<long>(k));
    combine({}, z, x, {});
  }
  if (!(fm == gm) && lg.size() <= lf.size()) {
    for (std::size_t pos = 0; pos + lg.size() <= lf.size(); ++pos) {
      if (!std::equal(lg.begin(), lg.end(), lf.begin() + static_cast<long>(pos))) continue;
      GenWord x(lf.begin(), lf.begin() + static_cast<long>(pos));
      GenWord z(lf.begin() + static_cast<long>(pos + lg.size()), lf.end());
      combine({}, {}, x, z);
    }
  }
  return out;
}

template <class S>
Verdict verdict(const GBState<S>& st, const FieldSpec& field) {
  Verdict v;
  v.bound = st.bound;
  v.field = field.str();
  v.order = st.order.precedence();
  if (st.has_constant()) {
    v.status = VerdictStatus::ZeroCertified;
    v.witness_degree = st.witness_degree;
  } else if (st.stop == StopReason::BudgetExceeded) {
    v.status = VerdictStatus::BudgetExceeded;
  } else if (st.queue_empty) {
    v.status = VerdictStatus::NonzeroCertified;
  } else {
    v.status = VerdictStatus::Inconclusive;
  }
  return v;
}

// Number of normal words in each degree 0..d, via an Aho-Corasick automaton
// over the leading words.
template <class S>
std::vector<std::uint64_t> truncated_hilbert(const GBState<S>& st, int ngens, int d) {
  if (!st.homogeneous_input) throw Inhomogeneous("truncated_hilbert needs a homogeneous presentation");
  if (!st.queue_empty && st.processed_degree < d)
    throw InsufficientDegree("basis only processed through degree " + std::to_string(st.processed_degree));
  std::vector<std::vector<int>> go(1, std::vector<int>(static_cast<std::size_t>(ngens), -1));
  std::vector<bool> bad(1, false);
  for (const auto& p : st.basis) {
    int node = 0;
    for (int g : p.leading().word) {
      int& next = go[static_cast<std::size_t>(node)][static_cast<std::size_t>(g)];
      if (next < 0) {
        next = static_cast<int>(go.size());
        go.emplace_back(static_cast<std::size_t>(ngens), -1);
        bad.push_back(false);
      }
      node = go[static_cast<std::size_t>(node)][static_cast<std::size_t>(g)];
    }
    bad[static_cast<std::size_t>(node)] = true;
  }
  std::vector<int> fail(go.size(), 0);
  std::queue<int> bfs;
  for (int g = 0; g < ngens; ++g) {
    int& next = go[0][static_cast<std::size_t>(g)];
    if (next < 0) {
      next = 0;
    } else {
      fail[static_cast<std::size_t>(next)] = 0;
      bfs.push(next);
    }
  }
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    if (bad[static_cast<std::size_t>(fail[static_cast<std::size_t>(u)])]) bad[static_cast<std::size_t>(u)] = true;
    for (int g = 0; g < ngens; ++g) {
      int& next = go[static_cast<std::size_t>(u)][static_cast<std::size_t>(g)];
      const int via_fail = go[static_cast<std::size_t>(fail[static_cast<std::size_t>(u)])][static_cast<std::size_t>(g)];
      if (next < 0) {
        next = via_fail;
      } else {
        fail[static_cast<std::size_t>(next)] = via_fail;
        bfs.push(next);
      }
    }
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d) + 1, 0);
  std::vector<std::uint64_t> cur(go.size(), 0), nxt(go.size(), 0);
  if (!bad[0]) cur[0] = 1;
  for (int deg = 0; deg <= d; ++deg) {
    std::uint64_t total = 0;
    for (std::uint64_t c : cur) total += c;
    counts[static_cast<std::size_t>(deg)] = total;
    if (deg == d) break;
    std::fill(nxt.begin(), nxt.end(), 0);
    for (std::size_t u = 0; u < go.size(); ++u) {
      if (cur[u] == 0) continue;
      for (int g = 0; g < ngens; ++g) {
        const int v = go[u][static_cast<std::size_t>(g)];
        if (!bad[static_cast<std::size_t>(v)]) nxt[static_cast<std::size_t>(v)] += cur[u];
      }
    }
    std::swap(cur, nxt);
  }
  return counts;
}

}  // namespace qsym

#endif  // QSYM_NCGB_HPP_
