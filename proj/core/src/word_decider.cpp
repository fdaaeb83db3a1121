#include "mcgkit/decider/word_decider.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <queue>
#include <set>
#include <thread>
#include <unordered_map>

#include "mcgkit/errors.hpp"

namespace mcgkit {

namespace {

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t max) : max_(max) {}
  bool take() {
    if (used_.fetch_add(1, std::memory_order_relaxed) >= max_) {
      used_.fetch_sub(1, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  bool exhausted() const { return used() >= max_; }

 private:
  std::uint64_t max_;
  std::atomic<std::uint64_t> used_{0};
};

struct RelatorVariant {
  Word word;
  std::size_t relator;
  std::size_t shift;
  bool inverted;
};

std::vector<RelatorVariant> relator_variants(const Presentation& p) {
  std::vector<RelatorVariant> out;
  std::set<Word> seen;
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    const Word base = free_reduce(p.relators()[r]);
    if (base.empty()) continue;
    for (bool inverted : {false, true}) {
      const Word w = inverted ? base.inverse() : base;
      for (std::size_t s = 0; s < w.size(); ++s) {
        Word v = w.cyclic_shift(s);
        if (seen.insert(v).second) out.push_back({std::move(v), r, s, inverted});
      }
    }
  }
  return out;
}

Word insert_and_reduce(const Word& u, std::size_t pos, const Word& v) {
  std::vector<Letter> letters;
  letters.reserve(u.size() + v.size());
  letters.insert(letters.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
  letters.insert(letters.end(), v.begin(), v.end());
  letters.insert(letters.end(), u.begin() + static_cast<std::ptrdiff_t>(pos), u.end());
  return free_reduce(Word(std::move(letters)));
}

// Depth-bounded best-first search over relator insertions. Every generated
// child costs one step.
class InsertionSearch {
 public:
  enum class Status { Found, Running, Exhausted, OutOfSteps };

  InsertionSearch(const Presentation& p, const Word& w, std::size_t max_depth)
      : variants_(relator_variants(p)), max_depth_(max_depth), queue_(Order{&nodes_}) {
    const auto [it, fresh] = seen_.emplace(free_reduce(w), 0);
    nodes_.push_back({&it->first, kNone, 0, 0, 0});
    if (it->first.empty()) {
      found_ = 0;
    } else {
      queue_.push(0);
    }
  }

  // Expands up to `quota` nodes.
  Status run(std::uint64_t quota, StepCounter& steps, const std::atomic<bool>* cancel) {
    if (found_) return Status::Found;
    for (std::uint64_t done = 0; done < quota; ++done) {
      if (queue_.empty()) return Status::Exhausted;
      if (cancel && cancel->load(std::memory_order_relaxed)) return Status::Running;
      const std::size_t id = queue_.top();
      queue_.pop();
      switch (expand(id, steps)) {
        case Status::Found: return Status::Found;
        case Status::OutOfSteps: return Status::OutOfSteps;
        default: break;
      }
    }
    return queue_.empty() ? Status::Exhausted : Status::Running;
  }

  bool found() const { return found_.has_value(); }
  std::size_t depth_reached() const { return depth_reached_; }

  Derivation derivation() const {
    std::vector<std::size_t> path;
    for (std::size_t id = *found_; nodes_[id].parent != kNone; id = nodes_[id].parent)
      path.push_back(id);
    Derivation out;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const Node& n = nodes_[*it];
      const RelatorVariant& v = variants_[n.variant];
      out.push_back({n.position, v.relator, v.shift, v.inverted, v.word, *n.word});
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Node {
    const Word* word;  // key owned by seen_
    std::size_t parent;
    std::size_t depth;
    std::size_t position;
    std::size_t variant;
  };

  struct Order {
    const std::vector<Node>* nodes;
    // priority_queue pops the largest element, so "less" means lower priority.
    bool operator()(std::size_t a, std::size_t b) const {
      const Node& x = (*nodes)[a];
      const Node& y = (*nodes)[b];
      if (x.word->size() != y.word->size()) return x.word->size() > y.word->size();
      if (x.depth != y.depth) return x.depth > y.depth;
      return a > b;
    }
  };

  Status expand(std::size_t id, StepCounter& steps) {
    const std::size_t depth = nodes_[id].depth;
    depth_reached_ = std::max(depth_reached_, depth);
    if (depth >= max_depth_) return Status::Running;
    const Word& u = *nodes_[id].word;
    for (std::size_t pos = 0; pos <= u.size(); ++pos) {
      for (std::size_t vi = 0; vi < variants_.size(); ++vi) {
        if (!steps.take()) return Status::OutOfSteps;
        Word child = insert_and_reduce(u, pos, variants_[vi].word);
        auto [it, fresh] = seen_.try_emplace(std::move(child), depth + 1);
        if (!fresh) {
          if (it->second <= depth + 1) continue;
          it->second = depth + 1;
        }
        nodes_.push_back({&it->first, id, depth + 1, pos, vi});
        if (it->first.empty()) {
          found_ = nodes_.size() - 1;
          depth_reached_ = std::max(depth_reached_, depth + 1);
          return Status::Found;
        }
        queue_.push(nodes_.size() - 1);
      }
    }
    return Status::Running;
  }

  std::vector<RelatorVariant> variants_;
  std::size_t max_depth_;
  std::vector<Node> nodes_;
  // Minimal depth at which each word was reached; keys are stable in memory.
  std::unordered_map<Word, std::size_t, WordHash> seen_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, Order> queue_;
  std::optional<std::size_t> found_;
  std::size_t depth_reached_ = 0;
};

// Homomorphism images paired with their inverses.
struct HomEntry {
  std::vector<Permutation> images;
  std::vector<Permutation> inverses;
};

HomEntry make_entry(std::span<const Permutation> images) {
  HomEntry e{{images.begin(), images.end()}, {}};
  for (const auto& g : e.images) e.inverses.push_back(g.inverse());
  return e;
}

bool maps_to_identity(const Word& w, const HomEntry& h, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    auto y = static_cast<Permutation::Point>(x);
    for (const auto& l : w) y = l.exp > 0 ? h.images[l.gen](y) : h.inverses[l.gen](y);
    if (y != x) return false;
  }
  return true;
}

constexpr std::size_t kHomCacheCap = 200'000;

enum class DegreeOutcome { Found, NotFound, Interrupted };

}  // namespace

struct WordDecider::Impl {
  std::mutex mutex;
  // nullopt: not computed yet; empty optional inside: too large to cache.
  std::vector<std::optional<std::optional<std::vector<HomEntry>>>> cache;

  const std::optional<std::vector<HomEntry>>& homs(const Presentation& p, std::size_t degree) {
    std::lock_guard lock(mutex);
    if (cache.size() <= degree) cache.resize(degree + 1);
    if (!cache[degree]) {
      std::vector<HomEntry> list;
      bool fits = true;
      for_each_homomorphism(
          p, degree,
          [&](std::span<const Permutation> images) {
            if (list.size() >= kHomCacheCap) {
              fits = false;
              return true;
            }
            list.push_back(make_entry(images));
            return false;
          },
          std::numeric_limits<std::size_t>::max());
      cache[degree].emplace(fits ? std::optional(std::move(list)) : std::nullopt);
    }
    return *cache[degree];
  }

  DegreeOutcome search_degree(const Presentation& p, const std::shared_ptr<const Presentation>& src,
                              const Word& w, std::size_t degree, StepCounter& steps,
                              const std::atomic<bool>* cancel,
                              std::optional<NontrivialWitness>& out) {
    auto check = [&](const HomEntry& h) -> std::optional<DegreeOutcome> {
      if (cancel && cancel->load(std::memory_order_relaxed)) return DegreeOutcome::Interrupted;
      if (!steps.take()) return DegreeOutcome::Interrupted;
      if (maps_to_identity(w, h, degree)) return std::nullopt;
      GroupHomomorphism hom{src, PermutationGroup::symmetric(degree), h.images};
      Permutation image = evaluate_word(w, hom);
      out = NontrivialWitness{std::move(hom), std::move(image)};
      return DegreeOutcome::Found;
    };
    if (const auto& cached = homs(p, degree)) {
      for (const auto& h : *cached)
        if (auto r = check(h)) return *r;
      return DegreeOutcome::NotFound;
    }
    DegreeOutcome result = DegreeOutcome::NotFound;
    for_each_homomorphism(
        p, degree,
        [&](std::span<const Permutation> images) {
          if (auto r = check(make_entry(images))) {
            result = *r;
            return true;
          }
          return false;
        },
        std::numeric_limits<std::size_t>::max());
    return result;
  }
};

WordDecider::WordDecider(Presentation p, Budget budget)
    : presentation_(std::make_shared<const Presentation>(std::move(p))),
      budget_(budget),
      impl_(std::make_unique<Impl>()) {}

WordDecider::~WordDecider() = default;

Verdict WordDecider::decide(const Word& input, const DecideOptions& options) const {
  const Presentation& p = *presentation_;
  for (const auto& l : input)
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.generator_count())
      throw UnknownGenerator("word uses generator id " + std::to_string(l.gen));
  const Word w = free_reduce(input);
  StepCounter steps(budget_.max_steps);
  InsertionSearch t1(p, w, budget_.max_t1_depth);
  if (t1.found()) return TrivialVerdict{{}};

  const std::size_t max_degree = budget_.max_t2_degree;
  std::size_t degree_done = 1;
  std::optional<NontrivialWitness> witness;

  if (options.parallel) {
    std::atomic<bool> cancel{false};
    std::optional<Derivation> derivation;
    std::mutex result_mutex;
    {
      std::jthread trivial_worker([&] {
        if (t1.run(std::numeric_limits<std::uint64_t>::max(), steps, &cancel) ==
            InsertionSearch::Status::Found) {
          std::lock_guard lock(result_mutex);
          if (!witness) derivation = t1.derivation();
          cancel = true;
        }
      });
      for (std::size_t n = 2; n <= max_degree && !cancel; ++n) {
        std::optional<NontrivialWitness> local;
        const auto outcome = impl_->search_degree(p, presentation_, w, n, steps, &cancel, local);
        if (outcome == DegreeOutcome::Found) {
          std::lock_guard lock(result_mutex);
          if (!derivation) witness = std::move(local);
          cancel = true;
        }
        if (outcome != DegreeOutcome::NotFound) break;
        degree_done = n;
      }
    }
    if (derivation) return TrivialVerdict{std::move(*derivation)};
    if (witness) return NontrivialVerdict{std::move(*witness)};
    return ExhaustedVerdict{{t1.depth_reached(), degree_done, steps.used()}};
  }

  bool t1_exhausted = false;
  std::uint64_t quota = 1;
  std::size_t next_degree = 2;
  while (true) {
    if (next_degree <= max_degree) {
      const auto outcome =
          impl_->search_degree(p, presentation_, w, next_degree, steps, nullptr, witness);
      if (outcome == DegreeOutcome::Found) return NontrivialVerdict{std::move(*witness)};
      if (outcome == DegreeOutcome::Interrupted) break;
      degree_done = next_degree++;
    }
    const bool t2_done = next_degree > max_degree;
    if (!t1_exhausted) {
      const auto status =
          t1.run(t2_done ? std::numeric_limits<std::uint64_t>::max() : quota, steps, nullptr);
      if (status == InsertionSearch::Status::Found) return TrivialVerdict{t1.derivation()};
      if (status == InsertionSearch::Status::OutOfSteps) break;
      t1_exhausted = status == InsertionSearch::Status::Exhausted;
      quota *= 4;
    }
    if (t1_exhausted && t2_done) break;
    if (steps.exhausted()) break;
  }
  return ExhaustedVerdict{{t1.depth_reached(), degree_done, steps.used()}};
}

Verdict decide(const Presentation& p, const Word& w, const Budget& budget,
               const DecideOptions& options) {
  return WordDecider(p, budget).decide(w, options);
}

std::optional<Derivation> t1_trivial_search(const Presentation& p, const Word& w,
                                            std::size_t depth, std::uint64_t max_steps) {
  StepCounter steps(max_steps);
  InsertionSearch search(p, w, depth);
  if (search.run(std::numeric_limits<std::uint64_t>::max(), steps, nullptr) ==
      InsertionSearch::Status::Found)
    return search.derivation();
  return std::nullopt;
}

std::optional<NontrivialWitness> t2_nontrivial_search(const Presentation& p, const Word& w,
                                                      std::size_t max_degree) {
  WordDecider decider(p, Budget{0, max_degree, std::numeric_limits<std::uint64_t>::max()});
  const auto verdict = decider.decide(w);
  if (const auto* nt = std::get_if<NontrivialVerdict>(&verdict)) return nt->witness;
  return std::nullopt;
}

bool replay_derivation(const Presentation& p, const Word& w, const Derivation& d) {
  Word current = free_reduce(w);
  for (const auto& step : d) {
    if (step.relator >= p.relators().size() || step.position > current.size()) return false;
    Word base = free_reduce(p.relators()[step.relator]);
    if (step.inverted) base = base.inverse();
    if (base.empty() || base.cyclic_shift(step.shift) != step.inserted) return false;
    current = insert_and_reduce(current, step.position, step.inserted);
    if (current != step.result) return false;
  }
  return current.empty();
}

bool verify_witness(const Presentation& p, const Word& w, const NontrivialWitness& witness) {
  const auto& images = witness.homomorphism.assignment;
  if (images.size() != p.generator_count()) return false;
  for (const auto& r : p.relators())
    if (!evaluate_word(r, images).is_identity()) return false;
  const Permutation image = evaluate_word(w, images);
  return !image.is_identity() && image == witness.image;
}

}  // namespace mcgkit
