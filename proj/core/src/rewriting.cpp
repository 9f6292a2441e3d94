#include "catcw/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace catcw {

bool shortlex_less(std::span<GenId const> u, std::span<GenId const> v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

namespace {

bool ends_with(std::span<GenId const> w, std::span<GenId const> suffix) {
  return suffix.size() <= w.size() &&
         std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
}

bool contains(Word const& hay, Word const& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
         hay.end();
}

// Stack-based rewriting: letters are moved from `input` to `out`; whenever
// a left-hand side appears as a suffix of `out` it is replaced, and the
// right-hand side is pushed back onto the input.
template <typename Rules, typename Candidates>
Word reduce_word(Word const& w, Rules const& rules, Candidates candidates) {
  Word out;
  out.reserve(w.size());
  Word input(w.rbegin(), w.rend());
  // Invariant: `out` is irreducible, so only suffixes ending in the letter
  // just moved can match.
  while (!input.empty()) {
    out.push_back(input.back());
    input.pop_back();
    for (std::size_t r : candidates(out.back())) {
      auto const& rule = rules[r];
      if (ends_with(out, rule.lhs)) {
        out.resize(out.size() - rule.lhs.size());
        input.insert(input.end(), rule.rhs.rbegin(), rule.rhs.rend());
        break;
      }
    }
  }
  return out;
}

class Completion {
 public:
  explicit Completion(std::size_t num_generators) : by_last_(num_generators) {}

  [[nodiscard]] Word reduce(Word const& w) const {
    static std::vector<std::size_t> const kNone;
    return reduce_word(w, rules_, [this](GenId last) -> auto const& {
      return last < by_last_.size() ? by_last_[last] : kNone;
    });
  }

  void add(Word lhs, Word rhs, std::deque<std::pair<Word, Word>>& pending) {
    std::size_t const k = rules_.size();
    for (std::size_t j = 0; j < k; ++j) {
      if (!alive_[j]) {
        continue;
      }
      if (contains(rules_[j].lhs, lhs)) {
        kill(j);
        pending.emplace_back(rules_[j].lhs, rules_[j].rhs);
      }
    }
    GenId last = lhs.back();
    rules_.push_back(Rule{std::move(lhs), std::move(rhs)});
    alive_.push_back(true);
    by_last_[last].push_back(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (alive_[j] && contains(rules_[j].rhs, rules_[k].lhs)) {
        rules_[j].rhs = reduce(rules_[j].rhs);
      }
    }
  }

  // Critical pairs between rules i and j where at least one index is
  // >= `from`. Nontrivial ones are appended to `pending`.
  void critical_pairs(std::size_t from,
                      std::deque<std::pair<Word, Word>>& pending) const {
    std::size_t const n = rules_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive_[i]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!alive_[j] || std::max(i, j) < from) {
          continue;
        }
        overlaps(rules_[i], rules_[j], pending);
      }
    }
  }

  [[nodiscard]] std::vector<Rule> alive_rules() const {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i]) {
        out.push_back(rules_[i]);
      }
    }
    return out;
  }

  [[nodiscard]] std::size_t size() const noexcept { return rules_.size(); }

 private:
  void kill(std::size_t j) {
    alive_[j] = false;
    auto& bucket = by_last_[rules_[j].lhs.back()];
    bucket.erase(std::remove(bucket.begin(), bucket.end(), j), bucket.end());
  }

  // Proper overlaps: a suffix of a.lhs equals a prefix of b.lhs.
  void overlaps(Rule const& a, Rule const& b,
                std::deque<std::pair<Word, Word>>& pending) const {
    std::size_t const m = std::min(a.lhs.size(), b.lhs.size());
    for (std::size_t k = 1; k < m; ++k) {
      if (!std::equal(b.lhs.begin(), b.lhs.begin() + k, a.lhs.end() - k)) {
        continue;
      }
      Word left = a.rhs;
      left.insert(left.end(), b.lhs.begin() + k, b.lhs.end());
      Word right(a.lhs.begin(), a.lhs.end() - k);
      right.insert(right.end(), b.rhs.begin(), b.rhs.end());
      left = reduce(left);
      right = reduce(right);
      if (left != right) {
        pending.emplace_back(std::move(left), std::move(right));
      }
    }
  }

  std::vector<Rule> rules_;
  std::vector<bool> alive_;
  std::vector<std::vector<std::size_t>> by_last_;
};

}  // namespace

void RewritingSystem::index() {
  GenId max_letter = 0;
  for (auto const& r : rules_) {
    for (GenId g : r.lhs) {
      max_letter = std::max(max_letter, g);
    }
  }
  by_last_.assign(rules_.empty() ? 0 : max_letter + 1, {});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    by_last_[rules_[i].lhs.back()].push_back(i);
  }
}

Word RewritingSystem::reduce(Word const& w) const {
  static std::vector<std::size_t> const kNone;
  return reduce_word(w, rules_, [this](GenId last) -> auto const& {
    return last < by_last_.size() ? by_last_[last] : kNone;
  });
}

bool RewritingSystem::has_reducible_suffix(std::span<GenId const> w) const {
  if (w.empty() || w.back() >= by_last_.size()) {
    return false;
  }
  for (std::size_t r : by_last_[w.back()]) {
    if (ends_with(w, rules_[r].lhs)) {
      return true;
    }
  }
  return false;
}

bool RewritingSystem::is_reducible(std::span<GenId const> w) const {
  for (std::size_t end = 1; end <= w.size(); ++end) {
    if (has_reducible_suffix(w.first(end))) {
      return true;
    }
  }
  return false;
}

bool RewritingSystem::is_confluent() const {
  for (auto const& a : rules_) {
    for (auto const& b : rules_) {
      // Proper overlaps.
      std::size_t const m = std::min(a.lhs.size(), b.lhs.size());
      for (std::size_t k = 1; k < m; ++k) {
        if (!std::equal(b.lhs.begin(), b.lhs.begin() + k, a.lhs.end() - k)) {
          continue;
        }
        Word left = a.rhs;
        left.insert(left.end(), b.lhs.begin() + k, b.lhs.end());
        Word right(a.lhs.begin(), a.lhs.end() - k);
        right.insert(right.end(), b.rhs.begin(), b.rhs.end());
        if (reduce(left) != reduce(right)) {
          return false;
        }
      }
      // Inclusions of b.lhs inside a.lhs.
      if (&a == &b || b.lhs.size() > a.lhs.size()) {
        continue;
      }
      for (auto it = a.lhs.begin(); it + b.lhs.size() <= a.lhs.end(); ++it) {
        if (!std::equal(b.lhs.begin(), b.lhs.end(), it)) {
          continue;
        }
        Word other(a.lhs.begin(), it);
        other.insert(other.end(), b.rhs.begin(), b.rhs.end());
        other.insert(other.end(), it + b.lhs.size(), a.lhs.end());
        if (reduce(a.rhs) != reduce(other)) {
          return false;
        }
      }
    }
  }
  return true;
}

RewritingSystem complete(FpCategory const& cat, std::size_t budget) {
  Completion work(cat.num_generators());
  std::deque<std::pair<Word, Word>> pending;
  for (auto const& r : cat.all_relations()) {
    pending.emplace_back(r.lhs.word, r.rhs.word);
  }

  std::size_t created = 0;
  std::size_t checked = 0;
  bool incomplete = false;
  bool verified_from_scratch = false;
  while (!incomplete) {
    while (!pending.empty() && !incomplete) {
      auto [u, v] = std::move(pending.front());
      pending.pop_front();
      u = work.reduce(u);
      v = work.reduce(v);
      if (u == v) {
        continue;
      }
      if (shortlex_less(u, v)) {
        std::swap(u, v);
      }
      if (created == budget) {
        incomplete = true;
        break;
      }
      ++created;
      work.add(std::move(u), std::move(v), pending);
      verified_from_scratch = false;
    }
    if (incomplete) {
      break;
    }
    std::size_t const n = work.size();
    work.critical_pairs(checked, pending);
    checked = n;
    if (pending.empty()) {
      if (verified_from_scratch) {
        break;
      }
      // One full pass over every pair before declaring completion.
      work.critical_pairs(0, pending);
      verified_from_scratch = true;
      if (pending.empty()) {
        break;
      }
    }
  }

  return rewriting_system_from_rules(
      work.alive_rules(),
      incomplete ? CompletionStatus::Incomplete : CompletionStatus::Complete);
}

RewritingSystem rewriting_system_from_rules(std::vector<Rule> rules,
                                            CompletionStatus status) {
  RewritingSystem rs;
  rs.rules_ = std::move(rules);
  rs.status_ = status;
  rs.index();
  return rs;
}

NormalForm normalize(RewritingSystem const& rs, Arrow const& a) {
  return NormalForm{Arrow{a.src, rs.reduce(a.word)}, rs.is_complete()};
}

bool provably_equal(RewritingSystem const& rs, Arrow const& a,
                    Arrow const& b) {
  return a.src == b.src && rs.reduce(a.word) == rs.reduce(b.word);
}

std::vector<Arrow> enumerate_normal_forms(FpCategory const& cat,
                                          RewritingSystem const& rs, ObjId src,
                                          std::optional<ObjId> dst,
                                          std::size_t max_length) {
  std::vector<Arrow> out;
  std::vector<Arrow> frontier{cat.identity(src)};
  for (std::size_t len = 0;; ++len) {
    for (auto const& a : frontier) {
      if (!dst || cat.target(a) == *dst) {
        out.push_back(a);
      }
    }
    if (len == max_length || frontier.empty()) {
      break;
    }
    std::vector<Arrow> next;
    for (auto const& a : frontier) {
      ObjId end = cat.target(a);
      for (GenId g = 0; g < cat.num_generators(); ++g) {
        if (cat.generator(g).src != end) {
          continue;
        }
        Arrow b = a;
        b.word.push_back(g);
        if (!rs.has_reducible_suffix(b.word)) {
          next.push_back(std::move(b));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace catcw
