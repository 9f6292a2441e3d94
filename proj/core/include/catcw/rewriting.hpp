#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catcw/fpcat.hpp"

namespace catcw {

inline constexpr std::size_t kDefaultRuleBudget = 500;

/// Shortlex order on words: shorter first, then lexicographic by generator
/// id (which is declaration order).
bool shortlex_less(std::span<GenId const> u, std::span<GenId const> v);

struct Rule {
  Word lhs;
  Word rhs;
};

enum class CompletionStatus { Complete, Incomplete };

/// Oriented path-rewrite rules for one presentation.
///
/// Every rule satisfies rhs <_shortlex lhs, so rewriting always terminates.
/// When `status()` is Complete all critical pairs were resolved and
/// normal forms are unique representatives of relation classes. When it is
/// Incomplete the rules are still sound: equal normal forms imply equal
/// morphisms, but distinct normal forms decide nothing.
class RewritingSystem {
 public:
  RewritingSystem() = default;

  [[nodiscard]] std::vector<Rule> const& rules() const noexcept {
    return rules_;
  }
  [[nodiscard]] CompletionStatus status() const noexcept { return status_; }
  [[nodiscard]] bool is_complete() const noexcept {
    return status_ == CompletionStatus::Complete;
  }

  [[nodiscard]] Word reduce(Word const& w) const;
  [[nodiscard]] bool is_reducible(std::span<GenId const> w) const;
  /// True iff some left-hand side is a suffix of `w`.
  [[nodiscard]] bool has_reducible_suffix(std::span<GenId const> w) const;

  /// Re-checks every critical pair from scratch.
  [[nodiscard]] bool is_confluent() const;

 private:
  friend RewritingSystem complete(FpCategory const&, std::size_t);
  friend RewritingSystem rewriting_system_from_rules(std::vector<Rule>,
                                                     CompletionStatus);

  void index();

  std::vector<Rule> rules_;
  // Rules grouped by the last letter of their left-hand side.
  std::vector<std::vector<std::size_t>> by_last_;
  CompletionStatus status_ = CompletionStatus::Complete;
};

/// Knuth-Bendix completion of the presentation's relations (unit relations
/// of mates included), oriented by shortlex. At most `budget` rules are ever
/// created; exceeding it yields an Incomplete system rather than looping.
RewritingSystem complete(FpCategory const& cat,
                         std::size_t budget = kDefaultRuleBudget);

/// Rebuilds a system from stored rules; used when replaying certificates.
RewritingSystem rewriting_system_from_rules(std::vector<Rule> rules,
                                            CompletionStatus status);

struct NormalForm {
  Arrow arrow;
  /// False when the system is incomplete; the arrow is then only a reduct.
  bool certified;
};

NormalForm normalize(RewritingSystem const& rs, Arrow const& a);

/// Equality of two parallel arrows as witnessed by the system. Sound for
/// any system; complete only for Complete systems.
bool provably_equal(RewritingSystem const& rs, Arrow const& a, Arrow const& b);

/// Irreducible arrows out of `src` (into `dst` if given) of length at most
/// `max_length`, in shortlex order.
std::vector<Arrow> enumerate_normal_forms(FpCategory const& cat,
                                          RewritingSystem const& rs, ObjId src,
                                          std::optional<ObjId> dst,
                                          std::size_t max_length);

}  // namespace catcw
