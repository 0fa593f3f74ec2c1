// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "phicx/error.hpp"
#include "phicx/units.hpp"

namespace phicx::assembly {

/// One join: left + right -> product.
struct JoinStep {
  std::string left;
  std::string right;
  std::string product;
  friend bool operator==(const JoinStep&, const JoinStep&) = default;
};

struct AssemblyPathway {
  std::string basis;  // atomic symbols, one char each
  std::vector<JoinStep> steps;
  std::string target;
  std::optional<std::vector<Quantity>> step_free_energy;  // J, one per step
};

struct AssemblyResult {
  int index;
  AssemblyPathway witness;
};

inline constexpr std::size_t kMaxTargetLength = 20;

/// Throws InvalidPathway unless every operand is atomic or an earlier product,
/// every product is the concatenation of its operands, and the last product
/// (or the lone atom for an empty pathway) is the target.
inline void validate_pathway(const AssemblyPathway& p) {
  require(!p.basis.empty(), Errc::InvalidPathway, "basis is empty");
  std::set<std::string> available;
  for (char c : p.basis) available.insert(std::string(1, c));
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& s = p.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    require(available.count(s.left) != 0, Errc::InvalidPathway,
            at + "operand '" + s.left + "' is not yet available");
    require(available.count(s.right) != 0, Errc::InvalidPathway,
            at + "operand '" + s.right + "' is not yet available");
    require(s.left + s.right == s.product, Errc::InvalidPathway,
            at + "product '" + s.product + "' is not '" + s.left + "' + '" + s.right + "'");
    available.insert(s.product);
  }
  if (p.steps.empty()) {
    require(p.target.size() == 1 && p.basis.find(p.target[0]) != std::string::npos,
            Errc::InvalidPathway, "an empty pathway only yields an atomic target");
  } else {
    require(p.steps.back().product == p.target, Errc::InvalidPathway,
            "final product '" + p.steps.back().product + "' is not the target '" + p.target + "'");
  }
  if (p.step_free_energy) {
    require(p.step_free_energy->size() == p.steps.size(), Errc::InvalidPathway,
            "free-energy annotations do not match the step count");
  }
}

/// Sum of the per-step free energies.
inline Quantity pathway_free_phi(const AssemblyPathway& p) {
  validate_pathway(p);
  if (p.steps.empty()) return joules(0.0);
  require(p.step_free_energy.has_value(), Errc::MissingAnnotation,
          "pathway steps carry no free-energy annotation");
  Quantity total = joules(0.0);
  for (const auto& f : *p.step_free_energy) total = total + joules(f.expect(dim::energy, "step free energy"));
  return total;
}

namespace detail {

using Mask = std::bitset<256>;

inline int ceil_log2(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// An optimal pathway's products form a set F of substrings of the target,
// containing the target, in which every piece has a split whose operands are
// atoms or members of F; conversely any such F can be built in |F| joins. The
// search grows F top-down, resolving one piece at a time by choosing a split
// and adding its operands.
class Search {
 public:
  explicit Search(std::string_view target) : target_(target) {
    std::set<std::string> subs;
    for (std::size_t i = 0; i < target.size(); ++i)
      for (std::size_t len = 2; i + len <= target.size(); ++len) subs.emplace(target.substr(i, len));
    // Longest first, so branching ties go to longer pieces.
    pieces_.assign(subs.begin(), subs.end());
    std::stable_sort(pieces_.begin(), pieces_.end(),
                     [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    for (std::size_t i = 0; i < pieces_.size(); ++i) index_[pieces_[i]] = static_cast<int>(i);
    std::map<std::string, int> bigrams;
    for (std::size_t i = 0; i + 1 < target.size(); ++i)
      bigrams.emplace(target.substr(i, 2), static_cast<int>(bigrams.size()));
    required_ = (std::uint32_t{1} << bigrams.size()) - 1;
    splits_.resize(pieces_.size());
    contains_.assign(pieces_.size(), 0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto& s = pieces_[i];
      for (std::size_t j = 0; j + 1 < s.size(); ++j) contains_[i] |= std::uint32_t{1} << bigrams.at(s.substr(j, 2));
      for (std::size_t cut = 1; cut < s.size(); ++cut)
        splits_[i].push_back({operand(s.substr(0, cut)), operand(s.substr(cut)),
                              std::uint32_t{1} << bigrams.at(s.substr(cut - 1, 2))});
    }
    target_id_ = index_.at(std::string(target));
  }

  /// Steps of the greedy doubling pathway: extend a prefix by the longest
  /// already-built piece at each position.
  int greedy_upper_bound() const {
    std::set<std::string> built;
    std::string prefix(1, target_[0]);
    int steps = 0;
    while (prefix.size() < target_.size()) {
      std::size_t take = 1;
      for (const auto& b : built) {
        if (b.size() > take && prefix.size() + b.size() <= target_.size() &&
            target_.compare(prefix.size(), b.size(), b) == 0)
          take = b.size();
      }
      prefix = std::string(target_.substr(0, prefix.size() + take));
      built.insert(prefix);
      ++steps;
    }
    return steps;
  }

  /// Whether the pieces in `built` (already justified, creating `junctions`)
  /// extend to a valid set of at most `budget` pieces containing the target.
  bool completes(const Mask& built, std::uint32_t junctions, int budget) {
    if (budget != memo_budget_) {
      failed_.clear();
      memo_budget_ = budget;
    }
    Mask set = built;
    set.set(static_cast<std::size_t>(target_id_));
    return dfs(set, built, budget, junctions);
  }

  /// Lexicographically smallest product sequence among pathways of `budget`
  /// steps, given that one exists.
  std::vector<JoinStep> smallest_pathway(int budget) {
    std::vector<int> by_name(pieces_.size());
    for (std::size_t i = 0; i < by_name.size(); ++i) by_name[i] = static_cast<int>(i);
    std::sort(by_name.begin(), by_name.end(), [&](int a, int b) { return piece(a) < piece(b); });
    std::vector<JoinStep> steps;
    Mask built;
    std::uint32_t junctions = 0;
    std::vector<Mask> known;
    for (int step = 0; step < budget; ++step) {
      bool placed = false;
      for (int id : by_name) {
        if (built.test(static_cast<std::size_t>(id))) continue;
        const auto split = available_split(id, built);
        if (!split) continue;
        Mask next = built;
        next.set(static_cast<std::size_t>(id));
        const bool covered = std::any_of(known.begin(), known.end(), [&](const Mask& f) { return (next & ~f).none(); });
        if (!covered) {
          if (!completes(next, junctions | split->junction, budget)) continue;
          known.push_back(found_);
        }
        const auto& s = piece(id);
        const std::size_t cut = split->left < 0 ? 1 : piece(split->left).size();
        steps.push_back({s.substr(0, cut), s.substr(cut), s});
        built = next;
        junctions |= split->junction;
        placed = true;
        break;
      }
      if (!placed) fail(Errc::NonConvergence, "internal: no feasible pathway step");
    }
    return steps;
  }

 private:
  struct Split {
    int left;
    int right;
    std::uint32_t junction;
  };
  int operand(const std::string& s) const { return s.size() == 1 ? -1 : index_.at(s); }
  const std::string& piece(int id) const { return pieces_[static_cast<std::size_t>(id)]; }
  static bool in(int id, const Mask& set) { return id < 0 || set.test(static_cast<std::size_t>(id)); }

  std::optional<Split> available_split(int id, const Mask& built) const {
    for (const auto& split : splits_[static_cast<std::size_t>(id)])
      if (in(split.left, built) && in(split.right, built)) return split;
    return std::nullopt;
  }

  // Each missing bigram is created by an unresolved piece or a new one, and
  // new pieces are substrings of unresolved ones. Returns the fewest new
  // pieces this allows, or a value past any budget if some bigram is out of
  // reach.
  int new_pieces_needed(const Mask& open, std::uint32_t missing) const {
    std::array<std::uint32_t, kMaxTargetLength * kMaxTargetLength> offers{};
    std::size_t count = 0;
    std::uint32_t reach = 0;
    for (std::size_t i = open._Find_first(); i < open.size(); i = open._Find_next(i)) {
      reach |= contains_[i];
      if (contains_[i] & missing) offers[count++] = contains_[i] & missing;
    }
    if (missing & ~reach) return static_cast<int>(kMaxTargetLength * kMaxTargetLength);
    // Maximum matching of unresolved pieces to missing bigrams.
    std::array<int, 32> owner;
    owner.fill(-1);
    int matched = 0;
    for (std::size_t p = 0; p < count && matched < std::popcount(missing); ++p) {
      std::uint32_t seen = 0;
      if (augment(static_cast<int>(p), offers, owner, seen)) ++matched;
    }
    return std::popcount(missing) - matched;
  }

  template <class Offers>
  static bool augment(int p, const Offers& offers, std::array<int, 32>& owner, std::uint32_t& seen) {
    for (std::uint32_t m = offers[static_cast<std::size_t>(p)] & ~seen; m; m &= m - 1) {
      const int b = std::countr_zero(m);
      seen |= std::uint32_t{1} << b;
      auto& o = owner[static_cast<std::size_t>(b)];
      if (o < 0 || augment(o, offers, owner, seen)) {
        o = p;
        return true;
      }
    }
    return false;
  }

  // Members of `resolved` already have a split, creating the bigrams in
  // `junctions`.
  bool dfs(const Mask& set, Mask resolved, int budget, std::uint32_t junctions) {
    const int size = static_cast<int>(set.count());
    if (size > budget) return false;
    Mask open = set & ~resolved;
    // A split needing no new pieces dominates every other choice, since the
    // set stays the same.
    for (std::size_t i = open._Find_first(); i < open.size(); i = open._Find_next(i)) {
      if (const auto split = available_split(static_cast<int>(i), set)) {
        resolved.set(i);
        junctions |= split->junction;
      }
    }
    open &= ~resolved;
    if (open.none()) {
      found_ = set;
      return true;
    }
    if (size + new_pieces_needed(open, required_ & ~junctions) > budget) return false;
    // A failure with at least as much resolved and created covers this state.
    for (const auto& [r, j] : failed_[set])
      if ((resolved & ~r).none() && (junctions & ~j) == 0) return false;
    // Branch on the piece with the fewest affordable splits.
    int next = -1;
    int fewest = std::numeric_limits<int>::max();
    for (std::size_t i = open._Find_first(); i < open.size(); i = open._Find_next(i)) {
      int options = 0;
      for (const auto& split : splits_[i]) options += size + new_operands(split, set) <= budget;
      if (options < fewest) {
        fewest = options;
        next = static_cast<int>(i);
      }
    }
    const Mask unbranched = resolved;
    resolved.set(static_cast<std::size_t>(next));
    for (int added = 1; added <= 2 && fewest > 0; ++added) {
      for (const auto& split : splits_[static_cast<std::size_t>(next)]) {
        if (new_operands(split, set) != added || size + added > budget) continue;
        Mask grown = set;
        if (split.left >= 0) grown.set(static_cast<std::size_t>(split.left));
        if (split.right >= 0) grown.set(static_cast<std::size_t>(split.right));
        if (dfs(grown, resolved, budget, junctions | split.junction)) return true;
      }
    }
    failed_[set].emplace_back(unbranched, junctions);
    return false;
  }

  static int new_operands(const Split& split, const Mask& set) {
    const int fresh = !in(split.left, set) + !in(split.right, set);
    return split.left == split.right && fresh == 2 ? 1 : fresh;
  }

  std::string_view target_;
  std::vector<std::string> pieces_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<Split>> splits_;
  std::vector<std::uint32_t> contains_;
  std::uint32_t required_ = 0;
  int target_id_ = -1;
  int memo_budget_ = -1;
  std::unordered_map<Mask, std::vector<std::pair<Mask, std::uint32_t>>> failed_;
  Mask found_;
};

}  // namespace detail

/// Minimal number of joins, reusing any earlier product, that builds `target`
/// from the atomic symbols in `basis`, with an optimal witness pathway. Among
/// optimal pathways the witness has the lexicographically smallest product
/// sequence.
inline AssemblyResult assembly_index(std::string_view target, std::string_view basis) {
  require(!target.empty(), Errc::SymbolNotInBasis, "target is empty");
  require(target.size() <= kMaxTargetLength, Errc::TargetTooLarge,
          "target length " + std::to_string(target.size()) + " exceeds " +
              std::to_string(kMaxTargetLength));
  for (std::size_t i = 0; i < target.size(); ++i)
    require(basis.find(target[i]) != std::string_view::npos, Errc::SymbolNotInBasis,
            "symbol '" + std::string(1, target[i]) + "' at position " + std::to_string(i) +
                " is not in the basis");

  AssemblyResult result{0, AssemblyPathway{std::string(basis), {}, std::string(target), {}}};
  if (target.size() == 1) return result;

  detail::Search search(target);
  const int upper = search.greedy_upper_bound();
  for (int budget = detail::ceil_log2(target.size()); budget <= upper; ++budget) {
    if (!search.completes({}, 0, budget)) continue;
    result.witness.steps = search.smallest_pathway(budget);
    result.index = budget;
    return result;
  }
  fail(Errc::NonConvergence, "search exhausted the greedy upper bound");
}

}  // namespace phicx::assembly
