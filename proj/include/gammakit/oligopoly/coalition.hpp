#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gammakit::oligopoly {

/// Nonempty sorted set of distinct 0-based firm indices.
class Coalition {
 public:
  Coalition(std::vector<std::size_t> members, std::size_t firm_count);

  static Coalition singleton(std::size_t firm, std::size_t firm_count);
  static Coalition from_mask(std::uint64_t mask, std::size_t firm_count);
  static Coalition grand(std::size_t firm_count);
  /// "1,2,3" with 1-based indices.
  static Coalition parse(std::string_view text, std::size_t firm_count);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t firm) const;
  std::uint64_t mask() const;
  /// "1,2,3"
  std::string to_string() const;
  std::vector<std::size_t> one_based() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// Pairwise-disjoint coalitions covering every firm. Blocks are kept in the
/// order given; each block is an actor of the induced game.
class Partition {
 public:
  Partition(std::vector<Coalition> blocks, std::size_t firm_count);

  static Partition singletons(std::size_t firm_count);
  /// `coalition` as one block, everybody else alone (in firm order).
  static Partition around(const Coalition& coalition, std::size_t firm_count);
  /// "1,2,3|4|5"
  static Partition parse(std::string_view text, std::size_t firm_count);

  const std::vector<Coalition>& blocks() const { return blocks_; }
  std::size_t actor_count() const { return blocks_.size(); }
  std::size_t firm_count() const { return firm_count_; }
  /// Index of the block containing `firm`.
  std::size_t actor_of(std::size_t firm) const;
  std::string to_string() const;

 private:
  std::vector<Coalition> blocks_;
  std::vector<std::size_t> owner_;
  std::size_t firm_count_;
};

/// Per-firm output; every entry must lie in [0, capacity].
using StrategyProfile = std::vector<double>;

}  // namespace gammakit::oligopoly
