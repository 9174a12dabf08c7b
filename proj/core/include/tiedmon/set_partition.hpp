#ifndef TIEDMON_SET_PARTITION_HPP_
#define TIEDMON_SET_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiedmon {

  // A set partition of the ground set {1, ..., m}, stored as a restricted
  // growth string: point p (0-based) carries the index of its block, and
  // blocks are numbered in order of their minimum element. Two partitions
  // are equal iff their assignment arrays are equal.
  class SetPartition {
   public:
    using Block = std::vector<int>;  // 1-based elements, ascending

    // Builds from any labelling of the points (labels need not be
    // contiguous); the result is canonical.
    static SetPartition from_labels(std::span<int const> labels);

    // Builds from explicit 1-based blocks. Throws MalformedInput on
    // overlap, gaps, empty blocks or out-of-range elements.
    static SetPartition from_blocks(std::vector<Block> const& blocks, int m);

    // The partition into singletons.
    static SetPartition unity(int m);

    // Parses "1,4|2,5,7|3|6". If m is not given it is the largest element.
    static SetPartition parse(std::string_view text,
                              std::optional<int> m = std::nullopt);

    int ground_size() const noexcept {
      return static_cast<int>(assignment_.size());
    }
    int block_count() const noexcept {
      return blocks_;
    }
    // Block index (0-based) of 0-based point p.
    int block_of(int p) const {
      return assignment_[p];
    }
    std::vector<int> const& assignment() const noexcept {
      return assignment_;
    }
    bool same_block(int p, int q) const {
      return assignment_[p] == assignment_[q];
    }

    // 1-based blocks ordered by minimum, elements ascending.
    std::vector<Block> blocks() const;
    std::vector<int>   block_sizes() const;
    bool               is_unity() const noexcept {
      return blocks_ == ground_size();
    }

    std::string to_string() const;

    friend bool operator==(SetPartition const&, SetPartition const&) = default;
    friend auto operator<=>(SetPartition const& a, SetPartition const& b) {
      return a.assignment_ <=> b.assignment_;
    }

    std::size_t hash() const noexcept;

   private:
    SetPartition(std::vector<int> assignment, int blocks)
        : assignment_(std::move(assignment)), blocks_(blocks) {}

    std::vector<int> assignment_;
    int              blocks_ = 0;
  };

  // Finest common coarsening: the product of the refinement monoid P_m.
  SetPartition join(SetPartition const& p, SetPartition const& q);

  inline SetPartition operator*(SetPartition const& p, SetPartition const& q) {
    return join(p, q);
  }

  // p is finer than q: every block of q is a union of blocks of p.
  bool finer_than(SetPartition const& p, SetPartition const& q);

  // e_A: A (1-based) as one block, every other point a singleton.
  SetPartition atom(int m, std::vector<int> const& a);

  // Pair {i, j} of 1-based points naming the generator e_{i,j}.
  using TiePair = std::pair<int, int>;

  // Canonical factorization of P as a product of e_{i,j}: for every block
  // {i_1 < ... < i_t}, in block order, the factors e_{i_1,i_2} ...
  // e_{i_{t-1},i_t}.
  std::vector<TiePair> fitzgerald_decompose(SetPartition const& p);

  // Join of the atoms in the word; unity for the empty word.
  SetPartition evaluate_ties(int m, std::vector<TiePair> const& word);

  // Every block is an interval of consecutive integers.
  bool is_linear(SetPartition const& p);

  // Largest ground size accepted by the enumerators (b_15 ~ 1.4e9).
  inline constexpr int kMaxEnumerationSize = 15;

  // Streams every set partition of {1..m} exactly once, in lexicographic
  // order of restricted growth strings. Single consumer.
  class PartitionEnumerator {
   public:
    explicit PartitionEnumerator(int m);

    // Writes the next partition into out; false once exhausted.
    bool next(SetPartition& out);

    // Raw restricted growth string of the most recent partition.
    std::vector<int> const& current() const noexcept {
      return rgs_;
    }

   private:
    int              m_;
    bool             started_ = false;
    bool             done_    = false;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
  };

  // Convenience wrappers collecting the streams.
  std::vector<SetPartition> all_partitions(int m);
  void for_each_partition(int m, std::function<void(SetPartition const&)> const& f);

  // Linear partitions of {1..m}; ordered by the bit mask whose bit i (0-based)
  // says that i+1 and i+2 share a block.
  std::vector<SetPartition> enumerate_linear(int m);

}  // namespace tiedmon

template <>
struct std::hash<tiedmon::SetPartition> {
  std::size_t operator()(tiedmon::SetPartition const& p) const noexcept {
    return p.hash();
  }
};

#endif  // TIEDMON_SET_PARTITION_HPP_
