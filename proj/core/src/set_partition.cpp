#include "tiedmon/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include "tiedmon/error.hpp"
#include "union_find.hpp"

namespace tiedmon {

  namespace {

    std::string strip_spaces(std::string_view text) {
      std::string out;
      out.reserve(text.size());
      for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out.push_back(c);
        }
      }
      return out;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
          parts.push_back(s.substr(start));
          return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
      }
    }

    int parse_positive(std::string_view tok, std::string_view context) {
      int  value = 0;
      auto res   = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()
          || value < 1) {
        throw MalformedInput("bad element '" + std::string(tok) + "' in '"
                             + std::string(context) + "'");
      }
      return value;
    }

  }  // namespace

  SetPartition SetPartition::from_labels(std::span<int const> labels) {
    std::vector<int> out(labels.size());
    int              next = 0;
    if (labels.empty()) {
      return SetPartition(std::move(out), 0);
    }
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
    std::size_t const span_size = static_cast<std::size_t>(*hi) - *lo + 1;
    if (span_size <= 4 * labels.size() + 16) {
      std::vector<int> remap(span_size, -1);
      for (std::size_t p = 0; p < labels.size(); ++p) {
        int& r = remap[labels[p] - *lo];
        if (r < 0) {
          r = next++;
        }
        out[p] = r;
      }
      return SetPartition(std::move(out), next);
    }
    // Sparse labels: remap in order of first occurrence.
    std::vector<std::pair<int, int>> seen;
    for (std::size_t p = 0; p < labels.size(); ++p) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& kv) {
        return kv.first == labels[p];
      });
      if (it == seen.end()) {
        seen.emplace_back(labels[p], next);
        out[p] = next++;
      } else {
        out[p] = it->second;
      }
    }
    return SetPartition(std::move(out), next);
  }

  SetPartition SetPartition::from_blocks(std::vector<Block> const& blocks, int m) {
    if (m < 1) {
      throw MalformedInput("set partitions need a ground size of at least 1");
    }
    std::vector<int> label(m, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw MalformedInput("empty block in set partition");
      }
      for (int x : blocks[b]) {
        if (x < 1 || x > m) {
          throw MalformedInput("element " + std::to_string(x)
                               + " outside the ground set [1," + std::to_string(m)
                               + "]");
        }
        if (label[x - 1] != -1) {
          throw MalformedInput("element " + std::to_string(x)
                               + " occurs in more than one block");
        }
        label[x - 1] = static_cast<int>(b);
      }
    }
    for (int p = 0; p < m; ++p) {
      if (label[p] == -1) {
        throw MalformedInput("element " + std::to_string(p + 1)
                             + " is not covered by any block");
      }
    }
    return from_labels(label);
  }

  SetPartition SetPartition::unity(int m) {
    if (m < 1) {
      throw MalformedInput("set partitions need a ground size of at least 1");
    }
    std::vector<int> a(m);
    for (int p = 0; p < m; ++p) {
      a[p] = p;
    }
    return SetPartition(std::move(a), m);
  }

  SetPartition SetPartition::parse(std::string_view text, std::optional<int> m) {
    auto const         clean = strip_spaces(text);
    std::vector<Block> blocks;
    int                largest = 0;
    if (!clean.empty()) {
      for (auto part : split(clean, '|')) {
        Block block;
        for (auto tok : split(part, ',')) {
          int v = parse_positive(tok, text);
          largest = std::max(largest, v);
          block.push_back(v);
        }
        blocks.push_back(std::move(block));
      }
    }
    return from_blocks(blocks, m.value_or(largest));
  }

  std::vector<SetPartition::Block> SetPartition::blocks() const {
    std::vector<Block> out(blocks_);
    for (int p = 0; p < ground_size(); ++p) {
      out[assignment_[p]].push_back(p + 1);
    }
    return out;
  }

  std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> out(blocks_, 0);
    for (int b : assignment_) {
      ++out[b];
    }
    return out;
  }

  std::string SetPartition::to_string() const {
    std::ostringstream os;
    bool               first_block = true;
    for (auto const& block : blocks()) {
      if (!first_block) {
        os << '|';
      }
      first_block = false;
      for (std::size_t i = 0; i < block.size(); ++i) {
        os << (i == 0 ? "" : ",") << block[i];
      }
    }
    return os.str();
  }

  std::size_t SetPartition::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ assignment_.size();
    for (int v : assignment_) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  SetPartition join(SetPartition const& p, SetPartition const& q) {
    if (p.ground_size() != q.ground_size()) {
      throw SizeMismatch("join of partitions on ground sets of sizes "
                         + std::to_string(p.ground_size()) + " and "
                         + std::to_string(q.ground_size()));
    }
    int const              m = p.ground_size();
    detail::UnionFind      uf(m);
    std::vector<int>       first_p(p.block_count(), -1), first_q(q.block_count(), -1);
    for (int x = 0; x < m; ++x) {
      int& fp = first_p[p.block_of(x)];
      if (fp < 0) {
        fp = x;
      } else {
        uf.unite(fp, x);
      }
      int& fq = first_q[q.block_of(x)];
      if (fq < 0) {
        fq = x;
      } else {
        uf.unite(fq, x);
      }
    }
    std::vector<int> roots(m);
    for (int x = 0; x < m; ++x) {
      roots[x] = uf.find(x);
    }
    return SetPartition::from_labels(roots);
  }

  bool finer_than(SetPartition const& p, SetPartition const& q) {
    if (p.ground_size() != q.ground_size()) {
      throw SizeMismatch("comparison of partitions on ground sets of sizes "
                         + std::to_string(p.ground_size()) + " and "
                         + std::to_string(q.ground_size()));
    }
    // Each block of p must map into a single block of q.
    std::vector<int> image(p.block_count(), -1);
    for (int x = 0; x < p.ground_size(); ++x) {
      int& img = image[p.block_of(x)];
      if (img < 0) {
        img = q.block_of(x);
      } else if (img != q.block_of(x)) {
        return false;
      }
    }
    return true;
  }

  SetPartition atom(int m, std::vector<int> const& a) {
    if (a.empty()) {
      throw DomainError("e_A needs a nonempty set A");
    }
    std::vector<int> labels(std::max(m, 0));
    if (m < 1) {
      throw DomainError("e_A needs a ground size of at least 1");
    }
    for (int p = 0; p < m; ++p) {
      labels[p] = p + 1;
    }
    for (int x : a) {
      if (x < 1 || x > m) {
        throw DomainError("e_A: element " + std::to_string(x) + " outside [1,"
                          + std::to_string(m) + "]");
      }
      labels[x - 1] = 0;
    }
    return SetPartition::from_labels(labels);
  }

  std::vector<TiePair> fitzgerald_decompose(SetPartition const& p) {
    std::vector<TiePair> word;
    for (auto const& block : p.blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        word.emplace_back(block[i - 1], block[i]);
      }
    }
    return word;
  }

  SetPartition evaluate_ties(int m, std::vector<TiePair> const& word) {
    auto result = SetPartition::unity(m);
    for (auto [i, j] : word) {
      result = join(result, atom(m, {i, j}));
    }
    return result;
  }

  bool is_linear(SetPartition const& p) {
    // Interval blocks <=> consecutive points are either in the same block
    // or the later point opens a fresh block.
    int max_seen = -1;
    for (int x = 0; x < p.ground_size(); ++x) {
      int b = p.block_of(x);
      if (b > max_seen) {
        max_seen = b;
      } else if (x == 0 || p.block_of(x - 1) != b) {
        return false;
      }
    }
    return true;
  }

  PartitionEnumerator::PartitionEnumerator(int m) : m_(m) {
    if (m < 1) {
      throw DomainError("partition enumeration needs m >= 1");
    }
    if (m > kMaxEnumerationSize) {
      throw BudgetExceeded("partition enumeration bound is "
                               + std::to_string(kMaxEnumerationSize),
                           0);
    }
  }

  bool PartitionEnumerator::next(SetPartition& out) {
    if (done_) {
      return false;
    }
    if (!started_) {
      started_ = true;
      rgs_.assign(m_, 0);
      prefix_max_.assign(m_, 0);
    } else {
      // prefix_max_[i] = max(rgs_[0..i]).
      int i = m_ - 1;
      while (i > 0 && rgs_[i] > prefix_max_[i - 1]) {
        --i;
      }
      if (i == 0) {
        done_ = true;
        return false;
      }
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (int j = i + 1; j < m_; ++j) {
        rgs_[j]        = 0;
        prefix_max_[j] = prefix_max_[i];
      }
    }
    out = SetPartition::from_labels(rgs_);
    return true;
  }

  std::vector<SetPartition> all_partitions(int m) {
    std::vector<SetPartition> out;
    for_each_partition(m, [&](SetPartition const& p) { out.push_back(p); });
    return out;
  }

  void for_each_partition(int m, std::function<void(SetPartition const&)> const& f) {
    PartitionEnumerator en(m);
    auto                p = SetPartition::unity(m);
    while (en.next(p)) {
      f(p);
    }
  }

  std::vector<SetPartition> enumerate_linear(int m) {
    if (m < 1) {
      throw DomainError("linear partition enumeration needs m >= 1");
    }
    if (m > 24) {
      throw BudgetExceeded("linear partition enumeration bound is 24", 0);
    }
    std::vector<SetPartition> out;
    std::uint32_t const       count = 1u << (m - 1);
    std::vector<int>          labels(m);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      int block = 0;
      labels[0] = 0;
      for (int i = 1; i < m; ++i) {
        if (!((mask >> (i - 1)) & 1u)) {
          ++block;
        }
        labels[i] = block;
      }
      out.push_back(SetPartition::from_labels(labels));
    }
    return out;
  }

}  // namespace tiedmon
