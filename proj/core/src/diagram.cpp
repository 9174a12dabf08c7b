#include "tiedmon/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include "tiedmon/error.hpp"
#include "union_find.hpp"

namespace tiedmon {

  namespace {

    void check_index(int n, int i, char const* what) {
      if (i < 1 || i > n) {
        throw DomainError(std::string(what) + ": index " + std::to_string(i)
                          + " outside [1," + std::to_string(n) + "]");
      }
    }

    // Parses "k" or "k'" into a signed label.
    int parse_point(std::string_view tok, std::string_view context) {
      bool primed = false;
      if (!tok.empty() && tok.back() == '\'') {
        primed = true;
        tok.remove_suffix(1);
      }
      int  value = 0;
      auto res   = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()
          || value < 1) {
        throw MalformedInput("bad point '" + std::string(tok) + "' in '"
                             + std::string(context) + "'");
      }
      return primed ? -value : value;
    }

  }  // namespace

  Diagram::Diagram(int n, SetPartition partition)
      : n_(n), partition_(std::move(partition)) {
    if (n < 1) {
      throw MalformedInput("diagrams need at least one strand");
    }
    if (partition_.ground_size() != 2 * n) {
      throw SizeMismatch("diagram on " + std::to_string(n)
                         + " strands needs a partition of "
                         + std::to_string(2 * n) + " points, got "
                         + std::to_string(partition_.ground_size()));
    }
  }

  Diagram Diagram::identity(int n) {
    if (n < 1) {
      throw MalformedInput("diagrams need at least one strand");
    }
    std::vector<int> labels(2 * n);
    for (int k = 0; k < n; ++k) {
      labels[k] = labels[n + k] = k;
    }
    return Diagram(n, SetPartition::from_labels(labels));
  }

  Diagram Diagram::from_signed_blocks(int n, std::vector<std::vector<int>> const& blocks) {
    if (n < 1) {
      throw MalformedInput("diagrams need at least one strand");
    }
    std::vector<SetPartition::Block> raw;
    raw.reserve(blocks.size());
    for (auto const& block : blocks) {
      SetPartition::Block b;
      for (int x : block) {
        if (x == 0 || x > n || x < -n) {
          throw MalformedInput("point " + std::to_string(x)
                               + " outside a diagram on " + std::to_string(n)
                               + " strands");
        }
        b.push_back(x > 0 ? x : n - x);
      }
      raw.push_back(std::move(b));
    }
    return Diagram(n, SetPartition::from_blocks(raw, 2 * n));
  }

  Diagram Diagram::parse(std::string_view text, std::optional<int> n) {
    std::string clean;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        clean.push_back(c);
      }
    }
    std::vector<std::vector<int>> blocks;
    int                           largest = 0;
    std::string_view              rest(clean);
    while (!rest.empty()) {
      auto             bar  = rest.find('|');
      std::string_view part = rest.substr(0, bar);
      std::vector<int> block;
      while (true) {
        auto comma = part.find(',');
        int  v     = parse_point(part.substr(0, comma), text);
        largest    = std::max(largest, std::abs(v));
        block.push_back(v);
        if (comma == std::string_view::npos) {
          break;
        }
        part.remove_prefix(comma + 1);
      }
      blocks.push_back(std::move(block));
      if (bar == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(bar + 1);
      if (rest.empty()) {
        throw MalformedInput("trailing '|' in '" + std::string(text) + "'");
      }
    }
    return from_signed_blocks(n.value_or(largest), blocks);
  }

  std::vector<std::vector<int>> Diagram::signed_blocks() const {
    std::vector<std::vector<int>> out;
    for (auto const& block : partition_.blocks()) {
      std::vector<int> b;
      b.reserve(block.size());
      for (int x : block) {
        b.push_back(x <= n_ ? x : -(x - n_));
      }
      out.push_back(std::move(b));
    }
    return out;
  }

  SetPartition Diagram::top_trace() const {
    auto const& a = partition_.assignment();
    return SetPartition::from_labels(std::span<int const>(a.data(), n_));
  }

  SetPartition Diagram::bottom_trace() const {
    auto const& a = partition_.assignment();
    return SetPartition::from_labels(std::span<int const>(a.data() + n_, n_));
  }

  std::string Diagram::to_string() const {
    std::ostringstream os;
    bool               first_block = true;
    for (auto const& block : signed_blocks()) {
      os << (first_block ? "" : "|");
      first_block = false;
      for (std::size_t i = 0; i < block.size(); ++i) {
        os << (i == 0 ? "" : ",");
        if (block[i] > 0) {
          os << block[i];
        } else {
          os << -block[i] << '\'';
        }
      }
    }
    return os.str();
  }

  Diagram concat(Diagram const& d, Diagram const& e) {
    if (d.degree() != e.degree()) {
      throw SizeMismatch("concatenation of diagrams on " + std::to_string(d.degree())
                         + " and " + std::to_string(e.degree()) + " strands");
    }
    int const n = d.degree();
    // Rows: [0,n) top of d, [n,2n) middle, [2n,3n) bottom of e. Point p of d
    // keeps index p, point p of e moves to n + p.
    detail::UnionFind uf(3 * n);
    std::vector<int>  first(2 * n);
    auto              link = [&](SetPartition const& part, int offset) {
      std::fill(first.begin(), first.begin() + part.block_count(), -1);
      for (int p = 0; p < 2 * n; ++p) {
        int& f = first[part.block_of(p)];
        if (f < 0) {
          f = p + offset;
        } else {
          uf.unite(f, p + offset);
        }
      }
    };
    link(d.partition(), 0);
    link(e.partition(), n);
    std::vector<int> labels(2 * n);
    for (int k = 0; k < n; ++k) {
      labels[k]     = uf.find(k);
      labels[n + k] = uf.find(2 * n + k);
    }
    return Diagram(n, SetPartition::from_labels(labels));
  }

  Diagram make_L(int n, int i) {
    if (i < 1 || i >= n) {
      throw DomainError("L_i needs 1 <= i < n, got i = " + std::to_string(i)
                        + ", n = " + std::to_string(n));
    }
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) {
      img[k] = k;
    }
    std::swap(img[i - 1], img[i]);
    return Permutation(std::move(img)).to_diagram();
  }

  Diagram make_H(int n, int i) {
    if (i < 1 || i >= n) {
      throw DomainError("H_i needs 1 <= i < n, got i = " + std::to_string(i)
                        + ", n = " + std::to_string(n));
    }
    std::vector<int> labels(2 * n);
    for (int k = 0; k < n; ++k) {
      labels[k] = labels[n + k] = k;
    }
    labels[i]         = i - 1;
    labels[n + i - 1] = n + i;  // fresh label shared by (i)' and (i+1)'
    labels[n + i]     = n + i;
    return Diagram(n, SetPartition::from_labels(labels));
  }

  Diagram make_E(int n, int i, int j) {
    check_index(n, i, "E_{i,j}");
    check_index(n, j, "E_{i,j}");
    std::vector<int> labels(2 * n);
    for (int k = 0; k < n; ++k) {
      labels[k] = labels[n + k] = k;
    }
    labels[j - 1] = labels[n + j - 1] = i - 1;
    return Diagram(n, SetPartition::from_labels(labels));
  }

  Diagram generator(int n, GeneratorKind kind, int i, std::optional<int> j) {
    switch (kind) {
      case GeneratorKind::L:
        return make_L(n, i);
      case GeneratorKind::H:
        return make_H(n, i);
      case GeneratorKind::E:
        if (j && *j < i) {
          throw DomainError("E_{i,j} needs i <= j");
        }
        return make_E(n, i, j.value_or(i + 1));
    }
    throw InternalError("unknown generator kind");
  }

  DiagramClass classify(Diagram const& d) {
    int const   n = d.degree();
    auto const& p = d.partition();
    DiagramClass c;
    auto const   sizes = p.block_sizes();
    c.is_brauer        = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
    bool all_lines     = true;
    for (auto const& block : d.signed_blocks()) {
      bool has_top = block.front() > 0;
      bool has_bot = block.back() < 0;
      if (block.size() == 2 && has_top && !has_bot) {
        ++c.up_brackets;
      } else if (block.size() == 2 && !has_top && has_bot) {
        ++c.down_brackets;
      }
      if (block.size() != 2 || !has_top || !has_bot) {
        all_lines = false;
      }
    }
    c.is_permutation = all_lines;
    if (c.is_brauer) {
      // Cyclic order: top k at k-1, bottom k' at 2n-k. A perfect matching is
      // noncrossing iff closing arcs always match the innermost open one.
      std::vector<int> at(2 * n);
      for (int k = 0; k < n; ++k) {
        at[k]             = k;
        at[2 * n - 1 - k] = n + k;
      }
      std::vector<int>  open_block_stack;
      std::vector<bool> opened(p.block_count(), false);
      bool              planar = true;
      for (int pos = 0; pos < 2 * n && planar; ++pos) {
        int b = p.block_of(at[pos]);
        if (!opened[b]) {
          opened[b] = true;
          open_block_stack.push_back(b);
        } else if (open_block_stack.empty() || open_block_stack.back() != b) {
          planar = false;
        } else {
          open_block_stack.pop_back();
        }
      }
      c.is_planar = planar;
    }
    return c;
  }

  Permutation arrangement_permutation(SetPartition const& part) {
    int const        n = part.ground_size();
    std::vector<int> img(n, -1);
    int              next_pair = 0;
    std::vector<int> singletons;
    for (auto const& block : part.blocks()) {  // ordered by minimum
      if (block.size() > 2) {
        throw DomainError("n_I needs blocks of size at most 2, got "
                          + part.to_string());
      }
      if (block.size() == 2) {
        img[block[0] - 1] = next_pair++;
        img[block[1] - 1] = next_pair++;
      } else {
        singletons.push_back(block[0] - 1);
      }
    }
    for (int x : singletons) {  // ascending since blocks are ordered by min
      img[x] = next_pair++;
    }
    return Permutation(std::move(img));
  }

  Diagram bracket_core(int n, int k) {
    if (k < 0 || 2 * k > n) {
      throw DomainError("bracket core needs 0 <= 2k <= n");
    }
    std::vector<int> labels(2 * n);
    for (int x = 0; x < n; ++x) {
      labels[x] = labels[n + x] = x;
    }
    for (int i = 0; i < k; ++i) {
      labels[2 * i + 1]     = 2 * i;
      labels[n + 2 * i]     = n + 2 * i;
      labels[n + 2 * i + 1] = n + 2 * i;
    }
    return Diagram(n, SetPartition::from_labels(labels));
  }

  BrauerNormalForm brauer_normal_form(Diagram const& d) {
    auto const c = classify(d);
    if (!c.is_brauer) {
      throw DomainError("Brauer normal form needs a Brauer diagram, got "
                        + d.to_string());
    }
    int const   n     = d.degree();
    auto const& p     = d.partition();
    auto const  n_top = arrangement_permutation(d.top_trace());
    auto const  n_bot = arrangement_permutation(d.bottom_trace());
    int const   k     = c.up_brackets;
    // partner[x] = bottom index of the line starting at top x.
    std::vector<int> partner(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (p.same_block(x, n + y)) {
          partner[x] = y;
        }
      }
    }
    auto const       top_inv = n_top.inverse();
    std::vector<int> tg(n);
    for (int x = 0; x < n; ++x) {
      tg[x] = x < 2 * k ? x : n_bot.image()[partner[top_inv.image()[x]]];
    }
    auto bottom = Permutation(std::move(tg)).then(n_bot.inverse());
    return BrauerNormalForm{n_top, k, std::move(bottom)};
  }

  Diagram evaluate(BrauerNormalForm const& nf) {
    int const n = nf.top.degree();
    return nf.top.to_diagram() * bracket_core(n, nf.k) * nf.bottom.to_diagram();
  }

}  // namespace tiedmon
