#include "tiedmon/ramified.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "tiedmon/error.hpp"

namespace tiedmon {

  Ramified::Ramified(Diagram i, Diagram r) : i_(std::move(i)), r_(std::move(r)) {
    if (i_.degree() != r_.degree()) {
      throw SizeMismatch("ramified pair of diagrams on " + std::to_string(i_.degree())
                         + " and " + std::to_string(r_.degree()) + " strands");
    }
    if (!finer_than(i_.partition(), r_.partition())) {
      throw DomainError("ramified pair needs I finer than R: " + i_.to_string() + " ; "
                        + r_.to_string());
    }
  }

  Ramified Ramified::identity(int n) {
    auto one = Diagram::identity(n);
    return Ramified(one, one);
  }

  Ramified Ramified::embed(Diagram const& d) {
    return Ramified(d, d);
  }

  Ramified Ramified::parse(std::string_view text, std::optional<int> n) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
      throw MalformedInput("ramified text needs exactly one ';': '" + std::string(text) + "'");
    }
    auto left  = text.substr(0, semi);
    auto right = text.substr(semi + 1);
    if (!n) {
      n = std::max(Diagram::parse(left).degree(), Diagram::parse(right).degree());
    }
    return Ramified(Diagram::parse(left, n), Diagram::parse(right, n));
  }

  std::string Ramified::to_string() const {
    return i_.to_string() + " ; " + r_.to_string();
  }

  Ramified rproduct(Ramified const& a, Ramified const& b) {
    if (a.degree() != b.degree()) {
      throw SizeMismatch("product of ramified partitions on " + std::to_string(a.degree())
                         + " and " + std::to_string(b.degree()) + " strands");
    }
    auto i = concat(a.I(), b.I());
    auto r = concat(a.R(), b.R());
    if (!finer_than(i.partition(), r.partition())) {
      throw InternalError("ramified product lost I finer than R");
    }
    return Ramified(std::move(i), std::move(r));
  }

  Ramified make_Ltilde(int n, int i) {
    return Ramified::embed(make_L(n, i));
  }

  Ramified make_Htilde(int n, int i) {
    return Ramified::embed(make_H(n, i));
  }

  Ramified make_Etilde(int n, int i, int j) {
    return Ramified(Diagram::identity(n), make_E(n, i, j));
  }

  Ramified make_Ftilde(int n, int i) {
    return Ramified(make_H(n, i), make_E(n, i, i + 1));
  }

  Ramified rgenerator(int n, RGeneratorKind kind, int i, std::optional<int> j) {
    switch (kind) {
      case RGeneratorKind::Ltilde:
        return make_Ltilde(n, i);
      case RGeneratorKind::Htilde:
        return make_Htilde(n, i);
      case RGeneratorKind::Etilde:
        if (j && *j < i) {
          throw DomainError("E~_{i,j} needs i <= j");
        }
        if (!j && (i < 1 || i >= n)) {
          throw DomainError("E~_i needs 1 <= i < n");
        }
        return make_Etilde(n, i, j.value_or(i + 1));
      case RGeneratorKind::Ftilde:
        return make_Ftilde(n, i);
    }
    throw InternalError("unknown ramified generator kind");
  }

  Ramified phi(Token const& tok, int n) {
    switch (tok.kind) {
      case Letter::s:
        return make_Ltilde(n, tok.i);
      case Letter::t:
        return make_Htilde(n, tok.i);
      case Letter::e:
        return make_Etilde(n, tok.i, tok.j);
      case Letter::f:
        return make_Ftilde(n, tok.i);
      default:
        throw DomainError("token " + tok.to_string() + " is not in the Q_n alphabet");
    }
  }

  Ramified phi(Word const& w, int n) {
    auto result = Ramified::identity(n);
    for (auto const& tok : w) {
      result = result * phi(tok, n);
    }
    return result;
  }

  namespace {

    enum class ItemKind { up, down, line };

    // A block of a Brauer I, in 0-based point indices (x < y).
    struct Item {
      ItemKind kind;
      int      x;
      int      y;
    };

    std::vector<Item> brauer_items(Diagram const& d) {
      int const         n = d.degree();
      std::vector<Item> items;
      for (auto const& block : d.partition().blocks()) {
        if (block.size() != 2) {
          throw DomainError("expected a Brauer diagram, got " + d.to_string());
        }
        int x = block[0] - 1, y = block[1] - 1;
        ItemKind kind = y < n ? ItemKind::up : (x >= n ? ItemKind::down : ItemKind::line);
        items.push_back({kind, x, y});
      }
      return items;
    }

    Word s_word(Permutation const& p) {
      Word w;
      for (int i : p.reduced_word()) {
        w.push_back(Token::s(i));
      }
      return w;
    }

  }  // namespace

  bool is_boxed(Diagram const& r) {
    int const n = r.degree();
    if (!is_linear(r.top_trace())) {
      return false;
    }
    for (int k = 0; k < n; ++k) {
      if (!r.partition().same_block(k, n + k)) {
        return false;
      }
    }
    return true;
  }

  RamifiedFlags flags(Ramified const& a) {
    int const   n = a.degree();
    auto const& r = a.R().partition();
    RamifiedFlags out;
    out.report.up.assign(r.block_count(), 0);
    out.report.down.assign(r.block_count(), 0);
    for (auto const& block : a.I().partition().blocks()) {
      if (block.size() != 2) {
        continue;
      }
      int x = block[0] - 1, y = block[1] - 1;
      if (y < n) {
        ++out.report.up[r.block_of(x)];
      } else if (x >= n) {
        ++out.report.down[r.block_of(x)];
      }
    }
    out.balanced = out.report.up == out.report.down;
    out.boxed    = is_boxed(a.R());
    return out;
  }

  std::string family_name(Family f) {
    switch (f) {
      case Family::RS:
        return "RS";
      case Family::RBr:
        return "RBr";
      case Family::bBr:
        return "bBr";
      case Family::bJ:
        return "bJ";
      case Family::tJimage:
        return "tJimage";
    }
    throw InternalError("unknown family");
  }

  std::optional<Family> parse_family(std::string_view name) {
    for (auto f : {Family::RS, Family::RBr, Family::bBr, Family::bJ, Family::tJimage}) {
      if (family_name(f) == name) {
        return f;
      }
    }
    return std::nullopt;
  }

  std::vector<Labelled<Ramified>> family_generators(Family f, int n) {
    bool const use_s = f == Family::RS || f == Family::RBr || f == Family::bBr;
    bool const use_t = f == Family::RBr;
    bool const use_f = f != Family::RS;
    std::vector<Labelled<Ramified>> gens;
    auto add = [&](bool on, char c, auto make) {
      if (!on) {
        return;
      }
      for (int i = 1; i < n; ++i) {
        gens.push_back({std::string(1, c) + std::to_string(i), make(n, i)});
      }
    };
    add(use_s, 's', [](int m, int i) { return make_Ltilde(m, i); });
    add(use_t, 't', [](int m, int i) { return make_Htilde(m, i); });
    add(true, 'e', [](int m, int i) { return make_Etilde(m, i); });
    add(use_f, 'f', [](int m, int i) { return make_Ftilde(m, i); });
    return gens;
  }

  MonoidTable<Ramified> build_family(Family f, int n, std::size_t limit) {
    auto const one = Ramified::identity(n);
    if (f != Family::bJ) {
      return closure(one, family_generators(f, n), limit);
    }
    auto const bbr  = build_family(Family::bBr, n, limit);
    auto const gens = family_generators(Family::bJ, n);
    // bBr generators are s_1.., e_1.., f_1..; the bJ ones are its e and f tail.
    std::size_t const offset = static_cast<std::size_t>(n - 1);
    std::vector<int>  keep_index(bbr.size(), -1);
    std::vector<Ramified> elements;
    for (std::size_t x = 0; x < bbr.size(); ++x) {
      auto const& a = bbr[x];
      if (flags(a).boxed && classify(a.I()).is_planar) {
        keep_index[x] = static_cast<int>(elements.size());
        elements.push_back(a);
      }
    }
    std::vector<std::vector<int>> edges;
    for (std::size_t x = 0; x < bbr.size(); ++x) {
      if (keep_index[x] < 0) {
        continue;
      }
      std::vector<int> row(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int y = keep_index[bbr.edge(x, offset + g)];
        if (y < 0) {
          throw InternalError("bJ is not closed under " + gens[g].label);
        }
        row[g] = y;
      }
      edges.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    for (auto const& g : gens) {
      labels.push_back(g.label);
    }
    return MonoidTable<Ramified>(std::move(labels), std::move(elements), std::move(edges));
  }

  Word factor_ramified_brauer(Ramified const& a) {
    int const  n     = a.degree();
    auto const items = brauer_items(a.I());
    auto const& r    = a.R().partition();

    std::vector<Item> ups, downs, lines;
    for (auto const& it : items) {
      (it.kind == ItemKind::up ? ups : it.kind == ItemKind::down ? downs : lines).push_back(it);
    }
    auto by_x = [](Item const& p, Item const& q) { return p.x < q.x; };
    std::sort(ups.begin(), ups.end(), by_x);
    std::sort(downs.begin(), downs.end(), by_x);
    std::sort(lines.begin(), lines.end(), by_x);
    int const k = static_cast<int>(ups.size());

    // Pair up brackets with down brackets, inside one R-block when possible.
    std::vector<int>  partner(k, -1);
    std::vector<bool> used(downs.size(), false);
    for (int u = 0; u < k; ++u) {
      for (std::size_t d = 0; d < downs.size(); ++d) {
        if (!used[d] && r.same_block(ups[u].x, downs[d].x)) {
          partner[u] = static_cast<int>(d);
          used[d]    = true;
          break;
        }
      }
    }
    for (int u = 0; u < k; ++u) {
      if (partner[u] >= 0) {
        continue;
      }
      for (std::size_t d = 0; d < downs.size(); ++d) {
        if (!used[d]) {
          partner[u] = static_cast<int>(d);
          used[d]    = true;
          break;
        }
      }
    }

    auto const top = arrangement_permutation(a.I().top_trace());
    std::vector<int> bottom(n);
    for (int u = 0; u < k; ++u) {
      auto const& d     = downs[partner[u]];
      bottom[2 * u]     = d.x - n;
      bottom[2 * u + 1] = d.y - n;
    }
    for (std::size_t l = 0; l < lines.size(); ++l) {
      bottom[2 * k + l] = lines[l].y - n;
    }

    // Ties: chain top points of each R-block on the left, bottom points on
    // the right.
    std::map<int, std::vector<int>> top_reps, bottom_reps;
    for (auto const& it : items) {
      if (it.kind != ItemKind::down) {
        top_reps[r.block_of(it.x)].push_back(it.x + 1);
      }
      if (it.kind != ItemKind::up) {
        int y = it.kind == ItemKind::down ? it.x : it.y;
        bottom_reps[r.block_of(y)].push_back(y - n + 1);
      }
    }
    auto chain = [](std::map<int, std::vector<int>>& reps) {
      Word w;
      for (auto& [block, pts] : reps) {
        std::sort(pts.begin(), pts.end());
        for (std::size_t q = 1; q < pts.size(); ++q) {
          w.push_back(Token::e(pts[q - 1], pts[q]));
        }
      }
      return w;
    };

    Word w = chain(top_reps);
    w      = w + s_word(top);
    for (int u = 0; u < k; ++u) {
      bool tied = r.same_block(ups[u].x, downs[partner[u]].x);
      w.push_back(tied ? Token::f(2 * u + 1) : Token::t(2 * u + 1));
    }
    w = w + s_word(Permutation(std::move(bottom)));
    w = w + chain(bottom_reps);
    return w;
  }

  BalancedFactorization factor_balanced(Ramified const& a) {
    int const   n     = a.degree();
    auto const  items = brauer_items(a.I());
    auto const& r     = a.R().partition();

    struct Block {
      std::vector<Item> ups, downs, lines;
    };
    std::vector<Block> blocks(r.block_count());
    for (auto const& it : items) {
      auto& b = blocks[r.block_of(it.x)];
      (it.kind == ItemKind::up ? b.ups : it.kind == ItemKind::down ? b.downs : b.lines)
          .push_back(it);
    }
    auto by_x = [](Item const& p, Item const& q) { return p.x < q.x; };
    std::vector<std::tuple<int, int, int>> order;  // (no brackets, key, block)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      auto& b = blocks[j];
      if (b.ups.size() != b.downs.size()) {
        throw DomainError("factor_balanced needs a balanced R: " + a.to_string());
      }
      std::sort(b.ups.begin(), b.ups.end(), by_x);
      std::sort(b.downs.begin(), b.downs.end(), by_x);
      std::sort(b.lines.begin(), b.lines.end(), by_x);
      if (!b.ups.empty()) {
        order.emplace_back(0, b.ups.front().x, static_cast<int>(j));
      } else {
        order.emplace_back(1, b.lines.front().x, static_cast<int>(j));
      }
    }
    std::sort(order.begin(), order.end());

    std::vector<int>      top(n), bottom(n);
    BalancedFactorization out;
    int                   offset = 0;  // M_j
    for (auto const& [unused, key, j] : order) {
      auto const& b  = blocks[j];
      int const   kj = static_cast<int>(b.ups.size());
      int const   mj = 2 * kj + static_cast<int>(b.lines.size());
      for (int i = 0; i < kj; ++i) {
        top[b.ups[i].x]             = offset + 2 * i;
        top[b.ups[i].y]             = offset + 2 * i + 1;
        bottom[offset + 2 * i]      = b.downs[i].x - n;
        bottom[offset + 2 * i + 1]  = b.downs[i].y - n;
      }
      for (std::size_t l = 0; l < b.lines.size(); ++l) {
        top[b.lines[l].x]                 = offset + 2 * kj + static_cast<int>(l);
        bottom[offset + 2 * kj + l]       = b.lines[l].y - n;
      }
      for (int i = 1; i < mj; ++i) {
        out.E.push_back(Token::e(offset + i));
      }
      for (int i = 1; i <= kj; ++i) {
        out.F.push_back(Token::f(2 * i - 1 + offset));
      }
      offset += mj;
    }
    out.s       = s_word(Permutation(std::move(top)));
    out.s_prime = s_word(Permutation(std::move(bottom)));
    return out;
  }

  namespace {

    // V(k, m): 2-balanced partitions of k positive, k negative and m
    // neutral elements, by the block of a distinguished element.
    class BalancedTable {
     public:
      BigInt const& get(int k, int m) {
        std::lock_guard<std::mutex> lock(mutex_);
        return compute(k, m);
      }

     private:
      BigInt const& compute(int k, int m) {
        auto key = std::make_pair(k, m);
        if (auto it = memo_.find(key); it != memo_.end()) {
          return it->second;
        }
        BigInt total = 0;
        if (k == 0 && m == 0) {
          total = 1;
        } else if (m > 0) {
          // Block of a neutral element: a positives, a negatives, b neutrals.
          for (int x = 0; x <= k; ++x) {
            BigInt const ck = binomial(k, x);
            for (int y = 0; y <= m - 1; ++y) {
              total += ck * ck * binomial(m - 1, y) * compute(k - x, m - 1 - y);
            }
          }
        } else {
          // Block of a positive element: x further positives, x+1 negatives.
          for (int x = 0; x <= k - 1; ++x) {
            total += binomial(k - 1, x) * binomial(k, x + 1) * compute(k - 1 - x, 0);
          }
        }
        return memo_.emplace(key, std::move(total)).first->second;
      }

      std::mutex                         mutex_;
      std::map<std::pair<int, int>, BigInt> memo_;
    };

    BalancedTable& balanced_table() {
      static BalancedTable table;
      return table;
    }

    void check_u_args(int n, int k) {
      if (n < 1 || k < 0 || 2 * k > n) {
        throw DomainError("U(n,k) needs n >= 1 and 0 <= 2k <= n, got n = "
                          + std::to_string(n) + ", k = " + std::to_string(k));
      }
    }

  }  // namespace

  BigInt two_balanced_count(int n, int k) {
    check_u_args(n, k);
    if (n > kCountTableBound) {
      throw BudgetExceeded("U(n,k) bound is " + std::to_string(kCountTableBound), 0);
    }
    return balanced_table().get(k, n - 2 * k);
  }

  BigInt two_balanced_count_brute(int n, int k) {
    check_u_args(n, k);
    PartitionEnumerator en(n);
    auto                part = SetPartition::unity(n);
    std::vector<int>    diff(n);
    std::uint64_t       count = 0;
    while (en.next(part)) {
      auto const& rgs = en.current();
      std::fill(diff.begin(), diff.end(), 0);
      for (int x = 0; x < k; ++x) {
        ++diff[rgs[x]];
        --diff[rgs[k + x]];
      }
      if (std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; })) {
        ++count;
      }
    }
    return BigInt(count);
  }

  std::string size_family_name(SizeFamily f) {
    switch (f) {
      case SizeFamily::S:
        return "S";
      case SizeFamily::J:
        return "J";
      case SizeFamily::Br:
        return "Br";
      case SizeFamily::P:
        return "P";
      case SizeFamily::LP:
        return "LP";
      case SizeFamily::DP:
        return "DP";
      case SizeFamily::RS:
        return "RS";
      case SizeFamily::RBr:
        return "RBr";
      case SizeFamily::RJ:
        return "RJ";
      case SizeFamily::bBr:
        return "bBr";
      case SizeFamily::tJ:
        return "tJ";
      case SizeFamily::bJ:
        return "bJ";
    }
    throw InternalError("unknown size family");
  }

  std::vector<SizeFamily> all_size_families() {
    return {SizeFamily::S,  SizeFamily::J,   SizeFamily::Br, SizeFamily::P,
            SizeFamily::LP, SizeFamily::DP,  SizeFamily::RS, SizeFamily::RBr,
            SizeFamily::RJ, SizeFamily::bBr, SizeFamily::tJ, SizeFamily::bJ};
  }

  std::optional<SizeFamily> parse_size_family(std::string_view name) {
    for (auto f : all_size_families()) {
      if (size_family_name(f) == name) {
        return f;
      }
    }
    return std::nullopt;
  }

  BigInt bbr_size_from(int n, std::function<BigInt(int, int)> const& u) {
    BigInt total   = 0;
    BigInt const n2 = factorial(n) * factorial(n);
    for (int k = 0; 2 * k <= n; ++k) {
      BigInt const kf = factorial(k);
      total += n2 / (power_of_two(2 * k) * kf * kf * factorial(n - 2 * k)) * u(n, k);
    }
    return total;
  }

  BigInt size_formula(SizeFamily f, int n) {
    if (n < 1) {
      throw DomainError("size formulas need n >= 1");
    }
    switch (f) {
      case SizeFamily::S:
        return factorial(n);
      case SizeFamily::J:
        return catalan_number(n);
      case SizeFamily::Br:
        return double_factorial_odd(n);
      case SizeFamily::P:
        return bell(n);
      case SizeFamily::LP:
        return power_of_two(n - 1);
      case SizeFamily::DP: {
        BigInt total = 0;
        for (int k = 1; k <= n; ++k) {
          total += stirling2(n, k) * bell(k);
        }
        return total;
      }
      case SizeFamily::RS:
        return factorial(n) * bell(n);
      case SizeFamily::RBr:
        return double_factorial_odd(n) * bell(n);
      case SizeFamily::RJ:
        return catalan_number(n) * bell(n);
      case SizeFamily::bBr:
        return bbr_size_from(n, [](int m, int k) { return two_balanced_count(m, k); });
      case SizeFamily::tJ:
      case SizeFamily::bJ:
        return binomial(2 * n - 1, n);
    }
    throw InternalError("unknown size family");
  }

  RamifiedCountReport ramified_count_report(MonoidTable<Diagram> const& m) {
    RamifiedCountReport out;
    if (m.size() == 0) {
      return out;
    }
    int const n = m[0].degree();
    for (auto const& d : m.elements()) {
      out.by_blocks += bell(d.partition().block_count());
    }
    out.by_formula = BigInt(m.size()) * bell(n);
    out.agree      = out.by_blocks == out.by_formula;
    return out;
  }

}  // namespace tiedmon
