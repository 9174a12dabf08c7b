#include "tiedmon/tied_jones.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>

#include "tiedmon/error.hpp"

namespace tiedmon {

  namespace {

    int parse_index(std::string_view s, std::string_view context) {
      int  v   = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw MalformedInput("bad index in '" + std::string(context) + "'");
      }
      return v;
    }

    std::vector<std::string_view> split_ws(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   pos = 0;
      while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
          ++end;
        }
        if (end > pos) {
          out.push_back(text.substr(pos, end - pos));
        }
        pos = end;
      }
      return out;
    }

  }  // namespace

  FWord::FWord(int n, std::vector<Run> runs) : n_(n), runs_(std::move(runs)) {
    for (std::size_t r = 0; r < runs_.size(); ++r) {
      auto [j, k] = runs_[r];
      if (j < 1 || k > n - 1 || j > k) {
        throw DomainError("run f{" + std::to_string(j) + "," + std::to_string(k)
                          + "} invalid for n = " + std::to_string(n));
      }
      if (r > 0 && (runs_[r - 1].first >= j || runs_[r - 1].second >= k)) {
        throw DomainError("runs must have strictly increasing starts and ends");
      }
    }
  }

  FWord FWord::parse(std::string_view text, int n) {
    std::vector<Run> runs;
    for (auto tok : split_ws(text)) {
      if (tok == "1") {
        continue;
      }
      if (tok.size() < 5 || tok.substr(0, 2) != "f{" || tok.back() != '}') {
        throw MalformedInput("bad run '" + std::string(tok) + "'");
      }
      auto body  = tok.substr(2, tok.size() - 3);
      auto comma = body.find(',');
      if (comma == std::string_view::npos) {
        throw MalformedInput("bad run '" + std::string(tok) + "'");
      }
      runs.emplace_back(parse_index(body.substr(0, comma), tok),
                        parse_index(body.substr(comma + 1), tok));
    }
    return FWord(n, std::move(runs));
  }

  int FWord::degree() const {
    int count = 0;
    int seen  = 0;  // largest index already counted
    for (auto [j, k] : runs_) {
      count += k - std::max(j, seen + 1) + 1;
      seen = k;
    }
    return count;
  }

  std::vector<int> FWord::gaps() const {
    std::vector<int> out;
    for (std::size_t r = 0; r + 1 < runs_.size(); ++r) {
      for (int g = runs_[r].second + 1; g < runs_[r + 1].first; ++g) {
        out.push_back(g);
      }
    }
    return out;
  }

  bool FWord::contains(int index) const {
    return std::any_of(runs_.begin(), runs_.end(),
                       [index](Run r) { return r.first <= index && index <= r.second; });
  }

  Word FWord::to_word() const {
    Word w;
    for (auto [j, k] : runs_) {
      for (int x = k; x >= j; --x) {
        w.push_back(Token::f(x));
      }
    }
    return w;
  }

  std::string FWord::to_string() const {
    if (runs_.empty()) {
      return "1";
    }
    std::string out;
    for (auto [j, k] : runs_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "f{" + std::to_string(j) + "," + std::to_string(k) + "}";
    }
    return out;
  }

  Word TJNormal::to_word() const {
    Word w = f.to_word();
    for (int i : e) {
      w.push_back(Token::e(i));
    }
    return w;
  }

  std::string TJNormal::to_string() const {
    std::string out = f.to_string() + " |";
    if (e.empty()) {
      return out + " 1";
    }
    for (int i : e) {
      out += " e" + std::to_string(i);
    }
    return out;
  }

  TJNormal TJNormal::parse(std::string_view text, int n) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) {
      throw MalformedInput("normal form needs 'f-part | e-part'");
    }
    TJNormal out{FWord::parse(text.substr(0, bar), n), {}};
    for (auto tok : split_ws(text.substr(bar + 1))) {
      if (tok == "1") {
        continue;
      }
      if (tok.size() < 2 || tok.front() != 'e') {
        throw MalformedInput("bad tie '" + std::string(tok) + "'");
      }
      int i = parse_index(tok.substr(1), tok);
      if (i < 1 || i >= n || out.f.contains(i)) {
        throw DomainError("tie e" + std::to_string(i) + " not allowed in this normal form");
      }
      out.e.push_back(i);
    }
    std::sort(out.e.begin(), out.e.end());
    if (std::adjacent_find(out.e.begin(), out.e.end()) != out.e.end()) {
      throw MalformedInput("repeated tie in normal form");
    }
    return out;
  }

  namespace {

    bool commute(int a, int b) {
      return std::abs(a - b) > 1;
    }

    // One Jones-style reduction between two consecutive occurrences of the
    // same letter. Returns false when none applies.
    bool reduce_once(std::vector<int>& seq, std::set<int>& ties) {
      for (std::size_t p = 0; p < seq.size(); ++p) {
        std::size_t q = p + 1;
        while (q < seq.size() && seq[q] != seq[p]) {
          ++q;
        }
        if (q == seq.size()) {
          continue;
        }
        std::vector<std::size_t> blockers;
        for (std::size_t r = p + 1; r < q; ++r) {
          if (!commute(seq[r], seq[p])) {
            blockers.push_back(r);
          }
        }
        if (blockers.empty()) {
          seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(q));
          return true;
        }
        if (blockers.size() == 1) {
          ties.insert(seq[blockers[0]]);
          seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(q));
          seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(blockers[0]));
          return true;
        }
      }
      return false;
    }

    // Lexicographically least word in the commutation class of seq.
    std::vector<int> least_in_trace(std::vector<int> seq) {
      std::vector<int> out;
      while (!seq.empty()) {
        std::size_t best = seq.size();
        for (std::size_t p = 0; p < seq.size(); ++p) {
          bool free = true;
          for (std::size_t r = 0; r < p && free; ++r) {
            free = commute(seq[r], seq[p]);
          }
          if (free && (best == seq.size() || seq[p] < seq[best])) {
            best = p;
          }
        }
        out.push_back(seq[best]);
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(best));
      }
      return out;
    }

  }  // namespace

  TJNormal tj_normalize(Word const& w, int n) {
    check_word(w, n);
    std::vector<int> seq;
    std::set<int>    ties;
    for (auto const& tok : w) {
      if (tok.kind == Letter::f) {
        seq.push_back(tok.i);
      } else if (tok.kind == Letter::e && tok.j == tok.i + 1) {
        ties.insert(tok.i);
      } else {
        throw DomainError("token " + tok.to_string() + " is not in the tJ_n alphabet");
      }
    }
    while (reduce_once(seq, ties)) {
    }
    seq = least_in_trace(std::move(seq));

    std::vector<FWord::Run> runs;
    for (std::size_t p = 0; p < seq.size();) {
      std::size_t q = p + 1;
      while (q < seq.size() && seq[q] == seq[q - 1] - 1) {
        ++q;
      }
      runs.emplace_back(seq[q - 1], seq[p]);
      p = q;
    }
    TJNormal out{FWord(n), {}};
    try {
      out.f = FWord(n, std::move(runs));
    } catch (DomainError const& e) {
      throw InternalError(std::string("f-part did not reduce to runs: ") + e.what());
    }
    for (int i : ties) {
      if (!out.f.contains(i)) {
        out.e.push_back(i);
      }
    }
    return out;
  }

  void for_each_fword(int n, int k, std::function<void(FWord const&)> const& fn) {
    if (k < 0 || k > n) {
      throw DomainError("enumerate_fwords needs 0 <= k <= n");
    }
    std::vector<FWord::Run> runs;
    // covered = indices counted so far
    std::function<void(int, int, int)> rec = [&](int min_j, int min_k, int covered) {
      if (covered == k) {
        fn(FWord(n, runs));
      }
      for (int j = min_j; j <= n - 1; ++j) {
        for (int kk = std::max(j, min_k); kk <= n - 1; ++kk) {
          int const added = kk - std::max(j, min_k) + 1;
          if (covered + added > k) {
            break;
          }
          runs.emplace_back(j, kk);
          rec(j + 1, kk + 1, covered + added);
          runs.pop_back();
        }
      }
    };
    rec(1, 1, 0);
  }

  std::vector<FWord> enumerate_fwords(int n, int k) {
    std::vector<FWord> out;
    for_each_fword(n, k, [&](FWord const& f) { out.push_back(f); });
    return out;
  }

  FWord h_map(FWord const& b) {
    int const n    = b.n();
    auto      runs = b.runs();
    if (!b.contains(n - 1)) {
      runs.emplace_back(n - 1, n - 1);
      return FWord(n, std::move(runs));
    }
    auto const  gs = b.gaps();
    int         g  = 0;
    std::size_t i  = 0;
    if (!gs.empty()) {
      g = gs.back();
      while (runs[i].first <= g) {
        ++i;
      }
    } else {
      if (runs.front().first == 1) {
        throw DomainError("h is undefined on f-words with N(f) = n - 1");
      }
      g = runs.front().first - 1;
    }
    runs[i].first = g;
    for (std::size_t l = i + 1; l < runs.size(); ++l) {
      --runs[l].first;
    }
    return FWord(n, std::move(runs));
  }

  FWord h_inverse(FWord const& b) {
    int const n    = b.n();
    auto      runs = b.runs();
    if (runs.empty() || runs.back().second != n - 1) {
      throw DomainError("h_inverse needs an f-word containing f_{n-1}");
    }
    if (runs.back() == FWord::Run{n - 1, n - 1}) {
      runs.pop_back();
      return FWord(n, std::move(runs));
    }
    for (std::size_t l = runs.size(); l-- > 0;) {
      bool const stop = l == 0 || runs[l].first > runs[l - 1].second;
      ++runs[l].first;
      if (stop) {
        break;
      }
    }
    return FWord(n, std::move(runs));
  }

  BigInt catalan_triangle(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > kCountTableBound) {
      throw DomainError("catalan_triangle needs 0 <= k <= n <= "
                        + std::to_string(kCountTableBound));
    }
    static std::mutex                       mutex;
    static std::vector<std::vector<BigInt>> rows;
    std::lock_guard<std::mutex>             lock(mutex);
    while (static_cast<int>(rows.size()) <= n) {
      int const           m = static_cast<int>(rows.size());
      std::vector<BigInt> row(m + 1);
      row[0] = 1;
      for (int c = 1; c < m; ++c) {
        row[c] = row[c - 1] + rows[m - 1][c];
      }
      if (m > 0) {
        row[m] = 0;
      }
      rows.push_back(std::move(row));
    }
    return rows[n][k];
  }

  BigInt boxed_count(int n, int j) {
    if (j < 1 || j > n) {
      throw DomainError("boxed_count needs 1 <= j <= n");
    }
    BigInt sum = 0;
    for (int k = j; k <= n; ++k) {
      sum += binomial(k - 1, j - 1) * catalan_triangle(n, n - k);
    }
    return sum;
  }

  int separability_degree(Diagram const& d) {
    auto const cls = classify(d);
    if (!cls.is_brauer || !cls.is_planar) {
      throw DomainError("separability needs a planar Brauer diagram");
    }
    int const        n = d.degree();
    std::vector<int> crossing(n + 1, 0);  // crossing[m]: some block spans m | m+1
    for (auto const& block : d.partition().blocks()) {
      int lo = n + 1;
      int hi = 0;
      for (int x : block) {
        int const pos = x <= n ? x : x - n;
        lo            = std::min(lo, pos);
        hi            = std::max(hi, pos);
      }
      for (int m = lo; m < hi; ++m) {
        crossing[m] = 1;
      }
    }
    int degree = 1;
    for (int m = 1; m < n; ++m) {
      degree += crossing[m] == 0;
    }
    return degree;
  }

  std::string boxed_count_csv(int max_n) {
    std::ostringstream out;
    out << "n,j,B\n";
    for (int n = 1; n <= max_n; ++n) {
      for (int j = 1; j <= n; ++j) {
        out << n << ',' << j << ',' << boxed_count(n, j) << '\n';
      }
    }
    return out.str();
  }

}  // namespace tiedmon
