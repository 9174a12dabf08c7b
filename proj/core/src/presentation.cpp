#include "tiedmon/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <initializer_list>
#include <utility>

#include "tiedmon/error.hpp"

namespace tiedmon {

  namespace {

    struct Builder {
      std::vector<Relation>& out;
      bool                   derived = false;

      void add(std::string const& label, std::vector<int> idx, Word lhs, Word rhs) {
        out.push_back({label, std::move(idx), std::move(lhs), std::move(rhs), derived});
      }
      void chain(std::string const& label, std::vector<int> const& idx,
                 std::initializer_list<Word> words) {
        std::vector<Word> w(words);
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
          add(label, idx, w[k], w[k + 1]);
        }
      }
    };

    Token s(int i) {
      return Token::s(i);
    }
    Token t(int i) {
      return Token::t(i);
    }
    Token e(int i) {
      return Token::e(i);
    }
    Token f(int i) {
      return Token::f(i);
    }

    bool far(int i, int j) {
      return std::abs(i - j) > 1;
    }
    bool adj(int i, int j) {
      return std::abs(i - j) == 1;
    }

    template <typename F>
    void each(int n, F&& fn) {
      for (int i = 1; i < n; ++i) {
        fn(i);
      }
    }

    template <typename Cond, typename F>
    void each_pair(int n, Cond&& cond, F&& fn) {
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          if (cond(i, j)) {
            fn(i, j);
          }
        }
      }
    }

    void add_S(Builder& b, int n) {
      each(n, [&](int i) { b.add("S1", {i}, {s(i), s(i)}, {}); });
      each_pair(n, far, [&](int i, int j) { b.add("S2", {i, j}, {s(i), s(j)}, {s(j), s(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.add("S3", {i, j}, {s(i), s(j), s(i)}, {s(j), s(i), s(j)});
      });
    }

    void add_T(Builder& b, int n) {
      each(n, [&](int i) { b.add("T1", {i}, {t(i), t(i)}, {t(i)}); });
      each_pair(n, far, [&](int i, int j) { b.add("T2", {i, j}, {t(i), t(j)}, {t(j), t(i)}); });
      each_pair(n, adj, [&](int i, int j) { b.add("T3", {i, j}, {t(i), t(j), t(i)}, {t(i)}); });
    }

    void add_Br(Builder& b, int n) {
      each(n, [&](int i) { b.chain("Br1", {i}, {{t(i), s(i)}, {s(i), t(i)}, {t(i)}}); });
      each_pair(n, far, [&](int i, int j) { b.add("Br2", {i, j}, {t(i), s(j)}, {s(j), t(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.add("Br3", {i, j}, {s(i), t(j), t(i)}, {s(j), t(i)});
        b.add("Br3", {i, j}, {t(i), t(j), s(i)}, {t(i), s(j)});
      });
    }

    void add_Br_derived(Builder b, int n) {
      b.derived = true;
      each_pair(n, adj, [&](int i, int j) {
        b.add("SitjSi", {i, j}, {s(i), t(j), s(i)}, {s(j), t(i), s(j)});
        b.add("tiSjti", {i, j}, {t(i), s(j), t(i)}, {t(i)});
        b.chain("SiSjti", {i, j}, {{s(i), s(j), t(i)}, {t(j), s(i), s(j)}, {t(j), t(i)}});
      });
    }

    // P1-P3 for one family of pair generators.
    void add_P(Builder& b, int n, Token (*g)(int, int)) {
      std::vector<std::pair<int, int>> gens;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          gens.emplace_back(i, j);
        }
      }
      for (auto [i, j] : gens) {
        b.add("P1", {i, j}, {g(i, j), g(i, j)}, {g(i, j)});
      }
      for (auto [i, j] : gens) {
        for (auto [r, q] : gens) {
          if (std::pair(i, j) != std::pair(r, q)) {
            b.add("P2", {i, j, r, q}, {g(i, j), g(r, q)}, {g(r, q), g(i, j)});
          }
        }
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            b.chain("P3", {i, j, k},
                    {{g(i, j), g(j, k)}, {g(i, j), g(i, k)}, {g(j, k), g(i, k)}});
          }
        }
      }
    }

    Token e_pair(int i, int j) {
      return Token::e(i, j);
    }
    Token a_pair(int i, int j) {
      return Token::a(i, j);
    }
    Token b_pair(int i, int j) {
      return Token::b(i, j);
    }

    // P1 and P2 on the adjacent ties e_i.
    void add_P_adjacent(Builder& b, int n) {
      each(n, [&](int i) { b.add("P1", {i}, {e(i), e(i)}, {e(i)}); });
      each_pair(n, [](int i, int j) { return i != j; },
                [&](int i, int j) { b.add("P2", {i, j}, {e(i), e(j)}, {e(j), e(i)}); });
    }

    void add_TS(Builder& b, int n) {
      each(n, [&](int i) { b.add("Ei2", {i}, {e(i), e(i)}, {e(i)}); });
      each_pair(n, [](int i, int j) { return i != j; },
                [&](int i, int j) { b.add("EiEj", {i, j}, {e(i), e(j)}, {e(j), e(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.add("TSn1", {i, j}, {e(i), s(j), s(i)}, {s(j), s(i), e(j)});
      });
      each_pair(n, [](int i, int j) { return !adj(i, j); },
                [&](int i, int j) { b.add("TSn2", {i, j}, {s(i), e(j)}, {e(j), s(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.chain("TSn3", {i, j}, {{e(i), e(j), s(i)}, {e(j), s(i), e(j)}, {s(i), e(i), e(j)}});
      });
    }

    // Fi2 through FiFjFi.
    void add_F(Builder& b, int n) {
      each(n, [&](int i) { b.add("Fi2", {i}, {f(i), f(i)}, {f(i)}); });
      each_pair(n, far, [&](int i, int j) { b.add("FiFj", {i, j}, {f(i), f(j)}, {f(j), f(i)}); });
      each(n, [&](int i) { b.chain("EiFi", {i}, {{e(i), f(i)}, {f(i), e(i)}, {f(i)}}); });
      each_pair(n, [](int, int) { return true; },
                [&](int i, int j) { b.add("EiFj", {i, j}, {e(i), f(j)}, {f(j), e(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.add("FiFjFi", {i, j}, {f(i), f(j), f(i)}, {e(j), f(i), e(j)});
      });
    }

    void add_Q_rest(Builder& b, int n) {
      each(n, [&](int i) { b.chain("Eiti", {i}, {{e(i), t(i)}, {t(i), e(i)}, {t(i)}}); });
      each_pair(n, far, [&](int i, int j) { b.add("Eitj", {i, j}, {e(i), t(j)}, {t(j), e(i)}); });
      each_pair(n, far, [&](int i, int j) { b.add("Fitj", {i, j}, {f(i), t(j)}, {t(j), f(i)}); });
      each_pair(n, far, [&](int i, int j) { b.add("FiSj", {i, j}, {f(i), s(j)}, {s(j), f(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.chain("FjEi", {i, j}, {{f(i), e(j)}, {e(j), f(i)}, {e(j), t(i), e(j)}});
      });
      each(n, [&](int i) { b.chain("SiFi", {i}, {{s(i), f(i)}, {f(i), s(i)}, {f(i)}}); });
      each_pair(n, adj, [&](int i, int j) {
        b.add("SiFjSi", {i, j}, {s(i), f(j), s(i)}, {s(j), f(i), s(j)});
      });
      each(n, [&](int i) { b.chain("Fiti", {i}, {{f(i), t(i)}, {t(i), f(i)}, {t(i)}}); });
    }

    void add_Q_derived(Builder b, int n) {
      b.derived = true;
      each_pair(n, adj, [&](int i, int j) {
        b.add("FiFj", {i, j}, {f(i), f(j)}, {e(j), t(i), t(j), e(i)});
        b.add("Fitj", {i, j}, {f(i), t(j)}, {e(j), t(i), t(j)});
        b.add("Fitj", {i, j}, {t(i), f(j)}, {t(i), t(j), e(i)});
        b.add("Eitj", {i, j}, {e(i), t(j)}, {f(j), s(i), t(j)});
        b.add("Eitj", {i, j}, {t(i), e(j)}, {t(i), s(j), f(i)});
        b.add("FiSjFi", {i, j}, {f(i), s(j), f(i)}, {e(j), t(i), e(j)});
        b.add("SiEjSi", {i, j}, {s(i), e(j), s(i)}, {s(j), e(i), s(j)});
        b.add("FiFjEi", {i, j}, {f(i), f(j), e(i)}, {f(i), f(j)});
        b.add("EiFjFi", {i, j}, {e(i), f(j), f(i)}, {f(j), f(i)});
        b.add("SiSjFi", {i, j}, {f(i), s(j), s(i)}, {s(j), s(i), f(j)});
      });
    }

    void add_W_rest(Builder& b, int n) {
      each(n, [&](int i) { b.add("tSiEi", {i}, {s(i), e(i)}, {e(i), s(i)}); });
      each_pair(n, far, [&](int i, int j) { b.add("tSiEj", {i, j}, {s(i), e(j)}, {e(j), s(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.chain("tEiEjSi", {i, j},
                {{e(i), e(j), s(i)}, {s(i), e(i), e(j)}, {e(j), s(i), e(j)}});
        b.add("tEiSjSi", {i, j}, {e(i), s(j), s(i)}, {s(j), s(i), e(j)});
      });
      each(n, [&](int i) { b.chain("tSiFi", {i}, {{s(i), f(i)}, {f(i), s(i)}, {f(i)}}); });
      each_pair(n, far, [&](int i, int j) { b.add("tSiFj", {i, j}, {s(i), f(j)}, {f(j), s(i)}); });
      each_pair(n, adj, [&](int i, int j) {
        b.add("tFiFjSj", {i, j}, {f(i), f(j), s(i)}, {e(j), f(i), s(j)});
        b.add("tSjFiFj", {i, j}, {s(j), f(i), f(j)}, {s(i), f(j), e(i)});
        b.add("tFiSjFi", {i, j}, {f(i), s(j), f(i)}, {e(j), f(i), e(j)});
        b.add("tSiFjSi", {i, j}, {s(i), f(j), s(i)}, {s(j), f(i), s(j)});
        b.add("tSiSjFi", {i, j}, {s(i), s(j), f(i)}, {f(j), s(i), s(j)});
        b.add("tEiSjFi", {i, j}, {e(i), s(j), f(i)}, {s(j), f(i), e(j)});
        b.add("tFiSjEi", {i, j}, {f(i), s(j), e(i)}, {e(j), f(i), s(j)});
      });
    }

    std::vector<Token> single_generators(int n, std::initializer_list<Letter> letters) {
      std::vector<Token> out;
      for (auto l : letters) {
        for (int i = 1; i < n; ++i) {
          out.push_back(l == Letter::e ? Token::e(i) : Token{l, i, 0});
        }
      }
      return out;
    }

    std::vector<Token> pair_generators(int n, Token (*g)(int, int)) {
      std::vector<Token> out;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          out.push_back(g(i, j));
        }
      }
      return out;
    }

    bool uses_diagrams(PresentationName p) {
      return p == PresentationName::Sn || p == PresentationName::Jn
             || p == PresentationName::Brn;
    }

  }  // namespace

  std::string presentation_name(PresentationName p) {
    switch (p) {
      case PresentationName::Sn:
        return "Sn";
      case PresentationName::Jn:
        return "Jn";
      case PresentationName::Brn:
        return "Brn";
      case PresentationName::Pn:
        return "Pn";
      case PresentationName::DPn:
        return "DPn";
      case PresentationName::TSn:
        return "TSn";
      case PresentationName::Qn:
        return "Qn";
      case PresentationName::Wn:
        return "Wn";
      case PresentationName::tJn:
        return "tJn";
    }
    throw InternalError("unknown presentation");
  }

  std::vector<PresentationName> all_presentations() {
    return {PresentationName::Sn,  PresentationName::Jn, PresentationName::Brn,
            PresentationName::Pn,  PresentationName::DPn, PresentationName::TSn,
            PresentationName::Qn,  PresentationName::Wn, PresentationName::tJn};
  }

  std::optional<PresentationName> parse_presentation_name(std::string_view name) {
    for (auto p : all_presentations()) {
      if (presentation_name(p) == name) {
        return p;
      }
    }
    return std::nullopt;
  }

  std::vector<Letter> alphabet(PresentationName name) {
    switch (name) {
      case PresentationName::Sn:
        return {Letter::s};
      case PresentationName::Jn:
        return {Letter::t};
      case PresentationName::Brn:
        return {Letter::s, Letter::t};
      case PresentationName::Pn:
        return {Letter::e};
      case PresentationName::DPn:
        return {Letter::a, Letter::b};
      case PresentationName::TSn:
        return {Letter::s, Letter::e};
      case PresentationName::Qn:
        return {Letter::s, Letter::t, Letter::e, Letter::f};
      case PresentationName::Wn:
        return {Letter::s, Letter::e, Letter::f};
      case PresentationName::tJn:
        return {Letter::e, Letter::f};
    }
    throw InternalError("unknown presentation");
  }

  Presentation catalog(PresentationName name, int n) {
    if (n < 1) {
      throw DomainError("presentations need n >= 1");
    }
    Presentation p{name, n, {}, {}};
    Builder      b{p.relations};
    switch (name) {
      case PresentationName::Sn:
        p.generators = single_generators(n, {Letter::s});
        add_S(b, n);
        break;
      case PresentationName::Jn:
        p.generators = single_generators(n, {Letter::t});
        add_T(b, n);
        break;
      case PresentationName::Brn:
        p.generators = single_generators(n, {Letter::s, Letter::t});
        add_S(b, n);
        add_T(b, n);
        add_Br(b, n);
        add_Br_derived(b, n);
        break;
      case PresentationName::Pn:
        p.generators = pair_generators(n, e_pair);
        add_P(b, n, e_pair);
        break;
      case PresentationName::DPn: {
        p.generators = pair_generators(n, a_pair);
        auto bs      = pair_generators(n, b_pair);
        p.generators.insert(p.generators.end(), bs.begin(), bs.end());
        add_P(b, n, a_pair);
        add_P(b, n, b_pair);
        auto gens = pair_generators(n, e_pair);
        for (auto const& g : gens) {
          for (auto const& h : gens) {
            b.add("EqPDoubP", {g.i, g.j, h.i, h.j}, {Token::a(g.i, g.j), Token::b(h.i, h.j)},
                  {Token::b(h.i, h.j), Token::a(g.i, g.j)});
          }
        }
        for (auto const& g : gens) {
          b.add("EqPDoubP", {g.i, g.j}, {Token::a(g.i, g.j), Token::b(g.i, g.j)},
                {Token::a(g.i, g.j)});
        }
        break;
      }
      case PresentationName::TSn:
        p.generators = single_generators(n, {Letter::s, Letter::e});
        add_S(b, n);
        add_P_adjacent(b, n);
        add_TS(b, n);
        break;
      case PresentationName::Qn:
        p.generators = single_generators(n, {Letter::s, Letter::t, Letter::e, Letter::f});
        add_T(b, n);
        add_S(b, n);
        add_Br(b, n);
        add_TS(b, n);
        add_F(b, n);
        add_Q_rest(b, n);
        add_Br_derived(b, n);
        add_Q_derived(b, n);
        break;
      case PresentationName::Wn:
        p.generators = single_generators(n, {Letter::s, Letter::e, Letter::f});
        add_S(b, n);
        add_F(b, n);
        add_W_rest(b, n);
        break;
      case PresentationName::tJn:
        p.generators = single_generators(n, {Letter::e, Letter::f});
        add_F(b, n);
        break;
    }
    return p;
  }

  Assignment<Diagram> diagram_assignment(int n) {
    return {n, Diagram::identity(n), [n](Token const& tok) {
              switch (tok.kind) {
                case Letter::s:
                  return make_L(n, tok.i);
                case Letter::t:
                  return make_H(n, tok.i);
                default:
                  throw DomainError("token " + tok.to_string() + " has no diagram image");
              }
            }};
  }

  Assignment<Ramified> ramified_assignment(int n) {
    return {n, Ramified::identity(n), [n](Token const& tok) {
              switch (tok.kind) {
                case Letter::a:
                  return Ramified::embed(make_E(n, tok.i, tok.j));
                case Letter::b:
                  return make_Etilde(n, tok.i, tok.j);
                default:
                  return phi(tok, n);
              }
            }};
  }

  std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](auto const& c) { return !c.pass; }));
  }

  VerificationReport verify_canonical(Presentation const& p) {
    if (uses_diagrams(p.name)) {
      return verify_presentation(p, diagram_assignment(p.n));
    }
    return verify_presentation(p, ramified_assignment(p.n));
  }

  Word overline(Word const& w) {
    Word out;
    for (auto const& tok : w) {
      switch (tok.kind) {
        case Letter::s:
        case Letter::t:
          out.push_back(tok);
          break;
        case Letter::f:
          out.push_back(Token::t(tok.i));
          break;
        case Letter::e:
          break;
        default:
          throw DomainError("token " + tok.to_string() + " is not in the Q_n alphabet");
      }
    }
    return out;
  }

  Word extended_tie_word(int i, int j, int n) {
    if (i > j) {
      std::swap(i, j);
    }
    if (i < 1 || j > n || i == j) {
      throw DomainError("e{" + std::to_string(i) + "," + std::to_string(j)
                        + "} out of range for n = " + std::to_string(n));
    }
    Word w{Token::e(i)};
    for (int k = i + 2; k <= j; ++k) {
      Word next{Token::s(k - 1)};
      next.insert(next.end(), w.begin(), w.end());
      next.push_back(Token::s(k - 1));
      w = std::move(next);
    }
    return w;
  }

  Word expand_ties(Word const& w, int n) {
    Word out;
    for (auto const& tok : w) {
      if (tok.kind == Letter::e) {
        auto x = extended_tie_word(tok.i, tok.j, n);
        out.insert(out.end(), x.begin(), x.end());
      } else {
        out.push_back(tok);
      }
    }
    return out;
  }

  namespace {

    // Ties that pass through a letter, mapped to the other side.
    SetPartition push_ties(SetPartition const& ties, Token const& x) {
      int const n = ties.ground_size();
      int const m = x.i - 1;  // 0-based left strand of the letter
      switch (x.kind) {
        case Letter::f:
          return ties;
        case Letter::s: {
          std::vector<int> labels(ties.assignment());
          std::swap(labels[m], labels[m + 1]);
          return SetPartition::from_labels(labels);
        }
        case Letter::t: {
          std::vector<int> labels(ties.assignment());
          bool const       joined = ties.same_block(m, m + 1);
          labels[m]               = n + m;
          labels[m + 1]           = joined ? n + m : n + m + 1;
          return SetPartition::from_labels(labels);
        }
        default:
          throw InternalError("tie saturation met " + x.to_string());
      }
    }

    void propagate(std::vector<SetPartition>& gaps, Word const& letters) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t p = 0; p < letters.size(); ++p) {
          auto next = join(gaps[p + 1], push_ties(gaps[p], letters[p]));
          if (next != gaps[p + 1]) {
            gaps[p + 1] = std::move(next);
            changed     = true;
          }
        }
        for (std::size_t p = letters.size(); p-- > 0;) {
          auto prev = join(gaps[p], push_ties(gaps[p + 1], letters[p]));
          if (prev != gaps[p]) {
            gaps[p] = std::move(prev);
            changed = true;
          }
        }
      }
    }

  }  // namespace

  Word tie_saturate(Word const& w, int n) {
    check_word(w, n);
    Word                      letters;
    std::vector<SetPartition> gaps{SetPartition::unity(n)};
    for (auto const& tok : w) {
      switch (tok.kind) {
        case Letter::e:
          gaps.back() = join(gaps.back(), atom(n, {tok.i, tok.j}));
          break;
        case Letter::s:
        case Letter::t:
        case Letter::f:
          letters.push_back(tok);
          gaps.push_back(SetPartition::unity(n));
          break;
        default:
          throw DomainError("token " + tok.to_string() + " is not in the Q_n alphabet");
      }
    }

    for (std::size_t p = 0; p < letters.size(); ++p) {
      if (letters[p].kind == Letter::t || letters[p].kind == Letter::f) {
        auto const tie = atom(n, {letters[p].i, letters[p].i + 1});
        gaps[p]        = join(gaps[p], tie);
        gaps[p + 1]    = join(gaps[p + 1], tie);
      }
    }
    propagate(gaps, letters);

    bool upgraded = true;
    while (upgraded) {
      upgraded = false;
      for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p].kind != Letter::t) {
          continue;
        }
        int const m = letters[p].i - 1;
        for (int x = 0; x < n; ++x) {
          if (x != m && x != m + 1 && gaps[p].same_block(x, m) && gaps[p + 1].same_block(x, m)) {
            letters[p] = Token::f(letters[p].i);
            upgraded   = true;
            break;
          }
        }
      }
      if (upgraded) {
        propagate(gaps, letters);
      }
    }

    Word out;
    for (std::size_t p = 0; p < gaps.size(); ++p) {
      for (auto [a, b] : fitzgerald_decompose(gaps[p])) {
        out.push_back(Token::e(a, b));
      }
      if (p < letters.size()) {
        out.push_back(letters[p]);
      }
    }
    return out;
  }

  bool word_equal(PresentationName family, int n, Word const& u, Word const& v) {
    auto const letters = alphabet(family);
    for (auto const* w : {&u, &v}) {
      for (auto const& tok : *w) {
        if (std::find(letters.begin(), letters.end(), tok.kind) == letters.end()) {
          throw DomainError("token " + tok.to_string() + " is not a generator of "
                            + presentation_name(family));
        }
      }
      check_word(*w, n);
    }
    if (uses_diagrams(family)) {
      auto a = diagram_assignment(n);
      return eval_word(u, a) == eval_word(v, a);
    }
    auto a = ramified_assignment(n);
    return eval_word(u, a) == eval_word(v, a);
  }

}  // namespace tiedmon
