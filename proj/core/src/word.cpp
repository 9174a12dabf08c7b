#include "tiedmon/word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

#include "tiedmon/error.hpp"

namespace tiedmon {

  namespace {

    Token pair_token(Letter kind, int i, int j) {
      if (i == j) {
        throw DomainError(std::string(1, static_cast<char>(kind))
                          + "{i,j} needs distinct indices, got " + std::to_string(i));
      }
      if (i > j) {
        std::swap(i, j);
      }
      return Token{kind, i, j};
    }

    int parse_int(std::string_view tok, std::string_view context) {
      int  value = 0;
      auto res   = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()
          || value < 1) {
        throw MalformedInput("bad index in token '" + std::string(context) + "'");
      }
      return value;
    }

    Token parse_token(std::string_view tok) {
      if (tok.size() < 2) {
        throw MalformedInput("bad token '" + std::string(tok) + "'");
      }
      char const c = tok.front();
      if (c != 's' && c != 't' && c != 'e' && c != 'f' && c != 'a' && c != 'b') {
        throw MalformedInput("unknown generator in token '" + std::string(tok) + "'");
      }
      auto const       kind = static_cast<Letter>(c);
      std::string_view rest = tok.substr(1);
      if (rest.front() == '{') {
        if (rest.back() != '}') {
          throw MalformedInput("unterminated index pair in '" + std::string(tok) + "'");
        }
        rest = rest.substr(1, rest.size() - 2);
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
          int i = parse_int(rest, tok);
          if (kind == Letter::e) {
            return Token::e(i);
          }
          if (kind == Letter::a || kind == Letter::b) {
            throw MalformedInput("'" + std::string(tok) + "' needs two indices");
          }
          return Token{kind, i, 0};
        }
        if (kind != Letter::e && kind != Letter::a && kind != Letter::b) {
          throw MalformedInput("'" + std::string(tok) + "' takes a single index");
        }
        int i = parse_int(rest.substr(0, comma), tok);
        int j = parse_int(rest.substr(comma + 1), tok);
        return pair_token(kind, i, j);
      }
      int i = parse_int(rest, tok);
      if (kind == Letter::e) {
        return Token::e(i);
      }
      if (kind == Letter::a || kind == Letter::b) {
        throw MalformedInput("'" + std::string(tok) + "' needs two indices");
      }
      return Token{kind, i, 0};
    }

  }  // namespace

  Token Token::e(int i, int j) {
    return pair_token(Letter::e, i, j);
  }
  Token Token::a(int i, int j) {
    return pair_token(Letter::a, i, j);
  }
  Token Token::b(int i, int j) {
    return pair_token(Letter::b, i, j);
  }

  std::string Token::to_string() const {
    std::string out(1, static_cast<char>(kind));
    if (kind == Letter::e && j == i + 1) {
      return out + std::to_string(i);
    }
    if (is_pair()) {
      return out + "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
    return out + std::to_string(i);
  }

  Word parse_word(std::string_view text) {
    Word        w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      if (end > pos) {
        w.push_back(parse_token(text.substr(pos, end - pos)));
      }
      pos = end;
    }
    return w;
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (auto const& tok : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += tok.to_string();
    }
    return out;
  }

  void check_word(Word const& w, int n) {
    for (auto const& tok : w) {
      bool ok = tok.is_pair() ? (1 <= tok.i && tok.i < tok.j && tok.j <= n)
                              : (1 <= tok.i && tok.i < n);
      if (!ok) {
        throw DomainError("token " + tok.to_string() + " out of range for n = "
                          + std::to_string(n));
      }
    }
  }

  Word operator+(Word const& u, Word const& v) {
    Word out(u);
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

}  // namespace tiedmon
