#ifndef TIEDMON_WORD_HPP_
#define TIEDMON_WORD_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace tiedmon {

  // Generator letters. s, t, e, f are the Q_n alphabet (s_i, t_i, the
  // tie e_{i,j} and the tied tangle f_i); a and b are the two families
  // a_{i,j}, b_{i,j} of the double partition monoid.
  enum class Letter : char { s = 's', t = 't', e = 'e', f = 'f', a = 'a', b = 'b' };

  // One generator occurrence. Single-index letters use i and leave j = 0.
  // Pair letters (e, a, b) store i < j; e_i is e with j = i + 1.
  struct Token {
    Letter kind;
    int    i = 0;
    int    j = 0;

    static Token s(int i) {
      return {Letter::s, i, 0};
    }
    static Token t(int i) {
      return {Letter::t, i, 0};
    }
    static Token f(int i) {
      return {Letter::f, i, 0};
    }
    static Token e(int i) {
      return {Letter::e, i, i + 1};
    }
    static Token e(int i, int j);  // normalizes to i < j
    static Token a(int i, int j);
    static Token b(int i, int j);

    bool is_pair() const noexcept {
      return kind == Letter::e || kind == Letter::a || kind == Letter::b;
    }

    // "s3", "e1", "e{1,3}", "a{1,2}".
    std::string to_string() const;

    friend bool operator==(Token const&, Token const&) = default;
    friend auto operator<=>(Token const&, Token const&) = default;
  };

  using Word = std::vector<Token>;

  // Whitespace separated tokens. e{i,i+1} and e{i+1,i} both parse to e_i.
  Word        parse_word(std::string_view text);
  std::string to_string(Word const& w);

  // Throws DomainError unless every index fits a monoid on n strands:
  // 1 <= i < n for single-index letters, 1 <= i < j <= n for pairs.
  void check_word(Word const& w, int n);

  // Concatenation helper.
  Word operator+(Word const& u, Word const& v);

}  // namespace tiedmon

#endif  // TIEDMON_WORD_HPP_
