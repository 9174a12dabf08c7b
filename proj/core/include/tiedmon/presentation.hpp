#ifndef TIEDMON_PRESENTATION_HPP_
#define TIEDMON_PRESENTATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiedmon/diagram.hpp"
#include "tiedmon/ramified.hpp"
#include "tiedmon/word.hpp"

namespace tiedmon {

  enum class PresentationName { Sn, Jn, Brn, Pn, DPn, TSn, Qn, Wn, tJn };

  std::string                     presentation_name(PresentationName p);
  std::optional<PresentationName> parse_presentation_name(std::string_view name);
  std::vector<PresentationName>   all_presentations();

  // One instance of a relation lhs = rhs. Chains a = b = c are stored as
  // the consecutive pairs (a, b) and (b, c) under one label.
  struct Relation {
    std::string      label;
    std::vector<int> indices;
    Word             lhs;
    Word             rhs;
    bool             derived = false;  // a consequence, not a defining relation
  };

  struct Presentation {
    PresentationName      name;
    int                   n = 0;
    std::vector<Token>    generators;
    std::vector<Relation> relations;
  };

  // Every relation of the named presentation instantiated for all index
  // choices meeting its side condition, followed by the registered
  // consequences flagged as derived.
  Presentation catalog(PresentationName name, int n);

  // The letters a presentation's words may use.
  std::vector<Letter> alphabet(PresentationName name);

  // A homomorphism from words to a concrete monoid.
  template <typename T>
  struct Assignment {
    int                                n;
    T                                  identity;
    std::function<T(Token const&)>     image;
  };

  // s_i -> L_i, t_i -> H_i.
  Assignment<Diagram> diagram_assignment(int n);
  // s -> L~, t -> H~, e_{i,j} -> E~_{i,j}, f -> F~, a_{i,j} -> (E_{i,j},
  // E_{i,j}), b_{i,j} -> (1, E_{i,j}).
  Assignment<Ramified> ramified_assignment(int n);

  template <typename T>
  T eval_word(Word const& w, Assignment<T> const& a) {
    T result = a.identity;
    for (auto const& tok : w) {
      result = result * a.image(tok);
    }
    return result;
  }

  struct RelationCheck {
    std::string      label;
    std::vector<int> indices;
    bool             derived = false;
    bool             pass    = false;
    std::string      lhs;
    std::string      rhs;
    std::string      lhs_image;
    std::string      rhs_image;
  };

  struct VerificationReport {
    std::string                presentation;
    int                        n = 0;
    std::vector<RelationCheck> checks;

    std::size_t failures() const;
    bool        all_pass() const {
      return failures() == 0;
    }
  };

  template <typename T>
  VerificationReport verify_presentation(Presentation const& p, Assignment<T> const& a) {
    VerificationReport report{presentation_name(p.name), p.n, {}};
    for (auto const& rel : p.relations) {
      T const lhs = eval_word(rel.lhs, a);
      T const rhs = eval_word(rel.rhs, a);
      report.checks.push_back({rel.label,
                               rel.indices,
                               rel.derived,
                               lhs == rhs,
                               to_string(rel.lhs),
                               to_string(rel.rhs),
                               lhs.to_string(),
                               rhs.to_string()});
    }
    return report;
  }

  // Diagrams for S_n, J_n, Br_n; ramified partitions otherwise.
  VerificationReport verify_canonical(Presentation const& p);

  // Deletes e letters and turns every f_i into t_i.
  Word overline(Word const& w);

  // e_{i,i+1} = e_i, e_{i,j} = s_{j-1} e_{i,j-1} s_{j-1}.
  Word extended_tie_word(int i, int j, int n);

  // Replaces every extended tie e{i,j} by extended_tie_word(i, j, n).
  Word expand_ties(Word const& w, int n);

  // u^e: ties doubled and propagated, t_k upgraded to f_k where the cap
  // and cup of t_k are already tied through another strand. Uses extended
  // ties e{i,j}.
  Word tie_saturate(Word const& w, int n);

  // Equality in Q_n, W_n, tJ_n, TS_n (through the faithful ramified image)
  // or S_n, J_n, Br_n (through diagrams). Throws DomainError for letters
  // outside the family's alphabet.
  bool word_equal(PresentationName family, int n, Word const& u, Word const& v);

}  // namespace tiedmon

#endif  // TIEDMON_PRESENTATION_HPP_
