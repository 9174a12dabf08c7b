#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tiedmon/closure.hpp"
#include "tiedmon/error.hpp"
#include "tiedmon/presentation.hpp"

using namespace tiedmon;

namespace {

  std::set<std::string> labels(Presentation const& p, bool derived) {
    std::set<std::string> out;
    for (auto const& r : p.relations) {
      if (r.derived == derived) {
        out.insert(r.label);
      }
    }
    return out;
  }

  Ramified psi(Word const& w, int n) {
    return eval_word(w, ramified_assignment(n));
  }

  std::vector<Letter> const kQ = {Letter::s, Letter::t, Letter::e, Letter::f};

}  // namespace

TEST_CASE("catalog shapes") {
  auto br = catalog(PresentationName::Brn, 3);
  CHECK(br.generators.size() == 4);
  CHECK(labels(catalog(PresentationName::Brn, 4), false) == std::set<std::string>{"S1", "S2", "S3", "T1", "T2", "T3", "Br1", "Br2", "Br3"});
  CHECK(labels(catalog(PresentationName::Brn, 4), true) == std::set<std::string>{"SitjSi", "tiSjti", "SiSjti"});

  auto pn = catalog(PresentationName::Pn, 3);
  CHECK(pn.generators == std::vector<Token>{Token::e(1, 2), Token::e(1, 3), Token::e(2, 3)});
  CHECK(labels(catalog(PresentationName::Pn, 4), false) == std::set<std::string>{"P1", "P2", "P3"});

  for (auto const& r : catalog(PresentationName::Qn, 2).relations) {
    CHECK((r.indices.size() < 2 || std::abs(r.indices[0] - r.indices[1]) != 1));
  }

  auto q = catalog(PresentationName::Qn, 4);
  CHECK(labels(q, false)
        == std::set<std::string>{"T1",   "T2",   "T3",   "S1",     "S2",   "S3",   "Br1",
                                 "Br2",  "Br3",  "Ei2",  "EiEj",   "TSn1", "TSn2", "TSn3",
                                 "Fi2",  "FiFj", "EiFi", "EiFj",   "FiFjFi", "Eiti", "Eitj",
                                 "Fitj", "FiSj", "FjEi", "SiFi",   "SiFjSi", "Fiti"});
  CHECK(labels(q, true)
        == std::set<std::string>{"SitjSi", "tiSjti", "SiSjti", "FiFj", "Fitj", "Eitj", "FiSjFi",
                                 "SiEjSi", "FiFjEi", "EiFjFi", "SiSjFi"});
  auto w = catalog(PresentationName::Wn, 4);
  CHECK(labels(w, false)
        == std::set<std::string>{"S1", "S2", "S3", "Fi2", "FiFj", "EiFi", "EiFj", "FiFjFi",
                                 "tSiEi", "tSiEj", "tEiEjSi", "tEiSjSi", "tSiFi", "tSiFj",
                                 "tFiFjSj", "tSjFiFj", "tFiSjFi", "tSiFjSi", "tSiSjFi",
                                 "tEiSjFi", "tFiSjEi"});
  CHECK(labels(catalog(PresentationName::tJn, 4), false)
        == std::set<std::string>{"Fi2", "FiFj", "EiFi", "EiFj", "FiFjFi"});

  for (auto p : all_presentations()) {
    auto const c       = catalog(p, 4);
    auto const letters = alphabet(p);
    for (auto const& r : c.relations) {
      for (auto const* side : {&r.lhs, &r.rhs}) {
        for (auto const& tok : *side) {
          CHECK(std::find(letters.begin(), letters.end(), tok.kind) != letters.end());
        }
        check_word(*side, 4);
      }
    }
    CHECK(parse_presentation_name(presentation_name(p)) == p);
  }
  CHECK_FALSE(parse_presentation_name("Xn"));
}

TEST_CASE("word evaluation") {
  CHECK(psi({}, 3) == Ramified::identity(3));
  auto const d = diagram_assignment(3);
  CHECK(eval_word(parse_word("s1 t2 s1"), d) == eval_word(parse_word("s2 t1 s2"), d));
  CHECK(psi(parse_word("e2"), 4) == Ramified(Diagram::identity(4), make_E(4, 2)));
  CHECK_THROWS_AS(eval_word(parse_word("e1"), d), DomainError);
}

TEST_CASE("every cataloged relation holds, n <= 6") {
  for (auto p : all_presentations()) {
    for (int n = 2; n <= 6; ++n) {
      auto const report = verify_canonical(catalog(p, n));
      CHECK_MESSAGE(report.all_pass(), presentation_name(p), " n=", n);
    }
  }
}

TEST_CASE("a mutated relation is reported") {
  auto p = catalog(PresentationName::Sn, 3);
  p.relations.push_back({"bad", {1}, parse_word("s1 s1"), parse_word("s1"), false});
  auto const report = verify_canonical(p);
  CHECK(report.failures() == 1);
  CHECK_FALSE(report.checks.back().pass);
  CHECK(report.checks.back().lhs_image != report.checks.back().rhs_image);
}

TEST_CASE("overline") {
  CHECK(overline(parse_word("e1 f2 s1")) == parse_word("t2 s1"));
  std::mt19937 rng(3);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      auto const w = oracle::random_word(rng, n, kQ, 10, true);
      auto const a = psi(w, n);
      CHECK(psi(overline(w), n) == Ramified::embed(a.I()));
    }
  }
}

TEST_CASE("extended ties") {
  CHECK(extended_tie_word(2, 3, 4) == parse_word("e2"));
  CHECK(extended_tie_word(1, 3, 3) == parse_word("s2 e1 s2"));
  CHECK_THROWS_AS(extended_tie_word(2, 2, 3), DomainError);
  CHECK_THROWS_AS(extended_tie_word(1, 5, 4), DomainError);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        CHECK(psi(extended_tie_word(i, j, n), n) == make_Etilde(n, i, j));
        if (j > i + 1) {
          auto alt = Word{Token::s(i)} + extended_tie_word(i + 1, j, n) + Word{Token::s(i)};
          CHECK(psi(alt, n) == psi(extended_tie_word(i, j, n), n));
        }
      }
    }
  }
}

TEST_CASE("extended ties satisfy P1-P3 and the commutation rules") {
  for (int n = 2; n <= 5; ++n) {
    auto const p = catalog(PresentationName::Pn, n);
    for (auto const& r : p.relations) {
      CHECK(psi(expand_ties(r.lhs, n), n) == psi(expand_ties(r.rhs, n), n));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        auto const e = extended_tie_word(i, j, n);
        for (int k = 1; k < n; ++k) {
          CHECK(psi(e + Word{Token::f(k)}, n) == psi(Word{Token::f(k)} + e, n));
          if (k != i - 1 && k != i && k != j - 1 && k != j) {
            CHECK(psi(e + Word{Token::t(k)}, n) == psi(Word{Token::t(k)} + e, n));
          }
        }
      }
    }
  }
}

TEST_CASE("generated images have the expected sizes") {
  for (int n = 1; n <= 4; ++n) {
    auto const a = ramified_assignment(n);
    auto gens_of = [&](PresentationName p) {
      std::vector<Labelled<Ramified>> g;
      for (auto const& tok : catalog(p, n).generators) {
        g.push_back({tok.to_string(), a.image(tok)});
      }
      return g;
    };
    CHECK(closure(Ramified::identity(n), gens_of(PresentationName::Qn)).size()
          == double_factorial_odd(n) * bell(n));
    CHECK(closure(Ramified::identity(n), gens_of(PresentationName::TSn)).size()
          == factorial(n) * bell(n));
  }
}

TEST_CASE("tie saturation preserves the image") {
  auto const u  = parse_word("s3 t5 t8 s2 f6 e1 t7 s2 t6");
  auto const ue = tie_saturate(u, 10);
  CHECK(psi(ue, 10) == psi(u, 10));
  CHECK(overline(ue) == overline(u));
  CHECK(std::count_if(ue.begin(), ue.end(), [](Token const& t) { return t.kind == Letter::f; })
        >= 1);

  auto const ties_only = parse_word("s1 e2 s2 e1");
  CHECK(psi(tie_saturate(ties_only, 4), 4) == psi(ties_only, 4));
  // a tangle whose cap and cup are tied through strand 1 becomes tied
  auto const up = tie_saturate(parse_word("e{1,2} t2 e{1,2}"), 3);
  CHECK(std::count_if(up.begin(), up.end(), [](Token const& t) { return t.kind == Letter::f; })
        == 1);

  std::mt19937 rng(17);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      auto const w  = oracle::random_word(rng, n, kQ, 12, true);
      auto const we = tie_saturate(w, n);
      CHECK(psi(we, n) == psi(w, n));
      CHECK(overline(we) == overline(w));
    }
  }
}

TEST_CASE("word problem") {
  std::vector<std::pair<std::string, std::string>> const r = {
      {"e{1,2} s1 e2 t2 e2 s1 e{1,2}", "e{1,2} s2 e1 t1 e1 s2 e{1,2}"},
      {"e1 e2 s1 e1 e2 t2 e2 s1 e{1,2}", "e1 e2 s2 e1 e2 t1 e1 s2 e{1,2}"},
      {"e{1,2} s1 e2 t2 e1 e2 s1 e1 e2", "e{1,2} s2 e1 t1 e1 e2 s2 e1 e2"},
      {"e{1,2} s1 e2 f2 e2 s1 e{1,2}", "e{1,2} s2 e1 f1 e1 s2 e{1,2}"},
      {"e1 e2 s1 e1 e2 f2 e1 e2 s1 e1 e2", "e1 e2 s2 e1 e2 f1 e1 e2 s2 e1 e2"},
  };
  for (auto const& [u, v] : r) {
    CHECK(word_equal(PresentationName::Qn, 3, parse_word(u), parse_word(v)));
  }
  auto const u = parse_word("s1 t2 f1 e2");
  CHECK(word_equal(PresentationName::Qn, 3, u, u + parse_word("s2 s2")));
  CHECK_FALSE(word_equal(PresentationName::Qn, 3, parse_word("e1 f2"), parse_word("f2")));
  CHECK(word_equal(PresentationName::tJn, 3, parse_word("f1 f2 f1"), parse_word("e2 f1 e2")));
  CHECK(word_equal(PresentationName::Brn, 3, parse_word("s1 t2 s1"), parse_word("s2 t1 s2")));
  CHECK_THROWS_AS(word_equal(PresentationName::Wn, 3, parse_word("t1"), parse_word("t1")),
                  DomainError);
  CHECK_THROWS_AS(word_equal(PresentationName::Qn, 3, parse_word("s3"), parse_word("s1")),
                  DomainError);
}
