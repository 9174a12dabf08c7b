#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tiedmon/closure.hpp"
#include "tiedmon/diagram.hpp"
#include "tiedmon/error.hpp"
#include "tiedmon/permutation.hpp"

using namespace tiedmon;

namespace {

  std::vector<Labelled<Diagram>> gens(int n, bool with_l, bool with_h) {
    std::vector<Labelled<Diagram>> out;
    for (int i = 1; i < n; ++i) {
      if (with_l) {
        out.push_back({"s" + std::to_string(i), make_L(n, i)});
      }
    }
    for (int i = 1; i < n; ++i) {
      if (with_h) {
        out.push_back({"t" + std::to_string(i), make_H(n, i)});
      }
    }
    return out;
  }

  std::set<Diagram> as_set(std::vector<Diagram> const& v) {
    return {v.begin(), v.end()};
  }

}  // namespace

TEST_CASE("text format round trips") {
  auto g = Diagram::parse("1,5|2,3|4,3'|6,2'|1',5'|4',6'");
  CHECK(g.degree() == 6);
  CHECK(g.partition().ground_size() == 12);
  CHECK(Diagram::parse(g.to_string()) == g);
  CHECK(Diagram::parse("1,1'|2|3|2'|3'", 3).degree() == 3);
  CHECK_THROWS_AS(Diagram::parse("1,1'", 3), MalformedInput);
  CHECK_THROWS_AS(Diagram::parse("1,2|2,1'"), MalformedInput);
  CHECK_THROWS_AS(Diagram::parse("1,x'"), MalformedInput);
  CHECK(Diagram::from_signed_blocks(2, {{1, -2}, {2, -1}}) == make_L(2, 1));
}

TEST_CASE("generator relations in C_n") {
  CHECK(make_H(2, 1) * make_H(2, 1) == make_H(2, 1));
  CHECK(make_L(2, 1) * make_L(2, 1) == Diagram::identity(2));
  CHECK(make_H(3, 1) * make_H(3, 2) * make_H(3, 1) == make_H(3, 1));
  CHECK(make_H(4, 2).to_string() == Diagram::parse("1,1'|2,3|2',3'|4,4'").to_string());
  CHECK(make_L(4, 1) == Diagram::parse("1,2'|2,1'|3,3'|4,4'"));
  CHECK(make_E(3, 1, 3) == Diagram::parse("1,3,1',3'|2,2'"));
  CHECK(make_E(3, 2, 2) == Diagram::identity(3));
  CHECK(generator(3, GeneratorKind::E, 1, 3) == make_E(3, 1, 3));
  CHECK_THROWS_AS(generator(3, GeneratorKind::E, 3, 1), DomainError);
  CHECK_THROWS_AS(make_H(3, 3), DomainError);
}

TEST_CASE("concat matches the graph-search oracle") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 2; ++n) {
    std::vector<Diagram> all;
    for (auto const& l : oracle::partitions(2 * n)) {
      all.emplace_back(n, SetPartition::from_labels(l));
    }
    for (auto const& a : all) {
      CHECK(a * Diagram::identity(n) == a);
      CHECK(Diagram::identity(n) * a == a);
      for (auto const& b : all) {
        CHECK(a * b == oracle::concat(a, b));
        for (auto const& c : all) {
          CHECK((a * b) * c == a * (b * c));
        }
      }
    }
  }
  for (int n = 3; n <= 5; ++n) {
    auto const parts = all_partitions(2 * n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      Diagram a(n, parts[pick(rng)]), b(n, parts[pick(rng)]), c(n, parts[pick(rng)]);
      CHECK(a * b == oracle::concat(a, b));
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("classification") {
  auto h = classify(make_H(4, 2));
  CHECK(h.is_brauer);
  CHECK(h.is_planar);
  CHECK_FALSE(h.is_permutation);
  CHECK(h.up_brackets == 1);
  CHECK(h.down_brackets == 1);
  auto l = classify(make_L(3, 1));
  CHECK(l.is_brauer);
  CHECK(l.is_permutation);
  CHECK_FALSE(l.is_planar);
  CHECK(classify(Diagram::parse("1,4|2,3|1',2'|3',4'")).is_planar);
  for (int n = 1; n <= 5; ++n) {
    for (auto const& d : oracle::brauer(n)) {
      auto c = classify(d);
      CHECK(c.is_brauer);
      CHECK(c.up_brackets == c.down_brackets);
      CHECK(c.is_planar == oracle::noncrossing(d));
    }
  }
}

TEST_CASE("distinct Brauer diagrams are incomparable") {
  for (int n = 1; n <= 3; ++n) {
    auto all = oracle::brauer(n);
    for (auto const& a : all) {
      for (auto const& b : all) {
        if (a != b) {
          CHECK_FALSE(finer_than(a.partition(), b.partition()));
        }
      }
    }
  }
}

TEST_CASE("arrangement permutation") {
  auto i = SetPartition::from_blocks({{1, 6}, {2}, {3, 4}, {5, 8}, {7}, {9}}, 9);
  auto p = arrangement_permutation(i);
  // {1,6} -> {1,2}, {3,4} -> {3,4}, {5,8} -> {5,6}, singletons 2,7,9 -> 7,8,9
  CHECK(p.one_based() == std::vector<int>{1, 7, 3, 4, 5, 2, 8, 6, 9});
  CHECK(arrangement_permutation(SetPartition::unity(4)).is_identity());
  auto top = SetPartition::from_blocks({{1, 5}, {2, 3}, {4}, {6}}, 6);
  CHECK(arrangement_permutation(top) == Permutation::from_one_based({1, 3, 4, 5, 2, 6}));
}

TEST_CASE("Brauer normal form of the worked n = 6 example") {
  auto g  = Diagram::parse("1,5|2,3|4,3'|6,2'|1',5'|4',6'");
  auto nf = brauer_normal_form(g);
  CHECK(nf.k == 2);
  auto n_i = Permutation::from_one_based({1, 3, 4, 5, 2, 6});
  auto t_g = Permutation::from_one_based({1, 2, 3, 4, 6, 5});
  auto n_j = Permutation::from_one_based({1, 5, 6, 3, 2, 4});
  CHECK(nf.top == n_i);
  CHECK(nf.bottom == t_g.then(n_j.inverse()));
  CHECK(nf.top.to_diagram() * bracket_core(6, 2) * nf.bottom.to_diagram() == g);
  CHECK(evaluate(nf) == g);
}

TEST_CASE("Brauer normal form round trips on Br_n") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& d : oracle::brauer(n)) {
      auto nf = brauer_normal_form(d);
      CHECK(evaluate(nf) == d);
      CHECK(nf.top == arrangement_permutation(d.top_trace()));
    }
  }
  auto p = Permutation::from_one_based({3, 1, 2, 4});
  auto nf = brauer_normal_form(p.to_diagram());
  CHECK(nf.k == 0);
  CHECK(nf.top.then(nf.bottom) == p);
  CHECK_THROWS_AS(brauer_normal_form(make_E(3, 1)), DomainError);
}

TEST_CASE("reduced words realize the permutation") {
  for (auto const& d : oracle::permutations(5)) {
    auto p = Permutation::from_diagram(d);
    auto w = Diagram::identity(5);
    for (int i : p.reduced_word()) {
      w = w * make_L(5, i);
    }
    CHECK(w == d);
  }
}

TEST_CASE("closures of the diagram monoids") {
  auto j4 = closure(Diagram::identity(4), gens(4, false, true));
  CHECK(j4.size() == 14);
  CHECK(closure(Diagram::identity(4), gens(4, true, false)).size() == 24);
  auto br5 = closure(Diagram::identity(5), gens(5, true, true));
  CHECK(br5.size() == 945);
  for (int n = 1; n <= 5; ++n) {
    auto br = closure(Diagram::identity(n), gens(n, true, true));
    auto jn = closure(Diagram::identity(n), gens(n, false, true));
    CHECK(as_set(br.elements()) == as_set(oracle::brauer(n)));
    CHECK(as_set(jn.elements()) == as_set(oracle::jones(n)));
    std::set<Diagram> planar;
    std::size_t       units = 0;
    for (auto const& d : br.elements()) {
      if (classify(d).is_planar) {
        planar.insert(d);
      }
      bool unit = false;
      for (auto const& e : br.elements()) {
        if (d * e == Diagram::identity(n)) {
          unit = true;
          break;
        }
      }
      if (unit) {
        ++units;
        CHECK(classify(d).is_permutation);
      }
    }
    CHECK(planar == as_set(jn.elements()));
    CHECK(units == as_set(oracle::permutations(n)).size());
  }
}

TEST_CASE("closure edges and budget") {
  auto t = closure(Diagram::identity(3), gens(3, true, true));
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t g = 0; g < t.labels().size(); ++g) {
      CHECK(t[t.edge(x, g)] == t[x] * gens(3, true, true)[g].value);
    }
  }
  CHECK(closure(Diagram::identity(3), gens(3, true, true), 15).size() == 15);
  try {
    closure(Diagram::identity(3), gens(3, true, true), 10);
    FAIL("expected BudgetExceeded");
  } catch (BudgetExceeded const& e) {
    CHECK(e.reached() == 10);
  }
}
