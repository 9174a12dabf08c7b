#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tiedmon/error.hpp"
#include "tiedmon/ramified.hpp"

using namespace tiedmon;

namespace {

  template <typename T>
  std::set<T> as_set(std::vector<T> const& v) {
    return {v.begin(), v.end()};
  }

  std::size_t count_letter(Word const& w, Letter l) {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [l](Token const& t) { return t.kind == l; }));
  }

}  // namespace

TEST_CASE("construction validates I finer than R") {
  CHECK_THROWS_AS(Ramified(make_E(3, 1), Diagram::identity(3)), DomainError);
  CHECK_THROWS_AS(Ramified(Diagram::identity(2), Diagram::identity(3)), SizeMismatch);
  auto a = Ramified::parse("1,2|1',2'|3,3' ; 1,2,1',2'|3,3'");
  CHECK(a == make_Ftilde(3, 1));
  CHECK(Ramified::parse(a.to_string()) == a);
  CHECK_THROWS_AS(Ramified::parse("1,1'|2,2'"), MalformedInput);
}

TEST_CASE("products of generators") {
  auto const d = make_H(3, 1);
  auto const e = make_L(3, 2);
  CHECK(Ramified::embed(d) * Ramified::embed(e) == Ramified::embed(d * e));
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          auto const s   = Permutation::from_diagram(make_L(n, i));
          auto const lhs = make_Ltilde(n, i) * make_Etilde(n, j, k) * make_Ltilde(n, i);
          CHECK(lhs == make_Etilde(n, s(j), s(k)));
        }
      }
      CHECK(make_Htilde(n, i) * make_Ftilde(n, i) == make_Htilde(n, i));
      CHECK(make_Ftilde(n, i) * make_Htilde(n, i) == make_Htilde(n, i));
      CHECK(make_Ftilde(n, i) == Ramified(make_H(n, i), make_E(n, i)));
    }
  }
  CHECK(make_Etilde(3, 1, 3) == Ramified(Diagram::identity(3), Diagram::parse("1,3,1',3'|2,2'")));
  CHECK(Ramified::embed(Diagram::identity(4)) == Ramified::identity(4));
  CHECK(rgenerator(3, RGeneratorKind::Etilde, 1, 3) == make_Etilde(3, 1, 3));
  CHECK_THROWS_AS(rgenerator(3, RGeneratorKind::Etilde, 3, 1), DomainError);
}

TEST_CASE("products keep I finer than R") {
  auto const rbr2 = build_family(Family::RBr, 2);
  for (auto const& a : rbr2.elements()) {
    for (auto const& b : rbr2.elements()) {
      auto const c = a * b;
      CHECK(finer_than(c.I().partition(), c.R().partition()));
    }
  }
  std::mt19937 rng(11);
  for (int n = 3; n <= 4; ++n) {
    auto const                                 t = build_family(Family::RBr, n);
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      auto const c = t[pick(rng)] * t[pick(rng)];
      CHECK(finer_than(c.I().partition(), c.R().partition()));
      CHECK(t.contains(c));
    }
  }
}

TEST_CASE("balance and boxing flags") {
  for (auto const& p : oracle::permutations(3)) {
    auto const f = flags(Ramified::embed(p));
    CHECK(f.balanced);
    CHECK(f.boxed == (p == Diagram::identity(3)));
  }
  auto const f = flags(make_Ftilde(4, 2));
  CHECK(f.balanced);
  CHECK(f.boxed);
  CHECK_FALSE(flags(make_Htilde(2, 1)).balanced);
  std::size_t unbalanced = 0;
  for (int n = 2; n <= 4; ++n) {
    for (auto const table = build_family(Family::RBr, n); auto const& a : table.elements()) {
      auto const fl = flags(a);
      CHECK(fl.balanced == oracle::balanced(a.I(), a.R()));
      CHECK(fl.boxed == oracle::boxed(a.R()));
      unbalanced += !fl.balanced;
    }
  }
  CHECK(unbalanced > 0);
}

TEST_CASE("family sizes") {
  CHECK(build_family(Family::RS, 3).size() == 30);
  CHECK(build_family(Family::bBr, 3).size() == 48);
  CHECK(build_family(Family::tJimage, 4).size() == 35);
  for (int n = 1; n <= 4; ++n) {
    auto const rs = build_family(Family::RS, n);
    CHECK(rs.size() == factorial(n) * bell(n));
    for (auto const& a : rs.elements()) {
      CHECK(classify(a.I()).is_permutation);
    }
  }
  CHECK_THROWS_AS(build_family(Family::RBr, 4, 100), BudgetExceeded);
}

TEST_CASE("balanced filter of RBr is the closure of L~, E~, F~") {
  for (int n = 1; n <= 4; ++n) {
    std::set<Ramified> filtered;
    for (auto const table = build_family(Family::RBr, n); auto const& a : table.elements()) {
      if (flags(a).balanced) {
        filtered.insert(a);
      }
    }
    CHECK(filtered == as_set(build_family(Family::bBr, n).elements()));
  }
}

TEST_CASE("boxed planar filter of bBr is the closure of E~, F~") {
  for (int n = 1; n <= 5; ++n) {
    auto const bj = build_family(Family::bJ, n);
    CHECK(as_set(bj.elements()) == as_set(build_family(Family::tJimage, n).elements()));
    for (std::size_t x = 0; x < bj.size(); ++x) {
      CHECK(classify(bj[x].I()).is_planar);
      CHECK(flags(bj[x]).boxed);
      for (std::size_t g = 0; g < bj.labels().size(); ++g) {
        CHECK(bj[bj.edge(x, g)] == bj[x] * family_generators(Family::bJ, n)[g].value);
      }
    }
  }
}

TEST_CASE("units of RBr are the embedded permutations") {
  for (int n = 1; n <= 4; ++n) {
    auto const  t   = build_family(Family::RBr, n);
    auto const  one = Ramified::identity(n);
    std::size_t units = 0;
    for (auto const& a : t.elements()) {
      if (!classify(a.I()).is_permutation) {
        continue;  // a unit of the first component is a permutation
      }
      for (auto const& b : t.elements()) {
        if (a * b == one) {
          ++units;
          CHECK(a.I() == a.R());
          break;
        }
      }
    }
    CHECK(units == factorial(n));
  }
}

TEST_CASE("P_n embeds through e_{i,j} -> E~_{i,j}") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 5; ++n) {
    auto const         parts = all_partitions(n);
    std::set<Ramified> images;
    auto               image = [n](SetPartition const& p) {
      auto r = Ramified::identity(n);
      for (auto [i, j] : fitzgerald_decompose(p)) {
        r = r * make_Etilde(n, i, j);
      }
      return r;
    };
    for (auto const& p : parts) {
      images.insert(image(p));
    }
    CHECK(images.size() == parts.size());
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      auto const& p = parts[pick(rng)];
      auto const& q = parts[pick(rng)];
      CHECK(image(join(p, q)) == image(p) * image(q));
    }
  }
}

TEST_CASE("factorization of ramified Brauer elements") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const table = build_family(Family::RBr, n); auto const& a : table.elements()) {
      auto const w = factor_ramified_brauer(a);
      CHECK(phi(w, n) == a);
    }
  }
  for (auto const& d : oracle::brauer(4)) {
    auto const w = factor_ramified_brauer(Ramified::embed(d));
    CHECK(count_letter(w, Letter::e) == 0);
    CHECK(count_letter(w, Letter::f) == 0);
    CHECK(phi(w, 4) == Ramified::embed(d));
  }
  auto const w = factor_ramified_brauer(make_Ftilde(3, 1));
  CHECK(count_letter(w, Letter::f) == 1);
  CHECK(count_letter(w, Letter::t) == 0);
  auto const e13 = factor_ramified_brauer(make_Etilde(3, 1, 3));
  CHECK(phi(e13, 3) == make_Etilde(3, 1, 3));
  for (auto const& tok : e13) {
    CHECK(tok == Token::e(1, 3));
  }
  CHECK_THROWS_AS(factor_ramified_brauer(Ramified::embed(make_E(3, 1))), DomainError);
}

TEST_CASE("factorization of balanced elements") {
  auto const id = factor_balanced(Ramified::identity(3));
  CHECK(id.joined().empty());
  auto const f = factor_balanced(make_Ftilde(2, 1));
  CHECK(f.s.empty());
  CHECK(f.s_prime.empty());
  CHECK(f.F == Word{Token::f(1)});
  CHECK(phi(f.joined(), 2) == make_Ftilde(2, 1));
  for (int n = 1; n <= 4; ++n) {
    for (auto const table = build_family(Family::bBr, n); auto const& a : table.elements()) {
      auto const g = factor_balanced(a);
      CHECK(phi(g.joined(), n) == a);
      CHECK(count_letter(g.E, Letter::s) + count_letter(g.E, Letter::f) == 0);
      CHECK(count_letter(g.F, Letter::f) == g.F.size());
    }
  }
  CHECK_THROWS_AS(factor_balanced(make_Htilde(2, 1)), DomainError);
}

TEST_CASE("two-balanced partitions") {
  CHECK(two_balanced_count(1, 0) == 1);
  for (int n = 1; n <= 8; ++n) {
    CHECK(two_balanced_count(n, 0) == bell(n));
    for (int k = 0; 2 * k <= n; ++k) {
      auto const brute = oracle::two_balanced(n, k);
      CHECK(two_balanced_count(n, k) == brute);
      CHECK(two_balanced_count_brute(n, k) == brute);
    }
  }
}

TEST_CASE("size formulas") {
  CHECK(size_formula(SizeFamily::bBr, 6) == 531810);
  CHECK(size_formula(SizeFamily::tJ, 5) == 126);
  std::vector<std::string> const table = {
      "1",        "5",           "48",             "747",             "17040",
      "531810",   "21634515",    "1107593235",     "69482175840",     "5229801016650",
      "464302838867175"};
  for (int n = 1; n <= 11; ++n) {
    CHECK(size_formula(SizeFamily::bBr, n).str() == table[n - 1]);
  }
  // Beyond n = 11 the only reference is an independent evaluation.
  for (int n = 1; n <= 14; ++n) {
    CHECK(size_formula(SizeFamily::bBr, n) == oracle::bbr_by_egf(n));
  }
  CHECK(size_formula(SizeFamily::bBr, 14).str() == "767922887039461928775");
  for (int n = 1; n <= 6; ++n) {
    auto const brute = bbr_size_from(n, [](int m, int k) { return BigInt(oracle::two_balanced(m, k)); });
    CHECK(brute == size_formula(SizeFamily::bBr, n));
  }
  CHECK(size_formula(SizeFamily::RBr, 3) == 75);
  CHECK(size_formula(SizeFamily::DP, 3) == 1 * 1 + 3 * 2 + 1 * 5);
  CHECK(parse_size_family("bJ") == SizeFamily::bJ);
  CHECK_FALSE(parse_size_family("nope"));
}

TEST_CASE("ramified counting report") {
  std::vector<Labelled<Diagram>> gens;
  for (int i = 1; i < 3; ++i) {
    gens.push_back({"s" + std::to_string(i), make_L(3, i)});
    gens.push_back({"t" + std::to_string(i), make_H(3, i)});
  }
  auto const br = ramified_count_report(closure(Diagram::identity(3), gens));
  CHECK(br.agree);
  CHECK(br.by_formula == 75);
  std::vector<Labelled<Diagram>> ties{{"e1", make_E(3, 1)}, {"e2", make_E(3, 2)}};
  auto const p = ramified_count_report(closure(Diagram::identity(3), ties));
  CHECK_FALSE(p.agree);
  CHECK(p.by_formula == 4 * 5);
  CHECK(p.by_blocks == 5 + 2 + 2 + 1);  // 1, E_1, E_2 and E_1 E_2 have 3, 2, 2, 1 blocks
}
