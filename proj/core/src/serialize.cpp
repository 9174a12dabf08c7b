#include "tiedmon/serialize.hpp"

#include "tiedmon/error.hpp"

namespace tiedmon {

  namespace {

    template <typename F>
    auto guarded(F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (Json::exception const& e) {
        throw MalformedInput(std::string("bad JSON: ") + e.what());
      }
    }

    int degree_of(Json const& j) {
      int n = j.at("n").get<int>();
      if (n < 0) {
        throw MalformedInput("negative degree in JSON");
      }
      return n;
    }

    template <typename T>
    Json table_json(MonoidTable<T> const& t, std::string const& kind) {
      Json elements = Json::array();
      for (auto const& x : t.elements()) {
        elements.push_back(x.to_string());
      }
      int n = t.size() == 0 ? 0 : t[0].degree();
      return Json{{"format_version", kFormatVersion},
                  {"kind", kind},
                  {"n", n},
                  {"labels", t.labels()},
                  {"elements", elements},
                  {"edges", t.edges()}};
    }

    template <typename T, typename Parse>
    MonoidTable<T> table_from(Json const& j, std::string const& kind, Parse parse) {
      return guarded([&] {
        if (j.at("format_version").get<int>() != kFormatVersion) {
          throw MalformedInput("unsupported table format version");
        }
        if (j.at("kind").get<std::string>() != kind) {
          throw MalformedInput("table kind is not " + kind);
        }
        int const      n = degree_of(j);
        std::vector<T> elements;
        for (auto const& e : j.at("elements")) {
          elements.push_back(parse(e.get<std::string>(), n));
        }
        return MonoidTable<T>(j.at("labels").get<std::vector<std::string>>(), std::move(elements),
                              j.at("edges").get<std::vector<std::vector<int>>>());
      });
    }

  }  // namespace

  Json to_json(SetPartition const& p) {
    return Json{{"m", p.ground_size()}, {"blocks", p.blocks()}};
  }

  SetPartition partition_from_json(Json const& j) {
    return guarded([&] {
      return SetPartition::from_blocks(j.at("blocks").get<std::vector<std::vector<int>>>(),
                                       j.at("m").get<int>());
    });
  }

  Json to_json(Diagram const& d) {
    return Json{{"n", d.degree()}, {"blocks", d.signed_blocks()}};
  }

  Diagram diagram_from_json(Json const& j) {
    return guarded([&] {
      return Diagram::from_signed_blocks(degree_of(j),
                                         j.at("blocks").get<std::vector<std::vector<int>>>());
    });
  }

  Json to_json(Ramified const& a) {
    return Json{{"n", a.degree()}, {"I", to_json(a.I())}, {"R", to_json(a.R())}};
  }

  Ramified ramified_from_json(Json const& j) {
    return guarded([&] {
      auto i = diagram_from_json(j.at("I"));
      auto r = diagram_from_json(j.at("R"));
      if (i.degree() != degree_of(j) || r.degree() != degree_of(j)) {
        throw SizeMismatch("ramified JSON components disagree on n");
      }
      return Ramified(std::move(i), std::move(r));
    });
  }

  Json to_json(Word const& w) {
    return to_string(w);
  }

  Word word_from_json(Json const& j) {
    return guarded([&] { return parse_word(j.get<std::string>()); });
  }

  Json to_json(FWord const& f) {
    return Json{{"n", f.n()}, {"runs", f.runs()}};
  }

  FWord fword_from_json(Json const& j) {
    return guarded([&] {
      return FWord(degree_of(j), j.at("runs").get<std::vector<FWord::Run>>());
    });
  }

  Json to_json(TJNormal const& nf) {
    return Json{{"f", to_json(nf.f)}, {"e", nf.e}, {"text", nf.to_string()}};
  }

  TJNormal tjnormal_from_json(Json const& j) {
    return guarded([&] {
      auto f = fword_from_json(j.at("f"));
      return TJNormal::parse(f.to_string() + " | " + [&] {
        std::string e;
        for (int i : j.at("e").get<std::vector<int>>()) {
          e += " e" + std::to_string(i);
        }
        return e;
      }(), f.n());
    });
  }

  Json to_json(MonoidTable<Diagram> const& t) {
    return table_json(t, "diagram");
  }

  Json to_json(MonoidTable<Ramified> const& t) {
    return table_json(t, "ramified");
  }

  MonoidTable<Diagram> diagram_table_from_json(Json const& j) {
    return table_from<Diagram>(j, "diagram",
                               [](std::string const& s, int n) { return Diagram::parse(s, n); });
  }

  MonoidTable<Ramified> ramified_table_from_json(Json const& j) {
    return table_from<Ramified>(j, "ramified",
                                [](std::string const& s, int n) { return Ramified::parse(s, n); });
  }

  Json to_json(VerificationReport const& r) {
    Json checks = Json::array();
    for (auto const& c : r.checks) {
      checks.push_back(Json{{"label", c.label},
                            {"indices", c.indices},
                            {"derived", c.derived},
                            {"status", c.pass ? "pass" : "fail"},
                            {"lhs", c.lhs},
                            {"rhs", c.rhs},
                            {"lhs_image", c.lhs_image},
                            {"rhs_image", c.rhs_image}});
    }
    return Json{{"presentation", r.presentation},
                {"n", r.n},
                {"failures", r.failures()},
                {"relations", checks}};
  }

}  // namespace tiedmon
