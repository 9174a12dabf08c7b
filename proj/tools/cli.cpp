#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tiedmon/closure.hpp"
#include "tiedmon/counting.hpp"
#include "tiedmon/diagram.hpp"
#include "tiedmon/error.hpp"
#include "tiedmon/presentation.hpp"
#include "tiedmon/ramified.hpp"
#include "tiedmon/render.hpp"
#include "tiedmon/serialize.hpp"
#include "tiedmon/store.hpp"
#include "tiedmon/tied_jones.hpp"

namespace tiedmon {

  namespace {

    // Unknown names and the like; reported with exit status 2.
    struct UsageError : Error {
      using Error::Error;
    };

    std::string big(BigInt const& v) {
      return v.str();
    }

    bool is_ramified_text(std::string const& text) {
      return text.find(';') != std::string::npos;
    }

    enum class DiagramFamily { S, J, Br };

    std::optional<DiagramFamily> parse_diagram_family(std::string const& name) {
      if (name == "S") {
        return DiagramFamily::S;
      }
      if (name == "J") {
        return DiagramFamily::J;
      }
      if (name == "Br") {
        return DiagramFamily::Br;
      }
      return std::nullopt;
    }

    std::vector<Labelled<Diagram>> diagram_generators(DiagramFamily f, int n) {
      std::vector<Labelled<Diagram>> gens;
      if (f != DiagramFamily::J) {
        for (int i = 1; i < n; ++i) {
          gens.push_back({"s" + std::to_string(i), make_L(n, i)});
        }
      }
      if (f != DiagramFamily::S) {
        for (int i = 1; i < n; ++i) {
          gens.push_back({"t" + std::to_string(i), make_H(n, i)});
        }
      }
      return gens;
    }

    std::optional<Family> parse_closure_family(std::string const& name) {
      if (name == "tJ") {
        return Family::tJimage;
      }
      return parse_family(name);
    }

    struct Options {
      bool                     json = false;
      int                      n    = 0;
      std::size_t              limit = kNoLimit;
      std::string              family;
      std::string              gens;
      std::string              elem;
      std::string              format = "text";
      std::string              cache_dir;
      bool                     no_cache = false;
      bool                     dump     = false;
      int                      max      = 0;
      std::vector<std::string> positional;
    };

    std::optional<Store> open_store(Options const& o, std::ostream& err) {
      if (o.no_cache) {
        return std::nullopt;
      }
      if (!o.cache_dir.empty()) {
        return Store(o.cache_dir, [&err](std::string const& m) { err << "warning: " << m << '\n'; });
      }
      if (char const* env = std::getenv("TIEDMON_CACHE_DIR"); env && *env) {
        return Store(env, [&err](std::string const& m) { err << "warning: " << m << '\n'; });
      }
      return std::nullopt;
    }

    template <typename T, typename Get>
    MonoidTable<T> cached_closure(std::optional<Store> const& store, std::string const& family,
                                  int n, T const& identity, std::vector<Labelled<T>> const& gens,
                                  std::size_t limit, Get get) {
      CacheKey const key{family, n, generator_fingerprint(gens), kFormatVersion};
      if (store) {
        if (auto hit = get(*store, key)) {
          return std::move(*hit);
        }
      }
      auto table = closure(identity, gens, limit);
      if (store) {
        store_put(*store, key, table);
      }
      return table;
    }

    template <typename T>
    void print_table(std::ostream& out, Options const& o, std::string const& name,
                     MonoidTable<T> const& t) {
      if (o.dump) {
        out << to_json(t).dump(2) << '\n';
      } else if (o.json) {
        out << Json{{"family", name}, {"n", o.n}, {"size", t.size()}, {"generators", t.labels()}}
                   .dump(2)
            << '\n';
      } else {
        out << t.size() << '\n';
      }
    }

    int cmd_count(Options const& o, std::ostream& out) {
      auto f = parse_size_family(o.family);
      if (!f) {
        throw UsageError("unknown family '" + o.family + "'");
      }
      auto const size = size_formula(*f, o.n);
      if (o.json) {
        out << Json{{"family", o.family}, {"n", o.n}, {"size", big(size)}}.dump(2) << '\n';
      } else {
        out << size << '\n';
      }
      return 0;
    }

    int cmd_closure(Options const& o, std::ostream& out, std::ostream& err) {
      auto const store = open_store(o, err);
      if (!o.gens.empty()) {
        auto const word        = parse_word(o.gens);
        bool const diagrammatic = std::all_of(word.begin(), word.end(), [](Token const& t) {
          return t.kind == Letter::s || t.kind == Letter::t;
        });
        check_word(word, o.n);
        if (diagrammatic) {
          std::vector<Labelled<Diagram>> gens;
          auto const                     a = diagram_assignment(o.n);
          for (auto const& tok : word) {
            gens.push_back({tok.to_string(), a.image(tok)});
          }
          auto t = cached_closure(store, "custom", o.n, Diagram::identity(o.n), gens, o.limit,
                                  store_get_diagrams);
          print_table(out, o, "custom", t);
        } else {
          std::vector<Labelled<Ramified>> gens;
          auto const                      a = ramified_assignment(o.n);
          for (auto const& tok : word) {
            gens.push_back({tok.to_string(), a.image(tok)});
          }
          auto t = cached_closure(store, "custom", o.n, Ramified::identity(o.n), gens, o.limit,
                                  store_get_ramified);
          print_table(out, o, "custom", t);
        }
        return 0;
      }
      if (auto df = parse_diagram_family(o.family)) {
        auto t = cached_closure(store, o.family, o.n, Diagram::identity(o.n),
                                diagram_generators(*df, o.n), o.limit, store_get_diagrams);
        print_table(out, o, o.family, t);
        return 0;
      }
      auto rf = parse_closure_family(o.family);
      if (!rf) {
        throw UsageError("unknown family '" + o.family + "'");
      }
      MonoidTable<Ramified> t;
      if (*rf == Family::bJ) {
        // a filter, not a closure; cache it under its own name
        CacheKey const key{o.family, o.n, generator_fingerprint(family_generators(*rf, o.n)),
                           kFormatVersion};
        auto hit = store ? store_get_ramified(*store, key) : std::nullopt;
        if (hit) {
          t = std::move(*hit);
        } else {
          t = build_family(*rf, o.n, o.limit);
          if (store) {
            store_put(*store, key, t);
          }
        }
      } else {
        t = cached_closure(store, o.family, o.n, Ramified::identity(o.n),
                           family_generators(*rf, o.n), o.limit, store_get_ramified);
      }
      print_table(out, o, o.family, t);
      return 0;
    }

    int cmd_verify(Options const& o, std::ostream& out) {
      auto p = parse_presentation_name(o.family);
      if (!p) {
        throw UsageError("unknown presentation '" + o.family + "'");
      }
      auto const report = verify_canonical(catalog(*p, o.n));
      if (o.json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << report.presentation << " n=" << report.n << ": " << report.checks.size()
            << " relations, " << report.failures() << " failures\n";
        for (auto const& c : report.checks) {
          if (!c.pass) {
            out << "FAIL " << c.label << ": " << c.lhs << " = " << c.rhs << "\n  lhs -> "
                << c.lhs_image << "\n  rhs -> " << c.rhs_image << '\n';
          }
        }
      }
      return report.all_pass() ? 0 : 1;
    }

    std::string or_one(Word const& w) {
      return w.empty() ? "1" : to_string(w);
    }

    int cmd_nf(Options const& o, std::ostream& out) {
      Json        j{{"monoid", o.family}, {"elem", o.elem}};
      std::string text;
      std::optional<int> n = o.n > 0 ? std::optional<int>(o.n) : std::nullopt;
      if (o.family == "Br") {
        auto const d  = Diagram::parse(o.elem, n);
        auto const nf = brauer_normal_form(d);
        j["top"]      = nf.top.one_based();
        j["k"]        = nf.k;
        j["bottom"]   = nf.bottom.one_based();
        text = "top " + nf.top.to_string() + " k " + std::to_string(nf.k) + " bottom "
               + nf.bottom.to_string();
      } else if (o.family == "P") {
        auto const p = SetPartition::parse(o.elem, n);
        Word       w;
        for (auto [a, b] : fitzgerald_decompose(p)) {
          w.push_back(Token::e(a, b));
        }
        text        = or_one(w);
        j["word"]   = to_string(w);
      } else if (o.family == "RBr") {
        auto const w = factor_ramified_brauer(Ramified::parse(o.elem, n));
        text         = or_one(w);
        j["word"]    = to_string(w);
      } else if (o.family == "bBr") {
        auto const f = factor_balanced(Ramified::parse(o.elem, n));
        j["s"]       = to_string(f.s);
        j["E"]       = to_string(f.E);
        j["F"]       = to_string(f.F);
        j["s_prime"] = to_string(f.s_prime);
        j["word"]    = to_string(f.joined());
        text = or_one(f.s) + " | " + or_one(f.E) + " | " + or_one(f.F) + " | "
               + or_one(f.s_prime);
      } else if (o.family == "tJ") {
        if (o.n < 1) {
          throw UsageError("nf tJ needs --n");
        }
        auto const nf = tj_normalize(parse_word(o.elem), o.n);
        text          = nf.to_string();
        j["normal_form"] = text;
        j["f"]           = to_json(nf.f);
        j["e"]           = nf.e;
      } else {
        throw UsageError("unknown monoid '" + o.family + "' (Br, P, RBr, bBr, tJ)");
      }
      if (o.json) {
        out << j.dump(2) << '\n';
      } else {
        out << text << '\n';
      }
      return 0;
    }

    int cmd_product(Options const& o, std::ostream& out) {
      if (o.positional.size() != 2) {
        throw UsageError("product needs exactly two elements");
      }
      auto const& a = o.positional[0];
      auto const& b = o.positional[1];
      if (is_ramified_text(a) != is_ramified_text(b)) {
        throw UsageError("cannot multiply a diagram by a ramified partition");
      }
      if (is_ramified_text(a)) {
        auto const x = Ramified::parse(a, o.n);
        auto const y = Ramified::parse(b, o.n);
        if (x.degree() != y.degree()) {
          throw SizeMismatch("operands have different n");
        }
        auto const p = x * y;
        out << (o.json ? to_json(p).dump(2) : p.to_string()) << '\n';
      } else {
        auto const x = Diagram::parse(a, o.n);
        auto const y = Diagram::parse(b, o.n);
        auto const p = x * y;
        out << (o.json ? to_json(p).dump(2) : p.to_string()) << '\n';
      }
      return 0;
    }

    int cmd_table(Options const& o, std::ostream& out) {
      Json        rows = Json::array();
      std::string csv;
      if (o.family == "bBr-sizes") {
        csv = "n,size\n";
        for (int n = 1; n <= o.max; ++n) {
          auto const s = size_formula(SizeFamily::bBr, n);
          csv += std::to_string(n) + "," + big(s) + "\n";
          rows.push_back(Json{{"n", n}, {"size", big(s)}});
        }
      } else if (o.family == "Bnj") {
        csv = boxed_count_csv(o.max);
        for (int n = 1; n <= o.max; ++n) {
          for (int j = 1; j <= n; ++j) {
            rows.push_back(Json{{"n", n}, {"j", j}, {"B", big(boxed_count(n, j))}});
          }
        }
      } else if (o.family == "catalan") {
        csv = "n,k,T\n";
        for (int n = 0; n <= o.max; ++n) {
          for (int k = 0; k <= n; ++k) {
            auto const t = catalan_triangle(n, k);
            csv += std::to_string(n) + "," + std::to_string(k) + "," + big(t) + "\n";
            rows.push_back(Json{{"n", n}, {"k", k}, {"T", big(t)}});
          }
        }
      } else if (o.family == "U") {
        csv = "n,k,U\n";
        for (int n = 1; n <= o.max; ++n) {
          for (int k = 0; 2 * k <= n; ++k) {
            auto const u = two_balanced_count(n, k);
            csv += std::to_string(n) + "," + std::to_string(k) + "," + big(u) + "\n";
            rows.push_back(Json{{"n", n}, {"k", k}, {"U", big(u)}});
          }
        }
      } else {
        throw UsageError("unknown table '" + o.family + "' (bBr-sizes, Bnj, catalan, U)");
      }
      if (o.json) {
        out << rows.dump(2) << '\n';
      } else {
        out << csv;
      }
      return 0;
    }

    int cmd_render(Options const& o, std::ostream& out) {
      auto format = parse_render_format(o.format);
      if (!format) {
        throw UsageError("unknown format '" + o.format + "' (text, svg)");
      }
      std::optional<int> n = o.n > 0 ? std::optional<int>(o.n) : std::nullopt;
      std::string        body;
      if (is_ramified_text(o.elem)) {
        body = render(Ramified::parse(o.elem, n), *format);
      } else {
        body = render(Diagram::parse(o.elem, n), *format);
      }
      if (o.json) {
        out << Json{{"format", o.format}, {"output", body}}.dump(2) << '\n';
      } else {
        out << body;
      }
      return 0;
    }

    int cmd_word_eq(Options const& o, std::ostream& out) {
      auto p = parse_presentation_name(o.family);
      if (!p) {
        throw UsageError("unknown family '" + o.family + "'");
      }
      if (o.positional.size() != 2) {
        throw UsageError("word-eq needs exactly two words");
      }
      bool const eq = word_equal(*p, o.n, parse_word(o.positional[0]), parse_word(o.positional[1]));
      if (o.json) {
        out << Json{{"family", o.family}, {"n", o.n}, {"equal", eq}}.dump(2) << '\n';
      } else {
        out << (eq ? "equal" : "not equal") << '\n';
      }
      return 0;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition, Brauer and ramified monoids: sizes, closures, presentations"};
    app.name("tiedmon");
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON");

    auto* count = app.add_subcommand("count", "Size of a family by its closed formula");
    count->add_option("family", o.family, "S J Br P LP DP RS RBr RJ bBr tJ bJ")->required();
    count->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(0, 256));

    auto* clos = app.add_subcommand("closure", "Enumerate a generated monoid");
    clos->add_option("family", o.family, "S J Br RS RBr bBr bJ tJ");
    clos->add_option("--gens", o.gens, "Generator word, e.g. \"s1 t1 e1\"");
    clos->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(1, 64));
    clos->add_option("--limit", o.limit, "Element budget");
    clos->add_option("--cache-dir", o.cache_dir, "Cache directory (else TIEDMON_CACHE_DIR)");
    clos->add_flag("--no-cache", o.no_cache, "Bypass the cache");
    clos->add_flag("--dump", o.dump, "Print the full table as JSON");

    auto* verify = app.add_subcommand("verify", "Check a presentation's relations");
    verify->add_option("presentation", o.family, "Sn Jn Brn Pn DPn TSn Qn Wn tJn")->required();
    verify->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(1, 12));

    auto* nf = app.add_subcommand("nf", "Normal form or factorization of an element");
    nf->add_option("monoid", o.family, "Br P RBr bBr tJ")->required();
    nf->add_option("--elem", o.elem, "Element text (a word for tJ)")->required();
    nf->add_option("--n", o.n, "Degree");

    auto* product = app.add_subcommand("product", "Concatenation product of two elements");
    product->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(0, 256));
    product->add_option("elems", o.positional, "Two elements")->expected(2);

    auto* table = app.add_subcommand("table", "Print a counting table");
    table->add_option("name", o.family, "bBr-sizes Bnj catalan U")->required();
    table->add_option("--max", o.max, "Largest n")->required()->check(CLI::Range(0, 200));

    auto* rend = app.add_subcommand("render", "Draw an element");
    rend->add_option("--format", o.format, "text or svg");
    rend->add_option("--n", o.n, "Degree");
    rend->add_option("elem", o.elem, "Element text")->required();

    auto* weq = app.add_subcommand("word-eq", "Decide equality of two words");
    weq->add_option("family", o.family, "Qn Wn tJn TSn Brn Sn Jn Pn DPn")->required();
    weq->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(1, 64));
    weq->add_option("words", o.positional, "Two words")->expected(2);

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
      sub->add_flag("--json", o.json, "Emit JSON");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (count->parsed()) {
        return cmd_count(o, out);
      }
      if (clos->parsed()) {
        if (o.family.empty() == o.gens.empty()) {
          throw UsageError("closure needs either a family or --gens");
        }
        return cmd_closure(o, out, err);
      }
      if (verify->parsed()) {
        return cmd_verify(o, out);
      }
      if (nf->parsed()) {
        return cmd_nf(o, out);
      }
      if (product->parsed()) {
        return cmd_product(o, out);
      }
      if (table->parsed()) {
        return cmd_table(o, out);
      }
      if (rend->parsed()) {
        return cmd_render(o, out);
      }
      if (weq->parsed()) {
        return cmd_word_eq(o, out);
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (MalformedInput const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (BudgetExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    return 2;
  }

}  // namespace tiedmon
