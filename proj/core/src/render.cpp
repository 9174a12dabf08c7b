#include "tiedmon/render.hpp"

#include <algorithm>
#include <sstream>

namespace tiedmon {

  namespace {

    constexpr int kStep   = 40;
    constexpr int kTopY   = 30;
    constexpr int kBotY   = 130;
    constexpr int kHeight = 160;

    std::string label(int signed_point) {
      return signed_point > 0 ? std::to_string(signed_point)
                              : std::to_string(-signed_point) + "'";
    }

    void text_blocks(std::ostringstream& out, Diagram const& d) {
      for (auto const& block : d.signed_blocks()) {
        auto const tops = std::count_if(block.begin(), block.end(), [](int x) { return x > 0; });
        char const* kind = "block";
        if (block.size() == 2) {
          kind = tops == 1 ? "line" : tops == 2 ? "up" : "down";
        }
        out << kind;
        for (int x : block) {
          out << ' ' << label(x);
        }
        out << '\n';
      }
    }

    int x_of(int signed_point) {
      return kStep * (signed_point > 0 ? signed_point : -signed_point);
    }

    void svg_open(std::ostringstream& out, int n) {
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
          << kStep * (n + 1) << "\" height=\"" << kHeight << "\">\n";
      for (int k = 1; k <= n; ++k) {
        out << "  <circle class=\"point\" cx=\"" << kStep * k << "\" cy=\"" << kTopY
            << "\" r=\"3\"/>\n";
        out << "  <circle class=\"point\" cx=\"" << kStep * k << "\" cy=\"" << kBotY
            << "\" r=\"3\"/>\n";
      }
    }

    void svg_block(std::ostringstream& out, std::vector<int> const& block) {
      std::vector<int> top;
      std::vector<int> bot;
      for (int x : block) {
        (x > 0 ? top : bot).push_back(x);
      }
      std::sort(top.begin(), top.end());
      std::sort(bot.begin(), bot.end(), [](int a, int b) { return a > b; });  // -1 before -2
      auto arcs = [&](std::vector<int> const& row, int y, int bend) {
        for (std::size_t p = 0; p + 1 < row.size(); ++p) {
          int const x1 = x_of(row[p]);
          int const x2 = x_of(row[p + 1]);
          out << "  <path class=\"arc\" d=\"M " << x1 << ' ' << y << " Q "
              << (x1 + x2) / 2 << ' ' << y + bend * (10 + (x2 - x1) / 4) << ' ' << x2 << ' ' << y
              << "\" fill=\"none\" stroke=\"black\"/>\n";
        }
      };
      arcs(top, kTopY, 1);
      arcs(bot, kBotY, -1);
      if (!top.empty() && !bot.empty()) {
        out << "  <line class=\"" << "line" << "\" x1=\""
            << x_of(top.front()) << "\" y1=\"" << kTopY << "\" x2=\"" << x_of(bot.front())
            << "\" y2=\"" << kBotY << "\" stroke=\"black\"/>\n";
      }
    }

    // The R-blocks of a that contain more than one I-block, each given by
    // the leftmost point of every I-block inside it.
    std::vector<std::vector<int>> tie_groups(Ramified const& a) {
      auto const&                   ip = a.I().partition();
      auto const&                   rp = a.R().partition();
      int const                     n  = a.degree();
      std::vector<std::vector<int>> groups(rp.block_count());
      std::vector<bool>             seen(ip.block_count(), false);
      for (int p = 0; p < 2 * n; ++p) {
        int const b = ip.block_of(p);
        if (!seen[b]) {
          seen[b] = true;
          groups[rp.block_of(p)].push_back(p < n ? p + 1 : -(p - n + 1));
        }
      }
      std::vector<std::vector<int>> out;
      for (auto& g : groups) {
        if (g.size() > 1) {
          out.push_back(std::move(g));
        }
      }
      return out;
    }

  }  // namespace

  std::optional<RenderFormat> parse_render_format(std::string_view name) {
    if (name == "text") {
      return RenderFormat::text;
    }
    if (name == "svg") {
      return RenderFormat::svg;
    }
    return std::nullopt;
  }

  std::string render(Diagram const& d, RenderFormat format) {
    std::ostringstream out;
    if (format == RenderFormat::text) {
      out << "n " << d.degree() << '\n';
      text_blocks(out, d);
      return out.str();
    }
    svg_open(out, d.degree());
    for (auto const& block : d.signed_blocks()) {
      svg_block(out, block);
    }
    out << "</svg>\n";
    return out.str();
  }

  std::string render(Ramified const& a, RenderFormat format) {
    std::ostringstream out;
    auto const         ties = tie_groups(a);
    if (format == RenderFormat::text) {
      out << "n " << a.degree() << '\n';
      text_blocks(out, a.I());
      for (auto const& g : ties) {
        out << "tie";
        for (int x : g) {
          out << ' ' << label(x);
        }
        out << '\n';
      }
      return out.str();
    }
    svg_open(out, a.degree());
    for (auto const& block : a.I().signed_blocks()) {
      svg_block(out, block);
    }
    for (auto const& g : ties) {
      for (std::size_t p = 0; p + 1 < g.size(); ++p) {
        int const x1 = x_of(g[p]);
        int const y1 = g[p] > 0 ? kTopY : kBotY;
        int const x2 = x_of(g[p + 1]);
        int const y2 = g[p + 1] > 0 ? kTopY : kBotY;
        out << "  <path class=\"tie\" d=\"M " << x1 << ' ' << y1 << " L " << x2 << ' ' << y2
            << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
      }
    }
    out << "</svg>\n";
    return out.str();
  }

}  // namespace tiedmon
