#ifndef TIEDMON_RENDER_HPP_
#define TIEDMON_RENDER_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "tiedmon/diagram.hpp"
#include "tiedmon/ramified.hpp"

namespace tiedmon {

  enum class RenderFormat { text, svg };

  std::optional<RenderFormat> parse_render_format(std::string_view name);

  // Text: one line per block ("line 1 1'", "up 2 3", "down 2' 3'",
  // "block 1 2 1'") and, for ramified partitions, one "tie" line per R-block
  // joining several I-blocks.
  //
  // SVG 1.1: top row at y = 30, bottom row at y = 130. Each block is drawn
  // as arcs between neighbouring points of a row plus one vertical line
  // from its leftmost top point to its leftmost bottom point. Ties are
  // dashed paths with class "tie".
  std::string render(Diagram const& d, RenderFormat format);
  std::string render(Ramified const& a, RenderFormat format);

}  // namespace tiedmon

#endif  // TIEDMON_RENDER_HPP_
