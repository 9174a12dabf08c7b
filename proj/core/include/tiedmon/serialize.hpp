#ifndef TIEDMON_SERIALIZE_HPP_
#define TIEDMON_SERIALIZE_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "tiedmon/closure.hpp"
#include "tiedmon/diagram.hpp"
#include "tiedmon/presentation.hpp"
#include "tiedmon/ramified.hpp"
#include "tiedmon/set_partition.hpp"
#include "tiedmon/tied_jones.hpp"
#include "tiedmon/word.hpp"

namespace tiedmon {

  using Json = nlohmann::json;

  // Bumped whenever a stored layout changes.
  inline constexpr int kFormatVersion = 1;

  // {"m": 4, "blocks": [[1, 3], [2], [4]]}
  Json         to_json(SetPartition const& p);
  SetPartition partition_from_json(Json const& j);

  // {"n": 2, "blocks": [[1, -1], [2, -2]]}, -k for the bottom point k'.
  Json    to_json(Diagram const& d);
  Diagram diagram_from_json(Json const& j);

  // {"n": 2, "I": <diagram>, "R": <diagram>}
  Json     to_json(Ramified const& a);
  Ramified ramified_from_json(Json const& j);

  Json to_json(Word const& w);
  Word word_from_json(Json const& j);

  Json     to_json(FWord const& f);
  FWord    fword_from_json(Json const& j);
  Json     to_json(TJNormal const& nf);
  TJNormal tjnormal_from_json(Json const& j);

  // {"format_version", "kind", "n", "labels", "elements" (text form),
  //  "edges"}.
  Json                  to_json(MonoidTable<Diagram> const& t);
  Json                  to_json(MonoidTable<Ramified> const& t);
  MonoidTable<Diagram>  diagram_table_from_json(Json const& j);
  MonoidTable<Ramified> ramified_table_from_json(Json const& j);

  // [{"label", "indices", "derived", "status", "lhs", "rhs", "lhs_image",
  //   "rhs_image"}, ...]
  Json to_json(VerificationReport const& r);

}  // namespace tiedmon

#endif  // TIEDMON_SERIALIZE_HPP_
