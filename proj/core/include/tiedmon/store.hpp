#ifndef TIEDMON_STORE_HPP_
#define TIEDMON_STORE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiedmon/serialize.hpp"

namespace tiedmon {

  // 64-bit FNV-1a, printed as 16 hex digits.
  std::uint64_t fnv1a(std::string_view data);
  std::string   hex64(std::uint64_t v);

  struct CacheKey {
    std::string family;
    int         n = 0;
    std::string fingerprint;  // over generator labels and generator values
    int         version = kFormatVersion;

    std::string file_name() const;
    Json        to_json() const;

    friend bool operator==(CacheKey const&, CacheKey const&) = default;
  };

  template <typename T>
  std::string generator_fingerprint(std::vector<Labelled<T>> const& gens) {
    std::string text;
    for (auto const& g : gens) {
      text += g.label;
      text += '=';
      text += g.value.to_string();
      text += '\n';
    }
    return hex64(fnv1a(text));
  }

  // TIEDMON_CACHE_DIR if set, else $XDG_CACHE_HOME/tiedmon, else
  // $HOME/.cache/tiedmon, else ./.tiedmon-cache.
  std::filesystem::path default_cache_dir();

  // A directory of checksummed JSON entries. Readers never see partial
  // writes: entries are written to a temporary file and renamed in place.
  class Store {
   public:
    using Warn = std::function<void(std::string const&)>;

    explicit Store(std::filesystem::path dir, Warn warn = {});

    std::filesystem::path const& dir() const noexcept {
      return dir_;
    }
    std::filesystem::path path_for(CacheKey const& key) const;

    // Missing, corrupt or mismatched entries read as absent; the latter two
    // trigger a warning.
    std::optional<Json> get(CacheKey const& key) const;
    void                put(CacheKey const& key, Json const& payload) const;

   private:
    std::filesystem::path dir_;
    Warn                  warn_;
  };

  std::optional<MonoidTable<Diagram>>  store_get_diagrams(Store const& s, CacheKey const& key);
  std::optional<MonoidTable<Ramified>> store_get_ramified(Store const& s, CacheKey const& key);
  void store_put(Store const& s, CacheKey const& key, MonoidTable<Diagram> const& t);
  void store_put(Store const& s, CacheKey const& key, MonoidTable<Ramified> const& t);

}  // namespace tiedmon

#endif  // TIEDMON_STORE_HPP_
