#include "tiedmon/store.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "tiedmon/error.hpp"

namespace tiedmon {

  std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
  }

  std::string CacheKey::file_name() const {
    return family + "-n" + std::to_string(n) + "-" + fingerprint + "-v" + std::to_string(version)
           + ".json";
  }

  Json CacheKey::to_json() const {
    return Json{{"family", family}, {"n", n}, {"fingerprint", fingerprint}, {"version", version}};
  }

  std::filesystem::path default_cache_dir() {
    if (char const* dir = std::getenv("TIEDMON_CACHE_DIR"); dir && *dir) {
      return dir;
    }
    if (char const* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
      return std::filesystem::path(xdg) / "tiedmon";
    }
    if (char const* home = std::getenv("HOME"); home && *home) {
      return std::filesystem::path(home) / ".cache" / "tiedmon";
    }
    return ".tiedmon-cache";
  }

  Store::Store(std::filesystem::path dir, Warn warn) : dir_(std::move(dir)), warn_(std::move(warn)) {
    if (!warn_) {
      warn_ = [](std::string const& msg) { std::cerr << "warning: " << msg << '\n'; };
    }
  }

  std::filesystem::path Store::path_for(CacheKey const& key) const {
    return dir_ / key.file_name();
  }

  std::optional<Json> Store::get(CacheKey const& key) const {
    auto const    path = path_for(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return std::nullopt;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto entry = Json::parse(buf.str());
      if (entry.at("key") != key.to_json()) {
        warn_("cache entry " + path.string() + " has a different key; ignoring it");
        return std::nullopt;
      }
      auto const& payload = entry.at("payload");
      if (entry.at("checksum").get<std::string>() != hex64(fnv1a(payload.dump()))) {
        warn_("cache entry " + path.string() + " failed its checksum; ignoring it");
        return std::nullopt;
      }
      return std::optional<Json>(std::in_place, payload);
    } catch (Json::exception const& e) {
      warn_("cache entry " + path.string() + " is corrupt (" + e.what() + "); ignoring it");
      return std::nullopt;
    }
  }

  void Store::put(CacheKey const& key, Json const& payload) const {
    static std::atomic<unsigned> counter{0};
    std::error_code              ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
      throw DomainError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    }
    Json const entry{{"key", key.to_json()},
                     {"checksum", hex64(fnv1a(payload.dump()))},
                     {"payload", payload}};
    auto const target = path_for(key);
    auto const tmp    = dir_ / (key.file_name() + ".tmp." + std::to_string(::getpid()) + "."
                             + std::to_string(counter++));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << entry.dump();
      if (!out.flush()) {
        throw DomainError("cannot write cache entry " + tmp.string());
      }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp);
      throw DomainError("cannot install cache entry " + target.string() + ": " + ec.message());
    }
  }

  namespace {

    template <typename T, typename FromJson>
    std::optional<MonoidTable<T>> get_table(Store const& s, CacheKey const& key, FromJson from) {
      auto payload = s.get(key);
      if (!payload) {
        return std::nullopt;
      }
      try {
        return from(*payload);
      } catch (Error const& e) {
        std::cerr << "warning: cache entry " << s.path_for(key).string()
                  << " does not decode (" << e.what() << "); ignoring it\n";
        return std::nullopt;
      }
    }

  }  // namespace

  std::optional<MonoidTable<Diagram>> store_get_diagrams(Store const& s, CacheKey const& key) {
    return get_table<Diagram>(s, key, diagram_table_from_json);
  }

  std::optional<MonoidTable<Ramified>> store_get_ramified(Store const& s, CacheKey const& key) {
    return get_table<Ramified>(s, key, ramified_table_from_json);
  }

  void store_put(Store const& s, CacheKey const& key, MonoidTable<Diagram> const& t) {
    s.put(key, to_json(t));
  }

  void store_put(Store const& s, CacheKey const& key, MonoidTable<Ramified> const& t) {
    s.put(key, to_json(t));
  }

}  // namespace tiedmon
