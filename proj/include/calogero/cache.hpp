// Content-addressed on-disk cache for eigen records and f-expansions.
// Entries live at <dir>/<aa>/<digest>.json where digest is the SHA-256 of
// the key material; writes go through a temporary file and a rename.
#pragma once

#include "calogero/cbasis.hpp"
#include "calogero/serialize.hpp"
#include "calogero/spectra.hpp"

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace calogero {

inline constexpr int kCacheSchema = 1;

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir);

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }

  static std::string record_material(const ModelParams& params, const Label& n, Method method);
  static std::string f_material(const Rational& lambda, const Label& n);

  /// Returns the stored value only when the file exists, parses, and carries
  /// the same schema version and digest. Unreadable or malformed entries are
  /// reported through warnings() and treated as misses.
  std::optional<Json> get(const std::string& material);
  /// Throws std::runtime_error naming the path on IO failure.
  void put(const std::string& material, const Json& value);

  std::optional<EigenRecord> get_record(const ModelParams& params, const Label& n, Method method);
  void put_record(const EigenRecord& rec);

  [[nodiscard]] std::filesystem::path path_for(const std::string& digest) const;
  /// Drains the accumulated corruption and IO warnings.
  std::vector<std::string> take_warnings();
  void warn(std::string message);

private:
  std::filesystem::path dir_;
  std::mutex mutex_;
  std::vector<std::string> warnings_;
};

/// Persists f-expansions through a ResultCache.
class CachedFExpansions : public FExpansionStore {
public:
  explicit CachedFExpansions(ResultCache& cache) : cache_(cache) {}
  std::optional<SymPoly> load(const Rational& lambda, const Label& n) override;
  void store(const Rational& lambda, const Label& n, const SymPoly& f) override;

private:
  ResultCache& cache_;
};

}  // namespace calogero
