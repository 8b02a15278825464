#pragma once

// One JSON file per canonical representation key. Writes go to a temporary
// file that is renamed into place, so readers never see a partial entry.

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>

#include "sl2hilb/cli/hilbert_result.hpp"

namespace sl2hilb::cli {

class ResultCache {
 public:
  /// Bump when the stored layout changes; older entries are then ignored.
  static constexpr int kCacheVersion = 1;
  static constexpr const char* kEnvVar = "SL2HILB_CACHE_DIR";

  explicit ResultCache(std::filesystem::path dir);
  /// The directory named by SL2HILB_CACHE_DIR, if set and non-empty.
  static std::optional<ResultCache> from_environment();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(const repmodel::Representation& rep) const;

  /// Missing, unreadable, stale or mismatched entries all yield nullopt.
  std::optional<HilbertResult> load(const repmodel::Representation& rep) const;
  void store(const HilbertResult& r) const;

 private:
  std::filesystem::path dir_;
  std::shared_ptr<std::mutex> write_mutex_;
};

}  // namespace sl2hilb::cli
