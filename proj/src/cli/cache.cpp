#include "sl2hilb/cli/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace sl2hilb::cli {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)), write_mutex_(std::make_shared<std::mutex>()) {}

std::optional<ResultCache> ResultCache::from_environment() {
  const char* dir = std::getenv(kEnvVar);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ResultCache(dir);
}

fs::path ResultCache::entry_path(const repmodel::Representation& rep) const { return dir_ / (rep.key() + ".json"); }

std::optional<HilbertResult> ResultCache::load(const repmodel::Representation& rep) const {
  std::ifstream in(entry_path(rep));
  if (!in) return std::nullopt;
  try {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(in);
    if (j.value("cache_version", 0) != kCacheVersion || !j.contains("result")) return std::nullopt;
    HilbertResult r = from_json(j["result"]);
    if (!(r.rep == rep) || r.version != tool_version()) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const HilbertResult& r) const {
  static std::atomic<unsigned> counter{0};
  std::lock_guard lock(*write_mutex_);
  fs::create_directories(dir_);
  fs::path target = entry_path(r.rep);
  std::ostringstream name;
  name << '.' << target.filename().string() << '.' << ::getpid() << '.' << counter++ << ".tmp";
  fs::path tmp = dir_ / name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << nlohmann::ordered_json{{"cache_version", kCacheVersion}, {"result", to_json(r)}}.dump(2) << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace sl2hilb::cli
