#include "calogero/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace calogero {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

std::string ResultCache::record_material(const ModelParams& params, const Label& n, Method method) {
  std::ostringstream os;
  os << "schema=" << kCacheSchema << "\nkind=record\nmodel=" << to_string(params.model) << "\nN=" << params.N
     << "\nlambda=" << params.lambda << "\nmu=" << (params.mu ? params.mu->to_string() : "-")
     << "\nlabel=" << n.to_string() << "\nmethod=" << to_string(method) << "\n";
  return os.str();
}

std::string ResultCache::f_material(const Rational& lambda, const Label& n) {
  std::ostringstream os;
  os << "schema=" << kCacheSchema << "\nkind=f\nN=" << n.size() << "\nlambda=" << lambda << "\nlabel=" << n.to_string()
     << "\n";
  return os.str();
}

fs::path ResultCache::path_for(const std::string& digest) const {
  return dir_ / digest.substr(0, 2) / (digest + ".json");
}

void ResultCache::warn(std::string message) {
  std::lock_guard lock(mutex_);
  warnings_.push_back(std::move(message));
}

std::vector<std::string> ResultCache::take_warnings() {
  std::lock_guard lock(mutex_);
  return std::exchange(warnings_, {});
}

std::optional<Json> ResultCache::get(const std::string& material) {
  const std::string digest = sha256_hex(material);
  const fs::path path = path_for(digest);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    warn("cannot read cache entry " + path.string());
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const std::exception& e) {
    warn("corrupt cache entry " + path.string() + ": " + e.what());
    return std::nullopt;
  }
  if (!doc.is_object() || !doc.contains("value") || doc.value("schema", -1) != kCacheSchema ||
      doc.value("key", std::string()) != digest)
    return std::nullopt;
  return doc.at("value");
}

void ResultCache::put(const std::string& material, const Json& value) {
  static std::atomic<unsigned long> counter{0};
  const std::string digest = sha256_hex(material);
  const fs::path path = path_for(digest);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + path.parent_path().string() + ": " + ec.message());
  Json doc;
  doc["schema"] = kCacheSchema;
  doc["key"] = digest;
  doc["value"] = value;
  const fs::path tmp = path.parent_path() / (".tmp-" + digest + "-" + std::to_string(::getpid()) + "-" +
                                             std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << "\n";
    out.close();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot publish cache file " + path.string());
  }
}

std::optional<EigenRecord> ResultCache::get_record(const ModelParams& params, const Label& n, Method method) {
  const std::string material = record_material(params, n, method);
  auto value = get(material);
  if (!value) return std::nullopt;
  try {
    EigenRecord rec = record_from_json(*value);
    if (!(rec.params == params) || rec.label != n || rec.method != method) return std::nullopt;
    return rec;
  } catch (const std::exception& e) {
    warn("corrupt cache entry " + path_for(sha256_hex(material)).string() + ": " + e.what());
    return std::nullopt;
  }
}

void ResultCache::put_record(const EigenRecord& rec) {
  put(record_material(rec.params, rec.label, rec.method), record_json(rec));
}

std::optional<SymPoly> CachedFExpansions::load(const Rational& lambda, const Label& n) {
  const std::string material = ResultCache::f_material(lambda, n);
  auto value = cache_.get(material);
  if (!value) return std::nullopt;
  try {
    return poly_from_json(*value, n.size());
  } catch (const std::exception& e) {
    cache_.warn("corrupt cache entry " + cache_.path_for(sha256_hex(material)).string() + ": " + e.what());
    return std::nullopt;
  }
}

void CachedFExpansions::store(const Rational& lambda, const Label& n, const SymPoly& f) {
  try {
    cache_.put(ResultCache::f_material(lambda, n), poly_json(f));
  } catch (const std::exception& e) {
    cache_.warn(e.what());
  }
}

}  // namespace calogero
