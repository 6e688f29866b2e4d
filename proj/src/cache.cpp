#include "normcov/cache.hpp"

#include <fstream>
#include <sstream>

namespace normcov {

std::string fnv1a_hex(const std::string &text) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char *digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4)
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::string ResultCache::fingerprint(const Json &key) const {
  return fnv1a_hex(version_ + '\n' + key.dump());
}

std::filesystem::path ResultCache::entry_path(const Json &key) const {
  return dir_ / (fingerprint(key) + ".json");
}

std::optional<std::string> ResultCache::load(const Json &key) const {
  std::ifstream in(entry_path(key));
  if (!in)
    return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const Json entry = Json::parse(buf.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object())
    return std::nullopt;
  if (entry.value("toolkit", "") != version_ || entry.value("key", Json()) != key ||
      !entry.contains("payload") || !entry.at("payload").is_string())
    return std::nullopt;
  return entry.at("payload").get<std::string>();
}

void ResultCache::store(const Json &key, const std::string &payload) const {
  std::filesystem::create_directories(dir_);
  const Json entry{{"toolkit", version_}, {"key", key}, {"payload", payload}};
  const auto path = entry_path(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

} // namespace normcov
