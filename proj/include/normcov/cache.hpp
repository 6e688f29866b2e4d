#ifndef NORMCOV_CACHE_HPP
#define NORMCOV_CACHE_HPP

// Content-addressed directory of previously computed outputs.

#include <filesystem>
#include <optional>
#include <string>

#include "normcov/serialize.hpp"

namespace normcov {

/// 64-bit FNV-1a of the text, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string &text);

class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir, std::string version = kToolkitVersion);

  /// Stable fingerprint of a request description (subcommand, degree, pool,
  /// constraints, format); the toolkit version is folded in.
  std::string fingerprint(const Json &key) const;
  std::filesystem::path entry_path(const Json &key) const;

  /// Stored output for the key, or nullopt when absent, unreadable, written
  /// by another toolkit version, or recorded under a different key.
  std::optional<std::string> load(const Json &key) const;
  void store(const Json &key, const std::string &payload) const;

private:
  std::filesystem::path dir_;
  std::string version_;
};

} // namespace normcov

#endif
