#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descent/descent_algebra.hpp"

namespace descent {

inline constexpr int kCacheVersion = 1;
inline constexpr const char* kCacheDirEnv = "DESCENT_CACHE_DIR";

/// What is persisted per Cartan type.
struct CacheEntry {
  int schema_version = kCacheVersion;
  std::string type_label;
  std::uint64_t group_order = 0;
  int rank = 0;
  std::vector<StructureConstants::Triple> triples;
  /// Shape classes as lists of subset bitmasks.
  std::vector<std::vector<std::uint32_t>> shapes;
  std::uint64_t checksum = 0;

  bool operator==(const CacheEntry&) const = default;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

CacheEntry make_entry(const DescentAlgebra& a);

/// Serialized form, checksum line included.
std::string serialize(const CacheEntry& e);
/// Throws CorruptCache on malformed or truncated input or a bad checksum.
/// Returns nullopt when the file was written by another schema version.
std::optional<CacheEntry> deserialize(std::string_view text);

/// $DESCENT_CACHE_DIR, else $XDG_CACHE_HOME/descent, else ~/.cache/descent.
std::filesystem::path default_cache_dir();
/// One file per type, e.g. "E6.dcache"; characters outside [A-Za-z0-9] map to '_'.
std::filesystem::path cache_file(const std::filesystem::path& dir, std::string_view type_label);

/// Write-then-rename.
void cache_store(const std::filesystem::path& dir, const CacheEntry& e);
/// nullopt when absent or of another version; throws CorruptCache.
std::optional<CacheEntry> cache_load(const std::filesystem::path& dir, std::string_view type_label);

struct CacheOptions {
  bool enabled = true;
  std::filesystem::path dir = default_cache_dir();
  /// Receives warnings (corrupt entries, unwritable directory); may be null.
  std::ostream* warnings = nullptr;
};

/// How the algebra was obtained.
enum class CacheOutcome { Disabled, Hit, Miss, Recomputed };

/// The descent algebra of `system`, through the cache.  A corrupt entry or
/// one that does not match the system is recomputed and overwritten.
AlgebraPtr load_or_build(const SystemPtr& system, const CacheOptions& options, CacheOutcome* outcome = nullptr);

}  // namespace descent
