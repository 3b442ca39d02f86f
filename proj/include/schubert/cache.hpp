#pragma once

// On-disk cache of computed tables, one file per (series, rank, kind).
//
// A file holds {format_version, key, checksum, metadata, payload}; the
// checksum is the CRC-32 of the canonical (sorted-key, compact) dump of the
// payload. Files whose JSON form exceeds kBinaryThreshold are written as an
// 8-byte little-endian length followed by the CBOR encoding of the same
// object. A format-version mismatch or a checksum mismatch is never reused.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "schubert/boxproduct.hpp"

namespace schubert {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr std::size_t kBinaryThreshold = 10u * 1024u * 1024u;

std::string crc32_hex(std::string_view bytes);

struct CacheKey {
    Series series;
    int rank;
    std::string kind; // "structure", "csm", "box"
    int format_version = kCacheFormatVersion;

    std::string stem() const; // e.g. "B2-structure"
};

class TableCache {
public:
    enum class Status { Hit, Miss, Stale, Corrupt };

    struct Entry {
        Status status = Status::Miss;
        nlohmann::json payload;
        nlohmann::json metadata;
        std::string checksum;
        std::string detail; // why a file was not reused
    };

    explicit TableCache(std::filesystem::path dir);
    const std::filesystem::path& dir() const { return dir_; }

    Entry load(const CacheKey& key) const;
    /// Writes the table and returns its checksum. Replaces any older file
    /// for the same key (in either encoding).
    std::string store(const CacheKey& key, const nlohmann::json& payload, const nlohmann::json& metadata) const;

    /// The exact bytes store() writes; *binary tells which encoding was used.
    static std::string encode(const CacheKey& key, const nlohmann::json& payload, const nlohmann::json& metadata,
                              bool* binary = nullptr);
    /// Inverse of encode; throws CacheCorrupt on malformed input.
    static nlohmann::json decode(const std::string& bytes, bool binary);

    std::filesystem::path json_path(const CacheKey& key) const;
    std::filesystem::path binary_path(const CacheKey& key) const;

private:
    std::filesystem::path dir_;
};

std::string_view status_name(TableCache::Status s);

/// Cache directory: the flag if given, else $CSMVERIFY_CACHE, else
/// $XDG_CACHE_HOME/csmverify, else ~/.cache/csmverify.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

nlohmann::json structure_to_json(const StructureTable& t);
StructureTable structure_from_json(const nlohmann::json& j);
nlohmann::json csm_to_json(const CsmTable& t);
CsmTable csm_from_json(const nlohmann::json& j);
nlohmann::json box_to_json(const BoxTable& t);
BoxTable box_from_json(const nlohmann::json& j);

} // namespace schubert
