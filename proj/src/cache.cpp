#include "schubert/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <zlib.h>

namespace schubert {

using nlohmann::json;

std::string crc32_hex(std::string_view bytes)
{
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
    return buf;
}

std::string CacheKey::stem() const
{
    return std::string(1, series_letter(series)) + std::to_string(rank) + "-" + kind;
}

std::string_view status_name(TableCache::Status s)
{
    switch (s) {
    case TableCache::Status::Hit: return "hit";
    case TableCache::Status::Miss: return "miss";
    case TableCache::Status::Stale: return "stale";
    case TableCache::Status::Corrupt: return "corrupt";
    }
    return "?";
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::json_path(const CacheKey& key) const { return dir_ / (key.stem() + ".json"); }
std::filesystem::path TableCache::binary_path(const CacheKey& key) const { return dir_ / (key.stem() + ".cbor"); }

namespace {

json key_json(const CacheKey& key)
{
    return {{"series", std::string(1, series_letter(key.series))}, {"rank", key.rank}, {"kind", key.kind}};
}

std::optional<std::string> read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::string TableCache::encode(const CacheKey& key, const json& payload, const json& metadata, bool* binary)
{
    json doc = {{"format_version", key.format_version},
                {"key", key_json(key)},
                {"checksum", crc32_hex(payload.dump())},
                {"metadata", metadata},
                {"payload", payload}};
    std::string text = doc.dump();
    if (binary)
        *binary = text.size() > kBinaryThreshold;
    if (text.size() <= kBinaryThreshold)
        return text;
    auto cbor = json::to_cbor(doc);
    std::string out(8, '\0');
    std::uint64_t len = cbor.size();
    for (int b = 0; b < 8; ++b)
        out[b] = static_cast<char>((len >> (8 * b)) & 0xff);
    out.append(reinterpret_cast<const char*>(cbor.data()), cbor.size());
    return out;
}

json TableCache::decode(const std::string& bytes, bool binary)
{
    try {
        if (!binary)
            return json::parse(bytes);
        if (bytes.size() < 8)
            throw CacheCorrupt("truncated cache file");
        std::uint64_t len = 0;
        for (int b = 0; b < 8; ++b)
            len |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[b])) << (8 * b);
        if (len != bytes.size() - 8)
            throw CacheCorrupt("cache file length prefix does not match its size");
        return json::from_cbor(bytes.begin() + 8, bytes.end());
    } catch (const json::exception& e) {
        throw CacheCorrupt(std::string("unreadable cache file: ") + e.what());
    }
}

TableCache::Entry TableCache::load(const CacheKey& key) const
{
    Entry e;
    bool binary = false;
    auto bytes = read_file(json_path(key));
    if (!bytes) {
        bytes = read_file(binary_path(key));
        binary = true;
    }
    if (!bytes)
        return e;
    json doc;
    try {
        doc = decode(*bytes, binary);
    } catch (const CacheCorrupt& err) {
        e.status = Status::Corrupt;
        e.detail = err.what();
        return e;
    }
    if (!doc.is_object() || !doc.contains("format_version") || doc["format_version"] != key.format_version) {
        e.status = Status::Stale;
        e.detail = "format version mismatch";
        return e;
    }
    if (!doc.contains("payload") || !doc.contains("checksum") || doc.value("key", json()) != key_json(key)) {
        e.status = Status::Corrupt;
        e.detail = "missing fields or wrong key";
        return e;
    }
    const std::string actual = crc32_hex(doc["payload"].dump());
    if (doc["checksum"] != actual) {
        e.status = Status::Corrupt;
        e.detail = "checksum mismatch (stored " + doc["checksum"].dump() + ", computed \"" + actual + "\")";
        return e;
    }
    e.status = Status::Hit;
    e.checksum = actual;
    e.payload = std::move(doc["payload"]);
    e.metadata = doc.value("metadata", json::object());
    return e;
}

std::string TableCache::store(const CacheKey& key, const json& payload, const json& metadata) const
{
    std::filesystem::create_directories(dir_);
    bool binary = false;
    const std::string bytes = encode(key, payload, metadata, &binary);
    const auto target = binary ? binary_path(key) : json_path(key);
    std::filesystem::remove(binary ? json_path(key) : binary_path(key));
    // Write then rename so a concurrent reader never sees a partial file.
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out)
            throw Error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
    return crc32_hex(payload.dump());
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty())
        return *flag;
    if (const char* env = std::getenv("CSMVERIFY_CACHE"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "csmverify";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "csmverify";
    return std::filesystem::temp_directory_path() / "csmverify";
}

// ---------------------------------------------------------------------------
// Table payloads

json structure_to_json(const StructureTable& t)
{
    json entries = json::array();
    for (const auto& [w, c] : t.all_entries())
        entries.push_back({w, c});
    return {{"order", t.order()}, {"offsets", t.offsets()}, {"entries", std::move(entries)}};
}

StructureTable structure_from_json(const json& j)
{
    try {
        std::vector<StructureTable::Entry> entries;
        for (const auto& e : j.at("entries"))
            entries.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<Int>());
        return StructureTable(j.at("order").get<std::size_t>(), j.at("offsets").get<std::vector<std::size_t>>(),
                              std::move(entries));
    } catch (const json::exception& e) {
        throw CacheCorrupt(std::string("malformed structure table: ") + e.what());
    } catch (const InternalInvariantError& e) {
        throw CacheCorrupt(std::string("malformed structure table: ") + e.what());
    }
}

json csm_to_json(const CsmTable& t)
{
    return {{"order", t.order()},
            {"convention", std::string(convention_name(t.convention()))},
            {"csm", t.csm_entries()},
            {"segre", t.segre_entries()}};
}

CsmTable csm_from_json(const json& j)
{
    try {
        const auto conv = j.at("convention").get<std::string>();
        if (conv != "right" && conv != "left")
            throw CacheCorrupt("unknown CSM convention " + conv);
        return CsmTable(j.at("order").get<std::size_t>(), conv == "right" ? CsmConvention::Right : CsmConvention::Left,
                        j.at("csm").get<std::vector<Int>>(), j.at("segre").get<std::vector<Int>>());
    } catch (const json::exception& e) {
        throw CacheCorrupt(std::string("malformed CSM table: ") + e.what());
    } catch (const InternalInvariantError& e) {
        throw CacheCorrupt(std::string("malformed CSM table: ") + e.what());
    }
}

json box_to_json(const BoxTable& t)
{
    return {{"order", t.order()},
            {"chi", t.chi_entries()},
            {"triple_sum", t.triple_entries()},
            {"pairing", t.pairing_entries()},
            {"cross_checked", t.checked_flags()},
            {"richardson_sign_ok", t.sign_flags()}};
}

BoxTable box_from_json(const json& j)
{
    try {
        return BoxTable::from_parts(j.at("order").get<std::size_t>(), j.at("chi").get<std::vector<Int>>(),
                                    j.at("triple_sum").get<std::vector<Int>>(),
                                    j.at("pairing").get<std::vector<Int>>(),
                                    j.at("cross_checked").get<std::vector<std::uint8_t>>(),
                                    j.at("richardson_sign_ok").get<std::vector<std::uint8_t>>());
    } catch (const json::exception& e) {
        throw CacheCorrupt(std::string("malformed box table: ") + e.what());
    } catch (const InternalInvariantError& e) {
        throw CacheCorrupt(std::string("malformed box table: ") + e.what());
    }
}

} // namespace schubert
