#include "equikh/cache.hpp"

#include "equikh/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace equikh {

namespace {

// FNV-1a, two lanes for a 128-bit hex key; cache keys only, no security use
std::string fnv128_hex(const std::string& s) {
    uint64_t h1 = 1469598103934665603ull, h2 = 1099511628211ull ^ 0x9e3779b97f4a7c15ull;
    for (unsigned char c : s) {
        h1 = (h1 ^ c) * 1099511628211ull;
        h2 = (h2 ^ (c + 0x9e)) * 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h1 << h2;
    return os.str();
}

} // namespace

std::string ResultCache::key_of(const std::string& operation, const std::string& params) {
    return fnv128_hex(std::string(kEngineVersion) + "|" + operation + "|" + params);
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    std::string body = ss.str();
    // corruption check: must parse as JSON
    try {
        auto j = nlohmann::json::parse(body);
        (void)j;
    } catch (...) {
        return std::nullopt;
    }
    return body;
}

void ResultCache::put(const std::string& key, const std::string& value) const {
    std::filesystem::create_directories(dir_);
    std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
    std::ofstream out(p);
    out << value;
}

} // namespace equikh
