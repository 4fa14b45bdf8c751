#pragma once

#include <optional>
#include <string>

namespace equikh {

// Content-addressed JSON result cache on disk. Keys hash the operation
// name, its parameters, the schema and engine version; values are the
// serialized results. Corrupt entries read as misses.
class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    static std::string key_of(const std::string& operation, const std::string& params);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

private:
    std::string dir_;
};

} // namespace equikh
