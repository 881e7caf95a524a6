#pragma once

#include <map>
#include <string>
#include <string_view>

namespace scoreplus {

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::string& path);

/**
 * Run record written next to every CLI output, as `key = value` lines in
 * insertion-independent (sorted) order. Values are single-line strings;
 * `#` starts a comment line.
 */
class RunManifest {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, long long value);
    bool contains(const std::string& key) const { return entries_.contains(key); }
    const std::string& get(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

    std::string serialize() const;
    static RunManifest parse(std::string_view text);

private:
    std::map<std::string, std::string> entries_;
};

}  // namespace scoreplus
