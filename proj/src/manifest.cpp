#include "scoreplus/manifest.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "scoreplus/graph.hpp"

namespace scoreplus {

std::string sha256_hex(std::string_view data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

void RunManifest::set(const std::string& key, const std::string& value) {
    if (key.empty() || key.find_first_of(" =\n#") != std::string::npos) {
        throw std::invalid_argument("invalid manifest key '" + key + "'");
    }
    if (value.find('\n') != std::string::npos) throw std::invalid_argument("manifest values must be single-line");
    entries_[key] = value;
}

void RunManifest::set(const std::string& key, double value) {
    std::ostringstream os;
    os << std::setprecision(17) << value;
    set(key, os.str());
}

void RunManifest::set(const std::string& key, long long value) { set(key, std::to_string(value)); }

const std::string& RunManifest::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw std::out_of_range("manifest has no key '" + key + "'");
    return it->second;
}

std::string RunManifest::serialize() const {
    std::ostringstream os;
    os << "# scoreplus run manifest\n";
    for (const auto& [k, v] : entries_) os << k << " = " << v << '\n';
    return os.str();
}

RunManifest RunManifest::parse(std::string_view text) {
    RunManifest m;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) throw ParseError("expected `key = value`", lineno);
        m.set(line.substr(0, eq), line.substr(eq + 3));
    }
    return m;
}

}  // namespace scoreplus
