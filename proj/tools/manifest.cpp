#include "manifest.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <memory>

#include <openssl/evp.h>

#include "clarke/csv.hpp"
#include "clarke/errors.hpp"

namespace clarke::cli {

std::string sha256_hex(std::string_view data)
{
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1
        || EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1
        || EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1)
        throw Error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string sha256_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path.string());
    const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return sha256_hex(content);
}

nlohmann::json RunManifest::to_json(const std::filesystem::path& base) const
{
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& p : outputs)
        files.emplace_back(std::filesystem::relative(p, base).generic_string(), sha256_file(p));
    std::sort(files.begin(), files.end());
    nlohmann::json out_list = nlohmann::json::array();
    for (const auto& [path, hash] : files)
        out_list.push_back({{"path", path}, {"sha256", hash}});
    return {{"tool", "clarke"},
            {"tool_version", kToolVersion},
            {"command_line", command_line},
            {"config", config},
            {"seeds", seeds},
            {"design_hashes", design_hashes},
            {"outputs", out_list}};
}

void RunManifest::write(const std::filesystem::path& path, const std::filesystem::path& base) const
{
    write_text_atomic(path, to_json(base).dump(2) + "\n");
}

}  // namespace clarke::cli
