#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace clarke::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

/// Everything needed to replay a command bit-exactly.
struct RunManifest {
    std::vector<std::string> command_line;
    nlohmann::json config = nlohmann::json::object();
    std::vector<std::uint64_t> seeds;
    std::map<std::string, std::string> design_hashes;  ///< name -> sha256 of canonical JSON
    std::vector<std::filesystem::path> outputs;

    /// Output paths are stored relative to `base` with their sha256, sorted.
    [[nodiscard]] nlohmann::json to_json(const std::filesystem::path& base) const;
    void write(const std::filesystem::path& path, const std::filesystem::path& base) const;
};

}  // namespace clarke::cli
