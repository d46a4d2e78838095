#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace multigrad {

std::uint64_t fnv1a(const std::string& s);

// Disk-backed memo of strand-homology dimension vectors, keyed by a canonical
// (module, field, F, a) string. One JSON file per key; writes go through a
// temp file and an atomic rename. A pure memo: results must be identical with
// and without it.
class StrandDimsCache {
public:
    explicit StrandDimsCache(std::filesystem::path dir);

    std::optional<std::vector<std::size_t>> load(const std::string& key) const;
    void store(const std::string& key, const std::vector<std::size_t>& dims) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    mutable std::mutex mu_;

    std::filesystem::path path_for(const std::string& key) const;
};

}  // namespace multigrad
