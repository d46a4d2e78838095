#include "multigrad/cache.hpp"

#include <fstream>

#include <json.hpp>

namespace multigrad {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

StrandDimsCache::StrandDimsCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path StrandDimsCache::path_for(const std::string& key) const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return dir_ / (std::string(buf) + ".json");
}

std::optional<std::vector<std::size_t>> StrandDimsCache::load(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // damaged entry, treated as a miss
    }
    if (!j.is_object() || j.value("key", "") != key || !j.contains("dims")) return std::nullopt;
    std::vector<std::size_t> dims;
    for (const auto& d : j["dims"]) dims.push_back(d.get<std::size_t>());
    return dims;
}

void StrandDimsCache::store(const std::string& key, const std::vector<std::size_t>& dims) const {
    std::lock_guard<std::mutex> lock(mu_);
    nlohmann::json j;
    j["schema"] = "multigrad/strand-dims/1";
    j["key"] = key;
    j["dims"] = dims;
    std::filesystem::path final_path = path_for(key);
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, final_path);
}

}  // namespace multigrad
