#include "quandle/catalog_cache.hpp"

#include "quandle/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <system_error>

namespace quandle {

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, int order)
{
    return dir / ("census-v" + std::to_string(kCatalogCacheVersion) + "-order" + std::to_string(order) + ".json");
}

std::optional<std::vector<FiniteQuandle>> load(const std::filesystem::path& file, int order)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (j.value("version", -1) != kCatalogCacheVersion || j.value("order", -1) != order)
            return std::nullopt;
        auto level = catalog_from_json(j.at("quandles"));
        for (const auto& q : level)
            if (q.order() != order)
                return std::nullopt;
        return level;
    }
    catch (const std::exception&) {
        return std::nullopt;
    }
}

void store(const std::filesystem::path& dir, int order, const std::vector<FiniteQuandle>& level)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        return;
    const auto target = cache_file(dir, order);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        Json j = {{"version", kCatalogCacheVersion}, {"order", order}, {"quandles", catalog_to_json(level)}};
        out << j.dump() << '\n';
        if (!out)
            return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

} // namespace

std::optional<std::filesystem::path> default_cache_dir()
{
    const char* dir = std::getenv("QUANDLE_CACHE_DIR");
    if (!dir || !*dir)
        return std::nullopt;
    return std::filesystem::path(dir);
}

std::vector<FiniteQuandle> cached_catalog(int max_order, const EnumerateOptions& options,
    const std::optional<std::filesystem::path>& dir)
{
    if (max_order > options.bound)
        throw BoundExceeded(max_order, options.bound);
    std::vector<FiniteQuandle> out;
    for (int n = 1; n <= max_order; ++n) {
        std::optional<std::vector<FiniteQuandle>> level;
        if (dir)
            level = load(cache_file(*dir, n), n);
        if (!level) {
            level = enumerate_quandles(n, true, options);
            if (dir)
                store(*dir, n, *level);
        }
        out.insert(out.end(), level->begin(), level->end());
    }
    return out;
}

} // namespace quandle
