#pragma once

#include "quandle/finite_quandle.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace quandle {

/// Bumped whenever the enumeration or its output format changes, so stale
/// cache files are ignored.
inline constexpr int kCatalogCacheVersion = 1;

/// The directory named by QUANDLE_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> default_cache_dir();

/// quandle_catalog(max_order), with one file per order kept under `dir`.
/// Unreadable or mismatching files are recomputed and rewritten; without a
/// directory nothing touches the disk.
std::vector<FiniteQuandle> cached_catalog(int max_order, const EnumerateOptions& options = {},
    const std::optional<std::filesystem::path>& dir = default_cache_dir());

} // namespace quandle
