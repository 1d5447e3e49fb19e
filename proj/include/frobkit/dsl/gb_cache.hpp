#ifndef FROBKIT_DSL_GB_CACHE_HPP
#define FROBKIT_DSL_GB_CACHE_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "frobkit/groebner.hpp"

namespace frobkit::dsl {

/// Reduced bases persisted as one JSON file per generating set under
/// <workspace>/gbcache/<sha256>.json. Unreadable entries are misses.
class DiskGbStore : public GbStore {
   public:
    static constexpr int format_version = 1;

    /// Creates the cache directory. Warnings go to `warnings`.
    DiskGbStore(const std::filesystem::path& workspace, std::ostream& warnings);

    std::optional<std::vector<Polynomial>> load(const RingPtr& ring, std::span<const Polynomial> generators) override;
    void save(const RingPtr& ring, std::span<const Polynomial> generators, const ReducedGB& gb) override;

    /// Hex SHA-256 of the canonical text of (version, p, variables, order, sorted generators).
    static std::string key(const RingPtr& ring, std::span<const Polynomial> generators, int version = format_version);

    std::filesystem::path entry_path(const std::string& key) const { return directory_ / (key + ".json"); }

    std::size_t hits() const noexcept { return hits_; }
    std::size_t misses() const noexcept { return misses_; }

   private:
    std::filesystem::path directory_;
    std::ostream& warnings_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

}  // namespace frobkit::dsl

#endif
