#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cnat/records.hpp"

namespace cnat {

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON file of computed counts keyed by (quantity, n, source, code version).
/// Entries written by a different code version are kept on disk but never
/// returned.
class CountsCache {
public:
    /// Hash identifying the enumeration code that produced an entry.
    static std::string code_version();

    /// Loads `path` if it exists. Throws CacheError if it cannot be parsed.
    explicit CountsCache(std::filesystem::path path);

    const std::filesystem::path& path() const noexcept { return path_; }

    std::optional<mpz_class> get(Quantity q, int n, Source s) const;
    void put(Quantity q, int n, Source s, const mpz_class& value);

    /// Writes to a temporary file next to path() and renames it into place.
    void save() const;

private:
    struct Entry {
        Quantity quantity;
        int n;
        Source source;
        std::string version;
        mpz_class value;
    };

    std::filesystem::path path_;
    std::vector<Entry> entries_;
};

}  // namespace cnat
