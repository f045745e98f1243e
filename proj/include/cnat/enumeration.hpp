#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "cnat/cnat.hpp"

namespace cnat {

using CnatConsumer = std::function<void(const Cnat&)>;

/// Largest size accepted by enumerate_naive.
inline constexpr int kNaiveMaxN = 5;

/// Definition-level oracle: tries every (2n-1)-subset of cells containing the
/// root and emits those that validate, in lexicographic order of dot sets.
/// Throws std::out_of_range unless 1 <= n <= kNaiveMaxN.
std::uint64_t enumerate_naive(int n, const CnatConsumer& consumer);

/// Calls fn for each k-subset of {first..last} in lexicographic order.
void for_each_subset(int first, int last, int k, const std::function<void(const std::vector<int>&)>& fn);

/// Constructive generator through compose(). Lists for sizes up to the cache
/// ceiling are built once at construction; larger sizes are streamed. After
/// construction the object is read-only and may be shared between threads.
class Enumerator {
public:
    static constexpr int kDefaultCacheCeiling = 6;

    /// Prepares for sizes up to max_n.
    explicit Enumerator(int max_n, int cache_ceiling = kDefaultCacheCeiling);

    /// Emits every CNAT of size n: ascending k, then M, then M', then row
    /// set, then column set. Returns the number emitted.
    std::uint64_t for_each(int n, const CnatConsumer& consumer) const;

    /// The slice of for_each(n) with the given k and row set.
    std::uint64_t for_each_in(int n, int k, const std::vector<int>& rows,
                              const CnatConsumer& consumer) const;

    /// Full list for a cached size, otherwise empty.
    const std::vector<Cnat>* cached(int n) const;

private:
    std::uint64_t for_each_sub(int n, const CnatConsumer& consumer) const;

    int max_n_;
    std::vector<std::vector<Cnat>> lists_;  // lists_[n] for n <= ceiling
};

/// Enumerator(n).for_each(n, consumer).
std::uint64_t enumerate(int n, const CnatConsumer& consumer);

/// Same set as enumerate() but split across `jobs` threads by (k, row set).
/// The consumer must be safe to call concurrently; emission order is unspecified.
std::uint64_t enumerate_parallel(int n, int jobs, const CnatConsumer& consumer);

struct CountByDet {
    int n = 0;
    mpz_class a;  ///< determinant +1
    mpz_class b;  ///< determinant -1

    mpz_class total() const { return a + b; }
    friend bool operator==(const CountByDet&, const CountByDet&) = default;
};

/// Enumerates size n and classifies each CNAT by cnat_det. jobs > 1 runs in parallel.
CountByDet count_by_det(int n, int jobs = 1);

}  // namespace cnat
