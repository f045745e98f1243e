#include "cnat/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "cnat/decomposition.hpp"
#include "cnat/linalg.hpp"

namespace cnat {

void for_each_subset(int first, int last, int k, const std::function<void(const std::vector<int>&)>& fn) {
    const int span = last - first + 1;
    if (k < 0 || k > std::max(span, 0)) return;
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = first + i;
    while (true) {
        fn(s);
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == last - (k - 1 - i)) --i;
        if (i < 0) return;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::uint64_t enumerate_naive(int n, const CnatConsumer& consumer) {
    if (n < 1 || n > kNaiveMaxN)
        throw std::out_of_range("enumerate_naive supports 1 <= n <= " + std::to_string(kNaiveMaxN) +
                                ", got " + std::to_string(n));
    const int cells = n * n;
    std::uint64_t count = 0;
    // cell 0 is the root; choose the other 2n-2 dots among cells 1..n^2-1
    for_each_subset(1, cells - 1, 2 * n - 2, [&](const std::vector<int>& chosen) {
        std::vector<CellCoord> dots;
        dots.reserve(chosen.size() + 1);
        dots.push_back({1, 1});
        for (int idx : chosen) dots.push_back({idx / n + 1, idx % n + 1});
        auto res = validate(DotGrid(n, std::move(dots)));
        if (auto* c = std::get_if<Cnat>(&res)) {
            ++count;
            consumer(*c);
        }
    });
    return count;
}

Enumerator::Enumerator(int max_n, int cache_ceiling) : max_n_(max_n) {
    if (max_n < 1) throw std::invalid_argument("enumeration size must be at least 1");
    const int top = std::min(std::max(cache_ceiling, 1), max_n);
    lists_.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 1; n <= top; ++n) {
        auto& list = lists_[static_cast<std::size_t>(n)];
        for_each(n, [&list](const Cnat& c) { list.push_back(c); });
    }
}

const std::vector<Cnat>* Enumerator::cached(int n) const {
    if (n < 1 || static_cast<std::size_t>(n) >= lists_.size() || lists_[static_cast<std::size_t>(n)].empty())
        return nullptr;
    return &lists_[static_cast<std::size_t>(n)];
}

std::uint64_t Enumerator::for_each_sub(int n, const CnatConsumer& consumer) const {
    if (const auto* list = cached(n)) {
        for (const auto& c : *list) consumer(c);
        return list->size();
    }
    return for_each(n, consumer);
}

std::uint64_t Enumerator::for_each_in(int n, int k, const std::vector<int>& rows,
                                      const CnatConsumer& consumer) const {
    std::uint64_t count = 0;
    for_each_sub(k, [&](const Cnat& top) {
        for_each_sub(n - k, [&](const Cnat& left) {
            for_each_subset(2, n, k, [&](const std::vector<int>& cols) {
                consumer(compose(top, left, rows, cols));
                ++count;
            });
        });
    });
    return count;
}

std::uint64_t Enumerator::for_each(int n, const CnatConsumer& consumer) const {
    if (n < 1 || n > max_n_)
        throw std::out_of_range("enumerator prepared for 1 <= n <= " + std::to_string(max_n_) +
                                ", got " + std::to_string(n));
    if (n == 1) {
        consumer(make_cnat(DotGrid(1, {{1, 1}})));
        return 1;
    }
    std::uint64_t count = 0;
    for (int k = 1; k <= n - 1; ++k) {
        for_each_sub(k, [&](const Cnat& top) {
            for_each_sub(n - k, [&](const Cnat& left) {
                for_each_subset(2, n, k - 1, [&](const std::vector<int>& rest) {
                    std::vector<int> rows;
                    rows.reserve(static_cast<std::size_t>(k));
                    rows.push_back(1);
                    rows.insert(rows.end(), rest.begin(), rest.end());
                    for_each_subset(2, n, k, [&](const std::vector<int>& cols) {
                        consumer(compose(top, left, rows, cols));
                        ++count;
                    });
                });
            });
        });
    }
    return count;
}

std::uint64_t enumerate(int n, const CnatConsumer& consumer) {
    return Enumerator(n).for_each(n, consumer);
}

std::uint64_t enumerate_parallel(int n, int jobs, const CnatConsumer& consumer) {
    const Enumerator en(n);
    if (jobs <= 1 || n == 1) return en.for_each(n, consumer);

    struct Task {
        int k;
        std::vector<int> rows;
    };
    std::vector<Task> tasks;
    for (int k = 1; k <= n - 1; ++k) {
        for_each_subset(2, n, k - 1, [&](const std::vector<int>& rest) {
            std::vector<int> rows{1};
            rows.insert(rows.end(), rest.begin(), rest.end());
            tasks.push_back({k, std::move(rows)});
        });
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < tasks.size(); i = next++)
                total += en.for_each_in(n, tasks[i].k, tasks[i].rows, consumer);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = tasks.size();
        }
    };
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return total;
}

CountByDet count_by_det(int n, int jobs) {
    if (jobs <= 1) {
        std::uint64_t a = 0, b = 0;
        enumerate(n, [&](const Cnat& c) { (cnat_det(c) == Sign::plus() ? a : b)++; });
        return {n, mpz_class(static_cast<unsigned long>(a)), mpz_class(static_cast<unsigned long>(b))};
    }
    std::atomic<std::uint64_t> a{0}, b{0};
    enumerate_parallel(n, jobs, [&](const Cnat& c) { (cnat_det(c) == Sign::plus() ? a : b)++; });
    return {n, mpz_class(static_cast<unsigned long>(a.load())), mpz_class(static_cast<unsigned long>(b.load()))};
}

}  // namespace cnat
