#include "cnat/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cnat {

namespace {

void check_max_n(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
}

void check_range(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

// table[s][p]: number of s-subsets of the items seen so far with sum parity p.
std::vector<ParityCount> eo_dp(int n, int max_k) {
    const auto width = static_cast<std::size_t>(max_k) + 1;
    std::vector<mpz_class> even(width), odd(width);
    even[0] = 1;  // the empty set has sum 0
    for (int item = 1; item <= n; ++item) {
        const bool flips = item % 2 == 1;
        const auto top = static_cast<std::size_t>(std::min(item, max_k));
        for (std::size_t s = top; s >= 1; --s) {
            if (flips) {
                even[s] += odd[s - 1];
                odd[s] += even[s - 1];
            } else {
                even[s] += even[s - 1];
                odd[s] += odd[s - 1];
            }
        }
    }
    std::vector<ParityCount> out;
    out.reserve(width);
    for (std::size_t s = 0; s < width; ++s) out.push_back({n, static_cast<int>(s), even[s], odd[s]});
    return out;
}

}  // namespace

mpz_class binomial(int n, int k) {
    check_range(n, k);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ParityCount eo_counts(int n, int k) {
    check_range(n, k);
    return eo_dp(n, k).back();
}

std::vector<ParityCount> eo_row(int n) {
    check_range(n, 0);
    return eo_dp(n, n);
}

mpz_class eo_diff_closed(int m, int j) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("m must be odd, got " + std::to_string(m));
    check_range(m, j);
    const int q = (m + 1) / 2;
    const int i = j / 2;
    if (i > q - 1) return 0;
    mpz_class c = binomial(q - 1, i);
    const int exponent = j % 2 == 0 ? i : i + 1;
    return exponent % 2 == 0 ? c : mpz_class(-c);
}

Sequence t_seq(int max_n) {
    check_max_n(max_n);
    Sequence t(static_cast<std::size_t>(max_n) + 1);
    t[1] = 1;
    for (int n = 2; n <= max_n; ++n) {
        mpz_class sum = 0;
        for (int k = 1; k <= n - 1; ++k)
            sum += binomial(n - 1, k - 1) * binomial(n - 1, k) * t[static_cast<std::size_t>(k)] *
                   t[static_cast<std::size_t>(n - k)];
        t[static_cast<std::size_t>(n)] = sum;
    }
    return t;
}

AbSequences ab_seq(int max_n) {
    check_max_n(max_n);
    AbSequences out{Sequence(static_cast<std::size_t>(max_n) + 1), Sequence(static_cast<std::size_t>(max_n) + 1)};
    auto& a = out.a;
    auto& b = out.b;
    a[1] = 1;
    b[1] = 0;
    for (int n = 2; n <= max_n; ++n) {
        const auto row = eo_row(n - 1);
        mpz_class an = 0, bn = 0;
        for (int k = 1; k <= n - 1; ++k) {
            const auto& rk1 = row[static_cast<std::size_t>(k - 1)];  // rows picked besides row 1
            const auto& rk = row[static_cast<std::size_t>(k)];       // columns picked
            const mpz_class keep = rk1.even * rk.even + rk1.odd * rk.odd;
            const mpz_class flip = rk1.even * rk.odd + rk1.odd * rk.even;
            const auto uk = static_cast<std::size_t>(k);
            const auto um = static_cast<std::size_t>(n - k);
            const mpz_class same = a[uk] * a[um] + b[uk] * b[um];
            const mpz_class opposite = a[uk] * b[um] + b[uk] * a[um];
            an += same * keep + opposite * flip;
            bn += opposite * keep + same * flip;
        }
        a[static_cast<std::size_t>(n)] = an;
        b[static_cast<std::size_t>(n)] = bn;
    }
    return out;
}

Sequence d_rec(int max_n) {
    check_max_n(max_n);
    Sequence d(static_cast<std::size_t>(max_n) + 1);
    d[1] = 1;
    for (int n = 2; n <= max_n; ++n) {
        const auto row = eo_row(n - 1);
        mpz_class sum = 0;
        for (int k = 1; k <= n - 1; ++k)
            sum += d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)] *
                   row[static_cast<std::size_t>(k - 1)].diff() * row[static_cast<std::size_t>(k)].diff();
        d[static_cast<std::size_t>(n)] = sum;
    }
    return d;
}

namespace {

mpz_class d_closed_from(int n, const Sequence& t) {
    if (n == 1) return 1;
    if (n % 2 == 1) return 0;
    const int half = n / 2;
    const mpz_class& th = t[static_cast<std::size_t>(half)];
    return half % 2 == 0 ? th : mpz_class(-th);
}

}  // namespace

mpz_class d_closed(int n) {
    check_max_n(n);
    return d_closed_from(n, t_seq(std::max(1, n / 2)));
}

Sequence d_closed_seq(int max_n) {
    check_max_n(max_n);
    const Sequence t = t_seq(std::max(1, max_n / 2));
    Sequence d(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) d[static_cast<std::size_t>(n)] = d_closed_from(n, t);
    return d;
}

SeqTable seq_table(int max_n) {
    auto ab = ab_seq(max_n);
    return SeqTable{max_n, t_seq(max_n), std::move(ab.a), std::move(ab.b), d_rec(max_n)};
}

}  // namespace cnat
