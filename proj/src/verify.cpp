#include "cnat/verify.hpp"

#include <algorithm>
#include <sstream>

#include "cnat/grid.hpp"
#include "cnat/linalg.hpp"
#include "cnat/sequences.hpp"

namespace cnat {

CountByDet cached_count_by_det(int n, int jobs, CountsCache* cache) {
    if (cache) {
        auto a = cache->get(Quantity::A, n, Source::Enumeration);
        auto b = cache->get(Quantity::B, n, Source::Enumeration);
        if (a && b) return {n, *a, *b};
    }
    auto counts = count_by_det(n, jobs);
    if (cache) {
        cache->put(Quantity::A, n, Source::Enumeration, counts.a);
        cache->put(Quantity::B, n, Source::Enumeration, counts.b);
        cache->save();
    }
    return counts;
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        os << c.line << '\n';
        if (!c.passed) ++failed;
    }
    if (failed == 0)
        os << "all " << checks.size() << " checks passed\n";
    else
        os << failed << " of " << checks.size() << " checks FAILED\n";
    return os.str();
}

namespace {

void add(VerifyReport& rep, std::string line, bool ok) {
    line += ok ? " PASS" : " FAIL";
    rep.checks.push_back({std::move(line), ok});
}

std::vector<std::string> grid_texts(std::uint64_t (*gen)(int, const CnatConsumer&), int n) {
    std::vector<std::string> out;
    gen(n, [&](const Cnat& c) { out.push_back(serialize_grid(c.grid())); });
    std::sort(out.begin(), out.end());
    return out;
}

void check_oracle(VerifyReport& rep, int n) {
    const auto naive = grid_texts(&enumerate_naive, n);
    const auto constructive = grid_texts(&enumerate, n);
    const bool ok = naive == constructive && std::adjacent_find(naive.begin(), naive.end()) == naive.end();
    std::ostringstream os;
    os << "oracle n=" << n << ": naive " << naive.size() << ", enum " << constructive.size()
       << (naive == constructive ? ", same set" : ", sets differ");
    add(rep, os.str(), ok);
}

void check_counts(VerifyReport& rep, int n, const CountByDet& en, const SeqTable& rec, const Sequence& closed) {
    const auto un = static_cast<std::size_t>(n);
    auto line = [&](char q, const mpz_class& e, const mpz_class& r) {
        std::ostringstream os;
        os << q << '_' << n << ": enum " << e << ", rec " << r;
        add(rep, os.str(), e == r);
    };
    line('T', en.total(), rec.t[un]);
    line('A', en.a, rec.a[un]);
    line('B', en.b, rec.b[un]);
    const mpz_class d = en.a - en.b;
    std::ostringstream os;
    os << "D_" << n << ": enum " << d << ", rec " << rec.d[un] << ", closed " << closed[un];
    add(rep, os.str(), d == rec.d[un] && d == closed[un]);
}

void check_theorem(VerifyReport& rep, int top) {
    const auto rec = d_rec(top);
    const auto closed = d_closed_seq(top);
    bool ok = true;
    for (int n = 1; n <= top; ++n) {
        const auto un = static_cast<std::size_t>(n);
        if (rec[un] != closed[un]) {
            ok = false;
            std::ostringstream os;
            os << "D_" << n << ": rec " << rec[un] << ", closed " << closed[un];
            add(rep, os.str(), false);
        }
    }
    add(rep, "theorem: D_n rec = closed for n=1.." + std::to_string(top), ok);
}

void check_lemma(VerifyReport& rep, int max_m) {
    bool ok = true;
    for (int m = 1; m <= max_m; m += 2) {
        for (const auto& pc : eo_row(m)) {
            const mpz_class closed = eo_diff_closed(m, pc.k);
            if (closed != pc.diff()) {
                ok = false;
                std::ostringstream os;
                os << "e-o(" << m << ',' << pc.k << "): dp " << pc.diff() << ", closed " << closed;
                add(rep, os.str(), false);
            }
        }
    }
    add(rep, "lemma: e-o closed = DP for odd m=1.." + std::to_string(max_m), ok);
}

void check_identities(VerifyReport& rep, int top) {
    const auto tab = seq_table(top);
    bool ok = true;
    for (int n = 1; n <= top; ++n) {
        const auto un = static_cast<std::size_t>(n);
        if (tab.a[un] + tab.b[un] != tab.t[un] || tab.a[un] - tab.b[un] != tab.d[un]) {
            ok = false;
            std::ostringstream os;
            os << "identity n=" << n << ": A " << tab.a[un] << ", B " << tab.b[un] << ", T " << tab.t[un]
               << ", D " << tab.d[un];
            add(rep, os.str(), false);
        }
    }
    add(rep, "identities: A+B=T (t_seq), A-B=D (d_rec) for n=1.." + std::to_string(top), ok);
}

void check_det_bridge(VerifyReport& rep, int n) {
    std::uint64_t count = 0, bad = 0;
    enumerate(n, [&](const Cnat& c) {
        ++count;
        if (det_int(to_matrix(c)) != cnat_det(c).value()) ++bad;
    });
    std::ostringstream os;
    os << "det bridge n=" << n << ": " << count << " CNATs, " << bad << " with det_int != perm_sign";
    add(rep, os.str(), bad == 0);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    VerifyReport rep;
    const int max_n = std::max(opts.max_n, 1);

    for (int n = 1; n <= std::min(max_n, opts.slow ? 5 : 4); ++n) check_oracle(rep, n);

    const int enum_top = std::min(max_n, opts.slow ? 8 : 7);
    const auto rec = seq_table(enum_top);
    const auto closed = d_closed_seq(enum_top);
    for (int n = 1; n <= enum_top; ++n)
        check_counts(rep, n, cached_count_by_det(n, opts.jobs, opts.cache), rec, closed);

    check_theorem(rep, std::max(40, max_n));
    check_lemma(rep, 25);
    check_identities(rep, std::max(20, max_n));
    for (int n = 1; n <= std::min(max_n, 6); ++n) check_det_bridge(rep, n);
    return rep;
}

}  // namespace cnat
