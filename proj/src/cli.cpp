#include "cnat/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnat/cache.hpp"
#include "cnat/decomposition.hpp"
#include "cnat/enumeration.hpp"
#include "cnat/grid.hpp"
#include "cnat/linalg.hpp"
#include "cnat/records.hpp"
#include "cnat/render.hpp"
#include "cnat/sequences.hpp"
#include "cnat/verify.hpp"

namespace cnat::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string path;
    int n = 0;
    int max_n = 0;
    std::string source = "rec";
    std::string format = "text";
    std::string cache_path;
    int jobs = 1;
    bool unsafe_large = false;
    bool svg = false;
    bool slow = false;
    bool naive = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DotGrid load_grid(const std::string& path) {
    try {
        return parse_grid(read_file(path));
    } catch (const GridParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::unique_ptr<CountsCache> open_cache(const Options& o) {
    if (o.cache_path.empty()) return nullptr;
    return std::make_unique<CountsCache>(o.cache_path);
}

void check_enumeration_size(int n, const Options& o) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (n > kEnumerationLimit && !o.unsafe_large)
        throw UsageError("n=" + std::to_string(n) + " exceeds the enumeration limit of " +
                         std::to_string(kEnumerationLimit) + "; pass --unsafe-large to override");
}

void emit(std::ostream& out, const std::vector<OutputRecord>& recs, const std::string& format) {
    if (format == "json")
        out << records_to_json(recs);
    else if (format == "csv")
        out << records_to_csv(recs);
    else
        out << records_to_text(recs);
}

OutputRecord scalar(int n, Quantity q, mpz_class v, Source s) { return {n, q, {std::move(v)}, s, std::nullopt}; }

// Records for sizes 1..top (or just `only`) from one source.
std::vector<OutputRecord> count_records(int from, int to, const Options& o) {
    std::vector<OutputRecord> recs;
    if (o.source == "enum") {
        check_enumeration_size(to, o);
        auto cache = open_cache(o);
        for (int n = from; n <= to; ++n) {
            const auto c = cached_count_by_det(n, o.jobs, cache.get());
            recs.push_back(scalar(n, Quantity::T, c.total(), Source::Enumeration));
            recs.push_back(scalar(n, Quantity::A, c.a, Source::Enumeration));
            recs.push_back(scalar(n, Quantity::B, c.b, Source::Enumeration));
            recs.push_back(scalar(n, Quantity::D, c.a - c.b, Source::Enumeration));
        }
    } else if (o.source == "rec") {
        const auto tab = seq_table(to);
        for (int n = from; n <= to; ++n) {
            const auto un = static_cast<std::size_t>(n);
            recs.push_back(scalar(n, Quantity::T, tab.t[un], Source::Recurrence));
            recs.push_back(scalar(n, Quantity::A, tab.a[un], Source::Recurrence));
            recs.push_back(scalar(n, Quantity::B, tab.b[un], Source::Recurrence));
            recs.push_back(scalar(n, Quantity::D, tab.d[un], Source::Recurrence));
        }
    } else {
        // only D has a closed form
        const auto d = d_closed_seq(to);
        for (int n = from; n <= to; ++n)
            recs.push_back(scalar(n, Quantity::D, d[static_cast<std::size_t>(n)], Source::ClosedForm));
    }
    return recs;
}

int cmd_validate(const Options& o, std::ostream& out) {
    const auto grid = load_grid(o.path);
    auto res = validate(grid);
    if (const auto* e = std::get_if<ValidationError>(&res)) {
        out << "invalid: " << e->message << '\n';
        return kExitMismatch;
    }
    const auto& c = std::get<Cnat>(res);
    out << "valid, n=" << c.size() << ", det=" << cnat_det(c).value() << '\n';
    out << "leaves:";
    for (const auto& l : c.leaves()) out << ' ' << l;
    out << "\ninternal:";
    for (std::size_t i = 0; i < c.dots().size(); ++i)
        if (c.roles()[i] == VertexRole::Internal) out << ' ' << c.dots()[i];
    out << '\n';
    return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("n must be at least 1");
    emit(out, count_records(o.n, o.n, o), o.format);
    return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
    emit(out, count_records(1, o.max_n, o), o.format);
    return kExitOk;
}

int cmd_eo(const Options& o, std::ostream& out) {
    if (o.n < 0) throw UsageError("n must be non-negative");
    std::vector<OutputRecord> recs;
    for (const auto& pc : eo_row(o.n)) {
        recs.push_back({o.n, Quantity::EO, {pc.even, pc.odd}, Source::Recurrence, pc.k});
        if (o.n % 2 == 1) recs.push_back({o.n, Quantity::EO, {eo_diff_closed(o.n, pc.k)}, Source::ClosedForm, pc.k});
    }
    emit(out, recs, o.format);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
    auto cache = open_cache(o);
    VerifyOptions vo;
    vo.max_n = o.max_n;
    vo.slow = o.slow;
    vo.jobs = o.jobs;
    vo.cache = cache.get();
    const auto rep = run_verify(vo);
    out << rep.to_text();
    return rep.all_passed() ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.naive) {
        if (o.n < 1 || o.n > kNaiveMaxN)
            throw UsageError("--naive supports 1 <= n <= " + std::to_string(kNaiveMaxN));
    } else {
        check_enumeration_size(o.n, o);
    }
    const bool json = o.format == "json";
    bool first = true;
    auto print = [&](const Cnat& c) {
        const auto text = serialize_grid(c.grid());
        if (json) {
            out << (first ? "[\n  " : ",\n  ") << nlohmann::json(text).dump();
        } else {
            if (!first) out << '\n';
            out << text;
        }
        first = false;
    };
    if (o.naive)
        enumerate_naive(o.n, print);
    else
        enumerate(o.n, print);
    if (json) out << (first ? "[]\n" : "\n]\n");
    return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
    auto res = validate(load_grid(o.path));
    if (const auto* e = std::get_if<ValidationError>(&res)) {
        out << "invalid: " << e->message << '\n';
        return kExitMismatch;
    }
    const auto& c = std::get<Cnat>(res);
    out << (o.svg ? render_svg(c) : render_ascii(c));
    return kExitOk;
}

std::string set_string(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

int cmd_decompose(const Options& o, std::ostream& out) {
    auto res = validate(load_grid(o.path));
    if (const auto* e = std::get_if<ValidationError>(&res)) {
        out << "invalid: " << e->message << '\n';
        return kExitMismatch;
    }
    const auto& c = std::get<Cnat>(res);
    if (c.size() < 2) {
        out << "a size-1 CNAT has no decomposition\n";
        return kExitMismatch;
    }
    const auto d = decompose(c);
    out << "k=" << d.k() << " rows=" << set_string(d.rows) << " cols=" << set_string(d.cols) << '\n';
    out << "M:\n" << serialize_grid(d.top.grid());
    out << "M':\n" << serialize_grid(d.left.grid());
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complete non-ambiguous trees: enumeration, determinants and sequence checks", "cnat"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats{"text", "json", "csv"};
    const std::vector<std::string> sources{"enum", "rec", "closed"};
    auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache", o.cache_path, "Counts cache file")->envname("CNAT_CACHE");
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check a grid file and report its leaves");
    validate_cmd->add_option("path", o.path, "Grid file")->required();

    auto* count_cmd = app.add_subcommand("count", "Print T, A, B, D for one size");
    count_cmd->add_option("n", o.n, "Size")->required();
    count_cmd->add_option("--source", o.source)->check(CLI::IsMember(sources));
    count_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
    count_cmd->add_option("--jobs", o.jobs, "Worker threads for enumeration");
    count_cmd->add_flag("--unsafe-large", o.unsafe_large, "Allow enumeration above the default limit");
    add_cache(count_cmd);

    auto* table_cmd = app.add_subcommand("table", "Print T, A, B, D for sizes 1..max-n");
    table_cmd->add_option("--max-n", o.max_n)->default_val(8);
    table_cmd->add_option("--source", o.source)->check(CLI::IsMember(sources));
    table_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
    table_cmd->add_option("--jobs", o.jobs);
    table_cmd->add_flag("--unsafe-large", o.unsafe_large);
    add_cache(table_cmd);

    auto* eo_cmd = app.add_subcommand("eo", "Even/odd-sum k-subset counts of {1..n}");
    eo_cmd->add_option("n", o.n)->required();
    eo_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check matrix");
    verify_cmd->add_option("--max-n", o.max_n)->default_val(7);
    verify_cmd->add_flag("--slow", o.slow, "Include the n=5 oracle and n=8 enumeration");
    verify_cmd->add_option("--jobs", o.jobs);
    add_cache(verify_cmd);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Print every CNAT of size n");
    enumerate_cmd->add_option("n", o.n)->required();
    enumerate_cmd->add_option("--format", o.format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
    enumerate_cmd->add_flag("--unsafe-large", o.unsafe_large);
    enumerate_cmd->add_flag("--naive", o.naive, "Use the brute-force generator (n <= 5)");

    auto* render_cmd = app.add_subcommand("render", "Draw a CNAT");
    render_cmd->add_option("path", o.path)->required();
    render_cmd->add_flag("--svg", o.svg, "Emit SVG instead of text");

    auto* decompose_cmd = app.add_subcommand("decompose", "Split a CNAT at its root");
    decompose_cmd->add_option("path", o.path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate_cmd) return cmd_validate(o, out);
        if (*count_cmd) return cmd_count(o, out);
        if (*table_cmd) return cmd_table(o, out);
        if (*eo_cmd) return cmd_eo(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
        if (*enumerate_cmd) return cmd_enumerate(o, out);
        if (*render_cmd) return cmd_render(o, out);
        if (*decompose_cmd) return cmd_decompose(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CacheError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cnat::cli
