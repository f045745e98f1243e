#include "cnat/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cnat {

namespace {

// Bump when a change could alter enumerated counts.
constexpr std::string_view kCodeTag = "cnat-enumeration/1";

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::string CountsCache::code_version() {
    std::ostringstream os;
    os << std::hex << fnv1a(kCodeTag);
    return os.str();
}

CountsCache::CountsCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str().empty()) return;
    try {
        const auto j = nlohmann::json::parse(buf.str());
        for (const auto& e : j.at("entries")) {
            mpz_class v;
            if (v.set_str(e.at("value").get<std::string>(), 10) != 0)
                throw CacheError("non-integer value in cache " + path_.string());
            entries_.push_back({parse_quantity(e.at("quantity").get<std::string>()), e.at("n").get<int>(),
                                parse_source(e.at("source").get<std::string>()),
                                e.at("version").get<std::string>(), v});
        }
    } catch (const nlohmann::json::exception& e) {
        throw CacheError("unreadable cache " + path_.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw CacheError("unreadable cache " + path_.string() + ": " + e.what());
    }
}

std::optional<mpz_class> CountsCache::get(Quantity q, int n, Source s) const {
    const auto version = code_version();
    for (const auto& e : entries_)
        if (e.quantity == q && e.n == n && e.source == s && e.version == version) return e.value;
    return std::nullopt;
}

void CountsCache::put(Quantity q, int n, Source s, const mpz_class& value) {
    const auto version = code_version();
    for (auto& e : entries_) {
        if (e.quantity == q && e.n == n && e.source == s && e.version == version) {
            e.value = value;
            return;
        }
    }
    entries_.push_back({q, n, s, version, value});
}

void CountsCache::save() const {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries_) {
        j["entries"].push_back({{"quantity", to_string(e.quantity)},
                                {"n", e.n},
                                {"source", to_string(e.source)},
                                {"version", e.version},
                                {"value", e.value.get_str()}});
    }
    auto tmp = path_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CacheError("cannot write " + tmp.string());
        out << j.dump(2) << '\n';
        if (!out.flush()) throw CacheError("cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw CacheError("cannot replace " + path_.string() + ": " + ec.message());
}

}  // namespace cnat
