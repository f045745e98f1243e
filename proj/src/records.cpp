#include "cnat/records.hpp"

#include <sstream>
#include <stdexcept>

namespace cnat {

std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::T: return "T";
        case Quantity::A: return "A";
        case Quantity::B: return "B";
        case Quantity::D: return "D";
        case Quantity::EO: return "eo";
    }
    return "?";
}

std::string_view to_string(Source s) {
    switch (s) {
        case Source::Enumeration: return "enumeration";
        case Source::Recurrence: return "recurrence";
        case Source::ClosedForm: return "closed_form";
    }
    return "?";
}

Quantity parse_quantity(std::string_view s) {
    for (auto q : {Quantity::T, Quantity::A, Quantity::B, Quantity::D, Quantity::EO})
        if (to_string(q) == s) return q;
    throw std::invalid_argument("unknown quantity '" + std::string(s) + "'");
}

Source parse_source(std::string_view s) {
    for (auto src : {Source::Enumeration, Source::Recurrence, Source::ClosedForm})
        if (to_string(src) == s) return src;
    throw std::invalid_argument("unknown source '" + std::string(s) + "'");
}

namespace {

mpz_class parse_big(const std::string& s) {
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

}  // namespace

nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["quantity"] = to_string(r.quantity);
    if (r.values.size() == 1) {
        j["value"] = r.values.front().get_str();
    } else {
        auto arr = nlohmann::json::array();
        for (const auto& v : r.values) arr.push_back(v.get_str());
        j["value"] = std::move(arr);
    }
    j["source"] = to_string(r.source);
    if (r.k) j["k"] = *r.k;
    return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
    try {
        OutputRecord r;
        r.n = j.at("n").get<int>();
        r.quantity = parse_quantity(j.at("quantity").get<std::string>());
        r.source = parse_source(j.at("source").get<std::string>());
        const auto& v = j.at("value");
        if (v.is_array()) {
            for (const auto& e : v) r.values.push_back(parse_big(e.get<std::string>()));
        } else {
            r.values.push_back(parse_big(v.get<std::string>()));
        }
        if (j.contains("k")) r.k = j.at("k").get<int>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

std::string records_to_json(const std::vector<OutputRecord>& records) {
    auto arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

std::vector<OutputRecord> records_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of records");
    std::vector<OutputRecord> out;
    for (const auto& e : j) out.push_back(record_from_json(e));
    return out;
}

namespace {

std::string eo_value(const OutputRecord& r) {
    std::string s = "k=" + std::to_string(r.k.value_or(0));
    if (r.values.size() == 2)
        s += ";even=" + r.values[0].get_str() + ";odd=" + r.values[1].get_str();
    else if (r.values.size() == 1)
        s += ";diff=" + r.values[0].get_str();
    return s;
}

}  // namespace

std::string records_to_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    os << "n,quantity,value,source\n";
    for (const auto& r : records) {
        os << r.n << ',' << to_string(r.quantity) << ',';
        if (r.quantity == Quantity::EO)
            os << eo_value(r);
        else
            os << r.values.at(0).get_str();
        os << ',' << to_string(r.source) << '\n';
    }
    return os.str();
}

std::string records_to_text(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    for (const auto& r : records) {
        if (r.quantity == Quantity::EO) {
            const int k = r.k.value_or(0);
            if (r.values.size() == 2)
                os << "e/o(" << r.n << ',' << k << ") = " << r.values[0].get_str() << ", "
                   << r.values[1].get_str();
            else
                os << "e-o(" << r.n << ',' << k << ") = " << r.values.at(0).get_str();
        } else {
            os << to_string(r.quantity) << '_' << r.n << " = " << r.values.at(0).get_str();
        }
        os << " [" << to_string(r.source) << "]\n";
    }
    return os.str();
}

}  // namespace cnat
