#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace cnat {

enum class Quantity { T, A, B, D, EO };
enum class Source { Enumeration, Recurrence, ClosedForm };

std::string_view to_string(Quantity q);
std::string_view to_string(Source s);
/// Throws std::invalid_argument on unknown names.
Quantity parse_quantity(std::string_view s);
Source parse_source(std::string_view s);

/// One reported number, tagged with where it came from.
///
/// T/A/B/D records carry a single value. EO records carry k and either
/// {even, odd} (subset-parity DP, source Recurrence) or {even - odd}
/// (closed form, source ClosedForm).
struct OutputRecord {
    int n = 0;
    Quantity quantity = Quantity::T;
    std::vector<mpz_class> values;
    Source source = Source::Recurrence;
    std::optional<int> k;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Big integers are written as decimal strings so no precision is lost.
nlohmann::json to_json(const OutputRecord& r);
/// Throws std::invalid_argument on malformed input.
OutputRecord record_from_json(const nlohmann::json& j);

std::string records_to_json(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_json(std::string_view text);

/// Header `n,quantity,value,source`; EO values are written as
/// `k=<k>;even=<e>;odd=<o>` or `k=<k>;diff=<d>`.
std::string records_to_csv(const std::vector<OutputRecord>& records);

/// One line per record, e.g. `T_6 = 9460 [enumeration]`.
std::string records_to_text(const std::vector<OutputRecord>& records);

}  // namespace cnat
