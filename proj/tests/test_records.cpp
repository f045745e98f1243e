#include <doctest.h>

#include <random>

#include "cnat/records.hpp"

using namespace cnat;

TEST_CASE("quantity and source names") {
    for (auto q : {Quantity::T, Quantity::A, Quantity::B, Quantity::D, Quantity::EO})
        CHECK(parse_quantity(to_string(q)) == q);
    for (auto s : {Source::Enumeration, Source::Recurrence, Source::ClosedForm}) CHECK(parse_source(to_string(s)) == s);
    CHECK_THROWS_AS(parse_quantity("Q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_source("guess"), std::invalid_argument);
}

TEST_CASE("JSON round-trips every record shape") {
    std::mt19937_64 rng(17);
    auto big = [&] {
        mpz_class v = static_cast<unsigned long>(rng());
        v *= static_cast<unsigned long>(rng());  // past 64 bits
        return rng() % 2 ? v : mpz_class(-v);
    };
    std::vector<OutputRecord> recs;
    for (int i = 0; i < 100; ++i) {
        OutputRecord r;
        r.n = static_cast<int>(rng() % 40) + 1;
        r.source = static_cast<Source>(rng() % 3);
        switch (rng() % 3) {
            case 0:
                r.quantity = static_cast<Quantity>(rng() % 4);
                r.values = {big()};
                break;
            case 1:
                r.quantity = Quantity::EO;
                r.k = static_cast<int>(rng() % 10);
                r.values = {big(), big()};
                break;
            default:
                r.quantity = Quantity::EO;
                r.k = static_cast<int>(rng() % 10);
                r.values = {big()};
        }
        recs.push_back(r);
        CHECK(record_from_json(to_json(r)) == r);
    }
    CHECK(records_from_json(records_to_json(recs)) == recs);
}

TEST_CASE("JSON field names and exact big values") {
    const OutputRecord r{8, Quantity::T, {mpz_class("10643745")}, Source::Enumeration, std::nullopt};
    const auto j = to_json(r);
    CHECK(j.at("n") == 8);
    CHECK(j.at("quantity") == "T");
    CHECK(j.at("value") == "10643745");
    CHECK(j.at("source") == "enumeration");
    CHECK_FALSE(j.contains("k"));
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(records_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(records_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(records_from_json(R"([{"n":1,"quantity":"T","source":"recurrence"}])"), std::invalid_argument);
    CHECK_THROWS_AS(records_from_json(R"([{"n":1,"quantity":"T","value":"1x","source":"recurrence"}])"),
                    std::invalid_argument);
}

TEST_CASE("CSV and text layout") {
    const std::vector<OutputRecord> recs{
        {6, Quantity::A, {4728}, Source::Enumeration, std::nullopt},
        {6, Quantity::D, {-4}, Source::ClosedForm, std::nullopt},
        {5, Quantity::EO, {4, 6}, Source::Recurrence, 2},
        {5, Quantity::EO, {-2}, Source::ClosedForm, 2},
    };
    CHECK(records_to_csv(recs) ==
          "n,quantity,value,source\n"
          "6,A,4728,enumeration\n"
          "6,D,-4,closed_form\n"
          "5,eo,k=2;even=4;odd=6,recurrence\n"
          "5,eo,k=2;diff=-2,closed_form\n");
    CHECK(records_to_text(recs) ==
          "A_6 = 4728 [enumeration]\n"
          "D_6 = -4 [closed_form]\n"
          "e/o(5,2) = 4, 6 [recurrence]\n"
          "e-o(5,2) = -2 [closed_form]\n");
}
