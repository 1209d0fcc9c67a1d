#include "clear/cli/csv.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace clear::cli;

TEST_CASE("csv kind detection")
{
    CHECK(detect_csv_kind("year,cost_usd\n2000,1\n") == CsvKind::cost_observations);
    CHECK(detect_csv_kind(std::string(system_record_header) + "\n") == CsvKind::system_records);
    CHECK(detect_csv_kind("\xEF\xBB\xBFyear,cost_usd\r\n2000,1\r\n") == CsvKind::cost_observations);
    CHECK_FALSE(detect_csv_kind("a,b\n"));
    CHECK_FALSE(detect_csv_kind(""));
}

TEST_CASE("system records parse")
{
    const auto p = parse_system_records(std::string(system_record_header) +
                                        "\nvax,1978,1,2e-7,1e-9,1,2e5,mainframe\n"
                                        "pc,1990.5,20,4e-8,1e-10,0.04,3e3,personal\n");
    CHECK(p.diagnostics.empty());
    REQUIRE(p.rows.size() == 2);
    CHECK(p.rows[1].year == 1990.5);
    CHECK(p.rows[1].system_class == clear::SystemClass::personal);
}

TEST_CASE("csv diagnostics carry line numbers")
{
    const auto p = parse_system_records(std::string(system_record_header) +
                                        "\nok,1978,1,2e-7,1e-9,1,2e5,mainframe\n"
                                        "bad,1979,x,2e-7,1e-9,1,2e5,mainframe\n"
                                        "short,1980,1\n"
                                        "neg,1981,1,2e-7,-1e-9,1,2e5,laptop\n");
    CHECK(p.diagnostics.size() >= 4);
    bool line3 = false, line4 = false, line5 = false;
    for (const auto& d : p.diagnostics) {
        line3 = line3 || d.path == "line:3";
        line4 = line4 || d.path == "line:4";
        line5 = line5 || d.path == "line:5";
    }
    CHECK(line3);
    CHECK(line4);
    CHECK(line5);

    const auto c = parse_cost_observations("year,cost_usd\n2000,1\n2001,0\n");
    REQUIRE(c.diagnostics.size() == 1);
    CHECK(c.diagnostics[0].path == "line:3");
}

TEST_CASE("numbers round-trip through their text form")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> e(-30, 30);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::pow(10.0, e(rng)) * (i % 2 ? 1 : -1);
        CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
    }
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(50e9) == "50000000000");
}

TEST_CASE("csv writer")
{
    CsvWriter w({"name", "value"});
    w.field("plain").field(1.25).end_row();
    w.field("a,b").field(3).end_row();
    w.field("say \"hi\"").field(std::size_t{4}).end_row();
    CHECK(w.str() == "name,value\nplain,1.25\n\"a,b\",3\n\"say \"\"hi\"\"\",4\n");
}
