#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "qr/config.hpp"
#include "qr/errors.hpp"

using namespace qr;

namespace {

const char* sample =
    "# machine setup\n"
    "[sg]\n"
    "speed = 600 m/s   \n"
    "gradient = 1136.5 T/m\n"
    "; trailing comment section\n"
    "[talbot]\n"
    "slits = 100\n";

} // namespace

TEST_SUITE("config") {

TEST_CASE("parse, lookup, defaults") {
    Config c = Config::parse(sample);
    CHECK(c.has("sg", "speed"));
    CHECK(c.get("sg", "speed") == "600 m/s"); // trailing blanks trimmed
    CHECK(c.get("talbot", "slits") == "100");
    CHECK(c.get_double("talbot", "slits") == 100.0);
    CHECK(c.get_or("talbot", "missing", "fallback") == "fallback");
    CHECK_FALSE(c.find("nope", "x").has_value());
    CHECK_THROWS_AS((void)c.get("sg", "missing"), config_error);
    CHECK_THROWS_AS((void)c.get_double("sg", "speed"), config_error); // not a bare number

    auto keys = c.keys("sg");
    REQUIRE(keys.size() == 2);
    CHECK(keys[0] == "speed");
    CHECK(keys[1] == "gradient");
}

TEST_CASE("dump is canonical: parse-dump-parse is a fixed point") {
    Config c = Config::parse(sample);
    std::string once = c.dump();
    Config c2 = Config::parse(once);
    CHECK(c2.dump() == once);
    CHECK(c2.hash() == c.hash());
}

TEST_CASE("hash tracks content") {
    Config a = Config::parse("[s]\nk = 1\n");
    Config b = Config::parse("[s]\nk = 1\n");
    Config c = Config::parse("[s]\nk = 2\n");
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != c.hash());
}

TEST_CASE("duplicate keys: last value wins, first position kept") {
    Config c = Config::parse("[s]\na = 1\nb = 2\na = 3\n");
    CHECK(c.get("s", "a") == "3");
    auto keys = c.keys("s");
    REQUIRE(keys.size() == 2);
    CHECK(keys[0] == "a");
    CHECK(keys[1] == "b");
}

TEST_CASE("set and apply_override") {
    Config c = Config::parse("[s]\na = 1\n");
    c.set("s", "a", "9");
    CHECK(c.get("s", "a") == "9");
    c.set("fresh", "k", "v");
    CHECK(c.get("fresh", "k") == "v");

    c.apply_override("s.a=42");
    CHECK(c.get("s", "a") == "42");
    c.apply_override("sg.speed=700 m/s");
    CHECK(c.get("sg", "speed") == "700 m/s");

    // no dot: the key lands in the unnamed top-level section
    c.apply_override("plain=1");
    CHECK(c.get("", "plain") == "1");

    CHECK_THROWS_AS(c.apply_override("s.a"), config_error);   // no '='
    CHECK_THROWS_AS(c.apply_override("s.=1"), config_error);  // empty key
}

TEST_CASE("malformed text is rejected") {
    CHECK_THROWS_AS(Config::parse("[s]\nnot a key value line\n"), config_error);
    CHECK_THROWS_AS(Config::parse("[unterminated\nk = 1\n"), config_error);
    CHECK_THROWS_AS(Config::parse("[]\nk = 1\n"), config_error);
    CHECK_THROWS_AS(Config::parse("[s]\n= 1\n"), config_error);
}

TEST_CASE("keys before any section header live in the unnamed section") {
    Config c = Config::parse("top = 1\n[s]\nk = 2\n");
    CHECK(c.get("", "top") == "1");
    std::string out = c.dump();
    CHECK(Config::parse(out).dump() == out);
}

TEST_CASE("load from file") {
    std::string path = "test_config_tmp.cfg";
    {
        std::ofstream os(path);
        os << sample;
    }
    Config c = Config::load(path);
    CHECK(c.get("sg", "gradient") == "1136.5 T/m");
    std::remove(path.c_str());
    CHECK_THROWS_AS(Config::load("does_not_exist_xyz.cfg"), config_error);
}

} // TEST_SUITE
