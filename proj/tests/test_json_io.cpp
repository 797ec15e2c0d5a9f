#include <doctest.h>

#include "integra/json_io.hpp"

using namespace integra;

TEST_SUITE("json_io") {
  TEST_CASE("group documents round trip") {
    const FiniteGroup g = construct("dic(cyclic:6)");
    const json doc = group_to_json(g);
    CHECK(doc["format"] == "ftg-1");
    CHECK(doc["order"] == 12);
    const FiniteGroup back = group_from_json(doc);
    CHECK(back.table() == g.table());
    CHECK(back.names() == g.names());
    CHECK(back.generator("x") == g.generator("x"));
    CHECK(canonical_dump(group_to_json(back)) == canonical_dump(doc));
  }

  TEST_CASE("minimal documents") {
    const FiniteGroup z3 = group_from_text(R"({"format":"ftg-1","order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]})");
    CHECK(z3.order() == 3);
    CHECK(z3.identity() == 0);
    CHECK(z3.name(1) == "g1");
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_WITH_AS(group_from_text("{"), doctest::Contains("malformed"), Error);
    CHECK_THROWS_WITH_AS(group_from_text(R"({"format":"ftg-2","order":1,"table":[[0]]})"),
                         doctest::Contains("format"), Error);
    CHECK_THROWS_WITH_AS(group_from_text(R"({"format":"ftg-1","order":2,"table":[[0,1]]})"),
                         doctest::Contains("table"), Error);
    CHECK_THROWS_WITH_AS(group_from_text(R"({"format":"ftg-1","order":2,"table":[[0,1],[1,5]]})"),
                         doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(group_from_text(R"({"format":"ftg-1","order":2,"table":[[0,1],[0,1]]})"),
                         doctest::Contains("Latin"), Error);
    CHECK_THROWS_WITH_AS(group_from_text(R"({"format":"ftg-1","order":501,"table":[]})"),
                         doctest::Contains("order bound"), Error);
  }

  TEST_CASE("big integers") {
    CHECK(bigint_json(mpz_class(-42)) == json(-42));
    const mpz_class huge("123456789012345678901234567890");
    CHECK(bigint_json(huge) == json("123456789012345678901234567890"));
  }

  TEST_CASE("canonical dumps sort keys") {
    const json j{{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}};
    CHECK(canonical_dump(j) == "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
  }

  TEST_CASE("membership reports") {
    MembershipReport r;
    r.group_id = "D8";
    r.k = 3;
    r.member = false;
    r.witness = SymmetricSet{{2, 3, 4}};
    r.witness_words = {"b", "a^2", "a*b"};
    r.sets_checked = 6;
    const json j = membership_to_json(r);
    CHECK(j["class"] == "A");
    CHECK(j["witness"] == json({2, 3, 4}));
    CHECK(j["sets_checked"] == 6);
    r.witness.reset();
    CHECK(membership_to_json(r)["witness"].is_null());
    CHECK(membership_to_json(r)["witness_words"].is_null());
  }
}
