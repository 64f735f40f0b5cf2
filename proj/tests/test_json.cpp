#include <doctest.h>

#include "schurkit/conjugate_engine.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/json_io.hpp"

using namespace schurkit;

TEST_CASE("partition json") {
    CHECK(to_json(Partition{5, 2, 1}).dump() == "[5,2,1]");
    CHECK(to_json(Partition{}).dump() == "[]");
    CHECK(partition_from_json(json::parse("[3,2,1,1,1]")) == Partition{3, 2, 1, 1, 1});
    CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), NotAPartition);
    CHECK_THROWS_AS(partition_from_json(json::parse("{\"a\":1}")), ParseError);
}

TEST_CASE("tableau json") {
    CHECK(to_json(Tableau({{1, 1}, {2}})).dump() == "[[1,1],[2]]");
}

TEST_CASE("polynomial json round-trips") {
    MonomialPolynomial p(3);
    p.add_term({2, 1, 0}, 1);
    p.add_term({1, 1, 1}, 2);
    auto j = to_json(p);
    CHECK(j.dump() == R"({"nvars":3,"terms":[{"exponents":[2,1,0],"coeff":1},{"exponents":[1,1,1],"coeff":2}]})");
    CHECK(polynomial_from_json(j) == p);
    CHECK(polynomial_from_json(to_json(MonomialPolynomial(2))) == MonomialPolynomial(2));
}

TEST_CASE("expansion json round-trips") {
    SchurExpansion e;
    e.add(Partition{2, 1}, 3);
    e.add(Partition{3}, -1);
    auto j = to_json(e);
    CHECK(j.dump() == R"({"terms":[{"partition":[3],"coeff":-1},{"partition":[2,1],"coeff":3}]})");
    CHECK(schur_expansion_from_json(j) == e);
}

TEST_CASE("contract report json") {
    FixedPartitionSequence a, b;
    a.set(1, 3);
    a.set(2, 2);
    a.set(3, 1);
    a.set(4, 1);
    a.set(5, 1);
    b.set(2, 7);
    auto [out, report] = conjgte_instrumented(a, b, true);
    auto j = to_json(report);
    CHECK(j["passed"] == false);
    REQUIRE(j["violations"].size() >= 1);
    const auto& v = j["violations"][0];
    CHECK(v["id"] == "requires.b_zero");
    CHECK(v["point"] == "entry");
    CHECK(v["bindings"]["k"] == 2);
    CHECK(v["bindings"]["B[k]"] == 7);
    CHECK(j["variants"].contains("outer"));
    CHECK(j["variants"].contains("inner"));
    CHECK(j["variants"].contains("for"));

    FixedPartitionSequence zeros;
    auto [ok_out, ok] = conjgte_instrumented(a, zeros, true);
    auto k = to_json(ok);
    CHECK(k["passed"] == true);
    CHECK(k["violations"].empty());
    CHECK(k["writes"] == json::parse("[1,2,3]"));
    CHECK(k["variants"]["outer"] == json::parse("[99,98,97]"));
    CHECK_FALSE(k.contains("trace"));
}
