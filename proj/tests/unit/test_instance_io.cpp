#include <doctest.h>

#include <cstdio>

#include <json.hpp>

#include "../helpers.hpp"
#include "jacring/errors.hpp"
#include "jacring/instance.hpp"

using namespace jacring;
using jacring::testing::elliptic_plus_line;

TEST_CASE("json round-trip preserves the instance and its digest") {
    Instance inst = elliptic_plus_line();
    std::string text = instance_to_json(inst);
    Instance back = instance_from_json(text);
    CHECK(back.n == inst.n);
    CHECK(back.d == inst.d);
    CHECK(back.e == inst.e);
    CHECK(back.F[0].terms == inst.F[0].terms);
    CHECK(back.G[0].terms == inst.G[0].terms);
    CHECK(instance_digest(back) == instance_digest(inst));
}

TEST_CASE("file round-trip") {
    Instance inst = random_instance(3, {2}, {1, 1}, FieldSpec::prime_field(10007), 3);
    std::string path = "io_roundtrip_tmp.json";
    save_instance(inst, path);
    Instance back = load_instance(path);
    std::remove(path.c_str());
    CHECK(instance_digest(back) == instance_digest(inst));
    CHECK(back.field == inst.field);
}

TEST_CASE("derived shape quantities") {
    Instance inst = random_instance(3, {2, 3}, {1, 4}, FieldSpec::rationals(), 1);
    CHECK(inst.r() == 2);
    CHECK(inst.s() == 2);
    CHECK(inst.m() == 1);
    CHECK(inst.d_total() == 5);
    CHECK(inst.e_total() == 5);
    CHECK(inst.d_max() == 3);
    CHECK(inst.e_max() == 4);
    CHECK(inst.delta_min() == 1);
}

TEST_CASE("schema violations carry json pointers") {
    // degree mismatch between declared d and the polynomial
    auto doc = nlohmann::json::parse(instance_to_json(elliptic_plus_line()));
    doc["d"] = {4};
    CHECK_THROWS_AS((void)instance_from_json(doc.dump()), SchemaError);

    CHECK_THROWS_AS((void)instance_from_json("{}"), SchemaError);
    CHECK_THROWS_AS((void)instance_from_json("{\"schema_version\":1}"), SchemaError);
}

TEST_CASE("validate rejects malformed shapes") {
    Instance inst = elliptic_plus_line();
    inst.n = 1;  // n must exceed r
    CHECK_THROWS_AS(inst.validate(), SchemaError);
}

TEST_CASE("random instances differ by seed, agree per seed") {
    Instance a = random_instance(2, {3}, {2}, FieldSpec::rationals(), 10);
    Instance b = random_instance(2, {3}, {2}, FieldSpec::rationals(), 10);
    Instance c = random_instance(2, {3}, {2}, FieldSpec::rationals(), 11);
    CHECK(instance_digest(a) == instance_digest(b));
    CHECK(instance_digest(a) != instance_digest(c));
}
