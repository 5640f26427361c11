#include "fixtures.hpp"

using namespace crystal;
using namespace fixture;

TEST_CASE("field elements and descriptors") {
  CHECK(to_json(t9()).dump() == "[0,1]");
  CHECK(to_json(gf9()).dump() == R"({"N":2,"modulus":[1,0,1],"p":3})");
  CHECK(fq_from_json(gf9(), Json::parse("[0,1]")) == t9());
  CHECK(fq_from_json(gf9(), Json::parse("[1]")) == Fq::one(gf9()));
  CHECK(fq_from_json(gf9(), Json::parse("-1")) == Fq::from_int(gf9(), 2));
  CHECK_THROWS_AS(fq_from_json(gf9(), Json::parse("[0,0,1]")), Error);
  CHECK_THROWS_AS(fq_from_json(gf9(), Json::parse("\"x\"")), Error);
}

TEST_CASE("spaces and data round trip") {
  const QuadraticSpace v = standard_space(5, 2);
  CHECK(to_json(v).dump() == R"({"dim":4,"gram":[[0,4,0,0],[4,0,0,0],[0,0,1,0],[0,0,0,3]],"p":5})");
  CHECK(space_from_json(to_json(v)) == v);
  for (const CharDatum& d : {plane_datum(), datum(3, 2, {1}), datum(5, 3, {0, 2})}) {
    const Json j = to_json(d);
    CHECK(datum_from_json(j) == d);
    CHECK(to_json(datum_from_json(j)) == j);
  }
}

TEST_CASE("extended data round trip") {
  const CharDatum d = datum(3, 2, {0});
  const MatrixFq space = valid_bfield_space(d);
  const ExtendedDatum ed = extend_by_bfield(BFieldClass{d, space.row(1).transpose()});
  const ExtendedDatum back = extended_from_json(to_json(ed));
  CHECK(back.ktilde == ed.ktilde);
  CHECK(to_json(back) == to_json(ed));
}

TEST_CASE("reports use decimal strings for big integers") {
  const Json r = to_json(count_fm_from_constants(3, 11, std::vector<bool>(10, true)));
  CHECK(r["formula_count"] == "5230117552");
  CHECK(r["isotropic_count"] == "10460235104");
  CHECK(r["bruteforce_count"].is_null());
}

TEST_CASE("structure constants from JSON") {
  const auto a = constants_from_json(3, 0, Json::parse("[[0,1]]"));
  REQUIRE(a.size() == 1);
  CHECK(a[0].field()->degree == 2);
  CHECK(a[0] == t9());
  const auto b = constants_from_json(3, 0, Json::parse("[1, [2]]"));
  CHECK(b[0].field()->degree == 1);
  CHECK(b[1] == Fq::from_int(prime_field(3), 2));
  CHECK(constants_from_json(3, 4, Json::parse("[[0,1]]"))[0].field()->degree == 4);
}
