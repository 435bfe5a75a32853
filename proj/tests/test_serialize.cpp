#include <doctest.h>

#include <cmath>
#include <limits>

#include "steiner/errors.hpp"
#include "steiner/serialize.hpp"

using namespace steiner;

TEST_CASE("number formatting round-trips exactly") {
  for (double x : {0.0, -0.0, 1.0 / 3.0, 6.02214076e23, 4.9e-324, -1.7976931348623157e308}) {
    CHECK(parse_number(format_number(x)) == x);
  }
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(std::isnan(parse_number("nan")));
  CHECK_THROWS_AS(parse_number("1.5x"), DomainError);
}

TEST_CASE("polynomial JSON round trip is byte-identical") {
  for (BodyKind k : {BodyKind::Ball, BodyKind::Cube, BodyKind::CrossPolytope, BodyKind::Simplex}) {
    const FamilyInstance body{k, 9, 1.25};
    const auto m = minkowski_polynomial(body);
    const std::string a = to_json(m).dump();
    CHECK(to_json(minkowski_from_json(Json::parse(a))).dump() == a);
    const auto r = renormalized(body);
    const std::string b = to_json(r).dump(2);
    CHECK(to_json(renormalized_from_json(Json::parse(b))).dump(2) == b);
    const auto j = Json::parse(b);
    CHECK(j.at("kind") == std::string(to_string(k)));
    CHECK(j.at("coefficients").size() == 10);
    CHECK(j.at("mu").size() == 10);
  }
  CHECK_THROWS_AS(minkowski_from_json(to_json(renormalized({BodyKind::Cube, 2, 1.0}))), DomainError);
}

TEST_CASE("coefficient table outputs") {
  const auto table = coefficient_table({BodyKind::Cube, 2, 1.0});
  const std::string csv = to_csv(table);
  CHECK(csv.rfind("l,m,W,V,c,mu\r\n", 0) == 0);
  CHECK(csv.find("\r\n2,") != std::string::npos);
  const Json j = to_json(table);
  CHECK(parse_number(j.at("mu").at(2).get<std::string>()) ==
        doctest::Approx(0.7853981634).epsilon(1e-10));
}

TEST_CASE("root sets serialize roots as decimal-string pairs") {
  const auto rs = find_roots(renormalized({BodyKind::Cube, 2, 1.0}));
  const Json j = to_json(rs);
  REQUIRE(j.at("roots").size() == 2);
  CHECK(j.at("roots").at(0).size() == 2);
  CHECK(j.at("roots").at(0).at(0).is_string());
  const Json rep = to_json(classify_zeros(rs));
  CHECK(rep.at("all_negative_real") == true);
}

TEST_CASE("CSV quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}
