#include "doctest.h"
#include "wnov/error.hpp"
#include "wnov/scalar.hpp"

using namespace wnov;

TEST_CASE("field parsing and names") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("fp:1009").characteristic() == 1009);
  CHECK(Field::prime(101).name() == "fp:101");
  CHECK_THROWS_AS(Field::parse("fp:1000"), Error);
  CHECK_THROWS_AS(Field::parse("fp:2"), Error);
  CHECK_THROWS_AS(Field::parse("r"), Error);
}

TEST_CASE("rational arithmetic is exact") {
  auto q     = Field::rationals();
  auto third = Scalar(q, mpq_class(1, 3));
  CHECK((third + third + third).is_one());
  CHECK((third * Scalar(q, 3L)).is_one());
  CHECK((Scalar(q, 1L) / Scalar(q, 3L)) == third);
  CHECK((-third).str() == "-1/3");
  CHECK((third - third).is_zero());
}

TEST_CASE("prime field arithmetic and symmetric printing") {
  auto f = Field::prime(7);
  CHECK(Scalar(f, 10L).residue() == 3);
  CHECK(Scalar(f, -1L).residue() == 6);
  CHECK(Scalar(f, 6L).str() == "-1");
  CHECK(Scalar(f, 3L).str() == "3");
  CHECK(Scalar(f, 4L).str() == "-3");
  for (long a = 1; a < 7; ++a) {
    CHECK((Scalar(f, a) / Scalar(f, a)).is_one());
    CHECK((Scalar(f, a) * Scalar(f, modular::inverse(a, 7))).is_one());
  }
  CHECK(Scalar(f, mpq_class(1, 2)).residue() == 4);
}

TEST_CASE("mixing fields throws") {
  CHECK_THROWS_AS(Scalar(Field::rationals(), 1L) + Scalar(Field::prime(5), 1L),
                  FieldMismatch);
  CHECK_THROWS_AS((void) Scalar(Field::prime(5), 0L).rational(), Error);
  CHECK_THROWS_AS(Scalar(Field::rationals(), 1L) / Scalar(Field::rationals()),
                  Error);
}
