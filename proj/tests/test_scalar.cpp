#include "doctest.h"

#include "error.hpp"
#include "rng.hpp"
#include "scalar.hpp"

using namespace qci;

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(5);
  CHECK(f.characteristic() == 5);
  CHECK(f.spec_string() == "p:5");

  const Scalar two = f.from_int(2);
  const Scalar four = f.from_int(4);
  CHECK((two + four).to_string() == "1");
  CHECK((f.from_int(3) * four).to_string() == "2");
  CHECK((two - four) == f.from_int(3));
  CHECK(two.pow(4) == f.one());  // Fermat
  CHECK(two * two.inverse() == f.one());
  CHECK(f.from_int(-1) == four);
  CHECK(f.from_int(0).is_zero());
  CHECK_FALSE(four.is_zero());
}

TEST_CASE("prime field parsing round trip") {
  const Field f = Field::prime(7);
  for (int v = -10; v <= 10; ++v) {
    const Scalar s = f.from_int(v);
    CHECK(f.parse(s.to_string()) == s);
  }
}

TEST_CASE("field spec parsing") {
  CHECK(Field::parse_spec("p:5").same(Field::prime(5)));
  CHECK(Field::parse_spec("cyclo:3").same(Field::cyclotomic(3)));
  CHECK(Field::parse_spec("cyclo:3").characteristic() == 0);
  CHECK_THROWS_AS(Field::parse_spec("q:5"), QciError);
  CHECK_THROWS_AS(Field::parse_spec("p:4"), QciError);  // not prime
}

TEST_CASE("primitive roots of unity in prime fields") {
  // 4 generates the square roots of 1 mod 5
  CHECK(primitive_root_of_unity(Field::prime(5), 2) ==
        Field::prime(5).from_int(4));

  const Field f7 = Field::prime(7);
  const Scalar r = primitive_root_of_unity(f7, 3);
  CHECK(r.pow(3) == f7.one());
  CHECK(r != f7.one());

  // 4 does not divide 7 - 1, so F_7 has no primitive fourth root
  bool threw = false;
  try {
    primitive_root_of_unity(f7, 4);
  } catch (const QciError& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::NoPrimitiveRoot);
  }
  CHECK(threw);
}

TEST_CASE("cyclotomic field basics") {
  const Field f = Field::cyclotomic(3);
  const Scalar z = primitive_root_of_unity(f, 3);
  CHECK(z.to_string() == "0,1");
  CHECK(z.pow(3) == f.one());
  // 1 + z + z^2 = 0: the minimal polynomial of z
  CHECK((f.one() + z + z * z).is_zero());
  CHECK(z * z.inverse() == f.one());
  CHECK(f.parse(z.to_string()) == z);
}

TEST_CASE("gaussian rationals") {
  const Field f = Field::cyclotomic(4);
  const Scalar i = primitive_root_of_unity(f, 4);
  CHECK(i * i == f.from_int(-1));
  CHECK(i.pow(4) == f.one());
  const Scalar half = f.from_int(1) * f.from_int(2).inverse();
  CHECK(half + half == f.one());
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("mixing fields is rejected") {
  const Scalar a = Field::prime(5).from_int(1);
  const Scalar b = Field::prime(7).from_int(1);
  bool threw = false;
  try {
    (void)(a + b);
  } catch (const QciError& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  CHECK(threw);
}

TEST_CASE("seeded sampling is reproducible") {
  const Field f = Field::cyclotomic(3);
  Rng r1(42), r2(42);
  for (int i = 0; i < 20; ++i)
    CHECK(sample_scalar(f, r1) == sample_scalar(f, r2));

  Rng r3(42);
  for (int i = 0; i < 20; ++i)
    CHECK_FALSE(sample_nonzero_scalar(f, r3).is_zero());

  // distinct trial streams agree across calls
  Rng a = trial_rng(9, 4), b = trial_rng(9, 4);
  CHECK(a.next() == b.next());
}
