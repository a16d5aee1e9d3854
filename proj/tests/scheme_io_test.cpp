#include <gtest/gtest.h>

#include <string>

#include "anonrs/construct.hpp"
#include "anonrs/error.hpp"
#include "anonrs/scheme.hpp"

namespace anonrs {
namespace {

TEST(SchemeIoTest, ExactFormat) {
  const Field f = Field::prime(101);
  const Scheme s{3, 2, f, {f.from_int(5), f.from_int(17), f.from_int(99)}, Certification::full};
  EXPECT_EQ(write_scheme(s),
            "anonrs-scheme v1\nfield: prime 101\nn: 3\nk: 2\ncertified: full\nalpha: 5 17 99\n");
}

TEST(SchemeIoTest, RoundTripPrimeAndExtension) {
  SearchOptions o;
  o.seed = 4;
  const Scheme a = random_search(5, 2, o).scheme;
  const std::string text = write_scheme(a);
  EXPECT_EQ(write_scheme(read_scheme(text)), text);

  ExplicitOptions eo;
  eo.p = 5;
  eo.toy = ToyParams{2, 4};
  const Scheme b = construction27(2, 4, eo);
  const std::string ext = write_scheme(b);
  EXPECT_NE(ext.find("field: ext 5 4 "), std::string::npos);
  const Scheme back = read_scheme(ext);
  EXPECT_EQ(back.alpha, b.alpha);
  EXPECT_EQ(write_scheme(back), ext);
}

TEST(SchemeIoTest, Rejects) {
  EXPECT_THROW(read_scheme("anonrs-scheme v2\n"), Error);
  EXPECT_THROW(read_scheme("anonrs-scheme v1\nfield: prime 101\nn: 3\nk: 2\ncertified: full\nalpha: 5 17\n"),
               Error);
  EXPECT_THROW(read_scheme("anonrs-scheme v1\nfield: prime 100\nn: 1\nk: 1\ncertified: full\nalpha: 5\n"),
               Error);
  EXPECT_THROW(read_scheme("anonrs-scheme v1\nfield: prime 101\nn: 1\nk: 1\ncertified: maybe\nalpha: 5\n"),
               Error);
  // Duplicates parse; validation reports them.
  const Scheme dup =
      read_scheme("anonrs-scheme v1\nfield: prime 101\nn: 3\nk: 2\ncertified: none\nalpha: 5 6 5\n");
  try {
    validate_scheme(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::duplicate_alpha);
    EXPECT_NE(std::string(e.what()).find("alpha_1 = alpha_3"), std::string::npos);
  }
}

TEST(SchemeIoTest, ValidateRejectsZeroAndShape) {
  const Field f = Field::prime(101);
  EXPECT_THROW(validate_scheme(Scheme{3, 2, f, {f.from_int(0), f.from_int(1), f.from_int(2)}, Certification::none}),
               Error);
  EXPECT_THROW(validate_scheme(Scheme{3, 3, f, {f.from_int(3), f.from_int(1), f.from_int(2)}, Certification::none}),
               Error);
}

TEST(SharesIoTest, RoundTrip) {
  const Field f = Field::extension(3, {1, 0, 1});
  const std::vector<Element> shares{f.generator(), f.one(), f.zero()};
  const std::string text = write_shares(f, shares);
  EXPECT_EQ(text, "anonrs-shares v1\n0,1\n1,0\n0,0\n");
  EXPECT_EQ(read_shares(f, text), shares);
  EXPECT_EQ(write_shares(f, read_shares(f, text)), text);
  EXPECT_THROW(read_shares(f, "0,1\n"), Error);
}

}  // namespace
}  // namespace anonrs
