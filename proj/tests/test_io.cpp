#include <gtest/gtest.h>

#include "pluri/io.hpp"

using namespace pluri;

TEST(Io, TypeRoundTrip) {
  const FibrationNumericalType t(Characteristic(3), 1, 2, true,
                                 {FibreDatum::tame(4), FibreDatum::wild(Characteristic(3), 2, 1, 1, 3)});
  const auto j = io::to_json(t);
  const auto back = io::type_from_json(io::parse(j.dump()));
  EXPECT_EQ(back, t);
  EXPECT_EQ(io::to_json(back), j);
}

TEST(Io, UnsortedAndShortFibresAccepted) {
  const auto t = io::type_from_json(io::parse(R"({"fibres":[{"m":6},{"m":2},{"m":6}]})"));
  EXPECT_EQ(t.multiplicities(), (std::vector<int>{2, 6, 6}));
  EXPECT_EQ(t.fibres()[0].a, 1);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(io::parse("{"), InvalidInput);
  EXPECT_THROW(io::type_from_json(io::parse("[]")), InvalidInput);
  EXPECT_THROW(io::type_from_json(io::parse(R"({"fibres":[{"m":"x"}]})")), InvalidInput);
  EXPECT_THROW(io::type_from_json(io::parse(R"({"p":4,"fibres":[]})")), InvalidInput);
}

TEST(Io, JumpProfileRoundTrip) {
  const auto profiles = enumerate_jump_profiles(4, 1, 2);
  for (const auto& jp : profiles)
    EXPECT_EQ(io::jump_profile_from_json(io::to_json(jp), 2, 1), jp);
}

TEST(Io, SeriesCsv) {
  const auto t = io::type_from_json(io::parse(R"({"fibres":[{"m":2},{"m":6},{"m":6}]})"));
  const auto csv = io::series_csv({t}, 13);
  EXPECT_NE(csv.find("P_13"), std::string::npos);
  EXPECT_NE(csv.find("\"p0 g0 chi0 [2,6,6]\",0,0,0,1,1,2,0,1,1,2,2,3,1"), std::string::npos);
}
