#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "novelty/io.hpp"
#include "novelty/rng.hpp"
#include "novelty/simulator.hpp"

namespace novelty::io {
namespace {

Cohort traces_from(const std::string& text, FillPolicy policy = FillPolicy::kForwardFill) {
  std::istringstream in(text);
  return parse_traces(in, policy);
}

template <typename F>
ParseError expect_parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError(0, "");
}

TEST(IngestTraces, ForwardFillCarriesLastCount) {
  const auto c = traces_from("story_id,t_min,diggs\ns1,0,10\ns1,2,12\n");
  ASSERT_EQ(c.size(), 1u);
  const std::vector<Sample> want = {{0, 10.0}, {1, 10.0}, {2, 12.0}};
  EXPECT_EQ(std::vector<Sample>(c[0].samples().begin(), c[0].samples().end()), want);
  EXPECT_EQ(c.horizon(), 2);
}

TEST(IngestTraces, StrictRejectsGap) {
  const auto e = expect_parse_error([] { traces_from("story_id,t_min,diggs\ns1,0,10\ns1,2,12\n", FillPolicy::kStrict); });
  EXPECT_EQ(e.row(), 2u);
  EXPECT_NE(std::string(e.what()).find("gap at t=1"), std::string::npos) << e.what();
}

TEST(IngestTraces, HorizonIsShortestStory) {
  std::string text = "story_id,t_min,diggs\n";
  for (int t = 0; t <= 100; ++t) text += "a," + std::to_string(t) + "," + std::to_string(5 + t) + "\n";
  for (int t = 0; t <= 90; ++t) text += "b," + std::to_string(t) + "," + std::to_string(7 + 2 * t) + "\n";
  const auto c = traces_from(text, FillPolicy::kStrict);
  EXPECT_EQ(c.horizon(), 90);
  EXPECT_EQ(c[0].id(), "a");
  EXPECT_EQ(c[1].id(), "b");
}

TEST(IngestTraces, InterleavedAndUnsortedRows) {
  const auto c = traces_from("story_id,t_min,diggs\nb,1,4\na,1,2\nb,0,3\na,0,1\n", FillPolicy::kStrict);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].id(), "b");
  EXPECT_EQ(c.count(0, 0), 3.0);
  EXPECT_EQ(c.count(1, 1), 2.0);
}

TEST(IngestTraces, RowNumberedErrors) {
  const std::string h = "story_id,t_min,diggs\n";
  EXPECT_EQ(expect_parse_error([&] { traces_from(h + "s,0,1\ns,1\n"); }).row(), 2u);
  EXPECT_EQ(expect_parse_error([&] { traces_from(h + "s,0,1\ns,x,2\n"); }).row(), 2u);
  EXPECT_EQ(expect_parse_error([&] { traces_from(h + "s,0,1\ns,1,2.5abc\n"); }).row(), 2u);
  EXPECT_EQ(expect_parse_error([&] { traces_from(h + "s,0,1\ns,1,0\n"); }).row(), 2u);
  EXPECT_EQ(expect_parse_error([&] { traces_from(h + "s,0,1\ns,1,nan\n"); }).row(), 2u);

  const auto mono = expect_parse_error([&] { traces_from(h + "s,0,5\ns,1,6\ns,2,4\n"); });
  EXPECT_EQ(mono.row(), 3u);
  EXPECT_NE(std::string(mono.what()).find("non-monotone count at t=2"), std::string::npos);

  const auto origin = expect_parse_error([&] { traces_from(h + "s,1,5\ns,2,6\n"); });
  EXPECT_EQ(origin.row(), 1u);
  EXPECT_NE(std::string(origin.what()).find("missing t=0"), std::string::npos);

  const auto dup = expect_parse_error([&] { traces_from(h + "s,0,5\ns,0,6\n"); });
  EXPECT_EQ(dup.row(), 2u);

  EXPECT_EQ(expect_parse_error([&] { traces_from(""); }).row(), 0u);
  EXPECT_EQ(expect_parse_error([&] { traces_from(h); }).row(), 0u);
  EXPECT_EQ(expect_parse_error([&] { traces_from("id,t,n\ns,0,1\n"); }).row(), 0u);
}

TEST(IngestTraces, AcceptsCrlfAndBlankLines) {
  const auto c = traces_from("story_id,t_min,diggs\r\ns1,0,10\r\n\r\ns1,1,11\r\n", FillPolicy::kStrict);
  EXPECT_EQ(c.horizon(), 1);
  EXPECT_EQ(c.count(0, 1), 11.0);
}

TEST(IngestSaturation, ValuesInFileOrder) {
  std::istringstream in("story_id,n_inf\nx,700\ny,12.5\nz,3000\n");
  EXPECT_EQ(parse_saturation(in), (std::vector<double>{700.0, 12.5, 3000.0}));
}

TEST(IngestSaturation, Errors) {
  std::istringstream zero("story_id,n_inf\nx,700\ny,0\n");
  const auto e = expect_parse_error([&] { parse_saturation(zero); });
  EXPECT_EQ(e.row(), 2u);
  EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);

  std::istringstream dup("story_id,n_inf\nx,700\nx,800\n");
  EXPECT_EQ(expect_parse_error([&] { parse_saturation(dup); }).row(), 2u);

  std::istringstream bad("story_id,n_inf\nx,seven\n");
  EXPECT_EQ(expect_parse_error([&] { parse_saturation(bad); }).row(), 1u);
}

TEST(IngestNovelty, RequiresUnitFirstValueAndConsecutiveT) {
  std::istringstream ok("t,r\n1,1\n2,0.5\n3,-0.01\n");
  const auto c = parse_novelty(ok);
  EXPECT_EQ(c.horizon(), 3);
  EXPECT_TRUE(c.is_estimate());
  EXPECT_EQ(c.at(3), -0.01);

  std::istringstream first("t,r\n1,0.9\n2,0.5\n");
  EXPECT_THROW(parse_novelty(first), ParseError);
  std::istringstream skip("t,r\n1,1\n3,0.5\n");
  EXPECT_EQ(expect_parse_error([&] { parse_novelty(skip); }).row(), 2u);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(10.0), "10");
  EXPECT_EQ(format_number(0.1), "0.1");
  RandomStream rng(4);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::exp(40.0 * (rng.uniform() - 0.5));
    const auto s = format_number(v);
    EXPECT_EQ(std::stod(s), v) << s;
  }
}

TEST(EmitIngest, RoundTripIsLossless) {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    SimConfig cfg;
    cfg.n_stories = 25;
    cfg.horizon = 60;
    cfg.n0 = 3.7;
    cfg.growth = GrowthParams(0.05, 0.0072);
    cfg.novelty = NoveltyCurve::normalized_kww(0.4, 0.4, 60);
    cfg.master_seed = seed;
    const auto cohort = simulate_cohort(cfg);
    const auto text = traces_csv(cohort);
    const auto back = traces_from(text, FillPolicy::kStrict);
    EXPECT_EQ(back, cohort);
    EXPECT_EQ(traces_csv(back), text);
  }
}

TEST(EmitIngest, NoveltyRoundTrip) {
  const auto curve = NoveltyCurve::normalized_kww(0.4, 0.4, 200);
  std::istringstream in(novelty_csv(curve));
  const auto back = parse_novelty(in);
  ASSERT_EQ(back.horizon(), 200);
  for (int t = 1; t <= 200; ++t) EXPECT_EQ(back.at(t), curve.at(t));
}

TEST(WriteFileAtomic, ReplacesContentAndLeavesNoTemp) {
  const auto dir = std::filesystem::temp_directory_path() / ("novelty_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "second\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1u);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(write_file_atomic(dir / "missing" / "x.csv", "x"), Error);
}

TEST(Fnv1a64, ReferenceVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
  EXPECT_EQ(hex_digest(0xabcULL), "0000000000000abc");
}

}  // namespace
}  // namespace novelty::io
