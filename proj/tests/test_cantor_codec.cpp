#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "corpus.hpp"
#include "orderspace/cantor_codec.hpp"
#include "orderspace/error.hpp"

namespace orderspace {
  namespace {

    TEST(PairIndex, Examples) {
      EXPECT_EQ(pair_index(0, 1, 3), 0u);
      EXPECT_EQ(pair_index(1, 0, 3), 2u);
      EXPECT_EQ(pair_index(2, 1, 3), 5u);
      EXPECT_THROW(pair_index(1, 1, 3), InvalidInput);
      EXPECT_THROW(pair_index(0, 3, 3), InvalidInput);
    }

    TEST(PairIndex, IsABijection) {
      for (std::size_t n = 2; n <= 7; ++n) {
        std::set<std::size_t> seen;
        std::size_t expected = 0;
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            if (a != b) {
              EXPECT_EQ(pair_index(a, b, n), expected++);
              seen.insert(pair_index(a, b, n));
            }
          }
        }
        EXPECT_EQ(seen.size(), n * (n - 1));
      }
    }

    TEST(Encode, Examples) {
      std::vector<Element> up{0, 1, 2};
      std::vector<Element> down{2, 1, 0};
      EXPECT_EQ(encode(OrderRelation::from_ranking(up)).str(), "110100");
      EXPECT_EQ(encode(OrderRelation::from_ranking(down)).str(), "001011");
      std::vector<Element> single{0};
      EXPECT_EQ(encode(OrderRelation::from_ranking(single)).str(), "");
      EXPECT_THROW(encode(OrderRelation(3)), InvalidInput);
    }

    TEST(Decode, Rejections) {
      auto const m = trivial_quandle(3).magma();
      auto const flipped = decode(ChiVector(3, "111100"), m, Side::right);
      ASSERT_TRUE(std::holds_alternative<Rejection>(flipped));
      EXPECT_EQ(std::get<Rejection>(flipped).violation.condition, Condition::antisymmetry);

      // (0,1), (1,2) set, (0,2) clear, (2,0) set
      auto const cyc = decode(ChiVector(3, "100110"), m, Side::right);
      ASSERT_TRUE(std::holds_alternative<Rejection>(cyc));
      EXPECT_EQ(std::get<Rejection>(cyc).violation.condition, Condition::transitivity);

      EXPECT_THROW(decode(ChiVector(2, "10"), m, Side::right), InvalidInput);
      EXPECT_THROW(ChiVector(3, "1101"), InvalidInput);
      EXPECT_THROW(ChiVector(3, "11010x"), InvalidInput);
    }

    TEST(Decode, RoundTripOnCorpus) {
      for (auto const& q : testing::all_quandles(4)) {
        for (auto side : {Side::left, Side::right, Side::bi}) {
          std::set<std::string> seen;
          for (auto const& r : enumerate_all(q, side)) {
            auto const chi = encode(r);
            EXPECT_TRUE(seen.insert(chi.str()).second);
            auto const back = decode(chi, q, side);
            ASSERT_TRUE(std::holds_alternative<OrderRelation>(back));
            EXPECT_EQ(std::get<OrderRelation>(back), r);
          }
        }
      }
    }

    TEST(SubbasisBit, AgreesWithConstrainedEnumeration) {
      auto const m = trivial_quandle(4).magma();
      auto const all = enumerate_all(m, Side::right);
      for (Element a = 0; a < 4; ++a) {
        for (Element b = 0; b < 4; ++b) {
          if (a == b) {
            continue;
          }
          std::set<std::string> in;
          for (auto const& r : enumerate_all(m, Side::right, ConstraintSet({{a, b}}))) {
            in.insert(encode(r).str());
          }
          for (auto const& r : all) {
            auto const chi = encode(r);
            EXPECT_EQ(subbasis_bit(chi, a, b), in.contains(chi.str()));
          }
        }
      }
      std::vector<Element> up{0, 1, 2};
      auto const chi = encode(OrderRelation::from_ranking(up));
      EXPECT_TRUE(subbasis_bit(chi, 0, 2));
      EXPECT_FALSE(subbasis_bit(chi, 2, 0));
    }

    TEST(ChiFile, ReadWrite) {
      std::stringstream s;
      write_chi(s, ChiVector(3, "110100"), Side::bi);
      EXPECT_EQ(s.str(), "chi 3 bi\n110100\n");
      auto const f = read_chi(s, "x.chi");
      EXPECT_EQ(f.side, Side::bi);
      ASSERT_EQ(f.vectors.size(), 1u);
      EXPECT_EQ(f.vectors.front().str(), "110100");

      std::istringstream bulk("110100\n001011\n");
      auto const g = read_chi(bulk, "bulk", std::pair{std::size_t{3}, Side::right});
      EXPECT_EQ(g.vectors.size(), 2u);

      std::istringstream bad("chi 3 up\n110100\n");
      EXPECT_THROW(read_chi(bad, "bad"), ParseError);
      std::istringstream shortline("chi 3 left\n1101\n");
      try {
        read_chi(shortline, "short.chi");
        FAIL();
      } catch (ParseError const& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.token(), "1101");
      }
      std::istringstream one("chi 1 left\n");
      EXPECT_EQ(read_chi(one, "one").vectors.front().length(), 0u);
    }

  }  // namespace
}  // namespace orderspace
