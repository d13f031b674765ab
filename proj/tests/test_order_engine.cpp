#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "orderspace/cantor_codec.hpp"
#include "orderspace/error.hpp"
#include "orderspace/order_engine.hpp"

namespace orderspace {
  namespace {

    std::set<std::string> chi_set(std::vector<OrderRelation> const& orders) {
      std::set<std::string> out;
      for (auto const& r : orders) {
        out.insert(encode(r).str());
      }
      return out;
    }

    OrderRelation ranked(std::vector<Element> ascending) {
      return OrderRelation::from_ranking(ascending);
    }

    TEST(VerifyOrder, TrivialQuandleExamples) {
      auto const m = trivial_quandle(3).magma();
      EXPECT_TRUE(verify_order(m, ranked({0, 1, 2}), Side::right).valid());
      auto const left = verify_order(m, ranked({0, 1, 2}), Side::left);
      ASSERT_FALSE(left.valid());
      auto const& v = *left.violation;
      EXPECT_EQ(v.condition, Condition::invariance);
      EXPECT_EQ(m.op(v.c, v.a), m.op(v.c, v.b));
    }

    TEST(VerifyOrder, AntisymmetryCheckedFirst) {
      auto const m = trivial_quandle(3).magma();
      std::vector<PairState> st(9, PairState::fails);
      st[0 * 3 + 1] = PairState::holds;
      st[1 * 3 + 0] = PairState::holds;
      auto const r = verify_order(m, OrderRelation(3, st), Side::right);
      ASSERT_FALSE(r.valid());
      EXPECT_EQ(r.violation->condition, Condition::antisymmetry);
      EXPECT_THROW(verify_order(m, OrderRelation(3), Side::right), InvalidInput);
    }

    TEST(Propagate, Examples) {
      auto const c2 = cyclic_group(2).magma();
      OrderRelation s(2);
      s.set(0, 1, PairState::holds);
      EXPECT_FALSE(propagate(c2, s, Side::left));

      auto const t = trivial_quandle(3).magma();
      OrderRelation u(3);
      u.set(0, 1, PairState::holds);
      u.set(1, 2, PairState::holds);
      auto const p = propagate(t, u, Side::right);
      ASSERT_TRUE(p);
      EXPECT_TRUE(p->holds(0, 2));
      EXPECT_EQ(p->state(2, 0), PairState::fails);
      // nothing else becomes decided beyond the reverses
      EXPECT_TRUE(p->completed());

      auto const empty = propagate(t, OrderRelation(3), Side::right);
      ASSERT_TRUE(empty);
      EXPECT_EQ(*empty, OrderRelation(3));
    }

    // Every completion of a propagated state that is an invariant order
    // must agree with the propagated decisions, and a contradiction must
    // mean no invariant order extends the state.
    TEST(Propagate, SoundAgainstBruteForce) {
      for (auto const& m : testing::all_magmas(3)) {
        for (auto side : {Side::left, Side::right, Side::bi}) {
          auto const orders = testing::brute_orders(m, side);
          for (Element a = 0; a < 3; ++a) {
            for (Element b = 0; b < 3; ++b) {
              if (a == b) {
                continue;
              }
              OrderRelation s(3);
              s.set(a, b, PairState::holds);
              auto const p = propagate(m, s, side);
              auto const bit = pair_index(a, b, 3);
              std::vector<std::string> extending;
              for (auto const& o : orders) {
                if (o[bit] == '1') {
                  extending.push_back(o);
                }
              }
              if (!p) {
                ASSERT_TRUE(extending.empty());
                continue;
              }
              for (auto const& o : extending) {
                for (Element x = 0; x < 3; ++x) {
                  for (Element y = 0; y < 3; ++y) {
                    if (x != y && p->state(x, y) != PairState::undecided) {
                      ASSERT_EQ(o[pair_index(x, y, 3)] == '1', p->holds(x, y));
                    }
                  }
                }
              }
            }
          }
        }
      }
    }

    TEST(Enumerate, Examples) {
      auto const t3 = trivial_quandle(3).magma();
      EXPECT_EQ(count_orders(t3, Side::right).count, 6u);
      auto const one = enumerate_all(t3, Side::right, ConstraintSet({{0, 1}, {1, 2}}));
      ASSERT_EQ(one.size(), 1u);
      EXPECT_EQ(one.front().ranking(), (std::vector<Element>{0, 1, 2}));
      EXPECT_EQ(count_orders(kei_quandle(cyclic_group(3)).magma(), Side::right).count, 0u);
      EXPECT_EQ(count_orders(trivial_quandle(4).magma(), Side::right).count, 24u);
      EXPECT_EQ(count_orders(trivial_quandle(2).magma(), Side::left).count, 0u);
      EXPECT_EQ(count_orders(cyclic_group(2).magma(), Side::left).count, 0u);
      EXPECT_TRUE(brute_force_orders(conj_quandle(symmetric_group(3)).magma(), Side::right).empty());
    }

    TEST(Enumerate, SingletonHasOneEmptyOrder) {
      auto const m = Magma::from_rows({{0}});
      for (auto side : {Side::left, Side::right, Side::bi}) {
        auto const all = enumerate_all(m, side);
        ASSERT_EQ(all.size(), 1u);
        EXPECT_EQ(encode(all.front()).str(), "");
      }
    }

    TEST(Enumerate, StreamIsDecreasingAndThreadIndependent) {
      auto const m = trivial_quandle(5).magma();
      auto const one = enumerate_all(m, Side::right);
      auto const four = enumerate_all(m, Side::right, {}, {std::nullopt, 4});
      ASSERT_EQ(one.size(), 120u);
      EXPECT_EQ(one, four);
      for (std::size_t i = 1; i < one.size(); ++i) {
        EXPECT_GT(encode(one[i - 1]).str(), encode(one[i]).str());
      }
    }

    TEST(Enumerate, LimitReportsTruncation) {
      auto const m = trivial_quandle(4).magma();
      std::uint64_t seen = 0;
      auto const s = enumerate(m, Side::right, {}, [&](auto const&) { ++seen; },
                               {std::uint64_t{5}, 1});
      EXPECT_EQ(seen, 5u);
      EXPECT_EQ(s.status, EnumerationStatus::truncated);
      auto const exact = enumerate(m, Side::right, {}, [](auto const&) {},
                                   {std::uint64_t{24}, 1});
      EXPECT_EQ(exact.status, EnumerationStatus::complete);
    }

    TEST(Enumerate, MatchesBruteForceOnQuandlesOfSize4) {
      for (auto const& q : testing::all_quandles(4)) {
        for (auto side : {Side::left, Side::right, Side::bi}) {
          ASSERT_EQ(chi_set(enumerate_all(q, side)), testing::brute_orders(q, side));
        }
      }
    }

    TEST(Enumerate, BiIsLeftIntersectRight) {
      for (auto const& m : testing::all_magmas(3)) {
        auto const l = chi_set(enumerate_all(m, Side::left));
        auto const r = chi_set(enumerate_all(m, Side::right));
        std::set<std::string> both;
        std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                              std::inserter(both, both.begin()));
        ASSERT_EQ(chi_set(enumerate_all(m, Side::bi)), both);
      }
    }

    TEST(Enumerate, EveryOrderVerifies) {
      for (auto const& [name, g] : testing::small_groups()) {
        auto const q = conj_quandle(g).magma();
        for (auto side : {Side::left, Side::right, Side::bi}) {
          for (auto const& r : enumerate_all(q, side)) {
            EXPECT_TRUE(verify_order(q, r, side).valid()) << name;
          }
        }
      }
    }

    TEST(Constraints, RejectBadPairs) {
      EXPECT_THROW(ConstraintSet({{1, 1}}), InvalidInput);
      EXPECT_THROW(ConstraintSet({{0, 1}, {1, 0}}), InvalidInput);
      ConstraintSet const a({{0, 1}});
      EXPECT_FALSE(a.merged(ConstraintSet({{1, 0}})));
      EXPECT_EQ(a.merged(ConstraintSet({{0, 1}, {1, 2}}))->pairs().size(), 2u);
    }

    TEST(Fip, Examples) {
      auto const m = trivial_quandle(3).magma();
      std::vector<ConstraintSet> fam{ConstraintSet({{0, 1}}), ConstraintSet({{1, 2}}),
                                     ConstraintSet({{0, 2}})};
      auto const r = fip_check(m, Side::right, fam);
      EXPECT_TRUE(r.finite_intersections_nonempty);
      EXPECT_TRUE(r.whole_intersection_nonempty);
      ASSERT_TRUE(r.witness);
      EXPECT_EQ(r.witness->ranking(), (std::vector<Element>{0, 1, 2}));

      std::vector<ConstraintSet> clash{ConstraintSet({{0, 1}}), ConstraintSet({{1, 0}})};
      auto const c = fip_check(m, Side::right, clash);
      EXPECT_FALSE(c.finite_intersections_nonempty);
      EXPECT_FALSE(c.whole_intersection_nonempty);
      ASSERT_TRUE(c.empty_subfamily);
      EXPECT_EQ(*c.empty_subfamily, (std::vector<std::size_t>{0, 1}));

      auto const e = fip_check(m, Side::right, {});
      EXPECT_TRUE(e.finite_intersections_nonempty);
      EXPECT_TRUE(e.whole_intersection_nonempty);
      EXPECT_TRUE(e.witness);

      // no orders at all: the empty subfamily already fails
      auto const k = fip_check(kei_quandle(cyclic_group(3)).magma(), Side::right, {});
      EXPECT_FALSE(k.finite_intersections_nonempty);
      EXPECT_FALSE(k.whole_intersection_nonempty);
    }

    TEST(Fip, BooleansAgreeOnRandomFamilies) {
      auto const m = trivial_quandle(4).magma();
      std::vector<ConstraintSet::Pair> pairs;
      for (Element a = 0; a < 4; ++a) {
        for (Element b = 0; b < 4; ++b) {
          if (a != b) {
            pairs.push_back({a, b});
          }
        }
      }
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          for (std::size_t k = 0; k < pairs.size(); k += 3) {
            std::vector<ConstraintSet> fam{ConstraintSet({pairs[i]}),
                                           ConstraintSet({pairs[j]}),
                                           ConstraintSet({pairs[k]})};
            auto const r = fip_check(m, Side::right, fam);
            ASSERT_EQ(r.finite_intersections_nonempty, r.whole_intersection_nonempty);
          }
        }
      }
    }

    TEST(Lex, TrivialSquare) {
      auto const t2 = trivial_quandle(2).magma();
      ProductMagma const p({t2, t2}, {0, 0});
      std::vector<OrderRelation> f{ranked({0, 1}), ranked({0, 1})};
      auto const r = lex_order(p, f, Side::right);
      EXPECT_EQ(r.ranking(), (std::vector<Element>{0, 1, 2, 3}));
      EXPECT_TRUE(verify_order(p.materialize(), r, Side::right).valid());

      std::set<std::string> seen;
      for (auto const& a : {ranked({0, 1}), ranked({1, 0})}) {
        for (auto const& b : {ranked({0, 1}), ranked({1, 0})}) {
          std::vector<OrderRelation> fs{a, b};
          seen.insert(encode(lex_order(p, fs, Side::right)).str());
        }
      }
      EXPECT_EQ(seen.size(), 4u);
    }

    TEST(Lex, SingleFactorAndInvalidFactor) {
      auto const t3 = trivial_quandle(3).magma();
      ProductMagma const p({t3}, {0});
      std::vector<OrderRelation> f{ranked({2, 0, 1})};
      EXPECT_EQ(lex_order(p, f, Side::right), f.front());
      EXPECT_THROW(lex_order(p, f, Side::left), InvalidInput);
    }

    TEST(TextFormats, ConstraintsAndRanking) {
      std::istringstream c("# pairs\n0 1\n1 2\n");
      EXPECT_EQ(read_constraints(c).pairs().size(), 2u);
      std::istringstream bad("0 1 2\n");
      EXPECT_THROW(read_constraints(bad), ParseError);
      std::istringstream fam("0 1\n1 0 2 1\n");
      auto const f = read_families(fam);
      ASSERT_EQ(f.size(), 2u);
      EXPECT_EQ(f[1].pairs().size(), 2u);

      std::stringstream s;
      write_ranking(s, ranked({2, 0, 1}));
      EXPECT_EQ(s.str(), "order 3\n2 0 1\n");
      EXPECT_EQ(read_ranking(s).ranking(), (std::vector<Element>{2, 0, 1}));
      std::istringstream dup("order 3\n0 0 1\n");
      EXPECT_THROW(read_ranking(dup), ParseError);
    }

  }  // namespace
}  // namespace orderspace
