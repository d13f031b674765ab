// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "orderspace/cantor_codec.hpp"
#include "orderspace/cone_engine.hpp"
#include "orderspace/group_oracles.hpp"
#include "orderspace/magma.hpp"
#include "orderspace/order_engine.hpp"

using namespace orderspace;
namespace ot = orderspace::testing;

namespace {

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  struct Outcome {
    bool pass = true;
    std::string detail;
  };

  void fail(Outcome& o, std::string const& why) {
    if (o.pass) {
      o.detail = why;
    }
    o.pass = false;
  }

  std::set<std::string> engine_set(Magma const& m, Side side) {
    std::set<std::string> s;
    enumerate(m, side, {}, [&](OrderRelation const& r) { s.insert(encode(r).str()); });
    return s;
  }

  constexpr Side sides[] = {Side::left, Side::right, Side::bi};

  // (i) enumerator against the permutation filter
  Outcome criterion_1() {
    Outcome o;
    auto const t0 = Clock::now();
    std::vector<Magma> corpus;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto all = ot::all_magmas(n);
      corpus.insert(corpus.end(), all.begin(), all.end());
    }
    auto const q4 = ot::all_quandles(4);
    corpus.insert(corpus.end(), q4.begin(), q4.end());
    std::size_t cases = 0;
    for (auto const& m : corpus) {
      for (auto side : sides) {
        ++cases;
        if (engine_set(m, side) != ot::brute_orders(m, side)) {
          fail(o, "mismatch on a size-" + std::to_string(m.size()) + " table, side " +
                      std::string(to_string(side)));
        }
      }
    }
    auto const t = seconds_since(t0);
    if (t >= 60) {
      fail(o, "took " + std::to_string(t) + " s");
    }
    std::ostringstream d;
    d << corpus.size() << " tables (" << q4.size() << " quandles of size 4), " << cases
      << " cases, " << t << " s";
    if (o.pass) {
      o.detail = d.str();
    }
    return o;
  }

  // (ii) trivial quandle counts
  Outcome criterion_2() {
    Outcome o;
    for (std::size_t n = 1; n <= 7; ++n) {
      auto const q = trivial_quandle(n);
      auto const right = count_orders(q.magma(), Side::right).count;
      if (right != ot::factorial(n)) {
        fail(o, "right count " + std::to_string(right) + " on trivial(" + std::to_string(n) + ")");
      }
      auto const left = count_orders(q.magma(), Side::left).count;
      if (n >= 2 && left != 0) {
        fail(o, "left count " + std::to_string(left) + " on trivial(" + std::to_string(n) + ")");
      }
    }
    auto const q8 = trivial_quandle(8);
    auto const t0 = Clock::now();
    std::uint64_t emitted = 0;
    enumerate(q8.magma(), Side::right, {}, [&](OrderRelation const&) { ++emitted; });
    auto const t = seconds_since(t0);
    if (emitted != 40320) {
      fail(o, "trivial(8) emitted " + std::to_string(emitted));
    }
    if (t >= 2) {
      fail(o, "trivial(8) took " + std::to_string(t) + " s");
    }
    if (o.pass) {
      o.detail = "n! right, 0 left for n <= 7; trivial(8) 40320 orders in " +
                 std::to_string(t) + " s";
    }
    return o;
  }

  // (iii) nontrivial finite quandles have no right order, and a witness
  Outcome criterion_3() {
    Outcome o;
    std::size_t total = 0;
    std::size_t nontrivial = 0;
    std::size_t agree = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& m : ot::all_quandles(n)) {
        ++total;
        auto const count = count_orders(m, Side::right).count;
        auto const w = quandle_order_obstruction(m);
        if (w) {
          // b * a^{*n} == b and b * a != b, straight from the table
          Element x = w->b;
          for (std::size_t i = 0; i < w->n; ++i) {
            x = m.op(x, w->a);
          }
          if (x != w->b || m.op(w->b, w->a) == w->b) {
            fail(o, "bogus witness");
          }
        }
        bool const trivial = ot::is_trivial(m);
        nontrivial += trivial ? 0 : 1;
        if (!trivial && (count != 0 || !w)) {
          fail(o, "nontrivial quandle of size " + std::to_string(n) + " with count " +
                      std::to_string(count));
        }
        if ((count == 0) == w.has_value()) {
          ++agree;
        }
      }
    }
    if (agree != total) {
      fail(o, std::to_string(total - agree) + " disagreements");
    }
    if (o.pass) {
      o.detail = std::to_string(nontrivial) + " nontrivial of " + std::to_string(total) +
                 " labelled quandles; detectors agree on " + std::to_string(agree) + "/" +
                 std::to_string(total);
    }
    return o;
  }

  // (iv) torsion certificates
  Outcome criterion_4() {
    Outcome o;
    std::string detail;
    for (std::size_t n : {2u, 3u}) {
      auto const g = cyclic_oracle(n);
      Ball<TableGroup> const ball(g, n);
      BallArithmetic<TableGroup> const arith(g, ball);
      auto const w = find_nonextend_witness(arith, {}, WitnessOptions{1});
      if (!w.certificate) {
        fail(o, "no certificate for C" + std::to_string(n));
        continue;
      }
      auto const& c = *w.certificate;
      if (c.x.size() != 1 || !verify_certificate(g, {}, c)) {
        fail(o, "certificate for C" + std::to_string(n) + " does not verify");
      }
      for (auto const& d : c.derivations) {
        if (!(evaluate(g, d) == g.identity())) {
          fail(o, "derivation does not reach e");
        }
      }
      auto const lo = count_orders(g.group().magma(), Side::left).count;
      if (lo != 0) {
        fail(o, "LO(C" + std::to_string(n) + ") = " + std::to_string(lo));
      }
      detail += (detail.empty() ? "" : "; ") + std::string("C") + std::to_string(n) +
                ": X = {" + g.render(c.x[0]) + "}, LO = " + std::to_string(lo);
    }
    if (o.pass) {
      o.detail = detail;
    }
    return o;
  }

  // (v) Conj obstructions for klein and torus:2:3
  Outcome criterion_5() {
    Outcome o;
    std::string detail;
    {
      auto const t0 = Clock::now();
      Klein const k;
      bool found = false;
      for (std::size_t r = 1; r <= 2 && !found; ++r) {
        auto const w = conj_obstruction_oracle(k, Ball<Klein>(k, r), 6);
        if (w && w->n == 2) {
          found = true;
          // a^2 b == b a^2, ab != ba
          auto const a2 = k.multiply(w->a, w->a);
          if (!(k.multiply(a2, w->b) == k.multiply(w->b, a2)) ||
              k.multiply(w->a, w->b) == k.multiply(w->b, w->a)) {
            fail(o, "klein witness does not check");
          }
          detail = "klein: " + k.render(w->a) + " " + k.render(w->b) + " n=2 at r=" +
                   std::to_string(r);
        }
      }
      if (!found) {
        fail(o, "no n=2 witness on klein at radius <= 2");
      }
      auto const t = seconds_since(t0);
      if (t >= 10) {
        fail(o, "klein took " + std::to_string(t) + " s");
      }
    }
    {
      auto const t0 = Clock::now();
      TorusKnot const g(2, 3);
      auto const w = conj_obstruction_oracle(g, Ball<TorusKnot>(g, 2), 6);
      if (!w || w->centrality != Centrality::structural) {
        fail(o, "torus:2:3 has no structurally central witness");
      } else {
        detail += "; torus:2:3: " + g.render(w->a) + " " + g.render(w->b) + " n=" +
                  std::to_string(w->n) + " " + std::string(to_string(w->centrality));
      }
      auto const t = seconds_since(t0);
      if (t >= 10) {
        fail(o, "torus took " + std::to_string(t) + " s");
      }
    }
    if (o.pass) {
      o.detail = detail;
    }
    return o;
  }

  // (vi) adjudication of the three Klein seeds
  Outcome criterion_6() {
    Outcome o;
    auto const t0 = Clock::now();
    Klein const k;
    auto const p = parse_seeds(k, {"bb", "a", "aBB"});
    auto const a = adjudicate(k, p, candidate_cones(k), AdjudicationOptions{4, 8, 3});
    auto const t = seconds_since(t0);
    if (a.certificate.has_value() == a.extension.has_value()) {
      fail(o, "not exactly one outcome");
    }
    for (auto const& rec : a.radii) {
      if (rec.witness_found && (rec.greedy_success ||
                                std::any_of(rec.candidates.begin(), rec.candidates.end(),
                                            [](auto const& c) { return c.second; }))) {
        fail(o, "mutual exclusion broken at radius " + std::to_string(rec.radius));
      }
    }
    std::string outcome;
    if (a.certificate) {
      if (!verify_certificate(k, p, *a.certificate)) {
        fail(o, "certificate does not re-verify");
      }
      outcome = "certificate (P does not extend)";
    }
    if (a.extension) {
      for (std::size_t r = 4; r <= 8; ++r) {
        Ball<Klein> const ball(k, r);
        BallArithmetic<Klein> const arith(k, ball);
        if (!verify_cone_total(arith, *a.extension).passed()) {
          fail(o, "extension fails at radius " + std::to_string(r));
        }
      }
      for (auto const& s : p) {
        if (!a.extension->contains(s.value)) {
          fail(o, "extension misses seed " + s.label);
        }
      }
      outcome = "extension " + a.extension->name +
                " total at radii 4..8 (P extends to a left order)";
    }
    if (t >= 300) {
      fail(o, "took " + std::to_string(t) + " s");
    }
    if (o.pass) {
      o.detail = outcome + ", " + std::to_string(t) + " s";
    }
    return o;
  }

  // (vii) the four Klein lex cones
  Outcome criterion_7() {
    Outcome o;
    Klein const k;
    auto const cones = lex_sign_cones(k);
    if (cones.size() != 4) {
      fail(o, "expected four cones");
    }
    auto const t0 = Clock::now();
    {
      Ball<Klein> const ball(k, 6);
      BallArithmetic<Klein> const arith(k, ball);
      for (auto const& c : cones) {
        if (!verify_cone_total(arith, c).passed()) {
          fail(o, c.name + " fails at radius 6");
        }
      }
    }
    auto const t = seconds_since(t0);
    if (t >= 10) {
      fail(o, "radius-6 checks took " + std::to_string(t) + " s");
    }
    Ball<Klein> const ball(k, 4);
    BallArithmetic<Klein> const arith(k, ball);
    std::size_t tests = 0;
    for (auto const& c : cones) {
      std::vector<Seed<KleinElement>> p;
      for (std::size_t i = 1; i < ball.size(); ++i) {
        if (c.contains(ball[i])) {
          p.push_back({ball[i], ball.word(i)});
        }
      }
      for (std::size_t i = 1; i < ball.size(); ++i) {
        ++tests;
        if (!conrad_test(arith, p, {ball[i]}).survives()) {
          fail(o, c.name + " trapped by X = {" + ball.word(i) + "}");
        }
      }
    }
    if (o.pass) {
      o.detail = "4 cones total at radius 6 (" + std::to_string(t) + " s); " +
                 std::to_string(tests) + " singleton tests survive";
    }
    return o;
  }

  // (viii) induced order on Conj(heisenberg)
  Outcome criterion_8() {
    Outcome o;
    Heisenberg const h;
    auto const order = induce_conj_order(h, lex_biorder(h));
    auto const ex = scan_conj_order_exhaustive(order, Ball<Heisenberg>(h, 2));
    auto const sm = scan_conj_order_sampled(order, Ball<Heisenberg>(h, 4), 10'000, 0);
    if (!ex.passed() || !sm.passed()) {
      fail(o, std::to_string(ex.violation_count + sm.violation_count) + " violations");
    }
    if (sm.triples < 10'000) {
      fail(o, "too few samples");
    }
    if (o.pass) {
      o.detail = std::to_string(ex.triples) + " exhaustive triples at r=2, " +
                 std::to_string(sm.triples) + " samples at r=4 (seed 0), 0 violations";
    }
    return o;
  }

  // (ix) Neumann's property
  Outcome criterion_9() {
    Outcome o;
    Heisenberg const h;
    auto const hr = neumann_scan(h, lex_biorder(h), Ball<Heisenberg>(h, 3), 5);
    FreeAbelian const z(2);
    auto const zr = neumann_scan(z, lex_biorder(z), Ball<FreeAbelian>(z, 3), 5);
    if (!hr.violations.empty() || !zr.violations.empty()) {
      fail(o, "violations found");
    }
    if (o.pass) {
      o.detail = "heisenberg " + std::to_string(hr.pairs) + " pairs, Z^2 " +
                 std::to_string(zr.pairs) + " pairs, no violations";
    }
    return o;
  }

  // (x) lex orders on trivial(2)^k
  Outcome criterion_10() {
    Outcome o;
    auto const t2 = trivial_quandle(2).magma();
    auto const factor_orders = enumerate_all(t2, Side::right);
    if (factor_orders.size() != 2) {
      fail(o, "trivial(2) should have two right orders");
      return o;
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      ProductMagma const p(std::vector<Magma>(k, t2), std::vector<Element>(k, 0));
      auto const table = p.materialize();
      std::set<std::string> seen;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
        std::vector<OrderRelation> tuple;
        for (std::size_t i = 0; i < k; ++i) {
          tuple.push_back(factor_orders[(v >> i) & 1]);
        }
        auto const r = lex_order(p, tuple, Side::right);
        if (!verify_order(table, r, Side::right).valid()) {
          fail(o, "lex order not right invariant for k=" + std::to_string(k));
        }
        seen.insert(encode(r).str());
      }
      if (seen.size() != (std::size_t{1} << k)) {
        fail(o, "only " + std::to_string(seen.size()) + " distinct lex orders for k=" +
                    std::to_string(k));
      }
    }
    if (o.pass) {
      o.detail = "2, 4, 8 distinct right-invariant lex orders for k = 1, 2, 3";
    }
    return o;
  }

  // Checks the reported violation against the bits themselves.
  bool witness_holds(ChiVector const& chi, Magma const& m, Violation const& v) {
    auto bit = [&](Element a, Element b) { return a != b && chi.bit(a, b); };
    switch (v.condition) {
      case Condition::antisymmetry:
        return v.a != v.b && bit(v.a, v.b) == bit(v.b, v.a);
      case Condition::transitivity:
        return bit(v.a, v.b) && bit(v.b, v.c) && !bit(v.a, v.c);
      case Condition::invariance: {
        if (!bit(v.a, v.b)) {
          return false;
        }
        if (v.side == Side::left) {
          return !bit(m.op(v.c, v.a), m.op(v.c, v.b));
        }
        return !bit(m.op(v.a, v.c), m.op(v.b, v.c));
      }
    }
    return false;
  }

  // (xi) codec totality at n = 3
  Outcome criterion_11() {
    Outcome o;
    auto const t0 = Clock::now();
    auto const reps = ot::representatives(ot::all_quandles(3));
    std::size_t accepted_total = 0;
    std::size_t rejected_total = 0;
    for (auto const& m : reps) {
      for (auto side : sides) {
        std::set<std::string> accepted;
        for (std::uint32_t v = 0; v < 64; ++v) {
          std::string bits(6, '0');
          for (std::size_t i = 0; i < 6; ++i) {
            bits[i] = (v >> (5 - i)) & 1 ? '1' : '0';
          }
          ChiVector const chi(3, bits);
          auto const r = decode(chi, m, side);
          if (auto const* ord = std::get_if<OrderRelation>(&r)) {
            accepted.insert(bits);
            if (encode(*ord) != chi) {
              fail(o, "roundtrip fails on " + bits);
            }
          } else {
            ++rejected_total;
            if (!witness_holds(chi, m, std::get<Rejection>(r).violation)) {
              fail(o, "rejection witness for " + bits + " does not hold");
            }
          }
        }
        accepted_total += accepted.size();
        if (accepted != ot::brute_orders(m, side)) {
          fail(o, "accepted set differs from brute force");
        }
      }
    }
    auto const t = seconds_since(t0);
    if (t >= 30) {
      fail(o, "took " + std::to_string(t) + " s");
    }
    if (o.pass) {
      o.detail = std::to_string(reps.size()) + " quandle classes x 3 sides: " +
                 std::to_string(accepted_total) + " accepted, " +
                 std::to_string(rejected_total) + " rejected with verified witnesses";
    }
    return o;
  }

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> const criteria{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,  criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
