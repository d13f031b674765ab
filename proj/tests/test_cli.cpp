#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace orderspace::cli {
  namespace {

    std::string data(std::string const& name) {
      return std::string(ORDERSPACE_TEST_DATA) + "/" + name;
    }

    struct Result {
      int code;
      std::string out;
      std::string err;
    };

    Result call(std::vector<std::string> args) {
      std::ostringstream out;
      std::ostringstream err;
      auto const code = run(args, out, err);
      return {code, out.str(), err.str()};
    }

    class TempDir {
     public:
      TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0;; ++i) {
          _path = base / ("orderspace-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                          "-" + std::to_string(i));
          if (std::filesystem::create_directory(_path)) {
            break;
          }
        }
      }
      ~TempDir() { std::filesystem::remove_all(_path); }
      std::string write(std::string const& name, std::string const& text) const {
        auto const p = _path / name;
        std::ofstream(p) << text;
        return p.string();
      }

     private:
      std::filesystem::path _path;
    };

    std::vector<std::string> lines(std::string const& s) {
      std::vector<std::string> out;
      std::istringstream in(s);
      for (std::string l; std::getline(in, l);) {
        out.push_back(l);
      }
      return out;
    }

    TEST(Cli, CheckQuandle) {
      auto const r = call({"check", data("kei-z3.magma")});
      EXPECT_EQ(r.code, success);
      EXPECT_NE(r.out.find("size: 3"), std::string::npos);
      EXPECT_NE(r.out.find("quandle: yes"), std::string::npos);
      EXPECT_NE(r.out.find("trivial: no"), std::string::npos);
    }

    TEST(Cli, OrderCounts) {
      auto const t = call({"orders", data("trivial3.magma"), "--side", "right", "--count"});
      EXPECT_EQ(t.code, success);
      EXPECT_EQ(t.out, "6\n");
      auto const l = call({"orders", data("trivial3.magma"), "--side", "left", "--count"});
      EXPECT_EQ(l.out, "0\n");
      auto const k = call({"orders", data("kei-z3.magma"), "--side", "right", "--count"});
      EXPECT_EQ(k.out, "0\n");
    }

    TEST(Cli, OrdersTruncate) {
      auto const r = call({"orders", data("trivial3.magma"), "--side", "right", "--limit", "2"});
      EXPECT_EQ(r.code, inconclusive);
      EXPECT_EQ(lines(r.out).size(), 2u);
      EXPECT_NE(r.err.find("truncated"), std::string::npos);
    }

    TEST(Cli, OrdersDecodeRoundTrip) {
      TempDir tmp;
      auto const r = call({"orders", data("trivial3.magma"), "--side", "right"});
      ASSERT_EQ(r.code, success);
      auto const chi = tmp.write("all.chi", r.out);
      auto const d = call({"decode", data("trivial3.magma"), chi, "--side", "right"});
      EXPECT_EQ(d.code, success) << d.out << d.err;
      auto const ls = lines(d.out);
      EXPECT_EQ(std::count_if(ls.begin(), ls.end(),
                              [](auto const& l) { return l.starts_with("order "); }),
                6);
      auto const bad = tmp.write("bad.chi", "111100\n");
      auto const b = call({"decode", data("trivial3.magma"), bad, "--side", "right"});
      EXPECT_EQ(b.code, refuted);
      EXPECT_NE(b.out.find("rejected:"), std::string::npos);
    }

    TEST(Cli, EncodeAndLex) {
      TempDir tmp;
      auto const order = tmp.write("o.order", "order 2\n0 1\n");
      auto const e = call({"encode", order});
      ASSERT_EQ(e.code, success) << e.err;
      auto const chi = tmp.write("o.chi", e.out);
      auto const magma = tmp.write("t2.magma", "magma 2\n0 0\n1 1\n");
      auto const l = call({"lex", magma + "," + magma, chi, chi});
      ASSERT_EQ(l.code, success) << l.err;
      auto const lchi = tmp.write("lex.chi", l.out);
      auto const prod = tmp.write("t4.magma", "magma 4\n0 0 0 0\n1 1 1 1\n2 2 2 2\n3 3 3 3\n");
      auto const d = call({"decode", prod, lchi});
      EXPECT_EQ(d.code, success) << d.out << d.err;
    }

    TEST(Cli, ObstructGroups) {
      auto const k = call({"obstruct", "--group", "klein", "--radius", "2"});
      EXPECT_EQ(k.code, success);
      EXPECT_NE(k.out.find("a b n=2"), std::string::npos);
      EXPECT_NE(k.out.find("verdict: RO(Conj)=EMPTY"), std::string::npos);
      auto const t = call({"obstruct", "--group", "torus:2:3", "--radius", "2"});
      EXPECT_NE(t.out.find("x y n=2"), std::string::npos);
      EXPECT_NE(t.out.find("centrality: structural"), std::string::npos);
      auto const z = call({"obstruct", "--group", "Z^2", "--radius", "2"});
      EXPECT_EQ(z.code, inconclusive);
      auto const c = call({"obstruct", "--group", "klein", "--radius", "2", "--certify"});
      EXPECT_EQ(c.code, refuted);
    }

    TEST(Cli, ObstructMagma) {
      auto const r = call({"obstruct", data("kei-z3.magma")});
      EXPECT_EQ(r.code, success);
      EXPECT_NE(r.out.find("right: 0 1 n="), std::string::npos);
      auto const t = call({"obstruct", data("trivial3.magma")});
      EXPECT_NE(t.out.find("right: none"), std::string::npos);
    }

    TEST(Cli, ConradModes) {
      auto const t = call({"conrad", data("klein.cone"), "--test", "b"});
      EXPECT_EQ(t.code, success) << t.err;
      EXPECT_NE(t.out.find("(-) E-FOUND"), std::string::npos);
      EXPECT_NE(t.out.find("(+) E-ABSENT"), std::string::npos);
      EXPECT_NE(t.out.find("SURVIVES"), std::string::npos);
      auto const v = call({"conrad", data("klein.cone"), "--verify-cone", data("klein-pp.pred"),
                           "--radius", "4"});
      EXPECT_EQ(v.code, success) << v.out << v.err;
      EXPECT_NE(v.out.find("total: ok"), std::string::npos);
      auto const p = call({"conrad", data("klein.cone"), "--verify-cone",
                           data("klein-p-only.pred"), "--radius", "2"});
      EXPECT_EQ(p.code, refuted) << p.out << p.err;
      EXPECT_NE(p.out.find("total: fails at b"), std::string::npos);
      auto const c3 = call({"conrad", "--group", "cyclic:3", "--radius", "3", "--witness-max", "1"});
      EXPECT_EQ(c3.code, refuted) << c3.out << c3.err;
      EXPECT_NE(c3.out.find("certificate: X = {x}"), std::string::npos);
      auto const e = call({"conrad", "--group", "Z^1", "--seed", "a", "--radius", "4", "--extend"});
      EXPECT_EQ(e.code, success) << e.out << e.err;
    }

    TEST(Cli, Induce) {
      auto const r = call({"induce", "--group", "heisenberg", "--samples", "2000", "--radius", "3"});
      EXPECT_EQ(r.code, success) << r.out << r.err;
      EXPECT_NE(r.out.find("0 violations"), std::string::npos) << r.out;
      auto const k = call({"induce", "--group", "klein"});
      EXPECT_EQ(k.code, usage_error);
    }

    TEST(Cli, Errors) {
      EXPECT_EQ(call({"orders", data("trivial3.magma"), "--bogus"}).code, usage_error);
      EXPECT_EQ(call({"orders", data("trivial3.magma"), "--side", "up"}).code, usage_error);
      EXPECT_EQ(call({"orders", data("missing.magma"), "--side", "right"}).code, usage_error);
      EXPECT_EQ(call({}).code, usage_error);
      EXPECT_EQ(call({"--help"}).code, success);
      TempDir tmp;
      auto const bad = tmp.write("bad.magma", "magma 2\n0 1\n1 x\n");
      auto const r = call({"check", bad});
      EXPECT_EQ(r.code, usage_error);
      EXPECT_NE(r.err.find(":3"), std::string::npos) << r.err;
    }

    TEST(Cli, Deterministic) {
      auto const a = call({"conrad", data("klein.cone"), "--test", "b,ab", "--threads", "1"});
      auto const b = call({"conrad", data("klein.cone"), "--test", "b,ab", "--threads", "3"});
      EXPECT_EQ(a.out, b.out);
      EXPECT_EQ(a.code, b.code);
    }

  }  // namespace
}  // namespace orderspace::cli
