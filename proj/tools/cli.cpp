#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "orderspace/cantor_codec.hpp"
#include "orderspace/cone_engine.hpp"
#include "orderspace/error.hpp"
#include "orderspace/group_oracles.hpp"
#include "orderspace/magma.hpp"
#include "orderspace/magma_io.hpp"
#include "orderspace/order_engine.hpp"

namespace orderspace::cli {

  namespace {

    std::ifstream open(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InvalidInput("cannot open " + path);
      }
      return in;
    }

    Side side_of(std::string const& text) {
      auto const s = parse_side(text);
      if (!s) {
        throw InvalidInput("side must be left, right or bi, got '" + text + "'");
      }
      return *s;
    }

    std::string yes_no(bool b) { return b ? "yes" : "no"; }

    template <GroupOracle G>
    std::string render_set(G const& g,
                           std::vector<typename G::element> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i > 0 ? ", " : "") + g.render(xs[i]);
      }
      return out + "}";
    }

    ////////////////////////////////////////////////////////////////////
    // check
    ////////////////////////////////////////////////////////////////////

    struct CheckArgs {
      std::string file;
      bool quandle = false;
      bool rack = false;
      bool group = false;
    };

    int run_check(CheckArgs const& a, std::ostream& out) {
      auto const m = load_magma(a.file);
      out << "size: " << m.size() << '\n';
      if (a.group) {
        auto const r = check_group(m);
        if (r.associativity_failure) {
          auto const& f = *r.associativity_failure;
          out << "associativity: fails at a=" << f[0] << " b=" << f[1]
              << " c=" << f[2] << '\n';
        } else {
          out << "associativity: ok\n";
        }
        out << "identity: "
            << (r.has_identity ? std::to_string(r.identity) : "none") << '\n';
        if (r.has_identity) {
          out << "inverses: "
              << (r.missing_inverse
                      ? "missing for " + std::to_string(*r.missing_inverse)
                      : "ok")
              << '\n';
        }
        out << "group: " << yes_no(r.passes()) << '\n';
        return r.passes() ? success : refuted;
      }
      auto const report_rack = [&](RackReport const& r) {
        if (r.bijectivity_failure) {
          auto const& f = *r.bijectivity_failure;
          out << "right translations bijective: fails at b=" << f[0] << ": "
              << f[1] << "*" << f[0] << " = " << f[2] << "*" << f[0] << '\n';
        } else {
          out << "right translations bijective: ok\n";
        }
        if (r.distributivity_failure) {
          auto const& f = *r.distributivity_failure;
          out << "right distributivity: fails at a=" << f[0] << " b=" << f[1]
              << " c=" << f[2] << '\n';
        } else {
          out << "right distributivity: ok\n";
        }
      };
      if (a.rack) {
        auto const r = check_rack(m);
        report_rack(r);
        out << "rack: " << yes_no(r.passes()) << '\n';
        return r.passes() ? success : refuted;
      }
      auto const r = check_quandle(m);
      out << "idempotence: "
          << (r.idempotence_failure
                  ? "fails at a=" + std::to_string(*r.idempotence_failure)
                  : "ok")
          << '\n';
      report_rack(r);
      out << "quandle: " << yes_no(r.passes()) << '\n';
      if (r.passes()) {
        out << "trivial: " << yes_no(is_trivial_quandle(m)) << '\n';
      }
      return r.passes() ? success : refuted;
    }

    ////////////////////////////////////////////////////////////////////
    // orders / query
    ////////////////////////////////////////////////////////////////////

    struct OrdersArgs {
      std::string file;
      std::string side;
      bool count = false;
      std::optional<std::uint64_t> limit;
      std::string constrain;
      unsigned threads = 1;
    };

    int run_orders(OrdersArgs const& a, std::ostream& out, std::ostream& err) {
      auto const m    = load_magma(a.file);
      auto const side = side_of(a.side);
      ConstraintSet constraints;
      if (!a.constrain.empty()) {
        auto in     = open(a.constrain);
        constraints = read_constraints(in, a.constrain);
      }
      EnumerateOptions options{a.limit, a.threads};
      EnumerationStatus status;
      if (a.count) {
        auto const r = count_orders(m, side, constraints, options);
        out << r.count << '\n';
        status = r.status;
      } else {
        status = enumerate(m, side, constraints,
                           [&](OrderRelation const& r) {
                             out << encode(r).str() << '\n';
                           },
                           options)
                     .status;
      }
      if (status == EnumerationStatus::truncated) {
        err << "truncated at --limit " << *a.limit << '\n';
        return inconclusive;
      }
      return success;
    }

    struct QueryArgs {
      std::string file;
      std::string side;
      std::string fip;
    };

    int run_query(QueryArgs const& a, std::ostream& out) {
      auto const m    = load_magma(a.file);
      auto const side = side_of(a.side);
      auto in         = open(a.fip);
      auto const families = read_families(in, a.fip);
      auto const r        = fip_check(m, side, families);
      out << "families: " << families.size() << '\n';
      out << "finite intersections nonempty: "
          << yes_no(r.finite_intersections_nonempty) << '\n';
      out << "whole intersection nonempty: "
          << yes_no(r.whole_intersection_nonempty) << '\n';
      if (r.witness) {
        out << "witness: " << encode(*r.witness).str() << '\n';
      }
      if (r.empty_subfamily) {
        out << "empty subfamily:";
        for (auto i : *r.empty_subfamily) {
          out << ' ' << i;
        }
        out << '\n';
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////
    // obstruct
    ////////////////////////////////////////////////////////////////////

    struct ObstructArgs {
      std::string file;
      std::string group;
      std::optional<std::size_t> radius;
      std::size_t n_max = 6;
      bool certify = false;
    };

    int run_obstruct(ObstructArgs const& a, std::ostream& out) {
      if (!a.group.empty()) {
        if (!a.file.empty()) {
          throw InvalidInput("give either a magma file or --group, not both");
        }
        if (!a.radius) {
          throw InvalidInput("--group needs --radius");
        }
        return std::visit(
            [&](auto const& g) {
              using G = std::decay_t<decltype(g)>;
              Ball<G> ball(g, *a.radius);
              auto const w = conj_obstruction_oracle(g, ball, a.n_max);
              if (!w) {
                out << "no witness in the radius-" << *a.radius
                    << " ball with n <= " << a.n_max << '\n';
                out << "verdict: inconclusive\n";
                return inconclusive;
              }
              out << g.render(w->a) << ' ' << g.render(w->b) << " n=" << w->n
                  << '\n';
              out << "centrality: " << to_string(w->centrality) << '\n';
              out << "verdict: RO(Conj)=EMPTY\n";
              return a.certify ? refuted : success;
            },
            parse_group_spec(a.group));
      }
      if (a.file.empty()) {
        throw InvalidInput("obstruct needs a magma file or --group");
      }
      auto const m = load_magma(a.file);
      auto const q = quandle_order_obstruction(m);
      auto const l = left_cancellative(m);
      auto const r = right_cancellative(m);
      if (q) {
        out << "right: " << q->a << ' ' << q->b << " n=" << q->n << '\n';
      } else {
        out << "right: none\n";
      }
      if (l) {
        out << "left cancellation fails: " << l->c << '*' << l->a << " = "
            << l->c << '*' << l->b << '\n';
      }
      if (r) {
        out << "right cancellation fails: " << r->a << '*' << r->c << " = "
            << r->b << '*' << r->c << '\n';
      }
      bool const found = q || l || r;
      out << "verdict:" << (q || r ? " RO=EMPTY" : "") << (l ? " LO=EMPTY" : "")
          << (found ? "" : " no obstruction") << '\n';
      return found && a.certify ? refuted : success;
    }

    ////////////////////////////////////////////////////////////////////
    // conrad
    ////////////////////////////////////////////////////////////////////

    struct ConradArgs {
      std::string spec_file;
      std::string group;
      std::vector<std::string> seeds;
      std::optional<std::size_t> radius;
      std::optional<std::size_t> witness_max;
      bool extend = false;
      bool adjudicate = false;
      std::string verify_cone;
      std::vector<std::string> test;
      std::size_t min_radius = 4;
      std::size_t max_radius = 8;
      unsigned threads = 1;
      std::size_t ball_budget = default_ball_budget;
      std::size_t closure_budget = default_closure_budget;
    };

    template <GroupOracle G>
    void print_certificate(G const& g, Certificate<typename G::element> const& c,
                           std::ostream& out) {
      out << "certificate: X = " << render_set(g, c.x) << " at radius "
          << c.radius << '\n';
      for (std::size_t v = 0; v < c.derivations.size(); ++v) {
        out << "  " << sign_string(c.signs[v]) << ' '
            << c.derivations[v].str() << " = e\n";
      }
    }

    template <GroupOracle G>
    void print_cone_check(G const& g, Ball<G> const& ball, ConeCheck const& c,
                          std::ostream& out) {
      if (c.product_escape) {
        auto [i, j] = *c.product_escape;
        out << "semigroup: fails: " << g.render(ball[i]) << " * "
            << g.render(ball[j]) << " leaves the cone\n";
      } else {
        out << "semigroup: ok\n";
      }
      if (c.impure_element) {
        out << "pure: fails at " << g.render(ball[*c.impure_element]) << '\n';
      } else {
        out << "pure: ok\n";
      }
      if (c.undecided) {
        out << "total: fails at " << g.render(ball[*c.undecided]) << '\n';
      } else {
        out << "total: ok\n";
      }
    }

    template <GroupOracle G>
    int conrad_with(G const& g, ConradArgs const& a, std::ostream& out) {
      auto const seeds = parse_seeds(g, a.seeds);
      out << "group: " << g.name() << '\n';
      out << "seed:";
      for (auto const& s : seeds) {
        out << ' ' << s.label;
      }
      out << '\n';

      if (a.adjudicate) {
        AdjudicationOptions options;
        options.min_radius     = a.min_radius;
        options.max_radius     = a.max_radius;
        options.witness_max    = a.witness_max.value_or(3);
        options.ball_budget    = a.ball_budget;
        options.closure_budget = a.closure_budget;
        auto const r = adjudicate(g, seeds, candidate_cones(g), options);
        for (auto const& rec : r.radii) {
          out << "radius " << rec.radius << ": ball " << rec.ball_size
              << ", closure " << rec.closure_size
              << (rec.closure_has_identity ? " contains e"
                  : rec.closure_pure      ? " pure"
                                          : " impure")
              << ", greedy "
              << (rec.greedy_success     ? "extends"
                  : rec.greedy_exhausted ? "out of budget"
                                         : "fails")
              << ", "
              << (rec.witness_found ? "certificate found"
                                    : "no certificate with |X| <= " +
                                          std::to_string(options.witness_max))
              << " (" << rec.witness_stats.subsets << " subsets)";
          for (auto const& [name, ok] : rec.candidates) {
            out << ", " << name << (ok ? " verified" : " fails");
          }
          out << '\n';
        }
        switch (r.verdict) {
          case Verdict::certificate:
            print_certificate(g, *r.certificate, out);
            out << "verdict: certificate: P does not extend to a left order\n";
            return refuted;
          case Verdict::extension:
            out << "verdict: extension " << r.extension->name
                << " contains P and passes semigroup, purity and totality at "
                   "radii "
                << a.min_radius << ".." << a.max_radius << '\n';
            return success;
          case Verdict::inconclusive:
            out << "verdict: inconclusive\n";
            return inconclusive;
        }
      }

      if (!a.radius) {
        throw InvalidInput("--radius is required");
      }
      Ball<G> ball(g, *a.radius, a.ball_budget);
      BallArithmetic<G> arith(g, ball);
      out << "radius: " << *a.radius << " (ball " << ball.size()
          << " elements)\n";

      if (!a.verify_cone.empty()) {
        if constexpr (CoordinateGroup<G>) {
          auto in = open(a.verify_cone);
          auto const d = predicate_cone(
              g, read_predicate(in, a.verify_cone, g.coordinate_names()));
          out << "cone: " << d.name << '\n';
          bool seeds_in = true;
          for (auto const& s : seeds) {
            if (!d.contains(s.value)) {
              out << "seed outside the cone: " << s.label << '\n';
              seeds_in = false;
            }
          }
          out << "contains seed: " << yes_no(seeds_in) << '\n';
          auto const c = verify_cone_total(arith, d);
          print_cone_check(g, ball, c, out);
          return c.passed() && seeds_in ? success : refuted;
        } else {
          throw InvalidInput("--verify-cone needs a group with coordinates, not " +
                             g.name());
        }
      }

      if (a.extend) {
        auto const r = greedy_extend(arith, seeds, default_greedy_budget,
                                     a.closure_budget);
        if (r.success) {
          std::size_t positives = 0;
          for (std::size_t i = 1; i < ball.size(); ++i) {
            positives += r.positive[i] ? 1 : 0;
          }
          out << "extension: total at radius " << *a.radius << ", "
              << positives << " positive elements\n";
          out << "positive:";
          for (std::size_t i = 1; i < ball.size(); ++i) {
            if (r.positive[i]) {
              out << ' ' << g.render(ball[i]);
            }
          }
          out << '\n';
          print_cone_check(
              g, ball,
              verify_cone_total(arith, ball_set_cone(ball, r.positive, "greedy")),
              out);
          return success;
        }
        if (r.exhausted_budget) {
          out << "extension: search budget exhausted after " << r.nodes
              << " nodes\n";
          return inconclusive;
        }
        std::vector<typename G::element> trace;
        for (auto i : r.trace) {
          trace.push_back(ball[i]);
        }
        out << "extension: none at radius " << *a.radius << '\n';
        out << "trace: " << render_set(g, trace) << '\n';
        return refuted;
      }

      if (!a.test.empty()) {
        std::vector<typename G::element> x;
        for (auto const& w : a.test) {
          x.push_back(parse_word(g, w));
        }
        auto const r = conrad_test(arith, seeds, x, a.threads, a.closure_budget);
        out << "X = " << render_set(g, x) << '\n';
        for (auto const& o : r.outcomes) {
          out << sign_string(o.signs) << ' ';
          if (o.e_found) {
            out << "E-FOUND " << o.derivation->str() << " = e\n";
          } else {
            out << "E-ABSENT-AT-RADIUS " << r.radius
                << (o.partial ? " (partial)" : "") << '\n';
          }
        }
        out << (r.survives() ? "SURVIVES" : "TRAPPED") << '\n';
        return r.survives() ? success : refuted;
      }

      if (a.witness_max) {
        auto const r = find_nonextend_witness(
            arith, seeds, WitnessOptions{*a.witness_max, a.closure_budget, 256});
        if (r.certificate) {
          print_certificate(g, *r.certificate, out);
          out << "verdict: P does not extend to a left order\n";
          return refuted;
        }
        out << "no certificate with |X| <= " << *a.witness_max << " at radius "
            << *a.radius << " (" << r.stats.subsets << " subsets"
            << (r.stats.partial ? ", partial closures" : "") << ")\n";
        return inconclusive;
      }

      auto const cone = sgr_closure(arith, seeds, ClosureOptions{a.closure_budget});
      auto const purity = purity_check(cone);
      out << "closure: " << cone.size() << " elements"
          << (cone.partial() ? " (PARTIAL)" : "") << '\n';
      if (cone.contains_identity()) {
        out << "identity: " << cone.derivation(0).str() << " = e\n";
      } else {
        out << "identity: absent at radius " << *a.radius << '\n';
      }
      if (purity.pure) {
        out << "purity: pure at radius " << *a.radius << '\n';
      } else {
        auto [i, j] = *purity.witness;
        out << "purity: impure: " << g.render(ball[i]) << " and "
            << g.render(ball[j]) << '\n';
      }
      if (cone.partial()) {
        return inconclusive;
      }
      return purity.pure && !cone.contains_identity() ? success : refuted;
    }

    int run_conrad(ConradArgs a, std::ostream& out) {
      if (!a.spec_file.empty()) {
        auto in         = open(a.spec_file);
        auto const spec = read_cone_spec(in, a.spec_file);
        if (a.group.empty()) {
          a.group = spec.group;
        }
        if (a.seeds.empty()) {
          a.seeds = spec.seeds;
        }
        if (!a.witness_max && !a.extend && !a.adjudicate &&
            a.verify_cone.empty() && a.test.empty()) {
          a.witness_max = spec.witness_max;
        }
        if (!a.radius) {
          a.radius = spec.radius;
        }
      }
      if (a.group.empty()) {
        throw InvalidInput("conrad needs --group or a cone spec file");
      }
      return std::visit([&](auto const& g) { return conrad_with(g, a, out); },
                        parse_group_spec(a.group));
    }

    ////////////////////////////////////////////////////////////////////
    // induce
    ////////////////////////////////////////////////////////////////////

    struct InduceArgs {
      std::string group;
      std::string biorder = "lex";
      std::uint64_t samples = 10'000;
      std::size_t radius = 4;
      std::size_t exhaustive_radius = 2;
      std::uint64_t prng_seed = 0;
      std::optional<std::size_t> neumann_max;
    };

    template <typename E, typename Render>
    void print_violations(InvarianceReport<E> const& r, Render render,
                          std::ostream& out) {
      for (auto const& v : r.violations) {
        out << "  violation: a=" << render(v.a) << " b=" << render(v.b)
            << " c=" << render(v.c) << '\n';
      }
    }

    int run_induce(InduceArgs const& a, std::ostream& out) {
      if (a.biorder != "lex") {
        throw InvalidInput("unknown bi-order '" + a.biorder + "' (only lex)");
      }
      return std::visit(
          [&](auto const& g) -> int {
            using G = std::decay_t<decltype(g)>;
            if constexpr (!supports_lex_biorder<G>) {
              throw InvalidInput("no lexicographic bi-order is available for " +
                                 g.name());
            } else {
              auto const order = lex_biorder(g);
              auto const conj  = induce_conj_order(g, order);
              auto const render = [&](auto const& x) { return g.render(x); };
              out << "group: " << g.name() << '\n';
              out << "bi-order: " << order.name << '\n';
              Ball<G> small(g, a.exhaustive_radius);
              auto const ex = scan_conj_order_exhaustive(conj, small);
              out << "exhaustive: radius " << a.exhaustive_radius << ", "
                  << ex.triples << " triples, " << ex.premises << " premises, "
                  << ex.violation_count << " violations\n";
              print_violations(ex, render, out);
              Ball<G> big(g, a.radius);
              auto const sm =
                  scan_conj_order_sampled(conj, big, a.samples, a.prng_seed);
              out << "sampled: radius " << a.radius << ", " << sm.triples
                  << " triples (mt19937_64 seed " << a.prng_seed << "), "
                  << sm.premises << " premises, " << sm.violation_count
                  << " violations\n";
              print_violations(sm, render, out);
              bool ok = ex.passed() && sm.passed();
              if (a.neumann_max) {
                auto const nr = neumann_scan(g, order, big, *a.neumann_max);
                out << "neumann: radius " << a.radius << ", n <= "
                    << *a.neumann_max << ", " << nr.pairs << " pairs, "
                    << nr.premises << " premises, " << nr.violations.size()
                    << " violations\n";
                ok = ok && nr.violations.empty();
              }
              out << "verdict: "
                  << (ok ? "right-invariant on every checked triple"
                         : "violations found")
                  << '\n';
              return ok ? success : refuted;
            }
          },
          parse_group_spec(a.group));
    }

    ////////////////////////////////////////////////////////////////////
    // lex / encode / decode
    ////////////////////////////////////////////////////////////////////

    struct LexArgs {
      std::string product;
      std::vector<std::string> orders;
      std::string side = "right";
    };

    int run_lex(LexArgs const& a, std::ostream& out) {
      auto const side = side_of(a.side);
      std::vector<Magma> factors;
      std::vector<Element> basepoints;
      std::stringstream parts(a.product);
      std::string part;
      while (std::getline(parts, part, ',')) {
        auto const at = part.rfind('@');
        Element base  = 0;
        auto path     = part;
        if (at != std::string::npos) {
          path = part.substr(0, at);
          try {
            base = static_cast<Element>(std::stoul(part.substr(at + 1)));
          } catch (std::exception const&) {
            throw InvalidInput("bad basepoint in '" + part + "'");
          }
        }
        factors.push_back(load_magma(path));
        basepoints.push_back(base);
      }
      if (factors.size() != a.orders.size()) {
        throw InvalidInput("expected " + std::to_string(factors.size()) +
                           " factor order files, got " +
                           std::to_string(a.orders.size()));
      }
      std::vector<OrderRelation> orders;
      for (std::size_t i = 0; i < a.orders.size(); ++i) {
        auto in         = open(a.orders[i]);
        auto const file = read_chi(in, a.orders[i]);
        if (file.vectors.size() != 1) {
          throw InvalidInput(a.orders[i] + ": expected exactly one order");
        }
        auto r = decode(file.vectors.front(), factors[i], side);
        if (auto const* rej = std::get_if<Rejection>(&r)) {
          throw InvalidInput(a.orders[i] + ": not a " +
                             std::string(to_string(side)) +
                             " order: " + describe(rej->violation));
        }
        orders.push_back(std::get<OrderRelation>(std::move(r)));
      }
      ProductMagma const p(std::move(factors), std::move(basepoints));
      write_chi(out, encode(lex_order(p, orders, side)), side);
      return success;
    }

    struct EncodeArgs {
      std::string file;
      std::string side = "right";
    };

    int run_encode(EncodeArgs const& a, std::ostream& out) {
      auto const side = side_of(a.side);
      auto in         = open(a.file);
      write_chi(out, encode(read_ranking(in, a.file)), side);
      return success;
    }

    struct DecodeArgs {
      std::string magma;
      std::string chi;
      std::string side;
    };

    int run_decode(DecodeArgs const& a, std::ostream& out) {
      auto const m = load_magma(a.magma);
      auto in      = open(a.chi);
      std::optional<std::pair<std::size_t, Side>> fallback;
      if (!a.side.empty()) {
        fallback = std::pair{m.size(), side_of(a.side)};
      }
      auto file = read_chi(in, a.chi, fallback);
      if (!a.side.empty()) {
        file.side = side_of(a.side);
      }
      bool all = true;
      for (auto const& chi : file.vectors) {
        auto const r = decode(chi, m, file.side);
        if (auto const* rej = std::get_if<Rejection>(&r)) {
          out << "rejected: " << describe(rej->violation) << '\n';
          all = false;
        } else {
          write_ranking(out, std::get<OrderRelation>(r));
        }
      }
      return all ? success : refuted;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Invariant orders on magmas, quandles and groups", "orderspace"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "axiom reports for a table");
    c_check->add_option("magma", check.file, "magma file")->required();
    auto* f_q = c_check->add_flag("--quandle", check.quandle, "quandle axioms (default)");
    auto* f_r = c_check->add_flag("--rack", check.rack, "rack axioms");
    auto* f_g = c_check->add_flag("--group", check.group, "group axioms");
    f_q->excludes(f_r, f_g);
    f_r->excludes(f_g);

    OrdersArgs orders;
    auto* c_orders = app.add_subcommand("orders", "enumerate invariant orders");
    c_orders->add_option("magma", orders.file, "magma file")->required();
    c_orders->add_option("--side", orders.side, "left, right or bi")->required();
    c_orders->add_flag("--count", orders.count, "print the count only");
    c_orders->add_option("--limit", orders.limit, "stop after N orders");
    c_orders->add_option("--constrain", orders.constrain, "pairs that must hold");
    c_orders->add_option("--threads", orders.threads, "worker threads")
        ->check(CLI::Range(1u, 256u));

    QueryArgs query;
    auto* c_query = app.add_subcommand("query", "finite intersection property");
    c_query->add_option("magma", query.file, "magma file")->required();
    c_query->add_option("--side", query.side, "left, right or bi")->required();
    c_query->add_option("--fip", query.fip, "families file")->required();

    ObstructArgs obstruct;
    auto* c_obstruct = app.add_subcommand("obstruct", "orderability obstructions");
    c_obstruct->add_option("magma", obstruct.file, "magma file");
    c_obstruct->add_option("--group", obstruct.group, "group spec");
    c_obstruct->add_option("--radius", obstruct.radius, "ball radius");
    c_obstruct->add_option("--n-max", obstruct.n_max, "largest power tried")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
    c_obstruct->add_flag("--certify", obstruct.certify,
                         "exit 1 when an obstruction is found");

    ConradArgs conrad;
    auto* c_conrad = app.add_subcommand("conrad", "positive cone engine");
    c_conrad->add_option("spec", conrad.spec_file, "cone spec file");
    c_conrad->add_option("--group", conrad.group, "group spec");
    c_conrad->add_option("--seed", conrad.seeds, "seed words")->delimiter(',');
    c_conrad->add_option("--radius", conrad.radius, "ball radius");
    auto* m_w = c_conrad->add_option("--witness-max", conrad.witness_max,
                                     "largest witness set");
    auto* m_e = c_conrad->add_flag("--extend", conrad.extend, "greedy extension");
    auto* m_v = c_conrad->add_option("--verify-cone", conrad.verify_cone,
                                     "predicate file");
    auto* m_t = c_conrad->add_option("--test", conrad.test, "words of X")
                    ->delimiter(',');
    auto* m_a = c_conrad->add_flag("--adjudicate", conrad.adjudicate,
                                   "radius sweep with every engine");
    m_e->excludes(m_v, m_t, m_a);
    m_v->excludes(m_t, m_a);
    m_t->excludes(m_a);
    m_w->excludes(m_e, m_v, m_t);
    c_conrad->add_option("--min-radius", conrad.min_radius, "sweep start");
    c_conrad->add_option("--max-radius", conrad.max_radius, "sweep end");
    c_conrad->add_option("--threads", conrad.threads, "worker threads")
        ->check(CLI::Range(1u, 256u));
    c_conrad->add_option("--ball-budget", conrad.ball_budget, "ball size cap");
    c_conrad->add_option("--closure-budget", conrad.closure_budget,
                         "closure size cap");

    InduceArgs induce;
    auto* c_induce = app.add_subcommand("induce", "induced order on Conj(G)");
    c_induce->add_option("--group", induce.group, "group spec")->required();
    c_induce->add_option("--biorder", induce.biorder, "bi-order (lex)");
    c_induce->add_option("--samples", induce.samples, "sampled triples");
    c_induce->add_option("--radius", induce.radius, "sampling radius");
    c_induce->add_option("--exhaustive-radius", induce.exhaustive_radius,
                         "radius of the exhaustive scan");
    c_induce->add_option("--prng-seed", induce.prng_seed, "mt19937_64 seed");
    c_induce->add_option("--neumann", induce.neumann_max,
                         "also scan for a^n b = b a^n, n <= this");

    LexArgs lex;
    auto* c_lex = app.add_subcommand("lex", "lexicographic order on a product");
    c_lex->add_option("product", lex.product, "file[@basepoint],...")->required();
    c_lex->add_option("orders", lex.orders, "factor chi files")->required();
    c_lex->add_option("--side", lex.side, "left, right or bi");

    EncodeArgs enc;
    auto* c_encode = app.add_subcommand("encode", "order file to chi");
    c_encode->add_option("order", enc.file, "order file")->required();
    c_encode->add_option("--side", enc.side, "side recorded in the header");

    DecodeArgs dec;
    auto* c_decode = app.add_subcommand("decode", "chi lines to orders");
    c_decode->add_option("magma", dec.magma, "magma file")->required();
    c_decode->add_option("chi", dec.chi, "chi file")->required();
    c_decode->add_option("--side", dec.side, "override the header side");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return success;
    } catch (CLI::CallForAllHelp const& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      if (auto const* sub = app.get_subcommands().empty()
                                ? nullptr
                                : app.get_subcommands().front()) {
        err << "usage: orderspace " << sub->get_name() << " --help\n";
      } else {
        err << "usage: orderspace <command> --help\n";
      }
      return usage_error;
    }

    try {
      if (c_check->parsed()) {
        return run_check(check, out);
      }
      if (c_orders->parsed()) {
        return run_orders(orders, out, err);
      }
      if (c_query->parsed()) {
        return run_query(query, out);
      }
      if (c_obstruct->parsed()) {
        return run_obstruct(obstruct, out);
      }
      if (c_conrad->parsed()) {
        return run_conrad(conrad, out);
      }
      if (c_induce->parsed()) {
        return run_induce(induce, out);
      }
      if (c_lex->parsed()) {
        return run_lex(lex, out);
      }
      if (c_encode->parsed()) {
        return run_encode(enc, out);
      }
      if (c_decode->parsed()) {
        return run_decode(dec, out);
      }
    } catch (BudgetExceeded const& e) {
      err << "budget exceeded: " << e.what() << '\n';
      return inconclusive;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return internal;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }
    return usage_error;
  }

}  // namespace orderspace::cli
