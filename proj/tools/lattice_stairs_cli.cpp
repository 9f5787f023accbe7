// lattice-stairs: command-line front end for the lattice_stairs library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "lattice_stairs/barvinok.hpp"
#include "lattice_stairs/carlitz.hpp"
#include "lattice_stairs/genfun.hpp"
#include "lattice_stairs/sequences.hpp"
#include "lattice_stairs/staircase.hpp"
#include "lattice_stairs/verify.hpp"
#include "lattice_stairs/white.hpp"

namespace ls = lattice_stairs;
using nlohmann::json;

namespace {

struct Output {
  std::string text;
  json payload;
  bool ok = true;
};

ls::PeriodicIntSeq parse_seq(const std::string& s) {
  std::string cleaned = s;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<ls::Int> v;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ls::DomainError("bad sequence entry '" + tok + "'");
    v.push_back(x);
  }
  return ls::PeriodicIntSeq(std::move(v));
}

std::string join(const std::vector<ls::Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

json points_json(const std::vector<ls::Vec2>& pts) {
  json arr = json::array();
  for (ls::Vec2 p : pts) arr.push_back({p.x, p.y});
  return arr;
}

json coefficients_json(const std::map<ls::Vec2, ls::Int>& coeffs) {
  json arr = json::array();
  for (const auto& [e, c] : coeffs) arr.push_back({{"exponent", {e.x, e.y}}, {"coeff", c}});
  return arr;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational staircases, Sturmian sequences and short lattice-point generating functions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string out_file;
  app.add_flag("--json", as_json, "Print JSON instead of text");
  app.add_option("--out", out_file, "Also write the JSON payload to FILE");

  Output out;
  std::function<void()> action;

  ls::Int a = 0, b = 0, n = 0;
  auto add_ab = [&](CLI::App* c) {
    c->add_option("--a", a, "Slope denominator a")->required();
    c->add_option("--b", b, "Slope numerator b")->required();
  };

  // seq
  auto* seq = app.add_subcommand("seq", "Beatty and Sturmian sequences");
  seq->require_subcommand(1);
  ls::Int from = 1, to = 0;
  auto* seq_beatty = seq->add_subcommand("beatty", "B_{a,b}(n) = floor(bn/a) - floor(b(n-1)/a) for n in [from,to]");
  add_ab(seq_beatty);
  seq_beatty->add_option("--from", from, "First index")->required();
  seq_beatty->add_option("--to", to, "Last index")->required();
  seq_beatty->callback([&] {
    action = [&] {
      auto sp = ls::SlopePair::coprime(a, b);
      if (to < from) throw ls::DomainError("--to must not be below --from");
      if (to - from > 10'000'000) throw ls::DomainError("range too long");
      std::vector<ls::Int> v;
      for (ls::Int k = from; k <= to; ++k) v.push_back(ls::beatty(sp, k));
      out.text = join(v);
      out.payload = v;
    };
  });
  std::string seq_text;
  auto* seq_check = seq->add_subcommand("check", "Test a periodic sequence for the Sturmian characterizations");
  seq_check->add_option("seq", seq_text, "One period, e.g. \"0 1 0 1 1\"")->required();
  seq_check->callback([&] {
    action = [&] {
      ls::PeriodicIntSeq s = parse_seq(seq_text);
      auto bal = ls::is_balanced(s);
      bool zero_one = s.is_01() && s.sum() > 0;
      out.payload = {{"period", s.period()}, {"balanced_at", bal ? json(*bal) : json(nullptr)}};
      if (zero_one) {
        out.payload["sturmian"] = ls::is_sturmian(s);
        out.payload["recursively_balanced"] = ls::is_recursively_balanced(s);
        out.payload["evenly_distributed"] = ls::is_evenly_distributed(s);
        out.payload["swap_symmetric"] = ls::is_swap_symmetric(s);
      }
      std::ostringstream t;
      t << "balanced_at: " << (bal ? std::to_string(*bal) : "none") << "\n";
      if (zero_one) {
        t << "sturmian: " << yes_no(out.payload["sturmian"]) << "\n"
          << "recursively_balanced: " << yes_no(out.payload["recursively_balanced"]) << "\n"
          << "evenly_distributed: " << yes_no(out.payload["evenly_distributed"]) << "\n"
          << "swap_symmetric: " << yes_no(out.payload["swap_symmetric"]) << "\n";
      }
      out.text = t.str();
      if (!out.text.empty()) out.text.pop_back();
    };
  });
  auto* seq_blocks = seq->add_subcommand("blocks", "Block sequence of a 0,1 period and its reduction");
  seq_blocks->add_option("seq", seq_text, "One period, e.g. \"1 0 0 1 0\"")->required();
  seq_blocks->callback([&] {
    action = [&] {
      ls::PeriodicIntSeq s = parse_seq(seq_text);
      ls::PeriodicIntSeq m = ls::block_sequence(s);
      out.text = join(m.period());
      out.payload = m.period();
    };
  });

  // stair
  auto* stair = app.add_subcommand("stair", "Rational staircases and corners");
  stair->require_subcommand(1);
  std::string r_text = "0";
  int sigma = 1;
  ls::Int x0 = 0, x1 = 0;
  bool corners = false;
  auto add_line = [&](CLI::App* c) {
    add_ab(c);
    c->add_option("--r", r_text, "Offset r = p or p/q");
    c->add_option("--sigma", sigma, "Side of the line, 1 or -1")->check(CLI::IsMember({1, -1}));
    c->add_option("--x0", x0, "First column")->required();
    c->add_option("--x1", x1, "Last column")->required();
  };
  auto make_line = [&] {
    return ls::LineSpec(ls::SlopePair::coprime(a, b), ls::parse_rational(r_text), sigma);
  };
  auto* stair_points = stair->add_subcommand("points", "List staircase (or corner) points in a column window");
  add_line(stair_points);
  stair_points->add_flag("--corners", corners, "List corners instead of staircase points");
  stair_points->callback([&] {
    action = [&] {
      ls::PointWindow pw = ls::staircase_window(make_line(), x0, x1, corners ? ls::Which::kCorners : ls::Which::kStaircase);
      std::string t;
      for (ls::Vec2 p : pw.points) t += ls::to_string(p) + "\n";
      if (!t.empty()) t.pop_back();
      out.text = t;
      out.payload = {{"x0", pw.x0}, {"x1", pw.x1}, {"points", points_json(pw.points)}};
    };
  });
  auto* stair_render = stair->add_subcommand("render", "ASCII picture: # staircase, O corner, . empty");
  add_line(stair_render);
  stair_render->callback([&] {
    action = [&] {
      ls::LineSpec line = make_line();
      out.text = ls::render(line, x0, x1);
      if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
      auto s = ls::staircase_window(line, x0, x1, ls::Which::kStaircase);
      auto c = ls::staircase_window(line, x0, x1, ls::Which::kCorners);
      out.payload = {{"x0", x0},
                     {"x1", x1},
                     {"staircase", points_json(s.points)},
                     {"corners", points_json(c.points)},
                     {"render", out.text}};
    };
  });

  // gf
  auto* gf = app.add_subcommand("gf", "Short rational generating functions");
  gf->require_subcommand(1);
  bool expand = false, half_open = false;
  std::vector<ls::Int> window, direction;
  std::string method = "compact";
  auto add_expand = [&](CLI::App* c) {
    add_ab(c);
    c->add_flag("--expand", expand, "Expand as a Laurent polynomial on a window");
    c->add_option("--window", window, "x0 x1 y0 y1")->expected(4);
    c->add_option("--direction", direction, "Expansion direction dx dy")->expected(2);
  };
  auto emit_gf = [&](const ls::RationalGF& f, const ls::SlopePair& sp, ls::ExpWindow def) {
    if (!expand) {
      out.text = ls::to_text(f);
      if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
      out.payload = ls::to_json(f);
      return;
    }
    ls::ExpWindow w = window.empty() ? def : ls::ExpWindow{window[0], window[1], window[2], window[3]};
    ls::Vec2 dir = direction.empty() ? ls::expansion_direction(f, sp) : ls::Vec2{direction[0], direction[1]};
    auto coeffs = ls::gf_expand(f, w, dir).nonzero();
    out.text = ls::polynomial_string(coeffs);
    out.payload = {{"polynomial", out.text}, {"coefficients", coefficients_json(coeffs)}};
  };
  auto* gf_cone = gf->add_subcommand("cone", "Cone spanned by (1,0) and (a,b)");
  add_expand(gf_cone);
  gf_cone->callback([&] {
    action = [&] {
      auto sp = ls::SlopePair::coprime(a, b);
      emit_gf(ls::gf_cone({sp}), sp, {0, 3 * sp.a, 0, 3 * sp.b});
    };
  });
  auto* gf_tri = gf->add_subcommand("triangle", "Triangle with vertices (0,0), (a,0), (a,b)");
  add_expand(gf_tri);
  gf_tri->add_flag("--half-open", half_open, "Drop the closed edge on the line ay = bx and the origin");
  gf_tri->callback([&] {
    action = [&] {
      auto sp = ls::SlopePair::coprime(a, b);
      auto f = half_open ? ls::gf_half_open_triangle(sp) : ls::gf_closed_triangle(sp);
      emit_gf(f, sp, {-1, sp.a + 1, -1, sp.b + 1});
    };
  });
  auto* gf_carlitz = gf->add_subcommand("carlitz", "Dedekind-Carlitz polynomial sum_{k<a} x^(k-1) y^floor(bk/a)");
  add_expand(gf_carlitz);
  gf_carlitz->add_option("--method", method, "compact, partition, positive or naive")
      ->check(CLI::IsMember({"compact", "partition", "positive", "naive"}));
  gf_carlitz->callback([&] {
    action = [&] {
      auto sp = ls::SlopePair::coprime(a, b);
      if (method == "positive") {
        ls::PositiveProgram p = ls::carlitz_positive(sp);
        if (expand) {
          auto coeffs = p.coefficients();
          out.text = ls::polynomial_string(coeffs);
          out.payload = {{"polynomial", out.text}, {"coefficients", coefficients_json(coeffs)}};
          return;
        }
        out.text = ls::to_text(p);
        out.text.pop_back();
        out.payload = ls::to_json(p);
        return;
      }
      ls::CarlitzPolynomial c = method == "naive" ? ls::carlitz_naive(sp)
                                : method == "partition"
                                    ? ls::carlitz_short(sp, ls::CarlitzMethod::kPartition)
                                    : ls::carlitz_short(sp);
      if (c.is_naive()) {
        auto coeffs = c.coefficients();
        out.text = ls::polynomial_string(coeffs);
        out.payload = {{"polynomial", out.text}, {"coefficients", coefficients_json(coeffs)}};
        return;
      }
      emit_gf(std::get<ls::RationalGF>(c.form), sp, {-1, sp.a, -1, sp.b});
    };
  });

  // white
  auto* white = app.add_subcommand("white", "Empty lattice tetrahedra conv{0, e1, e2, (a,b,n)}");
  white->require_subcommand(1);
  auto* white_check = white->add_subcommand("check", "Classify one tetrahedron");
  white_check->add_option("--a", a, "a")->required();
  white_check->add_option("--b", b, "b")->required();
  white_check->add_option("--n", n, "n")->required()->check(CLI::PositiveNumber);
  white_check->callback([&] {
    action = [&] {
      ls::WhiteVerdict v = ls::classify({a, b, n});
      out.payload = ls::to_json(v);
      std::ostringstream t;
      t << "empty: " << yes_no(v.empty) << "\nclean: " << yes_no(v.clean)
        << "\nf_all_one: " << (v.f_all_one ? yes_no(*v.f_all_one) : "n/a")
        << "\nabc_has_one: " << yes_no(v.abc_has_one);
      if (v.white_form) {
        const auto& w = *v.white_form;
        t << "\nwhite_form: T(" << w[0] << "," << w[1] << "," << w[2] << ")";
      }
      out.text = t.str();
    };
  });
  ls::Int n_max = 10;
  auto* white_scan = white->add_subcommand("scan", "List empty tetrahedra with 0 <= a,b < n <= N");
  white_scan->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(ls::Int{1}, ls::Int{200}));
  white_scan->callback([&] {
    action = [&] {
      json arr = json::array();
      std::string t;
      for (ls::Int m = 1; m <= n_max; ++m) {
        for (ls::Int x = 0; x < m; ++x) {
          for (ls::Int y = 0; y < m; ++y) {
            ls::WhiteVerdict v = ls::classify({x, y, m});
            if (!v.empty) continue;
            json row = ls::to_json(v);
            row["a"] = x;
            row["b"] = y;
            row["n"] = m;
            arr.push_back(row);
            t += "T(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(m) + ")";
            if (v.white_form) {
              const auto& w = *v.white_form;
              t += " ~ T(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
            }
            t += "\n";
          }
        }
      }
      if (!t.empty()) t.pop_back();
      out.text = t;
      out.payload = arr;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run oracle sweeps");
  std::string suite;
  ls::VerifyOptions vopt;
  verify->add_option("suite", suite, "sequences, staircase, barvinok, carlitz, white or all")
      ->required()
      ->check(CLI::IsMember(ls::suite_names()));
  verify->add_option("--max", vopt.max, "Override every sweep bound");
  verify->add_option("--seed", vopt.seed, "Seed for sampled cases");
  verify->add_option("--threads", vopt.threads, "Worker count (0: automatic)");
  verify->callback([&] {
    action = [&] {
      json arr = json::array();
      std::string t;
      for (const auto& check : ls::suite_checks(suite)) {
        ls::CheckResult r = check(vopt);
        out.ok = out.ok && r.passed;
        arr.push_back(ls::to_json(r));
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
        t += (r.passed ? "PASS " : "FAIL ") + r.id + ": " + r.title + " (" + std::to_string(r.cases) + " cases, " +
             secs + " s)\n";
        for (const auto& f : r.failures) t += "  " + f + "\n";
      }
      if (!t.empty()) t.pop_back();
      out.text = t;
      out.payload = {{"suite", suite}, {"passed", out.ok}, {"checks", arr}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (as_json) {
    std::cout << out.payload.dump(2) << "\n";
  } else {
    std::cout << out.text << "\n";
  }
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return 1;
    }
    f << out.payload.dump(2) << "\n";
  }
  return out.ok ? 0 : 1;
}
