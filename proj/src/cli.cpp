// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/cli.hpp"

#include "graycal/critical_pairs.hpp"
#include "graycal/derivation.hpp"
#include "graycal/interp.hpp"
#include "graycal/measure.hpp"
#include "graycal/render.hpp"
#include "graycal/script_parser.hpp"
#include "graycal/term_text.hpp"
#include "graycal/theory_parser.hpp"

#include "CLI11.hpp"
#include "expr_parse.hpp"

#include <fstream>
#include <sstream>

namespace graycal {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --theory accepts a file path or a builtin name.
std::optional<Theory> load_theory(const std::string& spec, std::ostream& err) {
  if (auto text = read_file(spec)) {
    TheoryParse p = parse_theory(*text);
    if (!p.theory) {
      err << spec << ": " << render_diagnostics(p.diags);
      return std::nullopt;
    }
    return p.theory;
  }
  try {
    return builtin_theory(spec);
  } catch (const GrayError&) {
    err << "cannot open theory file or builtin '" << spec << "'\n";
    return std::nullopt;
  }
}

std::optional<OneCell> load_term(const Multigraph& mg, const std::string& text,
                                 Mode mode, std::ostream& err) {
  TermParse p = parse_term(mg, text);
  if (!p.term) {
    err << "term '" << text << "': " << render_diagnostics(p.diags);
    return std::nullopt;
  }
  Diagnostics ds = validate(mg, *p.term, mode);
  if (!ds.empty()) {
    err << "term '" << text << "': " << render_diagnostics(ds);
    return std::nullopt;
  }
  return p.term;
}

void print_steps(std::ostream& out, const RewritePath& path) {
  for (size_t i = 0; i < path.size(); ++i) {
    const RewriteStep& s = path[i];
    out << "  " << i + 1 << ". " << (s.inverse ? "inverse " : "")
        << to_string(s.redex.kind) << " @ " << s.redex.index;
    if (s.redex.kind == RedexKind::Underbraid)
      out << " split " << s.redex.split;
    out << "\n     -> " << print_term(s.after) << "\n";
  }
}

struct ModeFlags {
  bool plain = false;
  bool braided = false;

  std::optional<Mode> resolve(std::ostream& err) const {
    if (plain == braided) {
      err << "exactly one of --plain or --braided is required\n";
      return std::nullopt;
    }
    return plain ? Mode::Plain : Mode::Braided;
  }
};

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coherence engine and proof checker for free braided Gray monoids"};
  app.name("graycal");
  app.require_subcommand(1);

  std::string theory_spec, term_a, term_b, script_path, sequent;
  ModeFlags mode;
  size_t max_cells = 3, max_width = 4, max_block = 4;

  auto add_theory = [&](CLI::App* cmd) {
    cmd->add_option("--theory", theory_spec, "theory file or builtin name")->required();
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_flag("--plain", mode.plain, "multiarrow terms only");
    cmd->add_flag("--braided", mode.braided, "allow crossings");
  };

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "rewrite a term to normal form");
  add_theory(normalize_cmd);
  add_mode(normalize_cmd);
  normalize_cmd->add_option("term", term_a, "term text")->required();

  CLI::App* decide_cmd =
      app.add_subcommand("decide", "decide existence of a 2-cell between two terms");
  add_theory(decide_cmd);
  add_mode(decide_cmd);
  decide_cmd->add_option("term1", term_a)->required();
  decide_cmd->add_option("term2", term_b)->required();

  CLI::App* weigh_cmd = app.add_subcommand("weigh", "print the termination measure");
  add_theory(weigh_cmd);
  add_mode(weigh_cmd);
  weigh_cmd->add_option("term", term_a)->required();

  CLI::App* cp_cmd = app.add_subcommand("cp", "critical-pair joinability report");
  add_theory(cp_cmd);
  add_mode(cp_cmd);
  cp_cmd->add_option("--max-cells", max_cells, "enumerate terms up to this many cells");
  cp_cmd->add_option("--max-width", max_width, "cap on stage width");
  cp_cmd->add_option("--max-block", max_block, "cap on crossing block size");

  CLI::App* check_cmd = app.add_subcommand("check", "check a proof script");
  add_theory(check_cmd);
  check_cmd->add_option("script", script_path, "a .gpf proof script")->required();

  CLI::App* interp_cmd =
      app.add_subcommand("interp", "interpret an expression in the free Gray monoid");
  add_theory(interp_cmd);
  interp_cmd->add_option("sequent", sequent, "\"[ctx] |- expr\"")->required();

  CLI::App* render_cmd = app.add_subcommand("render", "draw a term as an ASCII diagram");
  render_cmd->add_option("--theory", theory_spec, "theory file or builtin name");
  render_cmd->add_flag("--plain", mode.plain, "reject crossings");
  render_cmd->add_option("term", term_a)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (app.got_subcommand(normalize_cmd)) {
      auto t = load_theory(theory_spec, err);
      auto m = mode.resolve(err);
      if (!t || !m)
        return kUsage;
      auto f = load_term(t->base, term_a, *m, err);
      if (!f)
        return kUsage;
      NormalizeResult r = normalize(t->base, *f, *m);
      out << "normal form: " << print_term(r.nf) << "\n";
      out << "steps: " << r.path.size() << "\n";
      return kOk;
    }
    if (app.got_subcommand(decide_cmd)) {
      auto t = load_theory(theory_spec, err);
      auto m = mode.resolve(err);
      if (!t || !m)
        return kUsage;
      auto f = load_term(t->base, term_a, *m, err);
      auto g = load_term(t->base, term_b, *m, err);
      if (!f || !g)
        return kUsage;
      if (boundary(t->base, *f) != boundary(t->base, *g)) {
        err << "terms have different boundaries\n";
        return kUsage;
      }
      auto path = decide_equal(t->base, *f, *g, *m);
      if (!path) {
        out << "NOT EQUAL\n";
        return kFail;
      }
      out << "EQUAL\n";
      out << "zig-zag, " << path->size() << (path->size() == 1 ? " step:" : " steps:") << "\n";
      print_steps(out, *path);
      return kOk;
    }
    if (app.got_subcommand(weigh_cmd)) {
      auto t = load_theory(theory_spec, err);
      auto m = mode.resolve(err);
      if (!t || !m)
        return kUsage;
      auto f = load_term(t->base, term_a, *m, err);
      if (!f)
        return kUsage;
      out << "measure: " << measure_of(t->base, *f, *m).render() << "\n";
      return kOk;
    }
    if (app.got_subcommand(cp_cmd)) {
      auto t = load_theory(theory_spec, err);
      auto m = mode.resolve(err);
      if (!t || !m)
        return kUsage;
      EnumLimits lim{max_cells, max_width, max_block,
                     /*canonical_colors=*/t->base.arrows.empty()};
      CriticalPairReport rep = critical_pairs(t->base, *m, lim);
      out << rep.render();
      return rep.ok() ? kOk : kFail;
    }
    if (app.got_subcommand(check_cmd)) {
      auto t = load_theory(theory_spec, err);
      if (!t)
        return kUsage;
      auto text = read_file(script_path);
      if (!text) {
        err << "cannot open script " << script_path << "\n";
        return kUsage;
      }
      ScriptParse sp = parse_script(*text);
      if (!sp.script) {
        err << script_path << ": " << render_diagnostics(sp.diags);
        return kUsage;
      }
      ScriptReport rep = check_script(*t, *sp.script);
      for (const auto& l : rep.lemmas) {
        if (l.passed)
          out << "ok   " << l.name << "\n";
        else
          out << "FAIL " << l.name << ": " << l.message << "\n";
      }
      out << (rep.all_passed() ? "all lemmas pass" : "some lemmas FAILED") << "\n";
      return rep.all_passed() ? kOk : kFail;
    }
    if (app.got_subcommand(interp_cmd)) {
      auto t = load_theory(theory_spec, err);
      if (!t)
        return kUsage;
      // "[A:C, ...] |- expr"
      Lexer lx(sequent);
      Diagnostics ds;
      std::vector<std::string> names;
      Context objs;
      if (lx.at(Tok::LBracket)) {
        lx.next();
        while (!lx.at(Tok::RBracket) && !lx.at(Tok::Eof)) {
          if (!lx.at(Tok::Ident))
            break;
          std::string n = lx.next().text;
          if (!lx.at(Tok::Colon))
            break;
          lx.next();
          if (!lx.at(Tok::Ident))
            break;
          names.push_back(n);
          objs.push_back(lx.next().text);
          if (lx.at(Tok::Comma))
            lx.next();
        }
        if (!lx.at(Tok::RBracket)) {
          err << "malformed context in sequent\n";
          return kUsage;
        }
        lx.next();
      }
      if (!lx.at(Tok::Turnstile)) {
        err << "expected '|-' in sequent\n";
        return kUsage;
      }
      lx.next();
      FreeModel fm = free_model(*t);
      // try a 1-cell expression first, then a 2-cell expression
      {
        Lexer probe(sequent);
        while (!probe.at(Tok::Turnstile) && !probe.at(Tok::Eof))
          probe.next();
        probe.next();
        Diagnostics d1;
        auto s1 = parse_sexpr1(probe, d1);
        if (s1 && probe.at(Tok::Eof)) {
          Elaborator el(names, objs, /*first_use=*/false);
          auto e1 = el.run1(*s1, d1);
          if (e1) {
            try {
              check_expr1(*t, objs, *e1);
              OneCell c = interp_expr1(fm, objs, *e1);
              out << print_term(c) << "\n";
              return kOk;
            } catch (const CheckFailure&) {
              // fall through to the 2-cell reading
            }
          }
        }
      }
      auto s2 = parse_sexpr2(lx, ds);
      if (!s2 || !lx.at(Tok::Eof)) {
        err << "cannot parse the expression: " << render_diagnostics(ds);
        return kUsage;
      }
      Elaborator el(names, objs, /*first_use=*/false);
      auto e2 = el.run2(*s2, ds);
      if (!e2) {
        err << render_diagnostics(ds);
        return kUsage;
      }
      try {
        infer_expr2(*t, objs, *e2);
      } catch (const CheckFailure& e) {
        err << "ill-typed expression: " << e.what() << "\n";
        return kUsage;
      }
      out << print_path(interp_expr2(fm, objs, *e2));
      return kOk;
    }
    if (app.got_subcommand(render_cmd)) {
      std::string spec = theory_spec.empty() ? "example-G0" : theory_spec;
      auto t = load_theory(spec, err);
      if (!t)
        return kUsage;
      Mode m = mode.plain ? Mode::Plain : Mode::Braided;
      auto f = load_term(t->base, term_a, m, err);
      if (!f)
        return kUsage;
      out << render_ascii(t->base, *f);
      return kOk;
    }
  } catch (const GrayError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  err << "no subcommand\n";
  return kUsage;
}

} // namespace graycal
