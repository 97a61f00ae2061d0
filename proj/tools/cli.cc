#include "cli.h"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "csst/codefile.h"
#include "csst/conjugation.h"
#include "csst/logical.h"
#include "csst/oracles.h"
#include "csst/rm.h"
#include "csst/transversal.h"
#include "json.hpp"

namespace csst {

namespace {

using json = nlohmann::json;

constexpr size_t kMaxListed = 16;
// Longer vectors are summarized by weight in text output.
constexpr size_t kMaxPrintedBits = 64;

struct Context {
  std::ostream &out;
  bool json = false;
};

std::string bits(const BitVector &v) { return v.to_string(); }

CssCode require_css(const CodeFile &file, const std::string &command) {
  if (file.kind != CodeFile::Kind::kCss) {
    throw std::invalid_argument(command + " needs a CSS code; run cssify first");
  }
  return file.css;
}

json witness_json(const Witness &w) {
  json j = {{"a", bits(w.a)}, {"violation", violation_name(w.violation)}};
  if (w.offending.size()) j["offending"] = bits(w.offending);
  if (w.certificate) {
    j["certificate"] = json::array();
    for (const auto &b : w.certificate->basis()) j["certificate"].push_back(bits(b));
  }
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

std::string short_bits(const BitVector &v) {
  if (v.size() <= kMaxPrintedBits) return v.to_string();
  return "<weight " + std::to_string(v.weight()) + ">";
}

std::string witness_line(const Witness &w) {
  std::ostringstream s;
  if (w.violation == Violation::kNone) {
    s << "a=" << short_bits(w.a);
    if (w.certificate) {
      s << " certificate dim " << w.certificate->dim();
      if (w.a.weight() <= kMaxPrintedBits / 2) {
        s << ":";
        for (const auto &b : w.certificate->basis()) s << " " << bits(b);
      }
    }
  } else {
    s << violation_name(w.violation);
    if (w.a.size()) s << " a=" << short_bits(w.a);
    if (w.offending.size()) s << " offending=" << short_bits(w.offending);
  }
  if (!w.detail.empty()) s << " (" << w.detail << ")";
  return s.str();
}

int report_verdict(Context &ctx, const std::string &command,
                   const std::string &name, const Verdict &v,
                   json extra = json::object()) {
  if (ctx.json) {
    json j = {{"command", command}, {"code", name}, {"pass", v.pass}};
    j["witnesses"] = json::array();
    for (const auto &w : v.witnesses) j["witnesses"].push_back(witness_json(w));
    for (auto &[key, value] : extra.items()) j[key] = value;
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << command << " " << name << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
    for (auto &[key, value] : extra.items()) {
      ctx.out << "  " << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
    }
    if (const Witness *w = v.first_violation()) {
      ctx.out << "  first violation: " << witness_line(*w) << "\n";
    } else {
      size_t shown = std::min(v.witnesses.size(), kMaxListed);
      for (size_t i = 0; i < shown; i++) {
        ctx.out << "  " << witness_line(v.witnesses[i]) << "\n";
      }
      if (v.witnesses.size() > shown) {
        ctx.out << "  ... " << v.witnesses.size() - shown << " more\n";
      }
    }
  }
  return v.pass ? kExitPass : kExitFail;
}

std::pair<BitVector, BitVector> parse_pattern(const std::string &text, size_t n) {
  if (text.empty()) return {BitVector::ones(n), BitVector(n)};
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--pattern expects t1,t7");
  }
  BitVector t1 = BitVector::from_string(text.substr(0, comma));
  BitVector t7 = BitVector::from_string(text.substr(comma + 1));
  if (t1.size() != n || t7.size() != n) {
    throw std::invalid_argument("--pattern vectors must have length n");
  }
  if (!star(t1, t7).is_zero()) {
    throw std::invalid_argument("--pattern supports must be disjoint");
  }
  return {t1, t7};
}

std::string binary_label(uint64_t v, size_t k) {
  std::string s;
  for (size_t i = 0; i < k; i++) s += ((v >> i) & 1) ? '1' : '0';
  return s;
}

json terms_json(const PhasePolynomial &p) {
  json terms = json::array();
  for (const auto &t : p.terms) terms.push_back(t);
  return terms;
}

// Z signs after conjugating a CSS code by X^x.
CssCode flip_z_signs(const CssCode &c, const BitVector &x) {
  std::vector<int> signs = c.z_signs();
  for (size_t i = 0; i < signs.size(); i++) {
    if (x.dot(c.z_stabilizers()[i])) signs[i] = -signs[i];
  }
  CssCode out(c.n(), c.x_stabilizers(), c.z_stabilizers(), signs, c.logical_x(),
              c.logical_z(), c.name());
  out.set_x_signs(c.x_signs());
  return out;
}

ProfileMethod parse_method(const std::string &m) {
  if (m == "auto") return ProfileMethod::kAuto;
  if (m == "exhaustive") return ProfileMethod::kExhaustive;
  if (m == "ie") return ProfileMethod::kInclusionExclusion;
  throw std::invalid_argument("unknown --method " + m);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Transversal diagonal gates on stabilizer and CSS codes", "csst"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");
  app.fallthrough();

  std::string file, pattern, output, method = "auto";
  uint64_t cap = kDefaultEnumerationCap;
  int level = 3;
  bool strict = false, generators = false, anf = false, enumerate = false,
       projector = false, polynomial = false;
  size_t m = 0, r = 0, n_max = 4, verify_cap = 0;
  uint64_t samples = 500, seed = 1;
  std::string emit;

  auto add_file = [&](CLI::App *c) {
    c->add_option("FILE", file, "Code file or catalog name")->required();
  };
  auto add_cap = [&](CLI::App *c) {
    c->add_option("--max-enum", cap, "Work-unit cap for exponential loops");
  };

  auto *ctt = app.add_subcommand("check-transversal-t",
                                 "Does T (or a T/T^dagger pattern) preserve the code space");
  add_file(ctt);
  add_cap(ctt);
  ctt->add_option("--pattern", pattern, "t1,t7 as 0/1 strings");
  ctt->add_flag("--strict-signs", strict, "Only check signs on the punctured dual");
  ctt->add_flag("--generators", generators, "Check only the X-space basis");

  auto *czr = app.add_subcommand("check-z-rotation",
                                 "Transversal diag(1, exp(2 pi i/2^L))");
  add_file(czr);
  add_cap(czr);
  czr->add_option("--level", level, "L")->required();
  czr->add_flag("--projector", projector, "Use the projector expansion");

  auto *act = app.add_subcommand("logical-action", "Coset phase profile");
  add_file(act);
  add_cap(act);
  act->add_option("--level", level, "L")->required();
  act->add_flag("--anf", anf, "Print the phase polynomial");
  act->add_option("--method", method, "auto, exhaustive or ie");

  auto *css = app.add_subcommand("cssify", "Drop the Z parts of mixed generators");
  add_file(css);
  add_cap(css);
  css->add_option("-o", output, "Output file")->required();
  css->add_option("--verify-distance", verify_cap,
                  "Compare brute-force distances under this cap");

  auto *qrm = app.add_subcommand("qrm", "Quantum Reed-Muller code QRM(r,m)");
  qrm->add_option("--m", m)->required();
  qrm->add_option("--r", r)->required();
  qrm->add_option("--emit-code", emit, "Write the code to this file");
  qrm->add_flag("--polynomial", polynomial, "Print the logical phase polynomial");

  auto *tri = app.add_subcommand("triortho", "Is G_1 triorthogonal");
  add_file(tri);
  auto *lid = app.add_subcommand("logical-identity", "Is transversal T the logical identity");
  add_file(lid);
  add_cap(lid);
  lid->add_flag("--enumerate", enumerate, "Enumerate instead of using generators");
  auto *lt = app.add_subcommand("logical-t", "Is transversal T the logical transversal T");
  add_file(lt);
  add_cap(lt);
  lt->add_flag("--enumerate", enumerate, "Enumerate instead of using generators");

  auto *orc = app.add_subcommand("verify-oracles",
                                 "Closed forms against the dense Walsh oracle");
  orc->add_option("--n-max", n_max, "Random cases on this many qubits, all below");
  orc->add_option("--samples", samples, "Random cases per family");
  orc->add_option("--seed", seed);

  auto *sc = app.add_subcommand("sign-correct", "Fix Z signs by an X frame");
  add_file(sc);
  add_cap(sc);
  sc->add_option("--pattern", pattern, "t1,t7 as 0/1 strings");
  sc->add_option("-o", output, "Output file");

  std::string catalog_name;
  auto *cat = app.add_subcommand("catalog", "List or export built-in codes");
  cat->add_option("NAME", catalog_name);
  cat->add_option("-o", output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  Context ctx{out, as_json};
  try {
    if (ctt->parsed()) {
      CodeFile f = load_code(file);
      auto [t1, t7] = parse_pattern(pattern, f.n());
      TransversalOptions opt;
      opt.strict_signs = strict;
      opt.cap = cap;
      if (generators) opt.scope = TransversalOptions::Scope::kGenerators;
      return report_verdict(ctx, "check-transversal-t", f.name(),
                            check_transversal_pattern(f.stabilizer, t1, t7, opt));
    }
    if (czr->parsed()) {
      CodeFile f = load_code(file);
      Verdict v = projector
                      ? projector_check(f.stabilizer, GateSpec::z_rotation(level), cap)
                      : check_z_rotation_conditions(f.stabilizer, level, cap);
      return report_verdict(ctx, "check-z-rotation", f.name(), v,
                            {{"level", level}});
    }
    if (act->parsed()) {
      CodeFile f = load_code(file);
      CssCode code = require_css(f, "logical-action");
      PhaseProfile p;
      try {
        p = coset_phase_profile(code, level, cap, parse_method(method));
      } catch (const NonConstantCoset &e) {
        if (ctx.json) {
          json j = {{"command", "logical-action"}, {"code", f.name()},
                    {"level", level}, {"pass", false},
                    {"basis_state", bits(e.v)},
                    {"u1", bits(e.u1)}, {"r1", e.r1},
                    {"u2", bits(e.u2)}, {"r2", e.r2}};
          out << j.dump(2) << "\n";
        } else {
          out << "logical-action " << f.name() << ": FAIL (" << e.what() << ")\n"
              << "  " << bits(e.u1) << " -> " << e.r1 << "\n"
              << "  " << bits(e.u2) << " -> " << e.r2 << "\n";
        }
        return kExitFail;
      }
      int64_t half = int64_t{1} << (level - 1);
      uint64_t minus_one = std::count(p.residues.begin(), p.residues.end(), half);
      std::optional<PhasePolynomial> poly;
      std::string anf_note;
      if (anf) {
        try {
          poly = diag_to_anf(p);
        } catch (const std::invalid_argument &e) {
          anf_note = e.what();
        }
      }
      if (ctx.json) {
        json j = {{"command", "logical-action"}, {"code", f.name()},
                  {"level", level}, {"k", p.k}, {"pass", true},
                  {"states", p.residues.size()}, {"minus_one", minus_one}};
        j["histogram"] = json::object();
        for (auto [res, count] : p.histogram()) j["histogram"][std::to_string(res)] = count;
        if (p.k <= 6) j["residues"] = p.residues;
        if (poly) {
          j["anf"] = {{"terms", terms_json(*poly)}, {"degree", poly->degree()},
                      {"polynomial", poly->to_string()}};
        } else if (anf) {
          j["anf_error"] = anf_note;
        }
        out << j.dump(2) << "\n";
        return kExitPass;
      }
      out << "logical-action " << f.name() << ": n=" << code.n() << " k=" << p.k
          << " level=" << level << "\n";
      out << "residues mod " << (int64_t{1} << level) << " over "
          << p.residues.size() << " basis states:\n";
      for (auto [res, count] : p.histogram()) {
        out << "  " << res << ": " << count << "\n";
      }
      out << "minus-one entries: " << minus_one << " of " << p.residues.size()
          << "\n";
      if (p.k <= 6) {
        for (size_t v = 0; v < p.residues.size(); v++) {
          out << "  |" << binary_label(v, p.k) << "> -> " << p.residues[v] << "\n";
        }
      }
      if (poly) {
        out << "ANF: " << poly->terms.size() << " terms, degree " << poly->degree()
            << "\n  " << poly->to_string() << "\n";
      } else if (anf) {
        out << "ANF: unavailable (" << anf_note << ")\n";
      }
      return kExitPass;
    }
    if (css->parsed()) {
      CodeFile f = load_code(file);
      CssCode c = cssify(f.stabilizer);
      if (c.name().empty()) c.set_name(f.name());
      save_code(CodeFile::from_css(c), output);
      json extra = {{"n", c.n()}, {"k_before", f.stabilizer.k()}, {"k_after", c.k()},
                    {"output", output}};
      bool ok = c.k() >= f.stabilizer.k();
      if (verify_cap) {
        auto d0 = code_distance(f.stabilizer, verify_cap);
        auto d1 = code_distance(c.to_stabilizer(), verify_cap);
        extra["d_before"] = d0 ? json(*d0) : json(nullptr);
        extra["d_after"] = d1 ? json(*d1) : json(nullptr);
        if (d0 && d1) ok = ok && *d1 >= *d0;
      }
      Verdict v;
      v.pass = ok;
      return report_verdict(ctx, "cssify", f.name(), v, extra);
    }
    if (qrm->parsed()) {
      CssCode c = qrm_code(r, m);
      json j = {{"command", "qrm"}, {"code", c.name()}, {"n", c.n()}, {"k", c.k()}};
      std::optional<PhasePolynomial> poly;
      if (polynomial) {
        poly = qrm_logical_polynomial(m, r);
        j["terms"] = terms_json(*poly);
        j["term_count"] = poly->terms.size();
        j["polynomial"] = poly->to_string();
      }
      if (!emit.empty()) {
        save_code(CodeFile::from_css(c), emit);
        j["emitted"] = emit;
      }
      if (ctx.json) {
        out << j.dump(2) << "\n";
      } else {
        out << c.name() << ": n=" << c.n() << " k=" << c.k() << "\n";
        if (poly) {
          out << "q(f): " << poly->terms.size() << " terms\n  " << poly->to_string()
              << "\n";
        }
        if (!emit.empty()) out << "wrote " << emit << "\n";
      }
      return kExitPass;
    }
    if (tri->parsed()) {
      CodeFile f = load_code(file);
      BitMatrix g1 = g1_matrix(require_css(f, "triortho"));
      Verdict v;
      v.pass = check_triorthogonal(g1);
      return report_verdict(ctx, "triortho", f.name(), v,
                            {{"rows", g1.num_rows()}});
    }
    if (lid->parsed() || lt->parsed()) {
      CodeFile f = load_code(file);
      std::string command = lid->parsed() ? "logical-identity" : "logical-t";
      CssCode c = require_css(f, command);
      LogicalOptions opt;
      opt.enumerate = enumerate;
      opt.cap = cap;
      Verdict v = lid->parsed() ? check_logical_identity(c, opt)
                                : check_logical_transversal_T(c, opt);
      return report_verdict(ctx, command, f.name(), v);
    }
    if (orc->parsed()) {
      if (n_max < 2) throw std::invalid_argument("--n-max must be at least 2");
      OracleOptions opt;
      opt.exhaustive_n = n_max - 1;
      opt.random_n = n_max;
      opt.random_cases = samples;
      opt.seed = seed;
      auto families = verify_oracles(opt);
      bool ok = std::all_of(families.begin(), families.end(),
                            [](const OracleFamily &f) { return f.ok(); });
      if (ctx.json) {
        json j = {{"command", "verify-oracles"}, {"pass", ok}};
        j["families"] = json::array();
        for (const auto &f : families) {
          j["families"].push_back({{"name", f.name}, {"cases", f.cases},
                                   {"mismatches", f.mismatches},
                                   {"norm_failures", f.norm_failures},
                                   {"first_mismatch", f.first_mismatch}});
        }
        out << j.dump(2) << "\n";
      } else {
        out << "verify-oracles: " << (ok ? "PASS" : "FAIL") << "\n";
        for (const auto &f : families) {
          out << "  " << f.name << ": " << f.cases << " cases, " << f.mismatches
              << " mismatches, " << f.norm_failures << " norm failures";
          if (!f.first_mismatch.empty()) out << " (first: " << f.first_mismatch << ")";
          out << "\n";
        }
      }
      return ok ? kExitPass : kExitFail;
    }
    if (sc->parsed()) {
      CodeFile f = load_code(file);
      auto [t1, t7] = parse_pattern(pattern, f.n());
      auto x = pauli_sign_correction(f.stabilizer, t1, t7, cap);
      if (!x) {
        Verdict v;
        v.pass = false;
        return report_verdict(ctx, "sign-correct", f.name(), v,
                              {{"correction", "none exists"}});
      }
      CodeFile fixed = f.kind == CodeFile::Kind::kCss
                           ? CodeFile::from_css(flip_z_signs(f.css, *x))
                           : CodeFile::from_stabilizer(apply_x_frame(f.stabilizer, *x));
      TransversalOptions opt;
      opt.cap = cap;
      Verdict v = check_transversal_pattern(fixed.stabilizer, t1, t7, opt);
      if (!output.empty()) save_code(fixed, output);
      json extra = {{"x", bits(*x)}};
      if (!output.empty()) extra["output"] = output;
      return report_verdict(ctx, "sign-correct", f.name(), v, extra);
    }
    if (cat->parsed()) {
      if (catalog_name.empty()) {
        json list = json::array();
        for (const auto &name : catalog_names()) {
          CssCode c = catalog(name);
          list.push_back({{"name", name}, {"n", c.n()}, {"k", c.k()}});
          if (!ctx.json) out << name << " n=" << c.n() << " k=" << c.k() << "\n";
        }
        if (ctx.json) out << list.dump(2) << "\n";
        return kExitPass;
      }
      CodeFile f = CodeFile::from_css(catalog(catalog_name));
      if (!output.empty()) {
        save_code(f, output);
      } else {
        out << (ctx.json ? to_json(f) : to_text(f));
      }
      return kExitPass;
    }
  } catch (const EnumerationCapExceeded &e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace csst
