// fgls — formal-group-law Schubert calculus CLI.
//
//   fgls compute class   exact class computation, JSON or LaTeX output
//   fgls verify identities   run a named self-verification suite
//   fgls verify braid    braid-relation report for one theory, as JSON
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <fgls/classes.hpp>
#include <fgls/series_io.hpp>
#include <fgls/suites.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace fgls;

int env_headroom() {
  const char* v = std::getenv("FGLS_TRUNC_HEADROOM");
  if (v == nullptr || *v == '\0') return 0;
  try {
    int h = std::stoi(v);
    if (h < 0) throw Error("FGLS_TRUNC_HEADROOM must be >= 0");
    return h;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("FGLS_TRUNC_HEADROOM must be an integer");
  }
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    try {
      out.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw Error("cannot parse operator word entry '" + cur + "'");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

Json label_to_json(const ClassLabel& label) {
  Json j;
  switch (label.kind) {
    case ClassLabel::Kind::flag_subbundle:
      j["kind"] = "flag-subbundle";
      j["m"] = label.m;
      break;
    case ClassLabel::Kind::bott_samelson:
      j["kind"] = "operator-word";
      j["word"] = label.word;
      break;
    case ClassLabel::Kind::schubert:
      j["kind"] = "schubert";
      j["window"] = label.window;
      break;
  }
  return j;
}

Json class_to_json(const ClassExpression& cls) {
  Json j;
  j["schema"] = 1;
  j["theory"] = theory_name(cls.theory);
  j["type"] = flag_type_name(cls.type);
  j["n"] = cls.n;
  j["label"] = label_to_json(cls.label);
  if (!cls.beta.empty()) j["beta"] = cls.beta;
  j["value"] = series_to_json(cls.value);
  return j;
}

// Factored LaTeX for flag-subbundle classes (the product formula is the
// class); expanded series otherwise.
std::string class_to_latex(const ClassExpression& cls) {
  if (cls.label.kind == ClassLabel::Kind::flag_subbundle &&
      (cls.beta.empty() || cls.beta == "sym")) {
    const int n = cls.n;
    const int m = cls.label.m;
    std::string out;
    auto factor = [&](bool chi_x, int i, int j) {
      if (!out.empty()) out += " \\, ";
      out += "F\\big(";
      out += chi_x ? "\\chi(x_{" + std::to_string(i) + "})"
                   : "x_{" + std::to_string(i) + "}";
      out += ", \\chi(y_{" + std::to_string(j) + "})\\big)";
    };
    for (int j = 1; j <= n - m; ++j) {
      for (int i = 1; i + j <= n; ++i) factor(false, i, j);
      if (cls.type == FlagType::C)
        for (int i = 1; i + j <= n + 1; ++i) factor(true, i, j);
    }
    return out.empty() ? "1" : out;
  }
  return series_to_latex(cls.value);
}

// Lowest total degree the requested class can have; a smaller truncation
// cannot represent it.
int minimum_trunc(const ClassLabel& label, FlagType type, int n) {
  switch (label.kind) {
    case ClassLabel::Kind::flag_subbundle:
      return flag_product_min_degree(type, n, label.m);
    case ClassLabel::Kind::bott_samelson: {
      int base = type == FlagType::C ? n * n : n * (n - 1) / 2;
      return std::max(0, base - static_cast<int>(label.word.size()));
    }
    case ClassLabel::Kind::schubert:
      return 0;  // refined by the caller, which knows the element
  }
  return 0;
}

struct ComputeArgs {
  std::string type = "C";
  std::string theory = "multiplicative";
  int n = -1;
  std::optional<int> m;
  std::string perm;
  std::string word_text;
  std::string beta = "sym";
  int trunc = -1;
  std::string format = "json";
};

int run_compute_class(const ComputeArgs& a) {
  FlagType type = a.type == "A" ? FlagType::A : FlagType::C;
  Theory theory = theory_from_name(a.theory);

  int picks = (a.m.has_value() ? 1 : 0) + (a.perm.empty() ? 0 : 1) +
              (a.word_text.empty() ? 0 : 1);
  if (picks != 1)
    throw Error("exactly one of --m, --perm, --word must be given");
  if (a.n < 0 || (a.n == 0 && !(type == FlagType::C && a.m.has_value())))
    throw Error("need --n >= 1 (n = 0 is allowed only for type C with --m)");
  if (a.beta != "sym" && theory != Theory::multiplicative)
    throw Error("--beta applies only to --theory multiplicative");
  if (!a.perm.empty() && theory != Theory::multiplicative)
    throw Error(
        "--perm classes are canonical only over the multiplicative law; use "
        "--word to pick an operator word for other theories");

  int t = a.trunc >= 0 ? a.trunc : default_trunc(type, a.n) + env_headroom();
  // Size the context for the highest truncation used internally, so the
  // universal law carries every generator it needs: operator chains work
  // |word| degrees above the output order, plus one for the operator
  // denominators.
  int word_len = a.word_text.empty()
                     ? 0
                     : static_cast<int>(parse_word(a.word_text).size());
  TheoryContext ctx = standard_context(theory, std::max(1, t) + word_len + 1);

  ClassExpression cls;
  if (a.m.has_value()) {
    ClassLabel probe = ClassLabel::subbundle(*a.m);
    int need = minimum_trunc(probe, type, a.n);
    if (t < need)
      throw Error("truncation " + std::to_string(t) +
                  " too small for this class; minimum required is " +
                  std::to_string(need));
    cls = type == FlagType::C ? flag_class_C(ctx, a.n, *a.m, t)
                              : flag_class_A(ctx, a.n, *a.m, t);
  } else if (!a.perm.empty()) {
    SignedPerm w = parse_perm(a.perm, a.n);
    int need = w.length(type == FlagType::C);
    if (t < need)
      throw Error("truncation " + std::to_string(t) +
                  " too small for this class; minimum required is " +
                  std::to_string(need));
    cls = type == FlagType::C ? schubert_ck(a.n, w, t)
                              : schubert_ck_a(a.n, w, t);
  } else {
    std::vector<int> word = parse_word(a.word_text);
    ClassLabel probe = ClassLabel::samelson_word(word);
    int need = minimum_trunc(probe, type, a.n);
    if (t < need)
      throw Error("truncation " + std::to_string(t) +
                  " too small for this class; minimum required is " +
                  std::to_string(need));
    if (type == FlagType::C) {
      cls = bott_samelson(ctx, a.n, word, t);
    } else {
      cls.theory = ctx.theory();
      cls.type = FlagType::A;
      cls.n = a.n;
      cls.label = ClassLabel::samelson_word(word);
      cls.beta = detail::beta_state(ctx.ring());
      cls.value = chain_from_top_a(ctx, a.n, word, t);
    }
  }

  if (a.beta == "0") cls = specialize(cls, BetaValue::zero);
  if (a.beta == "-1") cls = specialize(cls, BetaValue::minus_one);

  if (a.format == "latex") {
    std::cout << class_to_latex(cls) << "\n";
  } else {
    std::cout << class_to_json(cls).dump(2) << "\n";
  }
  return 0;
}

struct VerifyIdentitiesArgs {
  std::string suite;
  int n = -1;
  std::string theory;  // empty = all
};

int run_verify_identities(const VerifyIdentitiesArgs& a) {
  std::vector<CheckResult> results;
  std::optional<Theory> only;
  if (!a.theory.empty()) only = theory_from_name(a.theory);
  auto theories = [&]() {
    return only.has_value()
               ? std::vector<Theory>{*only}
               : std::vector<Theory>{Theory::additive, Theory::multiplicative,
                                     Theory::universal};
  };

  if (a.suite == "fgl") {
    int d = a.n > 0 ? a.n : 8;
    for (Theory th : theories()) {
      auto part = fgl_axiom_suite(th, d);
      results.insert(results.end(), part.begin(), part.end());
    }
  } else if (a.suite == "symfun") {
    int max_n = a.n > 0 ? a.n : 3;
    for (Theory th : theories()) {
      auto part = symfun_suite(th, 8, 8, max_n);
      results.insert(results.end(), part.begin(), part.end());
    }
  } else if (a.suite == "telescope") {
    int max_n = a.n > 0 ? a.n : 4;
    for (Theory th : theories()) {
      auto part = telescope_suite(th, max_n);
      results.insert(results.end(), part.begin(), part.end());
    }
  } else if (a.suite == "braid") {
    // Fixed coverage: type A at the requested rank (default 3), type C at
    // rank 2, plus the generic-law counterexample.  A theory filter keeps
    // the matching subset.
    results = braid_suite(4);
    if (only.has_value()) {
      std::string prefix = *only == Theory::multiplicative ? "ck/"
                           : *only == Theory::additive     ? "additive/"
                                                           : "universal/";
      std::vector<CheckResult> kept;
      for (CheckResult& r : results)
        if (r.name.rfind(prefix, 0) == 0) kept.push_back(std::move(r));
      results = std::move(kept);
    }
  } else if (a.suite == "ck-words") {
    if (only.has_value() && *only != Theory::multiplicative)
      throw Error("suite 'ck-words' is defined over the multiplicative law");
    results = ck_words_suite(a.n > 0 ? a.n : 2);
  } else {
    throw Error("unknown suite '" + a.suite +
                "' (expected symfun|fgl|telescope|braid|ck-words)");
  }

  int passed = 0;
  for (const CheckResult& r : results) {
    if (r.pass) {
      ++passed;
      std::cout << "PASS " << r.name << "\n";
    } else {
      std::cout << "FAIL " << r.name
                << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

struct VerifyBraidArgs {
  std::string theory = "multiplicative";
  std::string type = "A";
  int n = 3;
  int deg = 4;
};

int run_verify_braid(const VerifyBraidArgs& a) {
  Theory theory = theory_from_name(a.theory);
  bool type_c = a.type == "C";
  TheoryContext ctx = standard_context(theory, a.deg + 5);
  BraidReport rep = braid_report(ctx, type_c, a.n, a.deg);

  Json j;
  j["schema"] = 1;
  j["theory"] = theory_name(theory);
  j["type"] = a.type;
  j["n"] = a.n;
  j["deg"] = a.deg;
  j["all_hold"] = rep.all_hold;
  Json pairs = Json::array();
  for (const BraidPair& p : rep.pairs) {
    Json pj;
    std::string pair_text;
    for (std::size_t k = 0; k < p.left.size(); ++k)
      pair_text += (k ? "," : "") + std::to_string(p.left[k]);
    pair_text += " vs ";
    for (std::size_t k = 0; k < p.right.size(); ++k)
      pair_text += (k ? "," : "") + std::to_string(p.right[k]);
    pj["pair"] = pair_text;
    pj["status"] = p.holds ? "holds" : "fails";
    if (!p.holds) {
      pj["witness"] = p.witness;
      pj["difference"] = p.difference;
    }
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  std::cout << j.dump(2) << "\n";
  return rep.all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schubert-class computations over formal group laws"};
  app.name("fgls");  // keep --help output independent of the invocation path
  app.require_subcommand(1);

  // ---- compute class ----
  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand("compute", "Compute a class");
  compute->require_subcommand(1);
  CLI::App* ccls = compute->add_subcommand("class", "One flag-bundle class");
  ccls->add_option("--type", ca.type, "Flag type: A or C")
      ->check(CLI::IsMember({"A", "C"}))
      ->required();
  ccls->add_option("--theory", ca.theory,
                   "additive | multiplicative | universal")
      ->check(CLI::IsMember({"additive", "multiplicative", "universal"}))
      ->required();
  ccls->add_option("--n", ca.n, "Bundle rank")->required();
  ccls->add_option("--m", ca.m, "Flag-subbundle level (product class)");
  ccls->add_option("--perm", ca.perm,
                   "Group element (one-line, e.g. \"2,-1\"; multiplicative "
                   "theory only)");
  ccls->add_option("--word", ca.word_text,
                   "Operator word, comma-separated (e.g. \"1,0,1\")");
  ccls->add_option("--beta", ca.beta, "Specialize beta: 0 | -1 | sym")
      ->check(CLI::IsMember({"0", "-1", "sym"}));
  ccls->add_option("--trunc", ca.trunc, "Truncation order override");
  ccls->add_option("--format", ca.format, "json | latex")
      ->check(CLI::IsMember({"json", "latex"}));

  // ---- verify identities ----
  VerifyIdentitiesArgs ia;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->require_subcommand(1);
  CLI::App* vid = verify->add_subcommand("identities",
                                         "Named identity suite; prints one "
                                         "PASS/FAIL line per check");
  vid->add_option("--suite", ia.suite,
                  "symfun | fgl | telescope | braid | ck-words")
      ->required();
  vid->add_option("--n", ia.n,
                  "Size parameter (suite-specific: symfun max rank, fgl "
                  "truncation, telescope max rank, braid type-A rank, "
                  "ck-words rank)");
  vid->add_option("--theory", ia.theory,
                  "Restrict to one theory (default: all that apply)")
      ->check(CLI::IsMember({"additive", "multiplicative", "universal"}));

  // ---- verify braid ----
  VerifyBraidArgs ba;
  CLI::App* vbr = verify->add_subcommand(
      "braid", "Braid-relation report for one theory, as JSON");
  vbr->add_option("--theory", ba.theory,
                  "additive | multiplicative | universal")
      ->check(CLI::IsMember({"additive", "multiplicative", "universal"}))
      ->required();
  vbr->add_option("--type", ba.type, "A or C")
      ->check(CLI::IsMember({"A", "C"}))
      ->required();
  vbr->add_option("--n", ba.n, "Rank (>= 3 for type A, >= 2 for type C)")
      ->required();
  vbr->add_option("--deg", ba.deg, "Check on all monomials of degree <= deg")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ccls->parsed()) return run_compute_class(ca);
    if (vid->parsed()) return run_verify_identities(ia);
    if (vbr->parsed()) return run_verify_braid(ba);
  } catch (const fgls::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
