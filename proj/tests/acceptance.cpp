// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and time limits are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sisa/classifier.hpp"
#include "sisa/conllu.hpp"
#include "sisa/errors.hpp"
#include "sisa/evaluation.hpp"
#include "sisa/lexicon.hpp"
#include "sisa/operations.hpp"
#include "support/generators.hpp"
#include "support/reference_engine.hpp"

using namespace sisa;

namespace {

const std::string kSrc = SISA_SOURCE_DIR;
const std::string kFixtures = kSrc + "/data/fixtures/";
const std::string kGolden = kSrc + "/data/golden/";

constexpr double kExact = 1e-12;
constexpr double kOracleTolerance = 1e-9;
constexpr int kPropertyCases = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// 1. Reference arithmetic.
Outcome reference_arithmetic() {
  Outcome o;
  o.require(near(apply_weighting(0.25, 1.87), 2.3375, kExact), "weighting(0.25, 1.87) = " + num(apply_weighting(0.25, 1.87)));
  o.require(near(apply_shift(4.0, 3.5), -0.5, kExact), "shift(4, 3.5) = " + num(apply_shift(4.0, 3.5)));
  SentimentLexicon senticon("ml", LexiconScale::sfu), sfu("sfu", LexiconScale::sfu);
  senticon.add("abandonat", "ADJ", -1.875);
  sfu.add("abandonat", "ADJ", -3.0);
  const SentimentLexicon sources[] = {senticon, sfu};
  const double merged = *merge_lexica(sources, "ca").find("abandonat", "ADJ");
  o.require(near(merged, -2.4375, kExact), "merge(-1.875, -3) = " + num(merged));
  return o;
}

// 2. Impact row from published accuracies (percent, columns SL-O SL+O ML-O ML+O).
Outcome impact_table() {
  struct Row {
    const char* lang;
    double acc[4];
    double impact[4];  // O(SL) O(ML) ML(-O) ML(+O)
  };
  const Row rows[] = {
      {"es", {60.00, 75.75, 63.75, 76.50}, {15.75, 12.75, 3.75, 0.75}},
      {"ca", {54.00, 57.50, 58.25, 73.00}, {3.50, 14.75, 4.25, 15.5}},
      {"gl", {60.75, 73.00, 60.00, 70.00}, {12.25, 10.00, -0.75, -3.00}},
      {"eu", {62.95, 69.20, 65.63, 72.32}, {6.25, 6.69, 2.68, 3.12}},
      {"pt", {60.50, 67.35, 57.29, 65.01}, {6.85, 7.72, -3.21, -2.34}},
  };
  Outcome o;
  for (const Row& row : rows) {
    std::vector<EvaluationReport> reports;
    for (int c = 0; c < 4; ++c) {
      EvaluationReport r;
      r.config = static_cast<ConfigId>(c);
      r.manifest = row.lang;
      r.total = 10000;
      r.correct = static_cast<int>(std::lround(row.acc[c] * 100.0));
      r.accuracy = static_cast<double>(r.correct) / r.total;
      reports.push_back(r);
    }
    const ImpactTable t = compare_configs(reports);
    const double got[] = {t.o_effect_sl, t.o_effect_ml, t.ml_effect_no_ops, t.ml_effect_ops};
    for (int c = 0; c < 4; ++c) {
      // Table cells carry two decimals; the arithmetic must land on them exactly.
      o.require(near(got[c], row.impact[c], kOracleTolerance),
                std::string(row.lang) + " column " + std::to_string(c) + ": " + num(got[c]));
    }
  }
  return o;
}

// 3. Senticon rescaling.
Outcome scale_mapping() {
  Outcome o;
  o.require(scale_senticon(-0.21875) == -1.875, "scale(-0.21875) = " + num(scale_senticon(-0.21875)));
  o.require(scale_senticon(1.0) == 5.0, "scale(1) = " + num(scale_senticon(1.0)));
  o.require(scale_senticon(-1.0) == -5.0, "scale(-1) = " + num(scale_senticon(-1.0)));
  return o;
}

struct Engine {
  SentimentLexicon lex = load_lexicon(kFixtures + "lexicon.tsv", LexiconScale::sfu);
  WordLists lists = load_wordlists(kFixtures + "lists");
  std::vector<OperationDefinition> defs = load_rules(kSrc + "/rules/sisa_default.rules", lists);
};

// 4. Shipped fixtures and golden traces.
Outcome end_to_end(const Engine& e) {
  struct Case {
    const char* name;
    double so;
  };
  // bueno_pero_caro: weighting(-0.25) on bueno (+2) gives 1.5, plus caro (-2), neutral head.
  const Case cases[] = {{"muy_grande", 2.3375}, {"no_es_bonito", -0.5}, {"bueno_pero_caro", -0.5},
                        {"no_muy_bueno", -1.5},  {"no_funciona", -4.0},  {"el_coche_es_caro", -2.0}};
  Outcome o;
  for (const Case& c : cases) {
    const Document doc = read_document(kFixtures + c.name + ".conllu");
    const double so = compute_so(doc.sentences.front(), e.lex, e.defs).sentence_so;
    o.require(near(so, c.so, kExact), std::string(c.name) + " SO " + num(so));
    const std::string golden = slurp(kGolden + c.name + ".trace");
    o.require(trace_document(doc, e.lex, e.defs) == golden, std::string(c.name) + " trace differs from golden file");
  }
  return o;
}

// 5. Exhaustive oracle comparison: every tree of 1..5 nodes, every labeling
// from a six-word vocabulary that covers all four trigger families.
Outcome oracle_equivalence(const Engine& e, long& instances) {
  const std::vector<testgen::VocabWord> vocab = {{"muy", "ADV", "advmod"}, {"no", "ADV", "advmod"},
                                                 {"pero", "CONJ", "cc"},   {"si", "SCONJ", "mark"},
                                                 {"bueno", "ADJ", "nsubj"}, {"caro", "ADJ", "amod"}};
  Outcome o;
  instances = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> heads(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> shapes;
    while (true) {
      std::vector<Token> probe;
      for (int i = 0; i < n; ++i) probe.push_back(Token{i + 1, "x", "x", "X", heads[static_cast<std::size_t>(i)], "dep"});
      try {
        DepTree check(probe);
        shapes.push_back(heads);
      } catch (const StructuralError&) {
      }
      int k = 0;
      while (k < n && ++heads[static_cast<std::size_t>(k)] > n) heads[static_cast<std::size_t>(k++)] = 0;
      if (k == n) break;
    }

    long labelings = 1;
    for (int i = 0; i < n; ++i) labelings *= static_cast<long>(vocab.size());
    for (const auto& shape : shapes) {
      for (long code = 0; code < labelings; ++code) {
        std::vector<Token> tokens;
        tokens.reserve(static_cast<std::size_t>(n));
        long rest = code;
        for (int i = 0; i < n; ++i) {
          const auto& w = vocab[static_cast<std::size_t>(rest % static_cast<long>(vocab.size()))];
          rest /= static_cast<long>(vocab.size());
          const int head = shape[static_cast<std::size_t>(i)];
          tokens.push_back(Token{i + 1, w.form, w.form, w.upos, head, head == 0 ? "root" : w.deprel});
        }
        const DepTree tree(std::move(tokens));
        const double got = compute_so(tree, e.lex, e.defs).sentence_so;
        const double want = reference::sentence_so(tree, e.lex, e.defs);
        ++instances;
        if (!near(got, want, kOracleTolerance)) {
          o.require(false, "mismatch on " + serialize_document(Document{{tree}, "x"}) + "engine " + num(got) +
                               " reference " + num(want));
          return o;
        }
      }
    }
  }
  return o;
}

// 6. Property suites.
Outcome properties(const Engine& e) {
  Outcome o;
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-10.0, 10.0);

  for (int i = 0; i < kPropertyCases; ++i) {
    const double beta = u(rng), so = u(rng), a = u(rng);
    o.require(near(apply_weighting(beta, a * so), a * apply_weighting(beta, so), 1e-9), "weighting linearity");
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const double alpha = std::fabs(u(rng)), so = u(rng);
    if (so != 0.0) o.require(apply_shift(alpha, -so) == -apply_shift(alpha, so), "shift oddness");
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const DepTree tree = testgen::random_tree(rng, 9, testgen::wide_vocabulary());
    double sum = 0.0;
    for (const Token& t : tree.tokens()) sum += lookup(e.lex, t.form, t.lookup_lemma(), t.upos);
    o.require(near(compute_so(tree, e.lex, {}).sentence_so, sum, kExact), "empty rules = lexicon sum");
  }
  std::uniform_int_distribution<int> nsrc(1, 4);
  for (int i = 0; i < kPropertyCases; ++i) {
    std::vector<SentimentLexicon> sources;
    const int n = nsrc(rng);
    for (int s = 0; s < n; ++s) sources.push_back(testgen::random_lexicon(rng, "s" + std::to_string(s), 12));
    const auto merged = merge_lexica(sources, "m");
    auto shuffled = sources;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto merged2 = merge_lexica(shuffled, "m");
    std::size_t max_size = 0, sum_size = 0;
    for (const auto& s : sources) {
      max_size = std::max(max_size, s.size());
      sum_size += s.size();
    }
    o.require(merged.size() >= max_size && merged.size() <= sum_size, "merged size bounds");
    for (const auto& [key, entry] : merged.entries()) {
      o.require(near(entry.so(), merged2.entries().at(key).so(), kExact), "merge order independence");
      double lo = 1e300, hi = -1e300;
      for (const auto& s : sources) {
        if (const auto v = s.find(key.entry, key.pos)) {
          lo = std::min(lo, *v);
          hi = std::max(hi, *v);
        }
      }
      o.require(entry.so() >= lo - kExact && entry.so() <= hi + kExact, "merge min/max bound");
    }
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const Document doc = testgen::random_document(rng, 4, 9);
    o.require(parse_document(serialize_document(doc)) == doc, "CoNLL-U round trip");
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    Document doc = testgen::random_document(rng, 5, 7);
    const double so = classify_document(doc, e.lex, e.defs).so;
    std::shuffle(doc.sentences.begin(), doc.sentences.end(), rng);
    o.require(near(classify_document(doc, e.lex, e.defs).so, so, kExact), "document permutation invariance");
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const Document doc = testgen::random_document(rng, 3, 8);
    o.require(trace_document(doc, e.lex, e.defs) == trace_document(doc, e.lex, e.defs), "determinism");
  }
  return o;
}

// 7. Intensification (priority 3) dequeues before negation (priority 2).
Outcome priority_order(const Engine& e) {
  Outcome o;
  const Document doc = read_document(kFixtures + "no_muy_bueno.conllu");
  const double s = *e.lex.find("bueno", "ADJ");
  const double expected = (s * (1.0 + 0.25)) - 4.0;  // shift_4(weighting_0.25(s)) for s >= 0
  const double got = compute_so(doc.sentences.front(), e.lex, e.defs).sentence_so;
  o.require(s > 0.0, "fixture word must be positive");
  o.require(got == expected, "got " + num(got) + ", expected " + num(expected));
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failures = 0;

  auto run = [&](int id, const char* title, double limit_s, const std::function<Outcome()>& fn) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && secs > limit_s) {
      o.ok = false;
      o.detail = "exceeded time limit of " + num(limit_s) + " s";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %d. %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
  };

  Engine engine;
  long instances = 0;
  run(1, "reference arithmetic", 1.0, reference_arithmetic);
  run(2, "impact table reproduction", 1.0, impact_table);
  run(3, "senticon scale mapping", 1.0, scale_mapping);
  run(4, "end-to-end fixtures and golden traces", 1.0, [&] { return end_to_end(engine); });
  run(5, "exhaustive oracle equivalence (<= 5 nodes, 6 words)", 60.0,
      [&] { return oracle_equivalence(engine, instances); });
  std::printf("    %ld trees compared\n", instances);
  run(6, "property suites", 60.0, [&] { return properties(engine); });
  run(7, "priority order observable", 1.0, [&] { return priority_order(engine); });

  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
