// Command-line front end: classify, trace, merge-lexicon, scale-senticon,
// evaluate. Results go to stdout as tab-separated text, diagnostics to
// stderr. Exit codes: 0 ok, 2 missing file, 3 malformed input, 4 usage.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sisa/classifier.hpp"
#include "sisa/errors.hpp"
#include "sisa/evaluation.hpp"
#include "sisa/lexicon.hpp"
#include "sisa/operations.hpp"
#include "sisa/text.hpp"

namespace {

constexpr int kExitMissingFile = 2;
constexpr int kExitParse = 3;
constexpr int kExitUsage = 4;

struct Options {
  std::vector<std::string> lexicons;
  std::string rules;
  std::string lists;
  std::vector<std::string> inputs;
  std::string granularity = "doc";
  std::string agg = "sum";
  std::string tie = "pos";
  std::string corpus;
  std::string report;
  std::string output;
  std::string name = "merged";
  bool rescale = false;
  bool verbose = false;
  std::vector<double> values;
};

sisa::SentimentLexicon load_any_lexicon(const std::string& path, bool keep_raw = false) {
  return sisa::load_lexicon(path, sisa::declared_scale(path), keep_raw);
}

sisa::SentimentLexicon single_lexicon(const Options& o) {
  if (o.lexicons.size() != 1) throw sisa::UsageError("exactly one --lexicon is required");
  return load_any_lexicon(o.lexicons.front());
}

std::vector<sisa::OperationDefinition> load_rules_if_any(const Options& o) {
  if (o.rules.empty()) return {};
  sisa::WordLists lists;
  if (!o.lists.empty()) {
    std::vector<std::string> warnings;
    lists = sisa::load_wordlists(o.lists, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  }
  return sisa::load_rules(o.rules, lists);
}

sisa::ClassifyOptions classify_options(const Options& o) {
  sisa::ClassifyOptions opts;
  opts.aggregation = o.agg == "mean" ? sisa::Aggregation::mean : sisa::Aggregation::sum;
  opts.tie = o.tie == "neg" ? sisa::Polarity::negative : sisa::Polarity::positive;
  return opts;
}

std::vector<sisa::Document> read_inputs(const Options& o) {
  if (o.inputs.empty()) throw sisa::UsageError("--input is required");
  std::vector<sisa::Document> docs;
  for (const auto& path : o.inputs) {
    if (path == "-") {
      const std::string text(std::istreambuf_iterator<char>(std::cin), {});
      docs.push_back(sisa::parse_document(text, "stdin"));
    } else {
      docs.push_back(sisa::read_document(path));
    }
  }
  return docs;
}

void write_output(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw sisa::FileError(o.output);
  out << text;
}

int cmd_classify(const Options& o) {
  const auto lex = single_lexicon(o);
  const auto defs = load_rules_if_any(o);
  const auto opts = classify_options(o);
  for (const auto& doc : read_inputs(o)) {
    if (o.granularity == "sentence") {
      for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        const auto r = sisa::classify_sentence(doc.sentences[i], lex, defs, opts);
        std::cout << doc.source_id << '#' << (i + 1) << '\t' << sisa::text::format_number(r.so) << '\t'
                  << sisa::to_string(r.label) << '\n';
      }
    } else {
      const auto r = sisa::classify_document(doc, lex, defs, opts);
      std::cout << doc.source_id << '\t' << sisa::text::format_number(r.so) << '\t' << sisa::to_string(r.label)
                << '\n';
    }
  }
  return 0;
}

int cmd_trace(const Options& o) {
  const auto lex = single_lexicon(o);
  const auto defs = load_rules_if_any(o);
  const auto docs = read_inputs(o);
  if (docs.size() != 1) throw sisa::UsageError("trace takes a single document");
  std::cout << sisa::trace_document(docs.front(), lex, defs);
  return 0;
}

int cmd_merge(const Options& o) {
  if (o.lexicons.empty()) throw sisa::UsageError("merge-lexicon needs at least one --lexicon");
  std::vector<sisa::SentimentLexicon> sources;
  for (const auto& path : o.lexicons) sources.push_back(load_any_lexicon(path, !o.rescale));
  const auto merged = sisa::merge_lexica(sources, o.name);
  write_output(o, sisa::serialize_lexicon(merged));

  std::size_t neutralized = 0;
  for (const auto& [key, e] : merged.entries()) neutralized += e.neutralized() ? 1 : 0;
  std::cerr << "pos\tentries\n";
  for (const auto& [pos, n] : merged.size_by_pos()) std::cerr << pos << '\t' << n << '\n';
  std::cerr << "total\t" << merged.size() << "\nneutralized\t" << neutralized << '\n';
  return 0;
}

int cmd_scale(const Options& o) {
  for (double v : o.values) std::cout << sisa::text::format_number(v) << '\t'
                                      << sisa::text::format_number(sisa::scale_senticon(v)) << '\n';
  if (o.lexicons.size() > 1) throw sisa::UsageError("scale-senticon takes at most one --lexicon");
  if (o.lexicons.size() == 1) {
    const auto lex = sisa::load_lexicon(o.lexicons.front(), sisa::LexiconScale::senticon_raw);
    write_output(o, sisa::serialize_lexicon(lex));
  } else if (o.values.empty()) {
    throw sisa::UsageError("scale-senticon needs --lexicon or values");
  }
  return 0;
}

int cmd_evaluate(const Options& o) {
  if (o.corpus.empty()) throw sisa::UsageError("--corpus is required");
  if (o.lexicons.empty() || o.lexicons.size() > 2) {
    throw sisa::UsageError("evaluate takes one (SL) or two (SL, ML) --lexicon paths");
  }
  const auto manifest = sisa::load_manifest(o.corpus);
  std::vector<sisa::SentimentLexicon> lexica;
  for (const auto& path : o.lexicons) lexica.push_back(load_any_lexicon(path));
  const auto defs = load_rules_if_any(o);

  std::vector<sisa::EvaluationReport> reports;
  for (std::size_t l = 0; l < lexica.size(); ++l) {
    const bool ml = l == 1;
    sisa::RunConfig cfg;
    cfg.lexicon = &lexica[l];
    cfg.options = classify_options(o);
    cfg.id = ml ? sisa::ConfigId::ml_no_ops : sisa::ConfigId::sl_no_ops;
    reports.push_back(sisa::evaluate(manifest, cfg));
    if (!o.rules.empty()) {
      cfg.id = ml ? sisa::ConfigId::ml_ops : sisa::ConfigId::sl_ops;
      cfg.rules = defs;
      reports.push_back(sisa::evaluate(manifest, cfg));
    }
  }

  int errored = 0;
  std::cout << "config\tcorrect\ttotal\taccuracy\n";
  for (const auto& r : reports) {
    std::cout << sisa::format_report(r, o.verbose);
    errored += r.errored;
  }
  std::optional<sisa::ImpactTable> impact;
  if (reports.size() == 4) {
    impact = sisa::compare_configs(reports);
    std::cout << sisa::format_impact(*impact);
  }
  if (!o.report.empty()) {
    std::ofstream out(o.report, std::ios::binary);
    if (!out) throw sisa::FileError(o.report);
    out << sisa::summary_json(reports, impact);
  }
  if (errored > 0) std::cerr << "warning: " << errored << " item(s) failed to load\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syntax-based polarity classification over dependency trees"};
  app.require_subcommand(1);
  Options o;

  auto add_engine_flags = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", o.lexicons, "Sentiment lexicon file")->required();
    cmd->add_option("--rules", o.rules, "Rule configuration file (omit for no operations)");
    cmd->add_option("--lists", o.lists, "Directory holding boosters.tsv, negators.txt, ...");
    cmd->add_option("--agg", o.agg, "Document aggregation")->check(CLI::IsMember({"sum", "mean"}));
    cmd->add_option("--tie", o.tie, "Label for SO = 0")->check(CLI::IsMember({"pos", "neg"}));
  };

  auto* classify = app.add_subcommand("classify", "Label documents or sentences");
  add_engine_flags(classify);
  classify->add_option("--input", o.inputs, "CoNLL-U file, or - for stdin")->required();
  classify->add_option("--granularity", o.granularity)->check(CLI::IsMember({"doc", "sentence"}));

  auto* trace = app.add_subcommand("trace", "Print the propagation trace of one document");
  add_engine_flags(trace);
  trace->add_option("--input", o.inputs, "CoNLL-U file, or - for stdin")->required();

  auto* merge = app.add_subcommand("merge-lexicon", "Average lexica into one");
  merge->add_option("--lexicon", o.lexicons, "Input lexicon (repeatable)")->required();
  merge->add_flag("--scale", o.rescale, "Rescale senticon_raw inputs onto the SFU scale");
  merge->add_option("--name", o.name, "Name of the merged lexicon");
  merge->add_option("--output", o.output, "Output path (default stdout)");

  auto* scale = app.add_subcommand("scale-senticon", "Map raw ML-Senticon values onto the SFU scale");
  scale->add_option("--lexicon", o.lexicons, "Raw lexicon file");
  scale->add_option("--output", o.output, "Output path (default stdout)");
  scale->add_option("values", o.values, "Raw values to map");

  auto* evaluate = app.add_subcommand("evaluate", "Accuracy over a labeled corpus manifest");
  add_engine_flags(evaluate);
  evaluate->add_option("--corpus", o.corpus, "Manifest: path<TAB>positive|negative")->required();
  evaluate->add_option("--report", o.report, "Write a JSON summary here");
  evaluate->add_flag("--verbose", o.verbose, "Per-item lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*trace) return cmd_trace(o);
    if (*merge) return cmd_merge(o);
    if (*scale) return cmd_scale(o);
    if (*evaluate) return cmd_evaluate(o);
  } catch (const sisa::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMissingFile;
  } catch (const sisa::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sisa::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitUsage;
}
