#include "sisa/classifier.hpp"

#include "sisa/errors.hpp"

namespace sisa {

std::string_view to_string(Polarity p) { return p == Polarity::positive ? "positive" : "negative"; }

std::optional<Polarity> parse_polarity(std::string_view s) {
  if (s == "positive") return Polarity::positive;
  if (s == "negative") return Polarity::negative;
  return std::nullopt;
}

Polarity label_for(double so, Polarity tie) {
  if (so > 0.0) return Polarity::positive;
  if (so < 0.0) return Polarity::negative;
  return tie;
}

PolarityResult classify_sentence(const DepTree& tree, const SentimentLexicon& lex,
                                 std::span<const OperationDefinition> defs, const ClassifyOptions& opts) {
  SoTrace trace = compute_so(tree, lex, defs);
  PolarityResult result;
  result.so = trace.sentence_so;
  result.label = label_for(result.so, opts.tie);
  result.granularity = Granularity::sentence;
  if (opts.keep_traces) result.traces.push_back(std::move(trace));
  return result;
}

PolarityResult classify_document(const Document& doc, const SentimentLexicon& lex,
                                 std::span<const OperationDefinition> defs, const ClassifyOptions& opts) {
  if (doc.sentences.empty()) throw UsageError("document '" + doc.source_id + "' has no sentences");
  PolarityResult result;
  result.granularity = Granularity::document;
  for (const DepTree& tree : doc.sentences) {
    PolarityResult s = classify_sentence(tree, lex, defs, opts);
    result.so += s.so;
    for (auto& t : s.traces) result.traces.push_back(std::move(t));
  }
  if (opts.aggregation == Aggregation::mean) result.so /= static_cast<double>(doc.sentences.size());
  result.label = label_for(result.so, opts.tie);
  return result;
}

}  // namespace sisa
