#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sisa/conllu.hpp"
#include "sisa/lexicon.hpp"
#include "sisa/operations.hpp"

namespace sisa {

enum class Polarity { positive, negative };
enum class Granularity { sentence, document };
enum class Aggregation { sum, mean };

std::string_view to_string(Polarity p);
std::optional<Polarity> parse_polarity(std::string_view s);

struct ClassifyOptions {
  Aggregation aggregation = Aggregation::sum;
  Polarity tie = Polarity::positive;  // label given to so == 0
  bool keep_traces = false;
};

struct PolarityResult {
  double so = 0.0;
  Polarity label = Polarity::positive;
  Granularity granularity = Granularity::sentence;
  std::vector<SoTrace> traces;
};

Polarity label_for(double so, Polarity tie = Polarity::positive);

PolarityResult classify_sentence(const DepTree& tree, const SentimentLexicon& lex,
                                 std::span<const OperationDefinition> defs, const ClassifyOptions& opts = {});

// Aggregates sentence SOs (sum by default). Throws UsageError on a
// document without sentences.
PolarityResult classify_document(const Document& doc, const SentimentLexicon& lex,
                                 std::span<const OperationDefinition> defs, const ClassifyOptions& opts = {});

}  // namespace sisa
