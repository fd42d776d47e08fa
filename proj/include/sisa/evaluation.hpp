#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sisa/classifier.hpp"

namespace sisa {

struct ManifestItem {
  std::string path;  // resolved against the manifest's directory
  Polarity gold = Polarity::positive;
};

struct CorpusManifest {
  std::string name;
  std::vector<ManifestItem> items;
};

// "relative/path.conllu<TAB>positive|negative" lines, '#' comments.
CorpusManifest parse_manifest(std::string_view text, const std::string& base_dir, std::string name);
CorpusManifest load_manifest(const std::string& path);

// SL/ML: single-language vs merged lexicon. -O/+O: without/with operations.
enum class ConfigId { sl_no_ops, sl_ops, ml_no_ops, ml_ops };

std::string_view to_string(ConfigId id);
std::optional<ConfigId> parse_config_id(std::string_view s);

struct RunConfig {
  ConfigId id = ConfigId::sl_no_ops;
  const SentimentLexicon* lexicon = nullptr;
  std::vector<OperationDefinition> rules;  // empty for -O
  ClassifyOptions options;
};

struct ItemPrediction {
  std::string path;
  Polarity gold = Polarity::positive;
  std::optional<Polarity> predicted;  // unset when the item failed to load
  double so = 0.0;
  std::string error;
};

struct EvaluationReport {
  ConfigId config = ConfigId::sl_no_ops;
  std::string manifest;
  int correct = 0;
  int total = 0;  // items that loaded; errored items are excluded
  double accuracy = 0.0;
  int errored = 0;
  std::vector<ItemPrediction> items;  // manifest order
};

// Throws UsageError for an empty manifest or one with no readable item.
EvaluationReport evaluate(const CorpusManifest& manifest, const RunConfig& cfg);

// Differences in percentage points between the four configurations.
struct ImpactTable {
  double o_effect_sl = 0.0;       // SL+O - SL-O
  double o_effect_ml = 0.0;       // ML+O - ML-O
  double ml_effect_no_ops = 0.0;  // ML-O - SL-O
  double ml_effect_ops = 0.0;     // ML+O - SL+O
};

// Needs one report per ConfigId over the same manifest, else UsageError.
ImpactTable compare_configs(std::span<const EvaluationReport> reports);

// config<TAB>correct<TAB>total<TAB>accuracy, plus per-item lines if verbose.
std::string format_report(const EvaluationReport& report, bool verbose = false);
std::string format_impact(const ImpactTable& table);

// Machine-readable summary of reports (and the impact table when given).
std::string summary_json(std::span<const EvaluationReport> reports, const std::optional<ImpactTable>& impact);

}  // namespace sisa
