#include "sisa/evaluation.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sisa/errors.hpp"
#include "sisa/text.hpp"

namespace sisa {

namespace {
constexpr std::array<std::string_view, 4> kConfigNames = {"SL-O", "SL+O", "ML-O", "ML+O"};
}

std::string_view to_string(ConfigId id) { return kConfigNames[static_cast<std::size_t>(id)]; }

std::optional<ConfigId> parse_config_id(std::string_view s) {
  for (std::size_t i = 0; i < kConfigNames.size(); ++i) {
    if (kConfigNames[i] == s) return static_cast<ConfigId>(i);
  }
  return std::nullopt;
}

CorpusManifest parse_manifest(std::string_view text, const std::string& base_dir, std::string name) {
  namespace fs = std::filesystem;
  CorpusManifest manifest{std::move(name), {}};
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text::chomp(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (text::trim(line).empty() || line.front() == '#') continue;

    const auto cols = text::split(line, '\t');
    if (cols.size() != 2) throw ParseError(line_no, "expected path<TAB>label");
    const auto gold = parse_polarity(text::trim(cols[1]));
    if (!gold) throw ParseError(line_no, "gold label must be positive or negative");
    fs::path item(text::trim(cols[0]));
    if (item.is_relative() && !base_dir.empty()) item = fs::path(base_dir) / item;
    manifest.items.push_back(ManifestItem{item.string(), *gold});
  }
  return manifest;
}

CorpusManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::filesystem::path p(path);
  return parse_manifest(buf.str(), p.parent_path().string(), p.stem().string());
}

EvaluationReport evaluate(const CorpusManifest& manifest, const RunConfig& cfg) {
  if (manifest.items.empty()) throw UsageError("manifest '" + manifest.name + "' is empty");
  if (cfg.lexicon == nullptr) throw UsageError("run configuration without a lexicon");

  EvaluationReport report;
  report.config = cfg.id;
  report.manifest = manifest.name;
  for (const ManifestItem& item : manifest.items) {
    ItemPrediction pred{item.path, item.gold, std::nullopt, 0.0, {}};
    try {
      const Document doc = read_document(item.path);
      const PolarityResult r = classify_document(doc, *cfg.lexicon, cfg.rules, cfg.options);
      pred.so = r.so;
      pred.predicted = r.label;
      ++report.total;
      if (r.label == item.gold) ++report.correct;
    } catch (const Error& e) {
      pred.error = e.what();
      ++report.errored;
    }
    report.items.push_back(std::move(pred));
  }
  if (report.total == 0) throw UsageError("manifest '" + manifest.name + "' has no readable items");
  report.accuracy = static_cast<double>(report.correct) / report.total;
  return report;
}

ImpactTable compare_configs(std::span<const EvaluationReport> reports) {
  std::array<const EvaluationReport*, 4> by_id{};
  for (const auto& r : reports) {
    auto& slot = by_id[static_cast<std::size_t>(r.config)];
    if (slot != nullptr) throw UsageError("duplicate report for " + std::string(to_string(r.config)));
    slot = &r;
  }
  for (std::size_t i = 0; i < by_id.size(); ++i) {
    if (by_id[i] == nullptr) throw UsageError("missing report for " + std::string(kConfigNames[i]));
    if (by_id[i]->manifest != by_id[0]->manifest || by_id[i]->items.size() != by_id[0]->items.size()) {
      throw UsageError("reports were produced from different manifests");
    }
  }
  auto pct = [&](ConfigId id) { return 100.0 * by_id[static_cast<std::size_t>(id)]->accuracy; };
  ImpactTable t;
  t.o_effect_sl = pct(ConfigId::sl_ops) - pct(ConfigId::sl_no_ops);
  t.o_effect_ml = pct(ConfigId::ml_ops) - pct(ConfigId::ml_no_ops);
  t.ml_effect_no_ops = pct(ConfigId::ml_no_ops) - pct(ConfigId::sl_no_ops);
  t.ml_effect_ops = pct(ConfigId::ml_ops) - pct(ConfigId::sl_ops);
  return t;
}

std::string format_report(const EvaluationReport& report, bool verbose) {
  std::string out = std::string(to_string(report.config)) + '\t' + std::to_string(report.correct) + '\t' +
                    std::to_string(report.total) + '\t' + text::format_number(report.accuracy) + '\n';
  if (!verbose) return out;
  for (const auto& item : report.items) {
    out += "  " + item.path + '\t' + std::string(to_string(item.gold)) + '\t';
    if (item.predicted) {
      out += std::string(to_string(*item.predicted)) + '\t' + text::format_number(item.so) + '\n';
    } else {
      out += "error\t" + item.error + '\n';
    }
  }
  return out;
}

std::string format_impact(const ImpactTable& t) {
  auto cell = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf == std::string("-0.00") ? "0.00" : buf);
  };
  return "O(SL)\tO(ML)\tML(-O)\tML(+O)\n" + cell(t.o_effect_sl) + '\t' + cell(t.o_effect_ml) + '\t' +
         cell(t.ml_effect_no_ops) + '\t' + cell(t.ml_effect_ops) + '\n';
}

std::string summary_json(std::span<const EvaluationReport> reports, const std::optional<ImpactTable>& impact) {
  nlohmann::ordered_json root;
  root["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["config"] = to_string(r.config);
    j["manifest"] = r.manifest;
    j["correct"] = r.correct;
    j["total"] = r.total;
    j["errored"] = r.errored;
    j["accuracy"] = r.accuracy;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& item : r.items) {
      nlohmann::ordered_json ji;
      ji["path"] = item.path;
      ji["gold"] = to_string(item.gold);
      if (item.predicted) {
        ji["predicted"] = to_string(*item.predicted);
        ji["so"] = item.so;
      } else {
        ji["error"] = item.error;
      }
      items.push_back(std::move(ji));
    }
    j["items"] = std::move(items);
    root["reports"].push_back(std::move(j));
  }
  if (impact) {
    root["impact"] = {{"O(SL)", impact->o_effect_sl},
                      {"O(ML)", impact->o_effect_ml},
                      {"ML(-O)", impact->ml_effect_no_ops},
                      {"ML(+O)", impact->ml_effect_ops}};
  }
  return root.dump(2) + '\n';
}

}  // namespace sisa
