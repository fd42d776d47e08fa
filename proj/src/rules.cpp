#include <filesystem>
#include <fstream>
#include <sstream>

#include "sisa/errors.hpp"
#include "sisa/operations.hpp"
#include "sisa/text.hpp"

namespace sisa {

namespace {

struct RawBlock {
  std::size_t line = 0;
  std::map<std::string, std::string> fields;
};

std::string block_label(const RawBlock& b) {
  const auto it = b.fields.find("name");
  if (it != b.fields.end() && !it->second.empty()) return it->second;
  return "block at line " + std::to_string(b.line);
}

std::vector<RawBlock> split_blocks(std::string_view text) {
  std::vector<RawBlock> blocks;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;

    if (line == "[operation]") {
      blocks.push_back(RawBlock{line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (blocks.empty()) {
      throw ConfigError("line " + std::to_string(line_no), "entry outside an [operation] block");
    }
    if (eq == std::string_view::npos) {
      throw ConfigError(block_label(blocks.back()), "expected key = value at line " + std::to_string(line_no));
    }
    const std::string key(text::trim(line.substr(0, eq)));
    const std::string value(text::trim(line.substr(eq + 1)));
    if (!blocks.back().fields.emplace(key, value).second) {
      throw ConfigError(block_label(blocks.back()), "duplicate key '" + key + "'");
    }
  }
  return blocks;
}

std::shared_ptr<const WordList> resolve_list(const std::string& rule, std::string_view ref,
                                             const WordLists& lists) {
  const std::string name(ref.substr(1));
  const auto it = lists.find(name);
  if (it == lists.end() || !it->second) throw ConfigError(rule, "unknown word list '@" + name + "'");
  return it->second;
}

std::optional<std::set<std::string>> parse_set(std::string_view value, bool lower) {
  if (value.empty() || value == "*") return std::nullopt;
  std::set<std::string> out;
  for (auto part : text::split(value, ',')) {
    part = text::trim(part);
    if (!part.empty()) out.insert(lower ? text::to_lower(part) : std::string(part));
  }
  return out;
}

Transformation parse_tau(const std::string& rule, std::string_view value, const WordLists& lists) {
  Transformation tau;
  const auto open = value.find('(');
  if (open == std::string_view::npos || value.back() != ')') {
    throw ConfigError(rule, "malformed tau '" + std::string(value) + "'");
  }
  const auto kind = text::trim(value.substr(0, open));
  const auto arg = text::trim(value.substr(open + 1, value.size() - open - 2));
  if (kind == "weighting") {
    tau.kind = Transformation::Kind::weighting;
  } else if (kind == "shift") {
    tau.kind = Transformation::Kind::shift;
  } else {
    throw ConfigError(rule, "unknown tau kind '" + std::string(kind) + "'");
  }
  if (!arg.empty() && arg.front() == '@') {
    if (tau.kind == Transformation::Kind::shift) {
      throw ConfigError(rule, "shift requires a constant parameter");
    }
    tau.booster = resolve_list(rule, arg, lists);
    return tau;
  }
  const auto param = text::parse_real(arg);
  if (!param) throw ConfigError(rule, "non-numeric tau parameter '" + std::string(arg) + "'");
  tau.param = *param;
  return tau;
}

ScopeSpec parse_scope_item(const std::string& rule, std::string_view item) {
  if (item == "target" || item == "target_node") return {ScopeSpec::Kind::target_node, {}};
  if (item == "subjl") return {ScopeSpec::Kind::subjl, {}};
  if (item == "subjr") return {ScopeSpec::Kind::subjr, {}};
  if (item == "all") return {ScopeSpec::Kind::all, {}};
  if (item.size() > 3 && item.substr(0, 2) == "b(" && item.back() == ')') {
    const auto deprel = text::trim(item.substr(2, item.size() - 3));
    if (!deprel.empty()) return {ScopeSpec::Kind::branch, std::string(deprel)};
  }
  throw ConfigError(rule, "unknown scope '" + std::string(item) + "'");
}

int parse_int_field(const std::string& rule, const RawBlock& b, const std::string& key) {
  const auto it = b.fields.find(key);
  if (it == b.fields.end()) throw ConfigError(rule, "missing '" + key + "'");
  const auto v = text::parse_int(it->second);
  if (!v) throw ConfigError(rule, "non-integer " + key + " '" + it->second + "'");
  return static_cast<int>(*v);
}

OperationDefinition build(const RawBlock& b, const WordLists& lists) {
  const std::string rule = block_label(b);
  static const std::set<std::string> known = {"name",  "trigger.forms", "trigger.pos", "trigger.deprel",
                                              "tau",   "delta",         "priority",    "scope"};
  for (const auto& [key, value] : b.fields) {
    if (!known.contains(key)) throw ConfigError(rule, "unknown key '" + key + "'");
  }
  auto field = [&](const std::string& key) -> std::string {
    const auto it = b.fields.find(key);
    return it == b.fields.end() ? std::string() : it->second;
  };

  OperationDefinition def;
  def.name = field("name");
  if (def.name.empty()) throw ConfigError(rule, "missing name");

  const std::string forms = field("trigger.forms");
  def.trigger.forms_source = forms.empty() ? "*" : forms;
  if (!forms.empty() && forms.front() == '@') {
    const auto list = resolve_list(rule, forms, lists);
    std::set<std::string> words;
    for (const auto& [w, v] : list->words()) words.insert(w);
    def.trigger.forms = std::move(words);
  } else {
    def.trigger.forms = parse_set(forms, true);
  }
  def.trigger.pos = parse_set(field("trigger.pos"), false);
  def.trigger.deprels = parse_set(field("trigger.deprel"), false);
  if (!def.trigger.forms && !def.trigger.pos && !def.trigger.deprels) {
    throw ConfigError(rule, "trigger must constrain forms, pos or deprel");
  }

  const std::string tau = field("tau");
  if (tau.empty()) throw ConfigError(rule, "missing tau");
  def.tau = parse_tau(rule, tau, lists);

  def.delta = parse_int_field(rule, b, "delta");
  if (def.delta < 0) throw ConfigError(rule, "delta must be non-negative");
  def.priority = parse_int_field(rule, b, "priority");

  const std::string scope = field("scope");
  if (scope.empty()) throw ConfigError(rule, "missing scope");
  for (auto item : text::split(scope, ',')) def.scopes.push_back(parse_scope_item(rule, text::trim(item)));
  return def;
}

}  // namespace

std::vector<OperationDefinition> parse_rules(std::string_view text, const WordLists& lists) {
  std::vector<OperationDefinition> defs;
  for (const auto& block : split_blocks(text)) defs.push_back(build(block, lists));
  return defs;
}

std::vector<OperationDefinition> load_rules(const std::string& path, const WordLists& lists) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str(), lists);
}

WordLists load_wordlists(const std::string& dir, std::vector<std::string>* warnings) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw FileError(dir);
  WordLists lists;
  for (const char* file : {"boosters.tsv", "negators.txt", "adversatives.txt", "irrealis.txt"}) {
    const fs::path path = fs::path(dir) / file;
    if (!fs::exists(path)) continue;
    std::vector<std::string> dups;
    auto list = std::make_shared<WordList>(load_wordlist(path.string(), &dups));
    if (warnings) {
      for (const auto& d : dups) warnings->push_back(path.string() + ": duplicate entry '" + d + "', last value kept");
    }
    lists.emplace(path.stem().string(), std::move(list));
  }
  return lists;
}

}  // namespace sisa
