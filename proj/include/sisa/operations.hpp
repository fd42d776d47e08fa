#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sisa/conllu.hpp"
#include "sisa/lexicon.hpp"

namespace sisa {

// Word lists by name ("negators", "boosters", ...), bound into rules at load.
using WordLists = std::map<std::string, std::shared_ptr<const WordList>>;

// weighting: so * (1 + param). shift: moves so by param toward the
// opposite sign. A weighting may instead read its parameter from a
// booster list entry of the trigger word.
struct Transformation {
  enum class Kind { weighting, shift };

  Kind kind = Kind::weighting;
  double param = 0.0;
  std::shared_ptr<const WordList> booster;  // set: param comes from here

  bool from_booster() const { return booster != nullptr; }
  std::string describe() const;
};

double apply_weighting(double beta, double so);
double apply_shift(double alpha, double so);

// Conjunction over the trigger's form, UPOS and bare deprel. An unset
// constraint is a wildcard.
struct TriggerPredicate {
  std::optional<std::set<std::string>> forms;
  std::string forms_source;  // "@list" or the literal text, for diagnostics
  std::optional<std::set<std::string>> pos;
  std::optional<std::set<std::string>> deprels;
};

struct ScopeSpec {
  enum class Kind { target_node, branch, subjl, subjr, all };

  Kind kind = Kind::target_node;
  std::string deprel;  // branch only

  std::string describe() const;
  friend bool operator==(const ScopeSpec&, const ScopeSpec&) = default;
};

struct OperationDefinition {
  std::string name;
  TriggerPredicate trigger;
  Transformation tau;
  int delta = 0;     // levels to ascend from the trigger
  int priority = 0;  // higher applies first
  std::vector<ScopeSpec> scopes;
};

// Parses the block-structured rule format. `@name` references resolve
// against `lists`. Throws ConfigError naming the offending rule.
std::vector<OperationDefinition> parse_rules(std::string_view text, const WordLists& lists);
std::vector<OperationDefinition> load_rules(const std::string& path, const WordLists& lists);

// Loads boosters.tsv, negators.txt, adversatives.txt and irrealis.txt
// (whichever exist) from a directory, keyed by file stem.
WordLists load_wordlists(const std::string& dir, std::vector<std::string>* warnings = nullptr);

bool matches(const OperationDefinition& defn, const Token& tok);

// One child branch at a target level.
struct BranchView {
  int id = 0;  // surface position of the branch's head token
  std::string_view deprel;
  double so = 0.0;
};

// What a scope resolves against: the head node's current lexical SO, its
// child branches left to right, and the surface position the operation
// arrived from (the trigger's branch, or the head itself).
struct LevelView {
  double head_so = 0.0;
  std::span<const BranchView> branches;
  int origin_id = 0;
};

struct ScopeResolution {
  std::size_t spec_index = 0;  // which entry of the scope list matched
  ScopeSpec::Kind kind = ScopeSpec::Kind::target_node;
  std::size_t branch = 0;  // index into LevelView::branches for branch/subjl/subjr
};

std::optional<ScopeResolution> resolve_scope(std::span<const ScopeSpec> scopes, const LevelView& level);

struct OperationEvent {
  enum class Kind { triggered, arrived, applied, forced, discarded, warning };

  Kind kind = Kind::triggered;
  std::string op;
  int trigger_id = 0;
  int remaining_before = 0;
  int remaining_after = 0;
  double beta = 0.0;       // triggered, booster rules
  std::string scope;       // applied/forced
  int scope_node = 0;      // applied/forced: branch head or target node id
  double before = 0.0;
  double after = 0.0;
  std::string message;     // warning
};

struct NodeRecord {
  int id = 0;
  std::string form;
  double lexical_so = 0.0;
  std::vector<OperationEvent> events;
  double subtree_so = 0.0;
};

// Nodes appear in post-order (dependents before heads, left to right).
struct SoTrace {
  std::vector<NodeRecord> nodes;
  double sentence_so = 0.0;
};

SoTrace compute_so(const DepTree& tree, const SentimentLexicon& lex,
                   std::span<const OperationDefinition> defs);

// Stable text rendering of a trace; used by the trace subcommand and the
// golden files.
std::string format_trace(const SoTrace& trace);

// Traces every sentence of a document, each under a
// "# <source_id> sentence <k>" header line.
std::string trace_document(const Document& doc, const SentimentLexicon& lex,
                           std::span<const OperationDefinition> defs);

}  // namespace sisa
