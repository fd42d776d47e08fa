#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sisa {

struct Token {
  int id = 0;  // 1-based surface position
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;  // 0 attaches to the artificial root
  std::string deprel;

  // Relation without its subtype ("advmod:emph" -> "advmod").
  std::string_view bare_deprel() const;
  // Lemma for lookup: the lowercased form when the column is "_" or empty.
  std::string lookup_lemma() const;

  friend bool operator==(const Token&, const Token&) = default;
};

// A basic dependency tree. Construction validates the single-root and
// acyclicity invariants and builds the children index.
class DepTree {
 public:
  // Throws StructuralError (tagged with sentence_index) on a malformed tree.
  explicit DepTree(std::vector<Token> tokens, std::size_t sentence_index = 0);

  std::span<const Token> tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  const Token& token(int id) const { return tokens_[static_cast<std::size_t>(id - 1)]; }
  int root_id() const { return root_id_; }
  // Dependents of `id` ordered by surface position; id 0 yields the root.
  std::span<const int> children(int id) const { return children_[static_cast<std::size_t>(id)]; }

  friend bool operator==(const DepTree& a, const DepTree& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<Token> tokens_;
  int root_id_ = 0;
  std::vector<std::vector<int>> children_;
};

struct Document {
  std::vector<DepTree> sentences;
  std::string source_id;

  friend bool operator==(const Document& a, const Document& b) {
    return a.sentences == b.sentences;
  }
};

// Parses CoNLL-U text. Multiword ranges, empty nodes and comments are
// skipped. Throws ParseError or StructuralError.
Document parse_document(std::string_view text, std::string source_id = {});

// Reads and parses a file; source_id is the file stem. Throws FileError.
Document read_document(const std::string& path);

// Emits 10-column lines with "_" in the unmodeled columns and a blank
// line after each sentence.
std::string serialize_document(const Document& doc);

}  // namespace sisa
