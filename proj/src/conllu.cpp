#include "sisa/conllu.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sisa/errors.hpp"
#include "sisa/text.hpp"

namespace sisa {

std::string_view Token::bare_deprel() const {
  const std::string_view d = deprel;
  return d.substr(0, d.find(':'));
}

std::string Token::lookup_lemma() const {
  if (lemma.empty() || lemma == "_") return text::to_lower(form);
  return text::to_lower(lemma);
}

DepTree::DepTree(std::vector<Token> tokens, std::size_t sentence_index)
    : tokens_(std::move(tokens)) {
  const int n = static_cast<int>(tokens_.size());
  if (n == 0) throw StructuralError(sentence_index, "empty sentence");
  children_.assign(static_cast<std::size_t>(n) + 1, {});
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens_[static_cast<std::size_t>(i)];
    if (t.id != i + 1) {
      throw StructuralError(sentence_index, "token ids must run 1.." + std::to_string(n));
    }
    if (t.head < 0 || t.head > n) {
      throw StructuralError(sentence_index, "token " + std::to_string(t.id) + " has head out of range");
    }
    if (t.head == t.id) {
      throw StructuralError(sentence_index, "token " + std::to_string(t.id) + " is its own head");
    }
    if (t.form.empty() || t.upos.empty()) {
      throw StructuralError(sentence_index, "token " + std::to_string(t.id) + " lacks form or upos");
    }
    children_[static_cast<std::size_t>(t.head)].push_back(t.id);
  }
  if (children_[0].size() != 1) {
    throw StructuralError(sentence_index, std::to_string(children_[0].size()) + " root tokens");
  }
  root_id_ = children_[0].front();

  // Reachability from the root rules out cycles once there is one root.
  std::vector<int> stack{root_id_};
  int seen = 0;
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    ++seen;
    for (int c : children(id)) stack.push_back(c);
  }
  if (seen != n) throw StructuralError(sentence_index, "head relation contains a cycle");
}

namespace {

Token parse_token_line(std::string_view line, std::size_t line_no,
                       const std::vector<std::string_view>& cols) {
  Token t;
  const auto id = text::parse_int(cols[0]);
  if (!id || *id < 1) throw ParseError(line_no, "non-integer id '" + std::string(cols[0]) + "'");
  const auto head = text::parse_int(cols[6]);
  if (!head || *head < 0) throw ParseError(line_no, "non-integer head '" + std::string(cols[6]) + "'");
  t.id = static_cast<int>(*id);
  t.form = std::string(cols[1]);
  t.lemma = std::string(cols[2]);
  t.upos = std::string(cols[3]);
  t.head = static_cast<int>(*head);
  t.deprel = std::string(cols[7]);
  if (t.form.empty() || t.upos.empty()) throw ParseError(line_no, "empty FORM or UPOS in '" + std::string(line) + "'");
  return t;
}

}  // namespace

Document parse_document(std::string_view text, std::string source_id) {
  Document doc;
  doc.source_id = std::move(source_id);
  std::vector<Token> block;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (block.empty()) return;
    doc.sentences.emplace_back(std::move(block), doc.sentences.size());
    block.clear();
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text::chomp(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    const auto cols = text::split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError(line_no, "expected 10 columns, found " + std::to_string(cols.size()));
    }
    // Multiword ranges ("1-2") and empty nodes ("5.1") are not tree nodes.
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;
    block.push_back(parse_token_line(line, line_no, cols));
  }
  flush();
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), std::filesystem::path(path).stem().string());
}

std::string serialize_document(const Document& doc) {
  std::string out;
  for (const DepTree& tree : doc.sentences) {
    for (const Token& t : tree.tokens()) {
      out += std::to_string(t.id);
      out += '\t';
      out += t.form;
      out += '\t';
      out += t.lemma.empty() ? "_" : t.lemma;
      out += '\t';
      out += t.upos;
      out += "\t_\t_\t";
      out += std::to_string(t.head);
      out += '\t';
      out += t.deprel.empty() ? "_" : t.deprel;
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace sisa
