#include "sisa/lexicon.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sisa/errors.hpp"
#include "sisa/text.hpp"

namespace sisa {

std::string_view to_string(LexiconScale s) {
  return s == LexiconScale::sfu ? "sfu" : "senticon_raw";
}

std::optional<LexiconScale> parse_scale(std::string_view s) {
  if (s == "sfu") return LexiconScale::sfu;
  if (s == "senticon_raw") return LexiconScale::senticon_raw;
  return std::nullopt;
}

void SentimentLexicon::add(std::string_view entry, std::string_view pos, double so, int count) {
  add_entry(LexiconKey{std::string(entry), std::string(pos)}, LexiconEntry{so * count, count});
}

void SentimentLexicon::add_entry(const LexiconKey& key, const LexiconEntry& e) {
  auto& slot = entries_[key];
  slot.so_sum += e.so_sum;
  slot.count += e.count;
}

std::optional<double> SentimentLexicon::find(std::string_view entry, std::string_view pos) const {
  const auto it = entries_.find(LexiconKey{std::string(entry), std::string(pos)});
  if (it == entries_.end()) return std::nullopt;
  return it->second.so();
}

std::map<std::string, std::size_t> SentimentLexicon::size_by_pos() const {
  std::map<std::string, std::size_t> sizes;
  for (const auto& [key, e] : entries_) ++sizes[key.pos];
  return sizes;
}

double scale_senticon(double so_raw) {
  const double mag = std::fabs(so_raw);
  if (mag == 0.0) throw RangeError(0, "zero-polarity senticon value");
  if (mag > 1.0) throw RangeError(0, "senticon value out of [-1,1]");
  return std::copysign(1.0 + 4.0 * mag, so_raw);
}

namespace {

bool valid_pos(std::string_view pos) {
  return pos == "ADJ" || pos == "NOUN" || pos == "ADV" || pos == "VERB" || pos == "*";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "# scale: senticon_raw" on a comment line.
std::optional<LexiconScale> header_scale(std::string_view line) {
  auto body = text::trim(line.substr(1));
  constexpr std::string_view key = "scale:";
  if (body.substr(0, key.size()) != key) return std::nullopt;
  return parse_scale(text::trim(body.substr(key.size())));
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    fn(text::chomp(text.substr(pos, end - pos)), ++line_no);
    pos = end + 1;
  }
}

}  // namespace

SentimentLexicon parse_lexicon(std::string_view text, LexiconScale scale, std::string name,
                               bool keep_raw) {
  const bool rescale = scale == LexiconScale::senticon_raw && !keep_raw;
  SentimentLexicon lex(std::move(name), rescale ? LexiconScale::sfu : scale);
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (text::trim(line).empty()) return;
    if (line.front() == '#') {
      if (const auto declared = header_scale(line); declared && *declared != scale) {
        throw UsageError("lexicon '" + lex.name() + "' declares scale " +
                         std::string(to_string(*declared)) + " but was loaded as " +
                         std::string(to_string(scale)));
      }
      return;
    }
    const auto cols = text::split(line, '\t');
    if (cols.size() != 3) throw ParseError(line_no, "expected entry<TAB>pos<TAB>so");
    const auto pos = text::trim(cols[1]);
    if (!valid_pos(pos)) throw ParseError(line_no, "unknown PoS '" + std::string(pos) + "'");
    const auto so = text::parse_real(cols[2]);
    if (!so) throw ParseError(line_no, "non-numeric SO '" + std::string(cols[2]) + "'");

    double value = *so;
    if (scale == LexiconScale::senticon_raw) {
      if (std::fabs(value) > 1.0) throw RangeError(line_no, "senticon SO out of [-1,1]");
      if (value == 0.0) return;  // zero-polarity entries are not stored
      if (rescale) value = scale_senticon(value);
    } else if (std::fabs(value) > kSfuMaxMagnitude) {
      throw RangeError(line_no, "SFU SO out of [-5,5]");
    }
    lex.add(text::to_lower(text::trim(cols[0])), pos, value);
  });
  return lex;
}

SentimentLexicon load_lexicon(const std::string& path, LexiconScale scale, bool keep_raw) {
  return parse_lexicon(read_file(path), scale, path, keep_raw);
}

LexiconScale declared_scale(const std::string& path) {
  const std::string text = read_file(path);
  LexiconScale scale = LexiconScale::sfu;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    if (!line.empty() && line.front() == '#') {
      if (const auto declared = header_scale(line)) scale = *declared;
    }
  });
  return scale;
}

SentimentLexicon merge_lexica(std::span<const SentimentLexicon> sources, std::string name) {
  if (sources.empty()) throw UsageError("merge needs at least one lexicon");
  SentimentLexicon merged(std::move(name), LexiconScale::sfu);
  for (const auto& src : sources) {
    if (src.scale() != LexiconScale::sfu) {
      throw UsageError("cannot merge lexicon '" + src.name() + "' on scale " +
                       std::string(to_string(src.scale())) + "; rescale it to sfu first");
    }
    for (const auto& [key, e] : src.entries()) merged.add_entry(key, e);
  }
  return merged;
}

double lookup(const SentimentLexicon& lex, std::string_view form, std::string_view lemma,
              std::string_view upos) {
  const std::string lower_form = text::to_lower(form);
  const std::pair<std::string_view, std::string_view> keys[] = {
      {lower_form, upos}, {lemma, upos}, {lower_form, "*"}, {lemma, "*"}};
  for (const auto& [entry, pos] : keys) {
    const auto it = lex.entries().find(LexiconKey{std::string(entry), std::string(pos)});
    if (it != lex.entries().end()) return it->second.neutralized() ? 0.0 : it->second.so();
  }
  return 0.0;
}

std::string serialize_lexicon(const SentimentLexicon& lex) {
  std::string out = "# scale: " + std::string(to_string(lex.scale())) + "\n";
  for (const auto& [key, e] : lex.entries()) {
    out += key.entry + '\t' + key.pos + '\t' + text::format_number(e.so()) + '\n';
  }
  return out;
}

std::optional<double> WordList::value(std::string_view word) const {
  const auto it = words_.find(std::string(word));
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

bool WordList::set(std::string_view word, std::optional<double> value) {
  const auto [it, inserted] = words_.insert_or_assign(std::string(word), value);
  return !inserted;
}

WordList parse_wordlist(std::string_view text, std::string name, std::vector<std::string>* duplicates) {
  WordList list(std::move(name));
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (text::trim(line).empty() || line.front() == '#') return;
    const auto cols = text::split(line, '\t');
    if (cols.size() > 2) throw ParseError(line_no, "expected entry or entry<TAB>value");
    std::optional<double> value;
    if (cols.size() == 2) {
      value = text::parse_real(cols[1]);
      if (!value) throw ParseError(line_no, "non-numeric value '" + std::string(cols[1]) + "'");
    }
    const std::string word = text::to_lower(text::trim(cols[0]));
    if (list.set(word, value) && duplicates) duplicates->push_back(word);
  });
  return list;
}

WordList load_wordlist(const std::string& path, std::vector<std::string>* duplicates) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_wordlist(buf.str(), path, duplicates);
}

}  // namespace sisa
