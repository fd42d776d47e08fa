#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sisa {

// Scale of the values held by a lexicon. sfu: signed magnitudes in [1,5].
// senticon_raw: signed magnitudes in (0,1], not yet rescaled.
enum class LexiconScale { sfu, senticon_raw };

std::string_view to_string(LexiconScale s);
std::optional<LexiconScale> parse_scale(std::string_view s);

struct LexiconKey {
  std::string entry;  // lowercased
  std::string pos;    // ADJ, NOUN, ADV, VERB or "*"

  friend auto operator<=>(const LexiconKey&, const LexiconKey&) = default;
};

// Sum and count of every value that contributed to an entry, so that
// averaging stays associative across successive merges.
struct LexiconEntry {
  double so_sum = 0.0;
  int count = 0;

  double so() const { return so_sum / count; }
  bool neutralized() const { return so_sum == 0.0; }
};

class SentimentLexicon {
 public:
  SentimentLexicon() = default;
  SentimentLexicon(std::string name, LexiconScale scale) : name_(std::move(name)), scale_(scale) {}

  const std::string& name() const { return name_; }
  LexiconScale scale() const { return scale_; }
  const std::map<LexiconKey, LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Folds one more contributing value into (entry, pos).
  void add(std::string_view entry, std::string_view pos, double so, int count = 1);
  void add_entry(const LexiconKey& key, const LexiconEntry& e);

  // Effective SO of an exact key, nullopt when absent.
  std::optional<double> find(std::string_view entry, std::string_view pos) const;

  // Number of entries per PoS tag.
  std::map<std::string, std::size_t> size_by_pos() const;

 private:
  std::string name_;
  LexiconScale scale_ = LexiconScale::sfu;
  std::map<LexiconKey, LexiconEntry> entries_;
};

inline constexpr double kSfuMaxMagnitude = 5.0;

// Sign-preserving affine map from raw magnitude (0,1] onto (1,5].
// Throws RangeError for 0 or |so_raw| > 1.
double scale_senticon(double so_raw);

// Parses "entry<TAB>pos<TAB>so" text. A "# scale: senticon_raw" header
// declares the file's scale; declaring a scale other than `scale` is a
// UsageError. senticon_raw input is rescaled onto SFU before storage
// unless keep_raw is set, in which case the result stays tagged raw.
SentimentLexicon parse_lexicon(std::string_view text, LexiconScale scale, std::string name,
                               bool keep_raw = false);
SentimentLexicon load_lexicon(const std::string& path, LexiconScale scale, bool keep_raw = false);

// Scale declared by a lexicon file header, sfu when there is none.
LexiconScale declared_scale(const std::string& path);

// Count-weighted average of every (entry, pos) across sources.
// Throws UsageError on an empty list or a source not on the sfu scale.
SentimentLexicon merge_lexica(std::span<const SentimentLexicon> sources, std::string name);

// Tries (form, upos), (lemma, upos), (form, *), (lemma, *); form is
// lowercased here. Returns 0 on a miss or a neutralized entry.
double lookup(const SentimentLexicon& lex, std::string_view form, std::string_view lemma,
              std::string_view upos);

// Lexicon file text, one line per entry in key order.
std::string serialize_lexicon(const SentimentLexicon& lex);

class WordList {
 public:
  WordList() = default;
  explicit WordList(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::map<std::string, std::optional<double>>& words() const { return words_; }
  bool contains(std::string_view word) const { return words_.find(std::string(word)) != words_.end(); }
  std::optional<double> value(std::string_view word) const;

  // Returns true if the entry was already present (and is overwritten).
  bool set(std::string_view word, std::optional<double> value);

 private:
  std::string name_;
  std::map<std::string, std::optional<double>> words_;
};

// Parses "entry" or "entry<TAB>value" lines. Duplicate entries keep the
// last value; their names are appended to `duplicates` when given.
WordList parse_wordlist(std::string_view text, std::string name,
                        std::vector<std::string>* duplicates = nullptr);
WordList load_wordlist(const std::string& path, std::vector<std::string>* duplicates = nullptr);

}  // namespace sisa
