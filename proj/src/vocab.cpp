#include "ctxcorrect/vocab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ctxcorrect {

namespace {

const char* kSpecialNames[Vocab::kNumSpecial] = {"[PAD]", "[UNK]", "[BOS]",
                                                 "[EOS]", "[DUMMY]", "[NOCTX]"};

// Joins two adjacent pieces: the right-hand "##" marker disappears and the
// left-hand marker (if any) is kept.
std::string merge_pieces(const std::string& left, const std::string& right) {
  return left + (Vocab::is_continuation(right) ? right.substr(2) : right);
}

}  // namespace

const char* Vocab::special_name(int id) {
  if (id < 0 || id >= kNumSpecial) throw Error("not a special token id");
  return kSpecialNames[id];
}

void Vocab::add_token(const std::string& tok) {
  if (index_.count(tok)) throw Error("duplicate vocab token: " + tok);
  index_.emplace(tok, static_cast<int>(tokens_.size()));
  tokens_.push_back(tok);
}

Vocab Vocab::build(const std::vector<std::vector<std::string>>& corpus,
                   int max_size, int min_freq, bool lowercase) {
  if (corpus.empty()) throw ConfigError("build_vocab: empty corpus");
  if (max_size <= kNumSpecial) throw ConfigError("build_vocab: max_size too small");
  if (min_freq < 1) min_freq = 1;

  // Unique word counts; std::map keeps every downstream loop deterministic.
  std::map<std::string, long> word_freq;
  for (const auto& sentence : corpus) {
    for (const auto& raw : sentence) {
      std::string w = lowercase ? to_lower_ascii(raw) : raw;
      if (!w.empty()) ++word_freq[w];
    }
  }
  if (word_freq.empty()) throw ConfigError("build_vocab: corpus has no words");

  Vocab vocab;
  vocab.lowercase_ = lowercase;
  for (int s = 0; s < kNumSpecial; ++s) vocab.add_token(kSpecialNames[s]);

  // Character inventory: word-initial and continuation form of every char.
  std::map<std::string, bool> seen_chars;
  for (const auto& [word, n] : word_freq) {
    (void)n;
    for (char c : word) seen_chars[std::string(1, c)] = true;
  }
  for (const auto& [c, unused] : seen_chars) {
    (void)unused;
    if (vocab.size() < max_size) vocab.add_token(c);
  }
  for (const auto& [c, unused] : seen_chars) {
    (void)unused;
    if (vocab.size() < max_size) vocab.add_token("##" + c);
  }

  // Each unique word as a piece sequence, refined by frequency-greedy merges.
  std::vector<std::pair<std::vector<std::string>, long>> words;
  words.reserve(word_freq.size());
  for (const auto& [word, n] : word_freq) {
    std::vector<std::string> pieces;
    pieces.reserve(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
      pieces.push_back(i == 0 ? std::string(1, word[i]) : "##" + std::string(1, word[i]));
    }
    words.emplace_back(std::move(pieces), n);
  }

  const long stop_below = std::max<long>(2, min_freq);
  while (vocab.size() < max_size) {
    std::map<std::pair<std::string, std::string>, long> pair_freq;
    for (const auto& [pieces, n] : words) {
      for (size_t i = 0; i + 1 < pieces.size(); ++i) {
        pair_freq[{pieces[i], pieces[i + 1]}] += n;
      }
    }

    // Highest count wins; ties break on the lexicographically smallest pair.
    std::pair<std::string, std::string> best;
    long best_count = 0;
    for (const auto& [pair, n] : pair_freq) {
      if (n > best_count) {
        best = pair;
        best_count = n;
      }
    }
    if (best_count < stop_below) break;

    const std::string merged = merge_pieces(best.first, best.second);
    if (vocab.index_.count(merged) == 0) vocab.add_token(merged);
    for (auto& [pieces, n] : words) {
      (void)n;
      std::vector<std::string> out;
      out.reserve(pieces.size());
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (i + 1 < pieces.size() && pieces[i] == best.first && pieces[i + 1] == best.second) {
          out.push_back(merged);
          ++i;
        } else {
          out.push_back(pieces[i]);
        }
      }
      pieces = std::move(out);
    }
  }
  return vocab;
}

int Vocab::id_of(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> Vocab::tokenize_word(const std::string& raw) const {
  const std::string word = lowercase_ ? to_lower_ascii(raw) : raw;
  if (word.empty()) return {};
  std::vector<int> pieces;
  size_t start = 0;
  while (start < word.size()) {
    size_t end = word.size();
    int match = -1;
    while (end > start) {
      std::string sub = word.substr(start, end - start);
      if (start > 0) sub = "##" + sub;
      const int id = id_of(sub);
      if (id >= 0) {
        match = id;
        break;
      }
      --end;
    }
    if (match < 0) return {kUnk};
    pieces.push_back(match);
    start = end;
  }
  return pieces;
}

TokenSeq Vocab::tokenize(const std::vector<std::string>& words) const {
  TokenSeq seq;
  for (size_t w = 0; w < words.size(); ++w) {
    for (int id : tokenize_word(words[w])) {
      seq.ids.push_back(id);
      seq.word_of.push_back(static_cast<int>(w));
    }
  }
  return seq;
}

std::vector<std::string> Vocab::detokenize(const std::vector<int>& ids,
                                           bool* leading_continuation) const {
  if (leading_continuation) *leading_continuation = false;
  std::vector<std::string> words;
  for (int id : ids) {
    if (id < 0 || id >= size()) throw Error("detokenize: id out of range");
    if (is_special(id)) {
      if (id == kUnk) words.push_back(kSpecialNames[kUnk]);
      continue;
    }
    const std::string& tok = tokens_[static_cast<size_t>(id)];
    if (is_continuation(tok)) {
      if (words.empty()) {
        if (leading_continuation) *leading_continuation = true;
        words.emplace_back();
      }
      words.back() += tok.substr(2);
    } else {
      words.push_back(tok);
    }
  }
  return words;
}

std::string Vocab::to_text() const {
  std::ostringstream out;
  for (const auto& tok : tokens_) out << tok << '\n';
  return out.str();
}

void Vocab::save(const std::filesystem::path& path) const {
  atomic_write(path, to_text());
}

Vocab Vocab::load(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  Vocab vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    vocab.add_token(line);
  }
  if (vocab.size() < kNumSpecial) throw IoError("vocab file too short: " + path.string());
  for (int s = 0; s < kNumSpecial; ++s) {
    if (vocab.tokens_[static_cast<size_t>(s)] != kSpecialNames[s]) {
      throw IoError("vocab file missing special tokens: " + path.string());
    }
  }
  return vocab;
}

}  // namespace ctxcorrect
