#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctxcorrect/common.hpp"

namespace ctxcorrect {

/// A token-id sequence plus a map from token index back to the source word
/// index (-1 for tokens that do not come from a word, e.g. specials).
struct TokenSeq {
  std::vector<int> ids;
  std::vector<int> word_of;

  size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
};

/// WordPiece vocabulary shared by source, target and contextual items.
///
/// Layout is fixed: the six special tokens occupy ids 0..5, then single
/// characters in the order they were admitted, then merged pieces in merge
/// order. Continuation pieces carry the literal "##" prefix.
class Vocab {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;
  static constexpr int kBos = 2;
  static constexpr int kEos = 3;
  static constexpr int kDummy = 4;
  static constexpr int kNoCtx = 5;  // reserved slot, never emitted
  static constexpr int kNumSpecial = 6;

  static const char* special_name(int id);

  /// Builds a vocabulary from whitespace-split sentences by frequency-greedy
  /// pair merging. Deterministic for a fixed corpus and configuration.
  static Vocab build(const std::vector<std::vector<std::string>>& corpus,
                     int max_size, int min_freq = 2, bool lowercase = true);

  static Vocab load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
  std::string to_text() const;

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(int id) const { return tokens_.at(static_cast<size_t>(id)); }
  /// Returns -1 when the token string is unknown.
  int id_of(const std::string& token) const;
  bool lowercase() const { return lowercase_; }

  static bool is_continuation(const std::string& token) {
    return token.size() > 2 && token[0] == '#' && token[1] == '#';
  }
  bool is_special(int id) const { return id >= 0 && id < kNumSpecial; }

  /// Greedy longest-match-first segmentation of one word. A word with no
  /// full segmentation collapses to a single [UNK].
  std::vector<int> tokenize_word(const std::string& word) const;

  TokenSeq tokenize(const std::vector<std::string>& words) const;

  /// Inverse of tokenize for UNK-free sequences: continuation pieces merge
  /// into the preceding word, special tokens are dropped. A sequence that
  /// begins with a continuation piece starts an empty-prefix word; the
  /// optional flag reports that condition.
  std::vector<std::string> detokenize(const std::vector<int>& ids,
                                      bool* leading_continuation = nullptr) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
  bool lowercase_ = true;

  void add_token(const std::string& tok);
};

}  // namespace ctxcorrect
