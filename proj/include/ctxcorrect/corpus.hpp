#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ctxcorrect {

/// One utterance triple: ASR output (src), reference transcript (tgt) and
/// the per-utterance rare word list (ctx).
struct Utterance {
  std::vector<std::string> src;
  std::vector<std::string> tgt;
  std::vector<std::string> ctx;
};

std::vector<Utterance> load_corpus_jsonl(const std::filesystem::path& path);
std::string corpus_to_jsonl(const std::vector<Utterance>& corpus);
void save_corpus_jsonl(const std::filesystem::path& path,
                       const std::vector<Utterance>& corpus);

}  // namespace ctxcorrect
