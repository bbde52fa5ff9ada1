#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "ses/corpus_io.hpp"
#include "ses/model.hpp"

namespace ses {

/// Exact, case-sensitive match rate. Throws LengthMismatch or EmptyEval.
double word_accuracy(std::span<const std::string> gold,
                     std::span<const std::string> pred);

/// Share of sentences whose evaluated tokens are all correct. Tokens without
/// a gold lemma are not evaluated and sentences with none are not counted.
/// Throws StructureMismatch when `pred` is not token-aligned with `gold`.
double sentence_accuracy(const Corpus& gold, const Corpus& pred);

struct InvOovAccuracy {
  std::optional<double> inv;  // absent when no token is in vocabulary
  std::optional<double> oov;
  std::size_t inv_tokens = 0;
  std::size_t oov_tokens = 0;
};

/// Word accuracy split by whether the form occurs in `train_forms`.
InvOovAccuracy inv_oov_accuracy(const std::unordered_set<std::string>& train_forms,
                                std::span<const std::string> forms,
                                std::span<const std::string> gold,
                                std::span<const std::string> pred);

struct EvalReport {
  double word_accuracy = 0.0;
  double sentence_accuracy = 0.0;
  std::size_t token_total = 0;
  std::size_t sentence_total = 0;
  std::optional<InvOovAccuracy> vocabulary_split;
};

/// Word and sentence accuracy of `pred` against `gold`; with `train`, also
/// the in/out-of-vocabulary split.
EvalReport evaluate(const Corpus& gold, const Corpus& pred,
                    const Corpus* train = nullptr);

struct McNemarResult {
  std::size_t b = 0;  // A right, B wrong
  std::size_t c = 0;  // A wrong, B right
  double statistic = 0.0;
  double p_value = 1.0;
  double alpha = 0.05;
  bool significant = false;
};

/// Continuity-corrected McNemar test; p from the chi-square(1) survival
/// function, erfc(sqrt(statistic / 2)).
McNemarResult mcnemar(std::size_t b, std::size_t c, double alpha = 0.05);

struct PairedCounts {
  std::size_t b = 0;
  std::size_t c = 0;

  bool operator==(const PairedCounts&) const = default;
};

PairedCounts paired_outcomes(std::span<const std::string> gold,
                             std::span<const std::string> pred_a,
                             std::span<const std::string> pred_b);

/// Same counts where an item is a sentence and "correct" means every
/// evaluated token in it is correct.
PairedCounts paired_sentence_outcomes(const Corpus& gold, const Corpus& pred_a,
                                      const Corpus& pred_b);

struct LabelVocabulary {
  Scheme scheme = Scheme::Udpipe;
  std::map<std::string, std::size_t> counts;

  std::size_t size() const noexcept { return counts.size(); }
};

LabelVocabulary unique_labels(const LabeledCorpus& labeled);

struct OovReport {
  double oov_word_rate = 0.0;
  double oov_lemma_rate = 0.0;
  double oov_ses_rate = 0.0;
  /// Among test tokens with an unseen lemma, the share whose label was seen.
  /// 1.0 with `seen_ses_empty_denominator` set when no lemma is unseen.
  double oov_lemma_with_seen_ses_rate = 1.0;
  bool seen_ses_empty_denominator = true;
  std::size_t test_tokens = 0;
  std::size_t oov_lemma_tokens = 0;
};

/// Throws SchemeMismatch when the corpora use different schemes.
OovReport oov_report(const LabeledCorpus& train, const LabeledCorpus& test);

// Gold/prediction columns over the evaluated tokens (those with a gold
// lemma). Throws StructureMismatch when `pred` is not aligned with `gold`.
struct EvalColumns {
  std::vector<std::string> forms;
  std::vector<std::string> gold;
  std::vector<std::string> pred;
};
EvalColumns eval_columns(const Corpus& gold, const Corpus& pred);

nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const McNemarResult& result);
nlohmann::json to_json(const OovReport& report);
nlohmann::json to_json(const InvOovAccuracy& split);

}  // namespace ses
