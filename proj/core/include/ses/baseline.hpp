#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ses/corpus_io.hpp"
#include "ses/model.hpp"

namespace ses {

/// Most-frequent-label lemmatizer: a lookup from lowercased form to its
/// majority label, with the corpus-wide majority label as fallback.
struct BaselineModel {
  Scheme scheme = Scheme::Udpipe;
  std::map<std::string, std::string> per_form;
  std::string fallback;

  bool operator==(const BaselineModel&) const = default;
};

/// Ties go to the lexicographically smallest label. Throws EmptyCorpus.
BaselineModel train_baseline(const LabeledCorpus& labeled);

struct Prediction {
  std::string lemma;
  std::string label;
  bool used_fallback = false;
  bool decode_failed = false;  // the form was returned unchanged
};

Prediction predict_lemma(const BaselineModel& model, std::string_view form);

struct PredictionRun {
  Corpus predicted;  // same structure as the input, lemmas filled in
  std::size_t fallback_count = 0;
  std::size_t decode_failures = 0;
};

PredictionRun predict_corpus(const BaselineModel& model, const Corpus& input);

nlohmann::json to_json(const BaselineModel& model);
BaselineModel baseline_from_json(const nlohmann::json& j);

}  // namespace ses
