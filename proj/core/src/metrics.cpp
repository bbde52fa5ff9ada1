#include "ses/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "ses/error.hpp"

namespace ses {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + ": " + std::to_string(a) +
                                               " gold items vs " + std::to_string(b) +
                                               " predictions");
  }
}

void require_aligned(const Corpus& gold, const Corpus& pred) {
  if (gold.sentences.size() != pred.sentences.size()) {
    throw Error(ErrorCode::StructureMismatch,
                "gold has " + std::to_string(gold.sentences.size()) +
                    " sentences, prediction has " + std::to_string(pred.sentences.size()));
  }
  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    if (gold.sentences[s].tokens.size() != pred.sentences[s].tokens.size()) {
      throw Error(ErrorCode::StructureMismatch,
                  "sentence " + std::to_string(s) + ": gold has " +
                      std::to_string(gold.sentences[s].tokens.size()) +
                      " tokens, prediction has " +
                      std::to_string(pred.sentences[s].tokens.size()));
    }
  }
}

// Per evaluated sentence: whether every gold-lemmatized token is right.
std::vector<bool> sentence_outcomes(const Corpus& gold, const Corpus& pred) {
  require_aligned(gold, pred);
  std::vector<bool> out;
  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    bool any = false;
    bool all_right = true;
    const auto& g = gold.sentences[s].tokens;
    const auto& p = pred.sentences[s].tokens;
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (!g[t].lemma) continue;
      any = true;
      if (p[t].lemma != g[t].lemma) all_right = false;
    }
    if (any) out.push_back(all_right);
  }
  return out;
}

double rate(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

double word_accuracy(std::span<const std::string> gold, std::span<const std::string> pred) {
  require_same_length(gold.size(), pred.size(), "word accuracy");
  if (gold.empty()) throw Error(ErrorCode::EmptyEval, "word accuracy over zero tokens");
  std::size_t right = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) right += gold[i] == pred[i] ? 1 : 0;
  return rate(right, gold.size());
}

double sentence_accuracy(const Corpus& gold, const Corpus& pred) {
  const auto outcomes = sentence_outcomes(gold, pred);
  if (outcomes.empty()) throw Error(ErrorCode::EmptyEval, "sentence accuracy over zero sentences");
  return rate(static_cast<std::size_t>(std::count(outcomes.begin(), outcomes.end(), true)),
              outcomes.size());
}

EvalColumns eval_columns(const Corpus& gold, const Corpus& pred) {
  require_aligned(gold, pred);
  EvalColumns cols;
  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    const auto& g = gold.sentences[s].tokens;
    const auto& p = pred.sentences[s].tokens;
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (!g[t].lemma) continue;
      cols.forms.push_back(g[t].form);
      cols.gold.push_back(*g[t].lemma);
      cols.pred.push_back(p[t].lemma.value_or(std::string{}));
    }
  }
  return cols;
}

InvOovAccuracy inv_oov_accuracy(const std::unordered_set<std::string>& train_forms,
                                std::span<const std::string> forms,
                                std::span<const std::string> gold,
                                std::span<const std::string> pred) {
  require_same_length(gold.size(), pred.size(), "inv/oov accuracy");
  require_same_length(gold.size(), forms.size(), "inv/oov accuracy forms");
  std::size_t inv_right = 0;
  std::size_t oov_right = 0;
  InvOovAccuracy out;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool right = gold[i] == pred[i];
    if (train_forms.contains(forms[i])) {
      ++out.inv_tokens;
      inv_right += right ? 1 : 0;
    } else {
      ++out.oov_tokens;
      oov_right += right ? 1 : 0;
    }
  }
  if (out.inv_tokens > 0) out.inv = rate(inv_right, out.inv_tokens);
  if (out.oov_tokens > 0) out.oov = rate(oov_right, out.oov_tokens);
  return out;
}

EvalReport evaluate(const Corpus& gold, const Corpus& pred, const Corpus* train) {
  const EvalColumns cols = eval_columns(gold, pred);
  EvalReport report;
  report.word_accuracy = word_accuracy(cols.gold, cols.pred);
  const auto outcomes = sentence_outcomes(gold, pred);
  report.sentence_total = outcomes.size();
  report.sentence_accuracy = sentence_accuracy(gold, pred);
  report.token_total = cols.gold.size();
  if (train != nullptr) {
    std::unordered_set<std::string> forms;
    for (const auto& sentence : train->sentences) {
      for (const auto& token : sentence.tokens) forms.insert(token.form);
    }
    report.vocabulary_split = inv_oov_accuracy(forms, cols.forms, cols.gold, cols.pred);
  }
  return report;
}

McNemarResult mcnemar(std::size_t b, std::size_t c, double alpha) {
  McNemarResult r;
  r.b = b;
  r.c = c;
  r.alpha = alpha;
  if (b + c > 0) {
    const double diff = std::abs(static_cast<double>(b) - static_cast<double>(c)) - 1.0;
    r.statistic = diff * diff / static_cast<double>(b + c);
    r.p_value = std::erfc(std::sqrt(r.statistic / 2.0));
  }
  r.significant = r.p_value < alpha;
  return r;
}

PairedCounts paired_outcomes(std::span<const std::string> gold,
                             std::span<const std::string> pred_a,
                             std::span<const std::string> pred_b) {
  require_same_length(gold.size(), pred_a.size(), "paired outcomes (A)");
  require_same_length(gold.size(), pred_b.size(), "paired outcomes (B)");
  PairedCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool a = pred_a[i] == gold[i];
    const bool b = pred_b[i] == gold[i];
    if (a && !b) ++counts.b;
    if (!a && b) ++counts.c;
  }
  return counts;
}

PairedCounts paired_sentence_outcomes(const Corpus& gold, const Corpus& pred_a,
                                      const Corpus& pred_b) {
  const auto a = sentence_outcomes(gold, pred_a);
  const auto b = sentence_outcomes(gold, pred_b);
  PairedCounts counts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) ++counts.b;
    if (!a[i] && b[i]) ++counts.c;
  }
  return counts;
}

LabelVocabulary unique_labels(const LabeledCorpus& labeled) {
  LabelVocabulary vocab;
  vocab.scheme = labeled.scheme;
  for (const auto& sentence : labeled.sentences) {
    for (const LabeledToken& t : sentence) ++vocab.counts[t.label.text];
  }
  return vocab;
}

OovReport oov_report(const LabeledCorpus& train, const LabeledCorpus& test) {
  if (train.scheme != test.scheme) {
    throw Error(ErrorCode::SchemeMismatch, "OOV report needs train and test in the same scheme");
  }
  std::unordered_set<std::string> forms;
  std::unordered_set<std::string> lemmas;
  std::unordered_set<std::string> labels;
  for (const auto& sentence : train.sentences) {
    for (const LabeledToken& t : sentence) {
      forms.insert(t.form);
      lemmas.insert(t.gold_lemma);
      labels.insert(t.label.text);
    }
  }

  OovReport report;
  std::size_t oov_forms = 0;
  std::size_t oov_lemmas = 0;
  std::size_t oov_labels = 0;
  std::size_t oov_lemma_seen_label = 0;
  for (const auto& sentence : test.sentences) {
    for (const LabeledToken& t : sentence) {
      ++report.test_tokens;
      oov_forms += forms.contains(t.form) ? 0 : 1;
      const bool label_seen = labels.contains(t.label.text);
      oov_labels += label_seen ? 0 : 1;
      if (!lemmas.contains(t.gold_lemma)) {
        ++oov_lemmas;
        oov_lemma_seen_label += label_seen ? 1 : 0;
      }
    }
  }
  report.oov_word_rate = rate(oov_forms, report.test_tokens);
  report.oov_lemma_rate = rate(oov_lemmas, report.test_tokens);
  report.oov_ses_rate = rate(oov_labels, report.test_tokens);
  report.oov_lemma_tokens = oov_lemmas;
  report.seen_ses_empty_denominator = oov_lemmas == 0;
  report.oov_lemma_with_seen_ses_rate =
      oov_lemmas == 0 ? 1.0 : rate(oov_lemma_seen_label, oov_lemmas);
  return report;
}

nlohmann::json to_json(const InvOovAccuracy& split) {
  return {{"inv_accuracy", optional_json(split.inv)},
          {"oov_accuracy", optional_json(split.oov)},
          {"inv_tokens", split.inv_tokens},
          {"oov_tokens", split.oov_tokens}};
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json j = {{"word_accuracy", report.word_accuracy},
                      {"sentence_accuracy", report.sentence_accuracy},
                      {"token_total", report.token_total},
                      {"sentence_total", report.sentence_total}};
  if (report.vocabulary_split) j["vocabulary_split"] = to_json(*report.vocabulary_split);
  return j;
}

nlohmann::json to_json(const McNemarResult& result) {
  return {{"b", result.b},
          {"c", result.c},
          {"statistic", result.statistic},
          {"p_value", result.p_value},
          {"alpha", result.alpha},
          {"significant", result.significant}};
}

nlohmann::json to_json(const OovReport& report) {
  return {{"oov_word_rate", report.oov_word_rate},
          {"oov_lemma_rate", report.oov_lemma_rate},
          {"oov_ses_rate", report.oov_ses_rate},
          {"oov_lemma_with_seen_ses_rate", report.oov_lemma_with_seen_ses_rate},
          {"seen_ses_empty_denominator", report.seen_ses_empty_denominator},
          {"test_tokens", report.test_tokens},
          {"oov_lemma_tokens", report.oov_lemma_tokens}};
}

}  // namespace ses
