#include "ses/compare.hpp"

#include <map>

#include "ses/baseline.hpp"
#include "ses/corpus_io.hpp"

namespace ses {

ComparisonReport compare_schemes(const Corpus& train, const Corpus& test, double alpha) {
  ComparisonReport report;
  std::map<Scheme, Corpus> predictions;

  for (Scheme scheme : kAllSchemes) {
    const LabelingResult train_labels = label_corpus(train, scheme);
    const LabelingResult test_labels = label_corpus(test, scheme);

    SchemeSummary summary;
    summary.scheme = scheme;
    summary.unique_labels = unique_labels(train_labels.labeled).size();
    summary.train_tokens = train_labels.labeled.token_count();
    summary.label_failures = train_labels.failures.size() + test_labels.failures.size();
    summary.oov = oov_report(train_labels.labeled, test_labels.labeled);

    const BaselineModel model = train_baseline(train_labels.labeled);
    PredictionRun run = predict_corpus(model, test);
    summary.baseline = evaluate(test, run.predicted, &train);
    summary.fallback_count = run.fallback_count;
    summary.decode_failures = run.decode_failures;
    predictions.emplace(scheme, std::move(run.predicted));
    report.schemes.push_back(std::move(summary));
  }

  const EvalColumns reference = eval_columns(test, predictions.at(Scheme::Udpipe));
  for (std::size_t x = 0; x < std::size(kAllSchemes); ++x) {
    for (std::size_t y = x + 1; y < std::size(kAllSchemes); ++y) {
      const Scheme a = kAllSchemes[x];
      const Scheme b = kAllSchemes[y];
      const EvalColumns ca = eval_columns(test, predictions.at(a));
      const EvalColumns cb = eval_columns(test, predictions.at(b));
      const PairedCounts words = paired_outcomes(reference.gold, ca.pred, cb.pred);
      const PairedCounts sentences =
          paired_sentence_outcomes(test, predictions.at(a), predictions.at(b));
      report.pairwise.push_back(
          {a, b, mcnemar(words.b, words.c, alpha), mcnemar(sentences.b, sentences.c, alpha)});
    }
  }
  return report;
}

nlohmann::json to_json(const ComparisonReport& report) {
  nlohmann::json schemes = nlohmann::json::object();
  for (const SchemeSummary& s : report.schemes) {
    schemes[std::string(scheme_name(s.scheme))] = {
        {"unique_labels", s.unique_labels},
        {"train_tokens", s.train_tokens},
        {"label_failures", s.label_failures},
        {"baseline", to_json(s.baseline)},
        {"fallback_count", s.fallback_count},
        {"decode_failures", s.decode_failures},
        {"oov", to_json(s.oov)},
    };
  }
  nlohmann::json pairwise = nlohmann::json::array();
  for (const PairwiseTest& t : report.pairwise) {
    pairwise.push_back({{"a", std::string(scheme_name(t.a))},
                        {"b", std::string(scheme_name(t.b))},
                        {"word", to_json(t.word)},
                        {"sentence", to_json(t.sentence)}});
  }
  return {{"schemes", schemes}, {"pairwise", pairwise}};
}

}  // namespace ses
