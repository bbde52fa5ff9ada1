#include "ses/baseline.hpp"

#include <unordered_map>

#include "ses/error.hpp"
#include "ses/schemes.hpp"
#include "ses/unicode.hpp"

namespace ses {

namespace {

// Most frequent key; std::map iteration order makes the smallest key win ties.
std::string majority(const std::map<std::string, std::size_t>& counts) {
  const std::pair<const std::string, std::size_t>* best = nullptr;
  for (const auto& entry : counts) {
    if (best == nullptr || entry.second > best->second) best = &entry;
  }
  return best == nullptr ? std::string{} : best->first;
}

}  // namespace

BaselineModel train_baseline(const LabeledCorpus& labeled) {
  if (labeled.token_count() == 0) {
    throw Error(ErrorCode::EmptyCorpus, "cannot train a baseline on an empty corpus");
  }
  std::unordered_map<std::string, std::map<std::string, std::size_t>> by_form;
  std::map<std::string, std::size_t> overall;
  for (const auto& sentence : labeled.sentences) {
    for (const LabeledToken& t : sentence) {
      ++by_form[unicode::to_lower_utf8(t.form)][t.label.text];
      ++overall[t.label.text];
    }
  }
  BaselineModel model;
  model.scheme = labeled.scheme;
  for (const auto& [form, counts] : by_form) model.per_form.emplace(form, majority(counts));
  model.fallback = majority(overall);
  return model;
}

Prediction predict_lemma(const BaselineModel& model, std::string_view form) {
  Prediction p;
  const auto it = model.per_form.find(unicode::to_lower_utf8(form));
  if (it != model.per_form.end()) {
    p.label = it->second;
  } else {
    p.label = model.fallback;
    p.used_fallback = true;
  }
  try {
    p.lemma = decode(form, SesLabel{model.scheme, p.label});
  } catch (const Error& e) {
    if (!is_decode_mismatch(e.code())) throw;
    p.lemma = std::string(form);
    p.decode_failed = true;
  }
  return p;
}

PredictionRun predict_corpus(const BaselineModel& model, const Corpus& input) {
  PredictionRun run;
  run.predicted.source_name = input.source_name;
  run.predicted.sentences.reserve(input.sentences.size());
  for (const Sentence& sentence : input.sentences) {
    Sentence out;
    out.comments = sentence.comments;
    for (const Token& token : sentence.tokens) {
      const Prediction p = predict_lemma(model, token.form);
      run.fallback_count += p.used_fallback ? 1 : 0;
      run.decode_failures += p.decode_failed ? 1 : 0;
      Token predicted = token;
      predicted.lemma = p.lemma;
      out.tokens.push_back(std::move(predicted));
    }
    run.predicted.sentences.push_back(std::move(out));
  }
  return run;
}

nlohmann::json to_json(const BaselineModel& model) {
  return {{"scheme", std::string(scheme_name(model.scheme))},
          {"per_form", model.per_form},
          {"fallback", model.fallback}};
}

BaselineModel baseline_from_json(const nlohmann::json& j) {
  try {
    BaselineModel model;
    const auto scheme = parse_scheme(j.at("scheme").get<std::string>());
    if (!scheme) throw Error(ErrorCode::FormatError, "unknown scheme in baseline model");
    model.scheme = *scheme;
    model.per_form = j.at("per_form").get<std::map<std::string, std::string>>();
    model.fallback = j.at("fallback").get<std::string>();
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("bad baseline model: ") + e.what());
  }
}

}  // namespace ses
