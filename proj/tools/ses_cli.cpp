#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ses/baseline.hpp"
#include "ses/compare.hpp"
#include "ses/corpus_io.hpp"
#include "ses/error.hpp"
#include "ses/metrics.hpp"
#include "ses/schemes.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kContractFailure = 1;
constexpr int kUsageError = 2;

struct Options {
  std::string scheme = "udpipe";
  std::string output;
  std::string failures;
  std::string format = "json";
  std::string granularity = "word";
  double alpha = 0.05;
  bool adjust_propn = false;
  std::vector<std::string> inputs;
  std::string train;
};

// Writes to the named file, or to stdout when the name is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw ses::Error(ses::ErrorCode::IoError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<ses::Scheme> selected_schemes(const std::string& name, bool allow_all) {
  if (allow_all && name == "all") {
    return {std::begin(ses::kAllSchemes), std::end(ses::kAllSchemes)};
  }
  const auto scheme = ses::parse_scheme(name);
  if (!scheme) throw CLI::ValidationError("--scheme", "unknown scheme '" + name + "'");
  return {*scheme};
}

ses::Corpus load_corpus(const std::string& path, bool adjust) {
  ses::Corpus c = ses::read_conllu(path);
  return adjust ? ses::adjust_propn_lemmas(std::move(c)) : c;
}

std::string percent(double rate) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << rate * 100.0 << '%';
  return out.str();
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_encode(const Options& o) {
  const ses::Corpus corpus = load_corpus(o.inputs.at(0), o.adjust_propn);
  const auto schemes = selected_schemes(o.scheme, true);
  if (schemes.size() > 1 && (o.output.empty() || o.output == "-")) {
    throw CLI::ValidationError("-o", "--scheme all needs an output base path");
  }
  nlohmann::json failure_report = nlohmann::json::object();
  std::size_t failures = 0;
  for (ses::Scheme s : schemes) {
    const std::string name(ses::scheme_name(s));
    const ses::LabelingResult r = ses::label_corpus(corpus, s);
    const std::string path = schemes.size() > 1 ? o.output + "." + name + ".tsv" : o.output;
    Output out(path);
    ses::write_labeled(r.labeled, out.stream());
    failures += r.failures.size();
    failure_report[name] = ses::failures_to_json(r.failures);
    if (!r.failures.empty()) {
      std::cerr << name << ": " << r.failures.size() << " token(s) could not be labeled\n";
    }
  }
  if (!o.failures.empty()) {
    Output out(o.failures);
    print_json(out.stream(), failure_report);
  }
  return failures == 0 ? kOk : kContractFailure;
}

int cmd_decode(const Options& o) {
  std::ifstream in(o.inputs.at(0), std::ios::binary);
  if (!in) throw ses::Error(ses::ErrorCode::IoError, "cannot open " + o.inputs.at(0));
  std::optional<ses::Scheme> scheme;
  if (!o.scheme.empty()) scheme = selected_schemes(o.scheme, false).front();
  const ses::LabeledCorpus labeled = ses::parse_labeled(in, scheme);

  Output out(o.output);
  std::size_t warnings = 0;
  for (const auto& sentence : labeled.sentences) {
    for (const ses::LabeledToken& t : sentence) {
      std::string lemma;
      try {
        lemma = ses::decode(t.form, t.label);
      } catch (const ses::Error& e) {
        ++warnings;
        lemma = t.form;
        std::cerr << "warning: " << t.form << " / " << t.label.text << ": " << e.what() << '\n';
      }
      out.stream() << t.form << '\t' << lemma << '\n';
    }
    out.stream() << '\n';
  }
  if (warnings > 0) std::cerr << "warnings: " << warnings << '\n';
  return kOk;
}

int cmd_stats(const Options& o) {
  const ses::Corpus corpus = load_corpus(o.inputs.at(0), o.adjust_propn);
  nlohmann::json report = nlohmann::json::object();
  report["sentences"] = corpus.sentences.size();
  report["tokens"] = ses::token_count(corpus);
  for (ses::Scheme s : ses::kAllSchemes) {
    const ses::LabelingResult r = ses::label_corpus(corpus, s);
    report["schemes"][std::string(ses::scheme_name(s))] = {
        {"unique_labels", ses::unique_labels(r.labeled).size()},
        {"labeled_tokens", r.labeled.token_count()},
        {"label_failures", r.failures.size()}};
  }
  Output out(o.output);
  if (o.format == "json") {
    print_json(out.stream(), report);
  } else {
    out.stream() << "sentences\t" << report["sentences"] << "\ntokens\t" << report["tokens"]
                 << "\nscheme\tunique_labels\tlabeled_tokens\tlabel_failures\n";
    for (ses::Scheme s : ses::kAllSchemes) {
      const auto& j = report["schemes"][std::string(ses::scheme_name(s))];
      out.stream() << ses::scheme_name(s) << '\t' << j["unique_labels"] << '\t'
                   << j["labeled_tokens"] << '\t' << j["label_failures"] << '\n';
    }
  }
  return kOk;
}

int cmd_eval(const Options& o) {
  const ses::Corpus gold = load_corpus(o.inputs.at(0), o.adjust_propn);
  const ses::Corpus pred = ses::read_lemmas(o.inputs.at(1));
  std::optional<ses::Corpus> train;
  if (!o.train.empty()) train = load_corpus(o.train, o.adjust_propn);
  const ses::EvalReport r = ses::evaluate(gold, pred, train ? &*train : nullptr);
  Output out(o.output);
  if (o.format == "json") {
    print_json(out.stream(), ses::to_json(r));
  } else {
    out.stream() << "word_accuracy\t" << percent(r.word_accuracy) << '\t' << r.token_total
                 << " tokens\nsentence_accuracy\t" << percent(r.sentence_accuracy) << '\t'
                 << r.sentence_total << " sentences\n";
    if (r.vocabulary_split) {
      const auto& v = *r.vocabulary_split;
      out.stream() << "inv_accuracy\t" << (v.inv ? percent(*v.inv) : "n/a") << '\t'
                   << v.inv_tokens << " tokens\noov_accuracy\t"
                   << (v.oov ? percent(*v.oov) : "n/a") << '\t' << v.oov_tokens << " tokens\n";
    }
  }
  return kOk;
}

int cmd_mcnemar(const Options& o) {
  const ses::Corpus gold = load_corpus(o.inputs.at(0), o.adjust_propn);
  const ses::Corpus pred_a = ses::read_lemmas(o.inputs.at(1));
  const ses::Corpus pred_b = ses::read_lemmas(o.inputs.at(2));
  ses::PairedCounts counts;
  if (o.granularity == "sentence") {
    counts = ses::paired_sentence_outcomes(gold, pred_a, pred_b);
  } else {
    const ses::EvalColumns a = ses::eval_columns(gold, pred_a);
    const ses::EvalColumns b = ses::eval_columns(gold, pred_b);
    counts = ses::paired_outcomes(a.gold, a.pred, b.pred);
  }
  const ses::McNemarResult r = ses::mcnemar(counts.b, counts.c, o.alpha);
  Output out(o.output);
  if (o.format == "json") {
    nlohmann::json j = ses::to_json(r);
    j["granularity"] = o.granularity;
    print_json(out.stream(), j);
  } else {
    out.stream() << "b\t" << r.b << "\nc\t" << r.c << "\nstatistic\t" << r.statistic
                 << "\np_value\t" << r.p_value << "\nverdict\t"
                 << (r.significant ? "significant" : "not significant") << " at alpha "
                 << r.alpha << '\n';
  }
  return kOk;
}

int cmd_oov(const Options& o) {
  const ses::Corpus train = load_corpus(o.inputs.at(0), o.adjust_propn);
  const ses::Corpus test = load_corpus(o.inputs.at(1), o.adjust_propn);
  nlohmann::json report = nlohmann::json::object();
  for (ses::Scheme s : selected_schemes(o.scheme, true)) {
    const ses::OovReport r = ses::oov_report(ses::label_corpus(train, s).labeled,
                                             ses::label_corpus(test, s).labeled);
    report[std::string(ses::scheme_name(s))] = ses::to_json(r);
  }
  Output out(o.output);
  if (o.format == "json") {
    print_json(out.stream(), report);
  } else {
    out.stream() << "scheme\toov_words\toov_lemmas\toov_ses\toov_lemma_seen_ses\n";
    for (ses::Scheme s : ses::kAllSchemes) {
      const std::string name(ses::scheme_name(s));
      if (!report.contains(name)) continue;
      const auto& j = report[name];
      out.stream() << name << '\t' << percent(j["oov_word_rate"].get<double>()) << '\t'
                   << percent(j["oov_lemma_rate"].get<double>()) << '\t'
                   << percent(j["oov_ses_rate"].get<double>()) << '\t'
                   << percent(j["oov_lemma_with_seen_ses_rate"].get<double>()) << '\n';
    }
  }
  return kOk;
}

int cmd_train(const Options& o) {
  const ses::Corpus corpus = load_corpus(o.inputs.at(0), o.adjust_propn);
  const ses::Scheme scheme = selected_schemes(o.scheme, false).front();
  const ses::LabelingResult r = ses::label_corpus(corpus, scheme);
  if (!r.failures.empty()) {
    std::cerr << r.failures.size() << " token(s) could not be labeled and were skipped\n";
  }
  Output out(o.output);
  print_json(out.stream(), ses::to_json(ses::train_baseline(r.labeled)));
  return kOk;
}

int cmd_predict(const Options& o) {
  std::ifstream in(o.inputs.at(0), std::ios::binary);
  if (!in) throw ses::Error(ses::ErrorCode::IoError, "cannot open " + o.inputs.at(0));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ses::Error(ses::ErrorCode::FormatError, o.inputs.at(0) + ": " + e.what());
  }
  const ses::BaselineModel model = ses::baseline_from_json(j);
  const ses::PredictionRun run = ses::predict_corpus(model, ses::read_lemmas(o.inputs.at(1)));
  Output out(o.output);
  ses::write_lemma_tsv(run.predicted, out.stream());
  std::cerr << "fallback: " << run.fallback_count << ", decode failures: " << run.decode_failures
            << '\n';
  return kOk;
}

int cmd_compare(const Options& o) {
  const ses::Corpus train = load_corpus(o.inputs.at(0), o.adjust_propn);
  const ses::Corpus test = load_corpus(o.inputs.at(1), o.adjust_propn);
  Output out(o.output);
  print_json(out.stream(), ses::to_json(ses::compare_schemes(train, test, o.alpha)));
  return kOk;
}

int exit_code_for(const ses::Error& e) {
  switch (e.code()) {
    case ses::ErrorCode::IoError:
    case ses::ErrorCode::FormatError:
    case ses::ErrorCode::InvalidUtf8:
    case ses::ErrorCode::ParseError:
      return kUsageError;
    default:
      return kContractFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest edit script induction and evaluation for lemmatization"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", o.output, "Output path"); };
  auto add_adjust = [&](CLI::App* cmd) {
    cmd->add_flag("--adjust-propn", o.adjust_propn, "Use capitalized forms as PROPN lemmas");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  auto add_inputs = [&](CLI::App* cmd, int n, const std::string& what) {
    cmd->add_option("inputs", o.inputs, what)->required()->expected(n)->check(CLI::ExistingFile);
  };
  const std::string schemes = "udpipe|ixapipes|morpheus";

  CLI::App* encode = app.add_subcommand("encode", "Label a CoNLL-U corpus with edit scripts");
  add_inputs(encode, 1, "CoNLL-U input");
  encode->add_option("--scheme", o.scheme, schemes + "|all")->capture_default_str();
  add_output(encode);
  encode->add_option("--failures", o.failures, "Write unlabeled tokens as JSON");
  add_adjust(encode);

  CLI::App* decode = app.add_subcommand("decode", "Apply labels to forms (form, lemma, label TSV)");
  add_inputs(decode, 1, "Labeled TSV");
  decode->add_option("--scheme", o.scheme, schemes + " (inferred when omitted)");
  add_output(decode);

  CLI::App* stats = app.add_subcommand("stats", "Unique label counts per scheme");
  add_inputs(stats, 1, "CoNLL-U input");
  add_format(stats);
  add_output(stats);
  add_adjust(stats);

  CLI::App* eval = app.add_subcommand("eval", "Word and sentence accuracy");
  add_inputs(eval, 2, "Gold CoNLL-U and predicted lemmas");
  eval->add_option("--train", o.train, "Training CoNLL-U for the INV/OOV split")
      ->check(CLI::ExistingFile);
  add_format(eval);
  add_output(eval);
  add_adjust(eval);

  CLI::App* mcnemar = app.add_subcommand("mcnemar", "McNemar test between two predictions");
  add_inputs(mcnemar, 3, "Gold CoNLL-U, predictions A and B");
  mcnemar->add_option("--granularity", o.granularity, "word|sentence")
      ->check(CLI::IsMember({"word", "sentence"}))
      ->capture_default_str();
  mcnemar->add_option("--alpha", o.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_format(mcnemar);
  add_output(mcnemar);
  add_adjust(mcnemar);

  CLI::App* oov = app.add_subcommand("oov", "Out-of-vocabulary rates of a test set");
  add_inputs(oov, 2, "Training and test CoNLL-U");
  oov->add_option("--scheme", o.scheme, schemes + "|all");
  add_format(oov);
  add_output(oov);
  add_adjust(oov);

  CLI::App* train = app.add_subcommand("train", "Train the most-frequent-label baseline");
  add_inputs(train, 1, "Training CoNLL-U");
  train->add_option("--scheme", o.scheme, schemes)->capture_default_str();
  add_output(train);
  add_adjust(train);

  CLI::App* predict = app.add_subcommand("predict", "Lemmatize with a trained baseline");
  add_inputs(predict, 2, "Model JSON and input (CoNLL-U or form TSV)");
  add_output(predict);

  CLI::App* compare = app.add_subcommand("compare", "Compare all three schemes end to end");
  add_inputs(compare, 2, "Training and test CoNLL-U");
  compare->add_option("--alpha", o.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_output(compare);
  add_adjust(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }
  if (oov->parsed() && !oov->count("--scheme")) o.scheme = "all";
  if (decode->parsed() && !decode->count("--scheme")) o.scheme.clear();

  try {
    if (encode->parsed()) return cmd_encode(o);
    if (decode->parsed()) return cmd_decode(o);
    if (stats->parsed()) return cmd_stats(o);
    if (eval->parsed()) return cmd_eval(o);
    if (mcnemar->parsed()) return cmd_mcnemar(o);
    if (oov->parsed()) return cmd_oov(o);
    if (train->parsed()) return cmd_train(o);
    if (predict->parsed()) return cmd_predict(o);
    if (compare->parsed()) return cmd_compare(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ses::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
