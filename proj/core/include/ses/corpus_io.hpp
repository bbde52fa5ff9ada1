#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ses/model.hpp"

namespace ses {

/// Reads CoNLL-U. Multiword ranges ("3-4") and empty nodes ("5.1") are
/// skipped, LEMMA "_" becomes an absent lemma and UPOS "_" an empty tag.
/// Rows with fewer than 10 tab-separated fields raise Error(FormatError)
/// naming the line.
Corpus parse_conllu(std::istream& in, std::string source_name = {});
Corpus read_conllu(const std::filesystem::path& path);

/// Writes the columns this library keeps (ID, FORM, LEMMA, UPOS); the rest
void write_conllu(const Corpus& corpus, std::ostream& out);

/// Title-cases the lemma of every PROPN token whose lemma starts lowercase.
Corpus adjust_propn_lemmas(Corpus corpus);

struct LabeledToken {
  std::string form;
  std::string gold_lemma;
  SesLabel label;

  bool operator==(const LabeledToken&) const = default;
};

struct LabeledCorpus {
  Scheme scheme = Scheme::Udpipe;
  std::vector<std::vector<LabeledToken>> sentences;

  std::size_t token_count() const noexcept;
  bool operator==(const LabeledCorpus&) const = default;
};

struct LabelFailure {
  std::size_t sentence_index = 0;  // 0-based
  std::size_t token_index = 0;     // 1-based CoNLL-U id
  std::string reason;

  bool operator==(const LabelFailure&) const = default;
};

struct LabelingResult {
  LabeledCorpus labeled;
  std::vector<LabelFailure> failures;
};

/// Encodes every token that has a lemma and checks that the label decodes
/// back to it; tokens that do not are reported as failures and left out.
/// Sentences keep their positions, so a sentence may end up empty.
/// With `require_lemmas`, a token without a lemma raises Error(MissingLemma).
LabelingResult label_corpus(const Corpus& corpus, Scheme scheme,
                            bool require_lemmas = false);

/// `form<TAB>gold_lemma<TAB>label` per token, a blank line after each
/// non-empty sentence.
void write_labeled(const LabeledCorpus& labeled, std::ostream& out);

/// Reads the format written by write_labeled. Without `scheme` the scheme is
/// inferred from the first label.
LabeledCorpus parse_labeled(std::istream& in, std::optional<Scheme> scheme = std::nullopt);

/// Reads `form<TAB>lemma` lines with blank-line sentence breaks into a corpus
/// (a prediction file). A single column means the lemma is absent.
Corpus parse_lemma_tsv(std::istream& in, std::string source_name = {});

/// Writes `form<TAB>lemma` lines; absent lemmas are written as "_".
void write_lemma_tsv(const Corpus& corpus, std::ostream& out);

/// Reads either CoNLL-U or a lemma TSV, judged by the first data row.
Corpus read_lemmas(const std::filesystem::path& path);

nlohmann::json failures_to_json(const std::vector<LabelFailure>& failures);

}  // namespace ses
