#include "ses/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ses/error.hpp"
#include "ses/schemes.hpp"
#include "ses/unicode.hpp"

namespace ses {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const auto end = line.find('\t', begin);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, end - begin));
    begin = end + 1;
  }
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

[[noreturn]] void format_error(const std::string& source, std::size_t line_no,
                               const std::string& why) {
  throw Error(ErrorCode::FormatError, (source.empty() ? std::string("<stream>") : source) +
                                          ":" + std::to_string(line_no) + ": " + why);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

}  // namespace

Corpus parse_conllu(std::istream& in, std::string source_name) {
  Corpus corpus;
  corpus.source_name = std::move(source_name);
  Sentence current;
  auto flush = [&] {
    if (!current.tokens.empty()) corpus.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (is_blank(line)) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      // A comment after tokens belongs to the next sentence.
      if (!current.tokens.empty()) flush();
      current.comments.push_back(line);
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() < 10) {
      format_error(corpus.source_name, line_no,
                   "expected 10 tab-separated fields, found " + std::to_string(fields.size()));
    }
    const std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) {
      continue;
    }
    std::size_t index = 0;
    const auto res = std::from_chars(id.data(), id.data() + id.size(), index);
    if (res.ec != std::errc{} || res.ptr != id.data() + id.size()) {
      format_error(corpus.source_name, line_no, "bad token id '" + std::string(id) + "'");
    }
    if (index != current.tokens.size() + 1) {
      format_error(corpus.source_name, line_no,
                   "token id " + std::to_string(index) + " out of sequence");
    }
    if (fields[1].empty()) format_error(corpus.source_name, line_no, "empty FORM");

    Token token;
    token.index = index;
    token.form = std::string(fields[1]);
    if (fields[2] != "_" && !fields[2].empty()) token.lemma = std::string(fields[2]);
    if (fields[3] != "_") token.upos = std::string(fields[3]);
    current.tokens.push_back(std::move(token));
  }
  flush();
  return corpus;
}

Corpus read_conllu(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_conllu(in, path.string());
}

void write_conllu(const Corpus& corpus, std::ostream& out) {
  for (const Sentence& sentence : corpus.sentences) {
    for (const std::string& comment : sentence.comments) out << comment << '\n';
    for (const Token& t : sentence.tokens) {
      out << t.index << '\t' << t.form << '\t' << t.lemma.value_or("_") << '\t'
          << (t.upos.empty() ? "_" : t.upos) << "\t_\t_\t_\t_\t_\t_\n";
    }
    out << '\n';
  }
}

Corpus adjust_propn_lemmas(Corpus corpus) {
  for (Sentence& sentence : corpus.sentences) {
    for (Token& token : sentence.tokens) {
      if (token.upos != "PROPN" || !token.lemma || token.lemma->empty()) continue;
      std::u32string lemma = unicode::decode(*token.lemma);
      if (!unicode::is_lower(lemma[0])) continue;
      lemma[0] = unicode::to_upper(lemma[0]);
      token.lemma = unicode::encode(lemma);
    }
  }
  return corpus;
}

std::size_t LabeledCorpus::token_count() const noexcept {
  std::size_t total = 0;
  for (const auto& sentence : sentences) total += sentence.size();
  return total;
}

LabelingResult label_corpus(const Corpus& corpus, Scheme scheme, bool require_lemmas) {
  LabelingResult result;
  result.labeled.scheme = scheme;
  result.labeled.sentences.reserve(corpus.sentences.size());
  for (std::size_t s = 0; s < corpus.sentences.size(); ++s) {
    auto& out = result.labeled.sentences.emplace_back();
    for (const Token& token : corpus.sentences[s].tokens) {
      if (!token.lemma) {
        if (require_lemmas) {
          throw Error(ErrorCode::MissingLemma, "sentence " + std::to_string(s) + ", token " +
                                                   std::to_string(token.index) +
                                                   " has no lemma");
        }
        continue;
      }
      try {
        SesLabel label = encode(scheme, token.form, *token.lemma);
        const std::string decoded = decode(token.form, label);
        if (decoded != *token.lemma) {
          result.failures.push_back({s, token.index,
                                     "label '" + label.text + "' decodes to '" + decoded +
                                         "', expected '" + *token.lemma + "'"});
          continue;
        }
        out.push_back({token.form, *token.lemma, std::move(label)});
      } catch (const Error& e) {
        result.failures.push_back(
            {s, token.index, std::string(error_code_name(e.code())) + ": " + e.what()});
      }
    }
  }
  return result;
}

void write_labeled(const LabeledCorpus& labeled, std::ostream& out) {
  for (const auto& sentence : labeled.sentences) {
    if (sentence.empty()) continue;
    for (const LabeledToken& t : sentence) {
      out << t.form << '\t' << t.gold_lemma << '\t' << t.label.text << '\n';
    }
    out << '\n';
  }
}

LabeledCorpus parse_labeled(std::istream& in, std::optional<Scheme> scheme) {
  LabeledCorpus labeled;
  std::vector<LabeledToken> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) {
      if (!current.empty()) labeled.sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      format_error({}, line_no, "expected form, lemma and label separated by tabs");
    }
    if (!scheme) {
      scheme = infer_scheme(fields[2]);
      if (!scheme) format_error({}, line_no, "cannot tell the scheme of '" + std::string(fields[2]) + "'");
    }
    current.push_back({std::string(fields[0]), std::string(fields[1]),
                       SesLabel{*scheme, std::string(fields[2])}});
  }
  if (!current.empty()) labeled.sentences.push_back(std::move(current));
  labeled.scheme = scheme.value_or(Scheme::Udpipe);
  return labeled;
}

Corpus parse_lemma_tsv(std::istream& in, std::string source_name) {
  Corpus corpus;
  corpus.source_name = std::move(source_name);
  Sentence current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) {
      if (!current.tokens.empty()) corpus.sentences.push_back(std::move(current));
      current = Sentence{};
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() > 2 || fields[0].empty()) {
      format_error(corpus.source_name, line_no, "expected form and lemma separated by a tab");
    }
    Token token;
    token.index = current.tokens.size() + 1;
    token.form = std::string(fields[0]);
    if (fields.size() == 2 && fields[1] != "_" && !fields[1].empty()) {
      token.lemma = std::string(fields[1]);
    }
    current.tokens.push_back(std::move(token));
  }
  if (!current.tokens.empty()) corpus.sentences.push_back(std::move(current));
  return corpus;
}

void write_lemma_tsv(const Corpus& corpus, std::ostream& out) {
  for (const Sentence& sentence : corpus.sentences) {
    for (const Token& t : sentence.tokens) out << t.form << '\t' << t.lemma.value_or("_") << '\n';
    out << '\n';
  }
}

Corpus read_lemmas(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  bool conllu = false;
  std::istringstream probe(content);
  std::string line;
  while (std::getline(probe, line)) {
    chomp(line);
    if (line.empty() || line.front() == '#') continue;
    conllu = split_tabs(line).size() >= 10;
    break;
  }
  std::istringstream body(content);
  return conllu ? parse_conllu(body, path.string()) : parse_lemma_tsv(body, path.string());
}

nlohmann::json failures_to_json(const std::vector<LabelFailure>& failures) {
  nlohmann::json out = nlohmann::json::array();
  for (const LabelFailure& f : failures) {
    out.push_back({{"sentence_index", f.sentence_index},
                   {"token_index", f.token_index},
                   {"reason", f.reason}});
  }
  return out;
}

}  // namespace ses
