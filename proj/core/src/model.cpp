#include "ses/model.hpp"

#include "ses/error.hpp"

namespace ses {

std::size_t token_count(const Corpus& corpus) noexcept {
  std::size_t total = 0;
  for (const auto& sentence : corpus.sentences) total += sentence.tokens.size();
  return total;
}

std::string_view scheme_name(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::Udpipe:
      return "udpipe";
    case Scheme::Ixapipes:
      return "ixapipes";
    case Scheme::Morpheus:
      return "morpheus";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
  for (Scheme s : kAllSchemes) {
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidUtf8: return "InvalidUtf8";
    case ErrorCode::Unrepresentable: return "Unrepresentable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CharMismatch: return "CharMismatch";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::MissingLemma: return "MissingLemma";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::EmptyEval: return "EmptyEval";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ses
