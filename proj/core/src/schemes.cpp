#include "ses/schemes.hpp"

#include "ses/error.hpp"
#include "ses/ixapipes.hpp"
#include "ses/morpheus.hpp"
#include "ses/udpipe.hpp"

namespace ses {

SesLabel encode(Scheme scheme, std::string_view form, std::string_view lemma) {
  switch (scheme) {
    case Scheme::Udpipe:
      return udpipe::encode(form, lemma);
    case Scheme::Ixapipes:
      return ixapipes::encode(form, lemma);
    case Scheme::Morpheus:
      return morpheus::encode(form, lemma);
  }
  throw Error(ErrorCode::SchemeMismatch, "unknown scheme");
}

std::string decode(std::string_view form, const SesLabel& label) {
  switch (label.scheme) {
    case Scheme::Udpipe:
      return udpipe::decode(form, label);
    case Scheme::Ixapipes:
      return ixapipes::decode(form, label);
    case Scheme::Morpheus:
      return morpheus::decode(form, label);
  }
  throw Error(ErrorCode::SchemeMismatch, "unknown scheme");
}

void validate(const SesLabel& label) {
  switch (label.scheme) {
    case Scheme::Udpipe:
      udpipe::parse(label.text);
      break;
    case Scheme::Ixapipes:
      ixapipes::parse(label.text);
      break;
    case Scheme::Morpheus:
      morpheus::parse(label.text);
      break;
  }
}

std::optional<Scheme> infer_scheme(std::string_view label_text) noexcept {
  if (label_text.empty()) return std::nullopt;
  if (label_text.front() == 'a' || label_text.starts_with("↑") ||
      label_text.starts_with("↓")) {
    return Scheme::Udpipe;
  }
  switch (label_text.front()) {
    case 'O':
    case '1':
    case 'R':
    case 'D':
    case 'I':
      return Scheme::Ixapipes;
    case 's':
    case 'd':
    case 'l':
    case 'r':
      return Scheme::Morpheus;
    default:
      return std::nullopt;
  }
}

}  // namespace ses
