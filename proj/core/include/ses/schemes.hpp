#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ses/model.hpp"

namespace ses {

SesLabel encode(Scheme scheme, std::string_view form, std::string_view lemma);
std::string decode(std::string_view form, const SesLabel& label);

/// Throws Error(ParseError) if `label.text` does not parse under its scheme.
void validate(const SesLabel& label);

/// The three label grammars start with disjoint characters, so the scheme of
/// a label can be recovered from its text alone.
std::optional<Scheme> infer_scheme(std::string_view label_text) noexcept;

}  // namespace ses
