#pragma once

#include <string>
#include <vector>

#include "levikit/groupoid.hpp"

namespace levikit {

/// Parses the line-oriented diagram format:
///   group NAME: e g1 g2 ...          # element names, identity first
///   table NAME:                      # then one row per element
///   vertex V group NAME
///   edge X: V1 -> V2
///   dom X: g ...
///   map X: g -> h ...
/// '#' starts a comment. Throws ParseError with line information.
Diagram parse_diagram(const std::string& text);

std::string print_diagram(const Diagram& d);

/// Word token format: `[g]` group element, `x` forward edge, `x^-1`
/// backward edge, optional leading `@V` domain annotation.
GroupoidWord parse_word(const Diagram& d, const std::string& text);

/// Same token stream interpreted in the category: `x^-1` is rejected.
std::vector<Token> parse_category_tokens(const Diagram& d, const std::string& text,
                                         int& dom);

}  // namespace levikit
