#pragma once

#include <cstddef>
#include <regex>
#include <string>
#include <string_view>
#include <utility>

#include "maskstego/text.hpp"

namespace maskstego::testing {

// Cover sentence of the f=2 example and its two annotated stego versions.
inline constexpr std::string_view kF2Baseline =
    "Gerson and Walter contend there are multiple ways (2,1) to solving a particular (8,001) "
    "problem and students (4,10) should be encouraged to go (4,00) their own way by exploring "
    "(0,-) problems different (8,001) from the real one (4,10) .";
inline constexpr std::string_view kF2Proposed =
    "Gerson and Walter contend there are multiple approaches (3,1) to solving a given (7,001) "
    "problem and users (7,100) should be encouraged to find (4,000) their own way by solving "
    "(3,1) problems different (4,1) from the real one (5,000) .";
inline constexpr std::string_view kF4Baseline =
    "Accountability is a major key (4,01) to BILSTEIN’s success . We hold our team leaders (2,1) "
    ", line employees , frontline leaders , managers (4,00) and company leaders responsible for "
    "working (8,010) above the line in addressing both success and loss (4,01) , taking direct "
    "responsibility for situations (0,-) through personal steps to solve and address (4,10) "
    "issues and not becoming a victim for individual (2,0) or collective results .";
inline constexpr std::string_view kF4Proposed =
    "Accountability is a major key (5,011) to BILSTEIN’s success . We hold our team managers "
    "(3,00) , line employees , frontline leaders , executives (5,010) and company leaders "
    "responsible for staying (11,01) above the line in addressing both success and failure (6,1) "
    ", taking direct responsibility for moving (6,0010) through personal steps to solve and "
    "resolve (5,0) issues and not becoming a victim for mistakes (3,01) or collective results .";

// Strips "(a,b)" annotations and sums the lengths of the carried bit strings.
inline std::pair<TokenSequence, std::size_t> parse_annotated(std::string_view annotated) {
  const std::regex note(R"(\((\d+),([01]+|-)\))");
  std::string text(annotated);
  std::size_t bits = 0;
  for (std::sregex_iterator it(text.begin(), text.end(), note), end; it != end; ++it) {
    if ((*it)[2] != "-") bits += (*it)[2].length();
  }
  return {split_whitespace(std::regex_replace(text, note, "")), bits};
}

}  // namespace maskstego::testing
