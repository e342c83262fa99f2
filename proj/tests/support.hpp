#ifndef WALKS_TESTS_SUPPORT_HPP
#define WALKS_TESTS_SUPPORT_HPP

#include "walks/words.hpp"

#include <string_view>

namespace walks::testing {

inline Word luk(int p, std::string_view s) { return parse_word(s, AlphabetSpec::lukasiewicz(p)); }
inline Word tan(int p, std::string_view s) { return parse_word(s, AlphabetSpec::tandem(p)); }
inline Word bic(std::string_view s) { return parse_word(s, AlphabetSpec::bicol()); }
inline Word sym(std::string_view s) { return parse_word(s, AlphabetSpec::sym()); }
inline Word yam(std::string_view s) { return parse_word(s, AlphabetSpec::yamanouchi()); }

inline constexpr std::string_view fig12_w = "5 D D D 2 D D 1 D D 0 D 4 D D D 3 D D D D";
inline constexpr std::string_view fig12_wbar = "5 D D D D D 3 D D 3 D 4 5 D D D D 4 D D D";
inline constexpr std::string_view fig4_motzkin = "U D U U D D L L U U L U L D L D L U D D L U D L L";
inline constexpr std::string_view fig4_yamanouchi = "1 2 1 1 2 2 1 1 1 1 2 1 2 3 2 3 1 1 3 2 1 1 2 1 1";
inline constexpr std::string_view fig4_tags =
    "U1 D2 U1 U1 D2 D2 L1 L1 U1 U1 L2 U1 L2 D3 L2 D3 L1 U1 D3 D2 L1 U1 D2 L1 L1";
inline constexpr std::string_view eu_input = "N N SE N N SE W W SE";

}  // namespace walks::testing

#endif
