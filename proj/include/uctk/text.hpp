#pragma once

#include <string>
#include <vector>

#include "uctk/level1.hpp"
#include "uctk/level2.hpp"
#include "uctk/level3.hpp"
#include "uctk/uord.hpp"

// Textual grammar shared by the CLI and the tests. Every parser consumes the
// whole string and throws Error("SyntaxError", "col N: ...") otherwise.
// The empty node and the empty sequence may be written () or as the empty
// set sign.
namespace uctk::text {

Node parse_node(const std::string& s);
ExtNode parse_ext_node(const std::string& s);
Level1Tree parse_level1(const std::string& s);
std::vector<Level1Tree> parse_tower1(const std::string& s);
NodeSeq parse_seq(const std::string& s);
DomStar parse_dom_star(const std::string& s);
PartialLevel1Tree parse_partial_le1(const std::string& s);
Level2Tree parse_level2(const std::string& s);
std::vector<Level2Tree> parse_tower2(const std::string& s);
LevelLe2Tree parse_le2(const std::string& s);
DomainShape parse_shape(const std::string& s);
Rep1Element parse_rep1(const std::string& s);
Rep2Element parse_rep2(const std::string& s);
Le2Description parse_description(const std::string& s);
DomKey parse_dom_key(const std::string& s);
OrdTuple2 parse_tuple2(const std::string& s);
Assignment1 parse_assignment1(const std::string& s);
// (d, q, P) over the given base.
PartialLevelLe2Tree parse_partial_le2(const LevelLe2Tree& base, const std::string& s);
Level3Tree parse_level3(const std::string& s);
std::vector<Level3Tree> parse_tower3(const std::string& s);
Rep3Element parse_rep3(const std::string& s);
std::vector<CtblOrd> parse_ctbl_list(const std::string& s);
std::vector<UOrd> parse_uord_list(const std::string& s);

std::string tuple2_str(const OrdTuple2& t);
std::string assignment1_str(const Assignment1& a);
std::string tower1_str(const std::vector<Level1Tree>& t);

// Splits a command line into arguments: whitespace separates tokens unless
// inside (), {}, [], <> or double quotes; "->" does not open a bracket.
std::vector<std::string> tokenize(const std::string& line);

}  // namespace uctk::text
