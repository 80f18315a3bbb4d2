#pragma once

// Text and JSON formats for ideals, Betti tables and differentials.
//
// Ideal text:  n=6; gens=[1,3],[1,4],[2,4,6]
// Ideal JSON:  {"n":6,"gens":[[1,3],[1,4],[2,4,6]]}
// A generator may also be written e1*e3 (or 1 for the unit monomial).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "extres/betti.hpp"
#include "extres/ideal.hpp"
#include "extres/resolution.hpp"

namespace extres {

// Either format, chosen by the first non-blank character. Throws ParseError.
MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal parse_ideal_text(std::string_view text);
MonomialIdeal parse_ideal_json(std::string_view text);

// "[1,3]", "e1*e3" or "1".
Monomial parse_monomial(Ambient ambient, std::string_view text);
// "[1,3],[1,4]" or "e1*e3, e1*e4". Order and repetitions are kept.
std::vector<Monomial> parse_generators(Ambient ambient, std::string_view text);

// "2,0,1" -> {2,0,1}. Throws ParseError.
std::vector<int> parse_int_list(std::string_view text);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
std::string ideal_to_text(const MonomialIdeal& ideal);

// Macaulay2 layout: header of homological degrees, "total:" row, then one
// row per j - i with "." for zeros.
std::string betti_to_text(const BettiTable& table);
// {"schema":1,"i_max":..,"entries":[{"i":..,"j":..,"beta":..}, ...],"totals":[..]}.
// beta is an integer when it fits a long, otherwise a decimal string.
nlohmann::json betti_to_json(const BettiTable& table);

nlohmann::json complex_to_json(const FreeComplex& complex);
std::string complex_to_text(const FreeComplex& complex);

nlohmann::json verify_report_to_json(const VerifyReport& report);

}  // namespace extres
