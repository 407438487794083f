#pragma once

#include <string>

#include "borch/vvforms.hpp"

namespace borch {

/* Plain-text coefficient table:

       level 6
       sigma -1
       weight 1/2
       entry -1/24 1 7/3

   One entry line per stored coefficient in table order; n and c as
   reduced rationals, h as the normalized residue.  Serializing and
   parsing back reproduces the table and the bytes exactly. */
std::string coefftable_str(const VVCoeffs& f);

// Strict parser for the format above; malformed text is reported with
// its line number.
VVCoeffs parse_coefftable(const std::string& text);

}  // namespace borch
