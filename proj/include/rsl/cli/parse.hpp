#ifndef RSL_CLI_PARSE_HPP
#define RSL_CLI_PARSE_HPP

#include <string_view>
#include <variant>

#include "rsl/segments/cuspidal.hpp"
#include "rsl/segments/descriptor.hpp"
#include "rsl/segments/segment.hpp"

namespace rsl {

// Grammar (whitespace allowed between tokens):
//   input  := item ( 'x' item )*
//   item   := ('St' | 'Sp' | 'Sigma') '(' int ')' '@' datum
//           | '[' half ',' half ']' '@' datum
//   datum  := ident ['^'] [ '(' opt (',' opt)* ')' ]
//   opt    := 'r=' int | 'd=' int | 'twist=' half | 'dual'
//   half   := ['-'] int ['/' '2']
// r and d default to 1. A lone segment parses as a Segment; anything joined
// by 'x' is a product (St factors become their segment, Sigma factors are
// flattened, Sp factors are rejected).
//
// Throws ParseError (with position) on bad syntax and SemanticError on
// well-formed input that names no valid object, e.g. d not dividing r.
using ParsedDescriptor = std::variant<RepDescriptor, Segment>;
ParsedDescriptor parse_descriptor(std::string_view text);

// parse_descriptor, with a lone segment wrapped as a one-factor product.
RepDescriptor parse_representation(std::string_view text);

CuspidalDatum parse_cuspidal(std::string_view text);

}  // namespace rsl

#endif  // RSL_CLI_PARSE_HPP
