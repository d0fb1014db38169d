#pragma once

// Rendering of implication tables as the 8x8 grid of 4x4 color-coded
// subtables, and couple superposition: join and meet of invariant sets,
// realised on tables as cellwise minimum and maximum.

#include <string>

#include "sppkit/miner.hpp"

namespace sppkit {

enum class DiagramFormat : std::uint8_t { Ansi, Html, Svg, Json };

// Palette: 0 black, 1 red, 2 orange, 3 yellow; larger counts show their
// numeral uncolored. Output bytes are deterministic for fixed input.
std::string render(const ImplicationTable& t, DiagramFormat format);

DiagramFormat diagram_format_from_name(std::string_view name); // throws ParseError

// Inverse of render(t, Json).
ImplicationTable table_from_json(std::string_view text);

// Set union / intersection of invariant sets.
InvariantSet join_invariants(const InvariantSet& a, const InvariantSet& b);
InvariantSet meet_invariants(const InvariantSet& a, const InvariantSet& b);

enum class SuperposeOp : std::uint8_t { Join, Meet };

// Cellwise minimum (join) or maximum (meet); the zero cells of the result
// coincide with join_invariants / meet_invariants of the operands' zero sets.
ImplicationTable superpose(const ImplicationTable& t1, const ImplicationTable& t2,
                           SuperposeOp op);

} // namespace sppkit
