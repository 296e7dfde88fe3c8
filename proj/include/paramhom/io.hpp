#ifndef PARAMHOM_IO_HPP
#define PARAMHOM_IO_HPP

#include "paramhom/diagram.hpp"
#include "paramhom/rspace.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace paramhom
{

/// Malformed input text (as opposed to a well-formed but invalid space).
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A space together with the run parameters stored next to it.
struct InputDocument
{
    std::uint32_t characteristic = 2;
    int max_dim = 0;
    ConstructibleRSpace space;
};

/// Reads the JSON input format:
///   {"characteristic": 2, "max_dim": 1, "critical_values": [0, 1],
///    "vertex_complexes": [[[0]], [[0]]], "edge_complexes": [[[0], [1]]],
///    "left_maps": [[[0, 0], [1, 0]]], "right_maps": [[[0, 0], [1, 0]]]}
/// Complexes list simplices (their faces are added); maps list vertex pairs.
/// "characteristic" defaults to 2 and "max_dim" to the largest piece
/// dimension. Throws ParseError for malformed JSON or shapes, and
/// ContractError (listing every violation) for an invalid space.
InputDocument parse_input(std::string const& text);
std::string write_input(InputDocument const& doc);

/// "%.12g" with "inf" / "-inf".
std::string format_value(double v);
/// Accepts decimals and inf, +inf, -inf. Throws ParseError otherwise.
double parse_value(std::string const& s);

struct DiagramEntry
{
    int dim;
    Behavior type;
    double birth;
    double death;
    std::size_t multiplicity;

    auto operator<=>(DiagramEntry const&) const = default;
};

/// Entries sorted by (dim, type, birth, death) with duplicates merged.
struct DiagramDocument
{
    std::vector<DiagramEntry> entries;

    bool operator==(DiagramDocument const&) const = default;
};

DiagramDocument make_document(std::vector<DiagramSet> const& diagrams);
/// Decorated diagram of one (dim, type); empty when absent.
DecoratedDiagram select(DiagramDocument const& doc, int dim, Behavior type);

/// Line format "dim type birth death multiplicity"; '#' starts a comment.
std::string serialize(DiagramDocument const& doc);
DiagramDocument parse_diagram_document(std::string const& text);

/// Deterministic SVG of the points above the diagonal, ticks per decoration,
/// infinite coordinates on gutters, one color per dimension.
std::string render_svg(DiagramDocument const& doc);

/// Whole file as a string; throws std::runtime_error when unreadable.
std::string read_file(std::string const& path);
void write_file(std::string const& path, std::string const& contents);

} // namespace paramhom

#endif
