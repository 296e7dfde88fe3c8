#ifndef PARAMHOM_PROPERTIES_HPP
#define PARAMHOM_PROPERTIES_HPP

#include "paramhom/diagram.hpp"
#include "paramhom/measures.hpp"
#include "paramhom/rspace.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace paramhom
{

using Rng = std::mt19937_64;

/// Sample values for rectangle corners: points strictly inside every gap,
/// points below a_1 and above a_n, and the critical values themselves when
/// `with_critical` is set. Sorted, without infinities.
std::vector<double> corner_pool(ConstructibleRSpace const& x, bool with_critical);

/// Random valid rectangle over the pool; a may be -inf and d may be +inf.
Rectangle random_rectangle(ConstructibleRSpace const& x, Rng& rng, bool with_critical = false);

/// A rectangle and a split of it into two valid rectangles.
struct RectangleSplit
{
    Rectangle whole;
    Rectangle first;
    Rectangle second;
    bool horizontal;
};

RectangleSplit random_split(ConstructibleRSpace const& x, Rng& rng, bool with_critical = true);

struct PropertyResult
{
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    /// First counterexample when failed.
    std::string detail;
};

struct ValidateOptions
{
    std::size_t rectangles = 40;
    std::uint64_t seed = 1;
    /// Evaluate measures with a deliberately broken arrow (negative control).
    bool inject_fault = false;
};

PropertyResult check_additivity(MeasureEngine& engine, int max_dim, Rng& rng, std::size_t count);
/// measure_direct against point counts of the levelset diagrams on regular
/// rectangles, plus diagram extraction from the measures.
PropertyResult check_equivalence(MeasureEngine& engine, std::vector<DiagramSet> const& diagrams,
                                 Rng& rng, std::size_t count);
/// Coarsening identity on the extended sequences of random rectangles.
PropertyResult check_restriction(ConstructibleRSpace const& x, int max_dim, PrimeField field,
                                 Rng& rng, std::size_t count);
PropertyResult check_duality(ConstructibleRSpace const& x, std::vector<DiagramSet> const& diagrams,
                             PrimeField field);
PropertyResult check_bound(MeasureEngine& engine, int max_dim, Rng& rng, std::size_t count);
/// The four extended/parametrized equalities with their degree shifts.
PropertyResult check_correspondence(MeasureEngine& engine, int max_dim, Rng& rng,
                                    std::size_t count);
PropertyResult check_reversal(MeasureEngine& engine, int max_dim, Rng& rng, std::size_t count);
/// Decorations match the type and endpoints lie on critical values or +-inf.
PropertyResult check_typing(ConstructibleRSpace const& x, std::vector<DiagramSet> const& diagrams);

/// Runs every suite above.
std::vector<PropertyResult> validate_properties(ConstructibleRSpace const& x, int max_dim,
                                                PrimeField field, ValidateOptions const& options);

std::string describe_rectangle(Rectangle const& r);

} // namespace paramhom

#endif
