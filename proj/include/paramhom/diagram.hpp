#ifndef PARAMHOM_DIAGRAM_HPP
#define PARAMHOM_DIAGRAM_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace paramhom
{

inline constexpr double infinity = std::numeric_limits<double>::infinity();

enum class Decoration { minus, plus };

/// How a feature perishes at its two ends. Naming follows the arrows of the
/// corresponding zigzag summand: "up" means killed, "down" means expired.
///   up_down   (p+, q-)  open interval      code "oo"
///   down_down (p-, q-)  closed-open        code "co"
///   up_up     (p+, q+)  open-closed        code "oc"
///   down_up   (p-, q+)  closed interval    code "cc"
enum class Behavior { up_down, down_down, up_up, down_up };

inline constexpr std::array<Behavior, 4> all_behaviors = {
    Behavior::up_down, Behavior::down_down, Behavior::up_up, Behavior::down_up};

std::pair<Decoration, Decoration> decorations_of(Behavior b);
std::string behavior_code(Behavior b);
/// Throws std::invalid_argument for an unknown code.
Behavior behavior_from_code(std::string const& code);
/// Human-readable arrow name, e.g. "up-down".
std::string behavior_name(Behavior b);

struct DecoratedPoint
{
    double p;
    Decoration pdec;
    double q;
    Decoration qdec;

    /// Validity: p < q, or p = q with (-, +); -inf only as p+, +inf only as q-.
    bool valid() const;
    /// Position offset of the tick: +1 / -1 per coordinate.
    std::pair<int, int> tick() const;

    auto operator<=>(DecoratedPoint const&) const = default;
};

/// Rectangle [a, b] x [c, d] in the extended plane.
struct Rectangle
{
    double a;
    double b;
    double c;
    double d;

    /// -inf <= a < b < c < d <= +inf.
    bool valid() const;
    /// Also admits b == c; used only to probe diagonal points.
    bool valid_allowing_diagonal() const;

    auto operator<=>(Rectangle const&) const = default;
};

Rectangle reverse_rectangle(Rectangle const& r);

/// Decorated point inside R with the tick pointing inward.
bool contains(Rectangle const& r, DecoratedPoint const& pt);

/// Multiset of decorated points of one behavior type in one degree.
class DecoratedDiagram
{
public:
    DecoratedDiagram(int dim, Behavior type)
        : dim_(dim), type_(type)
    {
    }

    int dim() const { return dim_; }
    Behavior type() const { return type_; }
    std::map<DecoratedPoint, std::size_t> const& points() const { return points_; }
    std::size_t total() const;
    bool empty() const { return points_.empty(); }

    /// Adds a point with the diagram's decorations. Throws ContractError for
    /// an invalid point or zero multiplicity.
    void add(double p, double q, std::size_t multiplicity = 1);
    /// Adds a decorated point; its decorations must match the type.
    void add(DecoratedPoint const& pt, std::size_t multiplicity = 1);

    std::size_t count_in(Rectangle const& r) const;

    bool operator==(DecoratedDiagram const&) const = default;

private:
    int dim_;
    Behavior type_;
    std::map<DecoratedPoint, std::size_t> points_;
};

/// The four diagrams of one homology degree, indexed like all_behaviors.
struct DiagramSet
{
    int dim = 0;
    std::array<DecoratedDiagram, 4> diagrams{
        DecoratedDiagram(0, Behavior::up_down), DecoratedDiagram(0, Behavior::down_down),
        DecoratedDiagram(0, Behavior::up_up), DecoratedDiagram(0, Behavior::down_up)};

    explicit DiagramSet(int d = 0);
    DecoratedDiagram& operator[](Behavior b);
    DecoratedDiagram const& operator[](Behavior b) const;

    bool operator==(DiagramSet const&) const = default;
};

std::size_t behavior_index(Behavior b);

/// Count of decorated points of D inside R.
std::size_t measure_via_diagram(DecoratedDiagram const& d, Rectangle const& r);

using MeasureOracle = std::function<std::size_t(Rectangle const&)>;

/// Recovers the diagram of an additive measure whose points lie on the grid
/// `values` x `values` (plus infinite ends). Each candidate's multiplicity is
/// the measure of a small rectangle around it of half-width `epsilon`
/// (default: half the minimal gap of `values`). Throws ContractError if a
/// probe rectangle fails a split check.
DecoratedDiagram extract_diagram(MeasureOracle const& mu, Behavior type, int dim,
                                 std::vector<double> const& values, double epsilon = 0);

/// Undecorated multiset of (birth, death) pairs with multiplicities.
using UndecoratedDiagram = std::map<std::pair<double, double>, std::size_t>;

UndecoratedDiagram undecorate(DecoratedDiagram const& d);

} // namespace paramhom

#endif
