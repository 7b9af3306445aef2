#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "provlog/formula.hpp"
#include "provlog/ordinal.hpp"

namespace provlog {

/// A point (a_0, a_1, ...) of Ignatiev's frame: ordinals below epsilon_0
/// with a_{i+1} <= e(a_i), all but finitely many zero. Trailing zeros are
/// trimmed, so the all-zero point has no coordinates.
class IgnatievPoint
{
public:
    IgnatievPoint() = default;
    // Throws PreconditionError unless the sequence satisfies a_{i+1} <= e(a_i).
    explicit IgnatievPoint( std::vector< Ordinal > coords );

    [[nodiscard]] const std::vector< Ordinal >& coords() const { return _coords; }
    // Coordinate n, zero past the end.
    [[nodiscard]] Ordinal at( std::size_t n ) const;

    friend auto operator<=>( const IgnatievPoint&, const IgnatievPoint& ) = default;
    friend bool operator==( const IgnatievPoint&, const IgnatievPoint& ) = default;

private:
    std::vector< Ordinal > _coords;
};

[[nodiscard]] bool in_universe( const std::vector< Ordinal >& coords );

// a R_n b: a_m = b_m for every m < n, and a_n > b_n.
[[nodiscard]] bool rel_n( unsigned n, const IgnatievPoint& a, const IgnatievPoint& b );

// (a, e(a), e(e(a)), ...)
[[nodiscard]] IgnatievPoint root_point( const Ordinal& a );

enum class RootOrder { R0_ab, R0_ba, Equal };

// Which of root(a) R_0 root(b), root(b) R_0 root(a), root(a) = root(b) holds.
// Throws std::logic_error if not exactly one does.
[[nodiscard]] RootOrder roots_trichotomy( const Ordinal& a, const Ordinal& b );

// "(w,1)"; the all-zero point prints as "(0)".
[[nodiscard]] std::string print_point( const IgnatievPoint& p );

/// The points of Ignatiev's frame whose coordinates all have representation
/// size <= bound, with R_0..R_maxLevel materialized as successor lists.
/// Truth on it approximates truth on the full frame; nothing here decides
/// the closed fragment of GLP.
class TruncatedUniverse
{
public:
    explicit TruncatedUniverse( std::size_t bound = 3, unsigned max_level = 2 );

    [[nodiscard]] std::size_t bound() const { return _bound; }
    [[nodiscard]] unsigned max_level() const { return _max_level; }
    [[nodiscard]] const std::vector< IgnatievPoint >& points() const { return _points; }
    [[nodiscard]] std::optional< std::size_t > find( const IgnatievPoint& p ) const;
    [[nodiscard]] const std::vector< std::size_t >& successors( unsigned n, std::size_t p ) const;

    // Truth of a closed formula at every point; PreconditionError for a box
    // level above max_level or a formula with atoms or |>.
    [[nodiscard]] std::vector< char > truth( const Formula& f ) const;

private:
    std::size_t _bound;
    unsigned _max_level;
    std::vector< IgnatievPoint > _points;
    std::vector< std::vector< std::vector< std::size_t > > > _succ;  // [level][point]
};

// PreconditionError when p lies outside the truncation.
[[nodiscard]] bool eval_D( const TruncatedUniverse& tu, const IgnatievPoint& p, const Formula& f );

struct LinearityViolation
{
    IgnatievPoint point;
    IgnatievPoint left_witness;   // R_0-successor with []a & ~b
    IgnatievPoint right_witness;  // R_0-successor with boxplus b & ~a
    IgnatievPoint left_root;      // root points of the witnesses' first coordinates
    IgnatievPoint right_root;
    RootOrder order;
};

struct LinearityReport
{
    Formula instance;  // [](([]a) -> b) | []((boxplus b) -> a)
    std::size_t points_checked = 0;
    std::vector< LinearityViolation > violations;
};

[[nodiscard]] LinearityReport linearity_experiment( const TruncatedUniverse& tu, const Formula& a, const Formula& b );

// {"bound", "levels", "approximate": true, "points": [[coord, ...], ...]} with coordinates in ordinal text.
[[nodiscard]] nlohmann::json truncation_to_json( const TruncatedUniverse& tu );
// Edges labelled R0, R1, ...
[[nodiscard]] std::string truncation_to_dot( const TruncatedUniverse& tu );

} // namespace provlog
