#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "provlog/formula.hpp"

namespace provlog {

using WorldSet = boost::dynamic_bitset<>;

/// A finite frame: named worlds and an accessibility relation. Worlds are
/// addressed by index internally; names are the opaque ids of the JSON format.
class Frame
{
public:
    using Edge = std::pair< std::string, std::string >;

    Frame() = default;
    Frame( std::vector< std::string > worlds, const std::vector< Edge >& rel );

    // Worlds named "0".."n-1" unless `names` is given.
    static Frame from_edges( std::size_t n, const std::vector< std::pair< std::size_t, std::size_t > >& edges,
                             std::vector< std::string > names = {} );

    [[nodiscard]] std::size_t size() const { return _names.size(); }
    [[nodiscard]] const std::string& name( std::size_t w ) const { return _names[ w ]; }
    [[nodiscard]] const std::vector< std::string >& names() const { return _names; }
    [[nodiscard]] std::optional< std::size_t > find( const std::string& name ) const;
    // Throws PreconditionError for an unknown world.
    [[nodiscard]] std::size_t index( const std::string& name ) const;

    [[nodiscard]] bool related( std::size_t a, std::size_t b ) const { return _succ[ a ].test( b ); }
    [[nodiscard]] const WorldSet& successors( std::size_t w ) const { return _succ[ w ]; }
    [[nodiscard]] std::vector< std::pair< std::size_t, std::size_t > > edges() const;

    [[nodiscard]] WorldSet empty_set() const { return WorldSet( size() ); }

    friend bool operator==( const Frame& a, const Frame& b )
    {
        return a._names == b._names && a._succ == b._succ;
    }

private:
    std::vector< std::string > _names;
    std::vector< WorldSet > _succ;
};

/// A frame with a valuation. Atoms missing from the valuation are false
/// everywhere.
class Model
{
public:
    Model() = default;
    explicit Model( Frame frame, std::map< std::string, WorldSet > valuation = {} );

    [[nodiscard]] const Frame& frame() const { return _frame; }
    [[nodiscard]] const std::map< std::string, WorldSet >& valuation() const { return _valuation; }
    [[nodiscard]] WorldSet atom_set( const std::string& atom ) const;
    void set_atom( const std::string& atom, WorldSet worlds );

private:
    Frame _frame;
    std::map< std::string, WorldSet > _valuation;
};

struct PointedModel
{
    Model model;
    std::size_t world = 0;
};

/// Kripke truth. Only level-0 boxes are interpreted; formulas with [n], n > 0,
/// or with |> are rejected with PreconditionError.
[[nodiscard]] WorldSet truth_set( const Model& m, const Formula& f );
[[nodiscard]] bool check( const Model& m, std::size_t world, const Formula& f );
[[nodiscard]] bool check( const Model& m, const std::string& world, const Formula& f );

struct FrameReport
{
    bool irreflexive = false;
    bool transitive = false;
    bool c2 = false;      // non-triple branching
    bool c3 = false;      // strongly confluent
    bool linear = false;  // strict total order

    [[nodiscard]] bool gl_frame() const { return irreflexive && transitive; }
    [[nodiscard]] bool in_class_c() const { return gl_frame() && c2 && c3; }
};

// Each flag is the literal quantifier condition evaluated over the worlds.
[[nodiscard]] FrameReport frame_class( const Frame& fr );

[[nodiscard]] Frame transitive_closure( const Frame& fr );

// {x} together with every world reachable from x; names and order preserved.
[[nodiscard]] Frame generated_subframe( const Frame& fr, std::size_t x );

// Worlds "0".."n-1" with i R j iff i > j, so world k has rank k.
[[nodiscard]] Frame linear_frame( std::size_t n );

// Defines rank n on linear frames: <>^n top & []^(n+1) bot.
[[nodiscard]] Formula rank_formula( unsigned n );

/// p* := the disjunction of defining[x] over x in V(p) and in {i} together
/// with the successors of i, in world order; bot when empty. Every defining
/// formula must hold at its own world and nowhere else (PreconditionError).
[[nodiscard]] std::map< std::string, Formula > restricted_substitution( const Model& m, std::size_t i,
                                                                        const std::map< std::string, WorldSet >& v,
                                                                        const std::vector< Formula >& defining );

} // namespace provlog
