#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "provlog/formula.hpp"

namespace provlog {

/// The subformula DAG of a formula, flattened so that children precede
/// parents. Engines evaluate over node indices instead of walking the AST.
class Closure
{
public:
    struct Node
    {
        Formula::Kind kind;
        int lhs = -1;  // Implies/Rhd lhs, Box body
        int rhs = -1;
        unsigned level = 0;
    };

    explicit Closure( const Formula& root );

    [[nodiscard]] std::size_t size() const { return _nodes.size(); }
    [[nodiscard]] const Node& node( std::size_t i ) const { return _nodes[ i ]; }
    [[nodiscard]] const Formula& formula( std::size_t i ) const { return _formulas[ i ]; }
    [[nodiscard]] int root() const { return static_cast< int >( _nodes.size() ) - 1; }
    [[nodiscard]] int index_of( const Formula& f ) const;

    // Node indices of atoms and boxes, in order of first appearance.
    [[nodiscard]] const std::vector< int >& atoms() const { return _atoms; }
    [[nodiscard]] const std::vector< int >& boxes() const { return _boxes; }

    // Position of a node within atoms()/boxes(), or -1.
    [[nodiscard]] int atom_slot( int node ) const { return _slot[ node ]; }
    [[nodiscard]] int box_slot( int node ) const { return _slot[ node ]; }

    /// Truth of every node at a single point whose atom values are `atom_bits`
    /// (bit k for atoms()[k]) and whose box values are `box_bits` (bit k for
    /// boxes()[k]). Requires at most 64 atoms and 64 boxes.
    void evaluate_point( std::uint64_t atom_bits, std::uint64_t box_bits, std::vector< char >& out ) const;

    // Bit k set when the body of boxes()[k] is true in `values`.
    [[nodiscard]] std::uint64_t true_bodies( const std::vector< char >& values ) const;

private:
    int add( const Formula& f );

    std::vector< Node > _nodes;
    std::vector< Formula > _formulas;
    std::vector< int > _atoms;
    std::vector< int > _boxes;
    std::vector< int > _slot;
    std::unordered_map< Formula, int, FormulaHash > _index;
};

} // namespace provlog
