#include "provlog/closure.hpp"

namespace provlog {

Closure::Closure( const Formula& root ) { add( root ); }

int Closure::add( const Formula& f )
{
    if ( auto it = _index.find( f ); it != _index.end() )
        return it->second;
    Node n{ f.kind() };
    switch ( f.kind() ) {
    case Formula::Kind::Implies:
    case Formula::Kind::Rhd:
        n.lhs = add( f.lhs() );
        n.rhs = add( f.rhs() );
        break;
    case Formula::Kind::Box:
        n.lhs = add( f.body() );
        n.level = f.level();
        break;
    default: break;
    }
    int id = static_cast< int >( _nodes.size() );
    _nodes.push_back( n );
    _formulas.push_back( f );
    _slot.push_back( -1 );
    if ( f.is_atom() ) {
        _slot[ id ] = static_cast< int >( _atoms.size() );
        _atoms.push_back( id );
    } else if ( f.is( Formula::Kind::Box ) ) {
        _slot[ id ] = static_cast< int >( _boxes.size() );
        _boxes.push_back( id );
    }
    _index.emplace( f, id );
    return id;
}

int Closure::index_of( const Formula& f ) const
{
    auto it = _index.find( f );
    return it == _index.end() ? -1 : it->second;
}

void Closure::evaluate_point( std::uint64_t atom_bits, std::uint64_t box_bits, std::vector< char >& out ) const
{
    out.resize( _nodes.size() );
    for ( std::size_t i = 0; i < _nodes.size(); ++i ) {
        const auto& n = _nodes[ i ];
        switch ( n.kind ) {
        case Formula::Kind::Bot: out[ i ] = 0; break;
        case Formula::Kind::Var:
        case Formula::Kind::Const: out[ i ] = static_cast< char >( ( atom_bits >> _slot[ i ] ) & 1u ); break;
        case Formula::Kind::Box: out[ i ] = static_cast< char >( ( box_bits >> _slot[ i ] ) & 1u ); break;
        case Formula::Kind::Implies: out[ i ] = static_cast< char >( !out[ n.lhs ] || out[ n.rhs ] ); break;
        case Formula::Kind::Rhd: throw PreconditionError( "point evaluation does not interpret |>" );
        }
    }
}

std::uint64_t Closure::true_bodies( const std::vector< char >& values ) const
{
    std::uint64_t bits = 0;
    for ( std::size_t k = 0; k < _boxes.size(); ++k )
        if ( values[ _nodes[ _boxes[ k ] ].lhs ] )
            bits |= std::uint64_t{ 1 } << k;
    return bits;
}

} // namespace provlog
