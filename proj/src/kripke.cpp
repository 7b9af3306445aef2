#include "provlog/kripke.hpp"

#include <deque>
#include <unordered_map>

#include "provlog/closure.hpp"

namespace provlog {

Frame::Frame( std::vector< std::string > worlds, const std::vector< Edge >& rel ) : _names{ std::move( worlds ) }
{
    if ( _names.empty() )
        throw PreconditionError( "a frame needs at least one world" );
    std::unordered_map< std::string, std::size_t > idx;
    for ( std::size_t i = 0; i < _names.size(); ++i )
        if ( !idx.emplace( _names[ i ], i ).second )
            throw PreconditionError( "duplicate world id '" + _names[ i ] + "'" );
    _succ.assign( _names.size(), WorldSet( _names.size() ) );
    for ( const auto& [ a, b ] : rel ) {
        auto ia = idx.find( a );
        auto ib = idx.find( b );
        if ( ia == idx.end() || ib == idx.end() )
            throw PreconditionError( "relation mentions unknown world in (" + a + ", " + b + ")" );
        _succ[ ia->second ].set( ib->second );
    }
}

Frame Frame::from_edges( std::size_t n, const std::vector< std::pair< std::size_t, std::size_t > >& edges,
                         std::vector< std::string > names )
{
    if ( names.empty() )
        for ( std::size_t i = 0; i < n; ++i )
            names.push_back( std::to_string( i ) );
    if ( names.size() != n )
        throw PreconditionError( "world name count does not match frame size" );
    std::vector< Edge > rel;
    rel.reserve( edges.size() );
    for ( auto [ a, b ] : edges ) {
        if ( a >= n || b >= n )
            throw PreconditionError( "edge endpoint out of range" );
        rel.emplace_back( names[ a ], names[ b ] );
    }
    return Frame( std::move( names ), rel );
}

std::optional< std::size_t > Frame::find( const std::string& name ) const
{
    for ( std::size_t i = 0; i < _names.size(); ++i )
        if ( _names[ i ] == name )
            return i;
    return std::nullopt;
}

std::size_t Frame::index( const std::string& name ) const
{
    if ( auto i = find( name ) )
        return *i;
    throw PreconditionError( "unknown world '" + name + "'" );
}

std::vector< std::pair< std::size_t, std::size_t > > Frame::edges() const
{
    std::vector< std::pair< std::size_t, std::size_t > > out;
    for ( std::size_t a = 0; a < size(); ++a )
        for ( auto b = _succ[ a ].find_first(); b != WorldSet::npos; b = _succ[ a ].find_next( b ) )
            out.emplace_back( a, b );
    return out;
}

// ---------------------------------------------------------------------------

Model::Model( Frame frame, std::map< std::string, WorldSet > valuation )
    : _frame{ std::move( frame ) }, _valuation{ std::move( valuation ) }
{
    for ( const auto& [ atom, set ] : _valuation )
        if ( set.size() != _frame.size() )
            throw PreconditionError( "valuation of '" + atom + "' does not match the frame size" );
}

WorldSet Model::atom_set( const std::string& atom ) const
{
    auto it = _valuation.find( atom );
    return it == _valuation.end() ? _frame.empty_set() : it->second;
}

void Model::set_atom( const std::string& atom, WorldSet worlds )
{
    if ( worlds.size() != _frame.size() )
        throw PreconditionError( "valuation of '" + atom + "' does not match the frame size" );
    _valuation[ atom ] = std::move( worlds );
}

// ---------------------------------------------------------------------------

WorldSet truth_set( const Model& m, const Formula& f )
{
    Closure c( f );
    const auto& fr = m.frame();
    std::vector< WorldSet > val( c.size() );
    for ( std::size_t i = 0; i < c.size(); ++i ) {
        const auto& n = c.node( i );
        switch ( n.kind ) {
        case Formula::Kind::Bot: val[ i ] = fr.empty_set(); break;
        case Formula::Kind::Var:
        case Formula::Kind::Const: val[ i ] = m.atom_set( c.formula( i ).atom_name() ); break;
        case Formula::Kind::Implies: val[ i ] = ~val[ n.lhs ] | val[ n.rhs ]; break;
        case Formula::Kind::Box: {
            if ( n.level != 0 )
                throw PreconditionError( "Kripke models interpret only level-0 boxes; found " + print( c.formula( i ) ) );
            WorldSet s = fr.empty_set();
            for ( std::size_t w = 0; w < fr.size(); ++w )
                if ( fr.successors( w ).is_subset_of( val[ n.lhs ] ) )
                    s.set( w );
            val[ i ] = std::move( s );
            break;
        }
        case Formula::Kind::Rhd: throw PreconditionError( "Kripke models do not interpret |>; translate first" );
        }
    }
    return val[ c.root() ];
}

bool check( const Model& m, std::size_t world, const Formula& f )
{
    if ( world >= m.frame().size() )
        throw PreconditionError( "unknown world index " + std::to_string( world ) );
    return truth_set( m, f ).test( world );
}

bool check( const Model& m, const std::string& world, const Formula& f )
{
    return check( m, m.frame().index( world ), f );
}

// ---------------------------------------------------------------------------

FrameReport frame_class( const Frame& fr )
{
    const auto n = fr.size();
    auto R = [ & ]( std::size_t a, std::size_t b ) { return fr.related( a, b ); };
    FrameReport r;

    r.irreflexive = true;
    for ( std::size_t x = 0; x < n; ++x )
        if ( R( x, x ) )
            r.irreflexive = false;

    r.transitive = true;
    for ( std::size_t x = 0; x < n && r.transitive; ++x )
        for ( std::size_t y = 0; y < n && r.transitive; ++y )
            if ( R( x, y ) )
                for ( std::size_t z = 0; z < n; ++z )
                    if ( R( y, z ) && !R( x, z ) ) {
                        r.transitive = false;
                        break;
                    }

    r.c2 = true;
    for ( std::size_t x = 0; x < n && r.c2; ++x )
        for ( std::size_t y = 0; y < n && r.c2; ++y ) {
            if ( !R( x, y ) )
                continue;
            for ( std::size_t z = 0; z < n && r.c2; ++z ) {
                if ( !R( x, z ) )
                    continue;
                for ( std::size_t w = 0; w < n; ++w ) {
                    if ( !R( x, w ) )
                        continue;
                    bool ok = R( w, y ) || R( y, w ) || R( z, w ) || R( w, z ) || R( y, z ) || R( z, y ) || w == y
                              || z == y || w == z;
                    if ( !ok ) {
                        r.c2 = false;
                        break;
                    }
                }
            }
        }

    r.c3 = true;
    for ( std::size_t x = 0; x < n && r.c3; ++x )
        for ( std::size_t y = 0; y < n && r.c3; ++y ) {
            if ( !R( x, y ) )
                continue;
            for ( std::size_t z = 0; z < n && r.c3; ++z ) {
                if ( !R( x, z ) )
                    continue;
                for ( std::size_t w = 0; w < n; ++w ) {
                    if ( R( y, w ) && !( R( z, w ) || R( w, z ) || R( y, z ) ) ) {
                        r.c3 = false;
                        break;
                    }
                }
            }
        }

    r.linear = r.irreflexive && r.transitive;
    for ( std::size_t x = 0; x < n && r.linear; ++x )
        for ( std::size_t y = x + 1; y < n; ++y )
            if ( !R( x, y ) && !R( y, x ) ) {
                r.linear = false;
                break;
            }
    return r;
}

Frame transitive_closure( const Frame& fr )
{
    const auto n = fr.size();
    std::vector< WorldSet > reach;
    for ( std::size_t w = 0; w < n; ++w )
        reach.push_back( fr.successors( w ) );
    for ( std::size_t k = 0; k < n; ++k )
        for ( std::size_t i = 0; i < n; ++i )
            if ( reach[ i ].test( k ) )
                reach[ i ] |= reach[ k ];
    std::vector< std::pair< std::size_t, std::size_t > > edges;
    for ( std::size_t a = 0; a < n; ++a )
        for ( auto b = reach[ a ].find_first(); b != WorldSet::npos; b = reach[ a ].find_next( b ) )
            edges.emplace_back( a, b );
    return Frame::from_edges( n, edges, fr.names() );
}

Frame generated_subframe( const Frame& fr, std::size_t x )
{
    if ( x >= fr.size() )
        throw PreconditionError( "unknown world index " + std::to_string( x ) );
    WorldSet keep = fr.empty_set();
    keep.set( x );
    std::deque< std::size_t > todo{ x };
    while ( !todo.empty() ) {
        auto w = todo.front();
        todo.pop_front();
        const auto& s = fr.successors( w );
        for ( auto v = s.find_first(); v != WorldSet::npos; v = s.find_next( v ) )
            if ( !keep.test( v ) ) {
                keep.set( v );
                todo.push_back( v );
            }
    }
    std::vector< std::string > names;
    std::vector< Frame::Edge > rel;
    for ( std::size_t a = 0; a < fr.size(); ++a ) {
        if ( !keep.test( a ) )
            continue;
        names.push_back( fr.name( a ) );
        const auto& s = fr.successors( a );
        for ( auto b = s.find_first(); b != WorldSet::npos; b = s.find_next( b ) )
            rel.emplace_back( fr.name( a ), fr.name( b ) );
    }
    return Frame( std::move( names ), rel );
}

Frame linear_frame( std::size_t n )
{
    std::vector< std::pair< std::size_t, std::size_t > > edges;
    for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t b = 0; b < a; ++b )
            edges.emplace_back( a, b );
    return Frame::from_edges( n, edges );
}

Formula rank_formula( unsigned n )
{
    return Formula::conj( Formula::diamond_power( n, Formula::top() ), Formula::box_power( n + 1, Formula::bot() ) );
}

std::map< std::string, Formula > restricted_substitution( const Model& m, std::size_t i,
                                                          const std::map< std::string, WorldSet >& v,
                                                          const std::vector< Formula >& defining )
{
    const auto& fr = m.frame();
    if ( i >= fr.size() )
        throw PreconditionError( "unknown world index " + std::to_string( i ) );
    if ( defining.size() != fr.size() )
        throw PreconditionError( "need one defining formula per world" );
    for ( std::size_t x = 0; x < fr.size(); ++x ) {
        auto truth = truth_set( m, defining[ x ] );
        if ( truth.count() != 1 || !truth.test( x ) )
            throw PreconditionError( "formula " + print( defining[ x ] ) + " does not uniquely define world "
                                     + fr.name( x ) );
    }
    WorldSet up = fr.successors( i );
    up.set( i );
    std::map< std::string, Formula > out;
    for ( const auto& [ var, worlds ] : v ) {
        if ( worlds.size() != fr.size() )
            throw PreconditionError( "valuation of '" + var + "' does not match the frame size" );
        std::optional< Formula > acc;
        for ( std::size_t x = 0; x < fr.size(); ++x ) {
            if ( !worlds.test( x ) || !up.test( x ) )
                continue;
            acc = acc ? Formula::disj( *acc, defining[ x ] ) : defining[ x ];
        }
        out.emplace( var, acc.value_or( Formula::bot() ) );
    }
    return out;
}

} // namespace provlog
