#include "provlog/ignatiev.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "provlog/closure.hpp"

namespace provlog {

bool in_universe( const std::vector< Ordinal >& coords )
{
    for ( std::size_t i = 0; i + 1 < coords.size(); ++i )
        if ( coords[ i + 1 ] > end_exponent( coords[ i ] ) )
            return false;
    return true;
}

IgnatievPoint::IgnatievPoint( std::vector< Ordinal > coords ) : _coords{ std::move( coords ) }
{
    while ( !_coords.empty() && _coords.back().is_zero() )
        _coords.pop_back();
    if ( !in_universe( _coords ) )
        throw PreconditionError( "sequence violates a_{i+1} <= e(a_i)" );
}

Ordinal IgnatievPoint::at( std::size_t n ) const { return n < _coords.size() ? _coords[ n ] : Ordinal{}; }

bool rel_n( unsigned n, const IgnatievPoint& a, const IgnatievPoint& b )
{
    for ( unsigned m = 0; m < n; ++m )
        if ( a.at( m ) != b.at( m ) )
            return false;
    return a.at( n ) > b.at( n );
}

IgnatievPoint root_point( const Ordinal& a )
{
    std::vector< Ordinal > coords;
    for ( Ordinal x = a; !x.is_zero(); x = end_exponent( x ) )
        coords.push_back( x );
    return IgnatievPoint( std::move( coords ) );
}

RootOrder roots_trichotomy( const Ordinal& a, const Ordinal& b )
{
    auto ra = root_point( a );
    auto rb = root_point( b );
    const bool ab = rel_n( 0, ra, rb );
    const bool ba = rel_n( 0, rb, ra );
    const bool eq = ra == rb;
    if ( ab + ba + eq != 1 )
        throw std::logic_error( "root points " + print_point( ra ) + " and " + print_point( rb ) + " break trichotomy" );
    return ab ? RootOrder::R0_ab : ba ? RootOrder::R0_ba : RootOrder::Equal;
}

std::string print_point( const IgnatievPoint& p )
{
    if ( p.coords().empty() )
        return "(0)";
    std::string out = "(";
    for ( std::size_t i = 0; i < p.coords().size(); ++i )
        out += ( i ? "," : "" ) + print_ordinal( p.coords()[ i ] );
    return out + ")";
}

// ---------------------------------------------------------------------------

TruncatedUniverse::TruncatedUniverse( std::size_t bound, unsigned max_level ) : _bound{ bound }, _max_level{ max_level }
{
    const auto ords = ordinals_up_to_size( bound );
    std::vector< Ordinal > prefix;
    std::function< void() > extend = [ & ]() {
        _points.emplace_back( prefix );
        const Ordinal limit = end_exponent( prefix.back() );
        for ( const auto& x : ords ) {
            if ( x.is_zero() || x > limit )
                continue;
            prefix.push_back( x );
            extend();
            prefix.pop_back();
        }
    };
    _points.emplace_back();
    for ( const auto& x : ords ) {
        if ( x.is_zero() )
            continue;
        prefix = { x };
        extend();
    }
    std::sort( _points.begin(), _points.end() );

    _succ.assign( max_level + 1, std::vector< std::vector< std::size_t > >( _points.size() ) );
    for ( unsigned n = 0; n <= max_level; ++n )
        for ( std::size_t p = 0; p < _points.size(); ++p )
            for ( std::size_t q = 0; q < _points.size(); ++q )
                if ( rel_n( n, _points[ p ], _points[ q ] ) )
                    _succ[ n ][ p ].push_back( q );
}

std::optional< std::size_t > TruncatedUniverse::find( const IgnatievPoint& p ) const
{
    auto it = std::lower_bound( _points.begin(), _points.end(), p );
    if ( it == _points.end() || *it != p )
        return std::nullopt;
    return static_cast< std::size_t >( it - _points.begin() );
}

const std::vector< std::size_t >& TruncatedUniverse::successors( unsigned n, std::size_t p ) const
{
    if ( n > _max_level )
        throw PreconditionError( "level " + std::to_string( n ) + " exceeds the materialized levels" );
    return _succ[ n ][ p ];
}

std::vector< char > TruncatedUniverse::truth( const Formula& f ) const
{
    require_fragment( f, Language::closed_d() );
    if ( max_box_level( f ) > _max_level )
        throw PreconditionError( "formula uses [" + std::to_string( max_box_level( f ) ) + "], above the materialized level "
                                 + std::to_string( _max_level ) );
    Closure c( f );
    std::vector< std::vector< char > > val( c.size(), std::vector< char >( _points.size() ) );
    for ( std::size_t i = 0; i < c.size(); ++i ) {
        const auto& node = c.node( i );
        for ( std::size_t p = 0; p < _points.size(); ++p ) {
            switch ( node.kind ) {
            case Formula::Kind::Bot: val[ i ][ p ] = 0; break;
            case Formula::Kind::Implies: val[ i ][ p ] = !val[ node.lhs ][ p ] || val[ node.rhs ][ p ]; break;
            case Formula::Kind::Box: {
                bool all = true;
                for ( auto q : _succ[ node.level ][ p ] )
                    if ( !val[ node.lhs ][ q ] ) {
                        all = false;
                        break;
                    }
                val[ i ][ p ] = all;
                break;
            }
            default: throw PreconditionError( "only closed formulas are evaluated on the frame" );
            }
        }
    }
    return val[ c.root() ];
}

bool eval_D( const TruncatedUniverse& tu, const IgnatievPoint& p, const Formula& f )
{
    auto idx = tu.find( p );
    if ( !idx )
        throw PreconditionError( "point " + print_point( p ) + " lies outside the truncation" );
    return tu.truth( f )[ *idx ];
}

LinearityReport linearity_experiment( const TruncatedUniverse& tu, const Formula& a, const Formula& b )
{
    const auto left = Formula::conj( Formula::box( a ), Formula::neg( b ) );
    const auto right = Formula::conj( Formula::boxplus( b ), Formula::neg( a ) );
    LinearityReport report{
        Formula::disj( Formula::box( Formula::implies( Formula::box( a ), b ) ),
                       Formula::box( Formula::implies( Formula::boxplus( b ), a ) ) ),
        tu.points().size(),
        {} };
    const auto holds = tu.truth( report.instance );
    const auto l = tu.truth( left );
    const auto r = tu.truth( right );
    for ( std::size_t p = 0; p < tu.points().size(); ++p ) {
        if ( holds[ p ] )
            continue;
        const auto& succ = tu.successors( 0, p );
        auto lw = std::find_if( succ.begin(), succ.end(), [ & ]( std::size_t q ) { return l[ q ]; } );
        auto rw = std::find_if( succ.begin(), succ.end(), [ & ]( std::size_t q ) { return r[ q ]; } );
        if ( lw == succ.end() || rw == succ.end() )
            throw std::logic_error( "linearity fails without witnesses at " + print_point( tu.points()[ p ] ) );
        const auto& x = tu.points()[ *lw ];
        const auto& y = tu.points()[ *rw ];
        report.violations.push_back( { tu.points()[ p ], x, y, root_point( x.at( 0 ) ), root_point( y.at( 0 ) ),
                                       roots_trichotomy( x.at( 0 ), y.at( 0 ) ) } );
    }
    return report;
}

nlohmann::json truncation_to_json( const TruncatedUniverse& tu )
{
    nlohmann::json points = nlohmann::json::array();
    for ( const auto& p : tu.points() ) {
        nlohmann::json coords = nlohmann::json::array();
        for ( const auto& x : p.coords() )
            coords.push_back( print_ordinal( x ) );
        points.push_back( coords );
    }
    return { { "bound", tu.bound() }, { "levels", tu.max_level() }, { "approximate", true }, { "points", points } };
}

std::string truncation_to_dot( const TruncatedUniverse& tu )
{
    std::ostringstream out;
    out << "digraph ignatiev {\n  rankdir=BT;\n";
    for ( std::size_t p = 0; p < tu.points().size(); ++p )
        out << "  p" << p << " [label=\"" << print_point( tu.points()[ p ] ) << "\"];\n";
    for ( unsigned n = 0; n <= tu.max_level(); ++n )
        for ( std::size_t p = 0; p < tu.points().size(); ++p )
            for ( auto q : tu.successors( n, p ) )
                out << "  p" << p << " -> p" << q << " [label=\"R" << n << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace provlog
