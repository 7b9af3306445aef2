#include "provlog/pmorphism.hpp"

#include <map>
#include <stdexcept>

namespace provlog {

PMorphismCheck verify_pmorphism( const PMorphism& pm )
{
    const auto& src = pm.source;
    const auto& tgt = pm.target;
    if ( pm.map.size() != src.size() )
        return { false, std::nullopt, "map is not total on the source" };
    for ( std::size_t x = 0; x < src.size(); ++x )
        if ( pm.map[ x ] >= tgt.size() )
            return { false, std::pair{ x, pm.map[ x ] }, "image outside the target" };

    for ( auto [ x, y ] : src.edges() )
        if ( !tgt.related( pm.map[ x ], pm.map[ y ] ) )
            return { false, std::pair{ x, y },
                     "forth fails: " + src.name( x ) + " R " + src.name( y ) + " but " + tgt.name( pm.map[ x ] )
                         + " does not see " + tgt.name( pm.map[ y ] ) };

    for ( std::size_t x = 0; x < src.size(); ++x ) {
        WorldSet image = tgt.empty_set();
        const auto& s = src.successors( x );
        for ( auto y = s.find_first(); y != WorldSet::npos; y = s.find_next( y ) )
            image.set( pm.map[ y ] );
        const auto& t = tgt.successors( pm.map[ x ] );
        for ( auto y = t.find_first(); y != WorldSet::npos; y = t.find_next( y ) )
            if ( !image.test( y ) )
                return { false, std::pair{ x, y },
                         "back fails: " + tgt.name( pm.map[ x ] ) + " sees " + tgt.name( y ) + " but no successor of "
                             + src.name( x ) + " maps there" };
    }
    return { true, std::nullopt, {} };
}

namespace {

std::string point_name( unsigned p, unsigned j ) { return "<" + std::to_string( p ) + "," + std::to_string( j ) + ">"; }

} // namespace

Frame gn_generated_frame( unsigned n, unsigned m, unsigned i )
{
    if ( n > 8 )
        throw PreconditionError( "G_n frames are supported for n <= 8" );
    const unsigned cols = 1u << n;
    if ( i >= cols )
        throw PreconditionError( "column " + std::to_string( i ) + " out of range for G_" + std::to_string( n ) );

    std::vector< std::string > names{ point_name( m, i ) };
    std::vector< unsigned > row{ m };
    for ( unsigned p = m; p-- > 0; )
        for ( unsigned j = 0; j < cols; ++j ) {
            names.push_back( point_name( p, j ) );
            row.push_back( p );
        }
    std::vector< std::pair< std::size_t, std::size_t > > edges;
    for ( std::size_t a = 0; a < names.size(); ++a )
        for ( std::size_t b = 0; b < names.size(); ++b )
            if ( row[ b ] < row[ a ] )
                edges.emplace_back( a, b );
    const std::size_t count = names.size();
    return Frame::from_edges( count, edges, std::move( names ) );
}

namespace {

using G1Point = std::pair< unsigned, unsigned >;

struct Partial
{
    unsigned m = 0;
    unsigned i = 0;
    std::map< G1Point, std::size_t > f;
};

// Recursion on the rooted level sequence W (a subset of fr, root r).
Partial construct( const Frame& fr, const WorldSet& W, std::size_t r )
{
    WorldSet succ = fr.successors( r ) & W;

    if ( succ.none() )
        return { 0, 0, { { { 0u, 0u }, r } } };

    std::vector< std::size_t > immediate;
    for ( auto y = succ.find_first(); y != WorldSet::npos; y = succ.find_next( y ) ) {
        bool covered = false;
        for ( auto z = succ.find_first(); z != WorldSet::npos && !covered; z = succ.find_next( z ) )
            covered = fr.related( z, y );
        if ( !covered )
            immediate.push_back( y );
    }

    if ( immediate.size() == 1 ) {
        auto y = immediate.front();
        WorldSet rest = W;
        rest.reset( r );
        auto sub = construct( fr, rest, y );
        Partial out{ sub.m + 1, sub.i, std::move( sub.f ) };
        out.f[ { sub.m, 1 - sub.i } ] = y;
        out.f[ { out.m, out.i } ] = r;
        return out;
    }
    if ( immediate.size() == 2 ) {
        std::vector< std::size_t > leaves;
        for ( auto y = W.find_first(); y != WorldSet::npos; y = W.find_next( y ) )
            if ( !( fr.successors( y ) & W ).any() )
                leaves.push_back( y );
        if ( leaves.empty() || leaves.size() > 2 )
            throw std::logic_error( "level structure broken: " + std::to_string( leaves.size() ) + " leaves" );
        WorldSet rest = W;
        for ( auto l : leaves )
            rest.reset( l );
        auto sub = construct( fr, rest, r );
        Partial out{ sub.m + 1, sub.i, {} };
        for ( const auto& [ pt, w ] : sub.f )
            out.f[ { pt.first + 1, pt.second } ] = w;
        out.f[ { 0u, 0u } ] = leaves.front();
        out.f[ { 0u, 1u } ] = leaves.back();
        return out;
    }
    throw std::logic_error( "level structure broken: " + std::to_string( immediate.size() ) + " immediate successors of "
                            + fr.name( r ) );
}

} // namespace

G1Embedding build_pmorphism_from_G1( const Frame& target, std::size_t x )
{
    Frame sub = generated_subframe( target, x );
    if ( !frame_class( sub ).in_class_c() )
        throw PreconditionError( "the subframe generated by " + target.name( x ) + " is not in class C" );
    auto root = sub.index( target.name( x ) );

    WorldSet all( sub.size() );
    all.set();
    auto part = construct( sub, all, root );

    Frame src = gn_generated_frame( 1, part.m, part.i );
    std::vector< std::size_t > map( src.size() );
    // world 0 is <m,i>, then rows m-1..0, columns 0 and 1
    map[ 0 ] = part.f.at( { part.m, part.i } );
    std::size_t k = 1;
    for ( unsigned p = part.m; p-- > 0; )
        for ( unsigned j = 0; j < 2; ++j )
            map[ k++ ] = part.f.at( { p, j } );

    G1Embedding out{ part.m, part.i, PMorphism{ std::move( src ), std::move( sub ), std::move( map ) } };
    if ( auto chk = verify_pmorphism( out.morphism ); !chk )
        throw std::logic_error( "G_1 construction produced a non-p-morphism: " + chk.reason );
    // surjectivity onto the generated subframe
    WorldSet hit( out.morphism.target.size() );
    for ( auto w : out.morphism.map )
        hit.set( w );
    if ( !hit.all() )
        throw std::logic_error( "G_1 construction is not onto the generated subframe" );
    return out;
}

Model pull_back( const PMorphism& pm, const Model& target_model )
{
    if ( target_model.frame().size() != pm.target.size() )
        throw PreconditionError( "model frame does not match the p-morphism target" );
    std::map< std::string, WorldSet > val;
    for ( const auto& [ atom, worlds ] : target_model.valuation() ) {
        WorldSet s = pm.source.empty_set();
        for ( std::size_t w = 0; w < pm.source.size(); ++w )
            if ( worlds.test( pm.map[ w ] ) )
                s.set( w );
        val.emplace( atom, std::move( s ) );
    }
    return Model( pm.source, std::move( val ) );
}

} // namespace provlog
