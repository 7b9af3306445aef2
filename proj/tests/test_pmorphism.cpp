#include <doctest.h>

#include <set>

#include "provlog/pmorphism.hpp"
#include "provlog/random.hpp"
#include "provlog/search.hpp"

using namespace provlog;

namespace {

std::set< std::size_t > image( const PMorphism& pm )
{
    return { pm.map.begin(), pm.map.end() };
}

} // namespace

TEST_CASE( "verify_pmorphism" )
{
    Frame chain = linear_frame( 3 );
    std::vector< std::size_t > id{ 0, 1, 2 };
    CHECK( verify_pmorphism( { chain, chain, id } ) );

    Frame two = linear_frame( 2 );
    Frame point( { "x" }, {} );
    auto forth = verify_pmorphism( { two, point, { 0, 0 } } );
    CHECK_FALSE( forth );
    REQUIRE( forth.witness.has_value() );

    Frame fork( { "r", "a", "b" }, { { "r", "a" }, { "r", "b" } } );
    CHECK( verify_pmorphism( { fork, two, { 1, 0, 0 } } ) );

    // back fails: the top of the target has a successor with no preimage below 0
    Frame one( { "y" }, {} );
    auto back = verify_pmorphism( { one, two, { 1 } } );
    CHECK_FALSE( back );
    CHECK_FALSE( back.reason.empty() );
}

TEST_CASE( "G_n generated frames" )
{
    auto g = gn_generated_frame( 1, 2, 0 );
    CHECK( g.size() == 5 );
    CHECK( g.name( 0 ) == "<2,0>" );
    CHECK( g.related( g.index( "<2,0>" ), g.index( "<0,1>" ) ) );
    CHECK_FALSE( g.related( g.index( "<1,0>" ), g.index( "<1,1>" ) ) );
    CHECK( frame_class( g ).in_class_c() );

    auto big = gn_generated_frame( 1, 3, 0 );
    auto sub = generated_subframe( big, big.index( "<2,0>" ) );
    std::set< std::string > names( sub.names().begin(), sub.names().end() );
    CHECK( names == std::set< std::string >{ "<2,0>", "<1,0>", "<1,1>", "<0,0>", "<0,1>" } );

    CHECK( gn_generated_frame( 2, 1, 3 ).size() == 5 );
    CHECK_THROWS_AS( (void)gn_generated_frame( 1, 1, 2 ), PreconditionError );
}

TEST_CASE( "G_1 embeddings of small frames" )
{
    Frame point( { "x" }, {} );
    auto e = build_pmorphism_from_G1( point, 0 );
    CHECK( e.row == 0 );
    CHECK( e.column == 0 );
    CHECK( e.morphism.map == std::vector< std::size_t >{ 0 } );

    auto chain = linear_frame( 2 );
    e = build_pmorphism_from_G1( chain, 1 );
    CHECK( e.row == 1 );
    CHECK( verify_pmorphism( e.morphism ) );
    CHECK( image( e.morphism ).size() == 2 );

    Frame fork( { "r", "a", "b" }, { { "r", "a" }, { "r", "b" } } );
    e = build_pmorphism_from_G1( fork, 0 );
    CHECK( e.row == 1 );
    CHECK( verify_pmorphism( e.morphism ) );
    const auto& src = e.morphism.source;
    const auto& tgt = e.morphism.target;
    CHECK( tgt.name( e.morphism.map[ 0 ] ) == "r" );
    std::set< std::string > bottom{ tgt.name( e.morphism.map[ src.index( "<0,0>" ) ] ),
                                    tgt.name( e.morphism.map[ src.index( "<0,1>" ) ] ) };
    CHECK( bottom == std::set< std::string >{ "a", "b" } );

    auto deep = linear_frame( 5 );
    e = build_pmorphism_from_G1( deep, 4 );
    CHECK( verify_pmorphism( e.morphism ) );
    CHECK( image( e.morphism ).size() == 5 );

    Frame wide = Frame::from_edges( 4, { { 0, 1 }, { 0, 2 }, { 0, 3 } } );
    CHECK_THROWS_AS( (void)build_pmorphism_from_G1( wide, 0 ), PreconditionError );
    // the leaves of a wide frame are still fine
    CHECK( build_pmorphism_from_G1( wide, 2 ).row == 0 );
}

TEST_CASE( "falsification transfers along the G_1 embeddings" )
{
    FormulaGenerator gen( 65 );
    std::vector< Formula > formulas;
    for ( int k = 0; k < 25; ++k )
        formulas.push_back( gen.gl( 2, 3, 7 ) );
    formulas.push_back( parse( "[]([]p -> q) | [](boxplus q -> p)" ) );

    std::size_t transfers = 0;
    for ( std::size_t n = 1; n <= 4; ++n )
        for ( const auto& fr : rooted_frames( FrameClass::GL, n ) ) {
            if ( !frame_class( fr ).in_class_c() )
                continue;
            auto emb = build_pmorphism_from_G1( fr, 0 );
            const auto& target = emb.morphism.target;
            for ( std::uint64_t v = 0; v < ( std::uint64_t{ 1 } << ( 2 * target.size() ) ); ++v ) {
                std::map< std::string, WorldSet > val;
                for ( std::size_t k = 0; k < 2; ++k ) {
                    WorldSet s = target.empty_set();
                    for ( std::size_t w = 0; w < target.size(); ++w )
                        if ( ( v >> ( k * target.size() + w ) ) & 1u )
                            s.set( w );
                    val.emplace( k ? "q" : "p", s );
                }
                Model tm( target, val );
                Model sm = pull_back( emb.morphism, tm );
                for ( const auto& f : formulas ) {
                    auto t = truth_set( tm, f );
                    auto s = truth_set( sm, f );
                    for ( std::size_t w = 0; w < sm.frame().size(); ++w )
                        CHECK( s.test( w ) == t.test( emb.morphism.map[ w ] ) );
                    if ( !t.test( 0 ) ) {
                        ++transfers;
                        CHECK_FALSE( s.test( 0 ) );
                    }
                }
            }
        }
    CHECK( transfers > 0 );
}
