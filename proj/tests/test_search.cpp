#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "provlog/kripke_io.hpp"
#include "provlog/random.hpp"
#include "provlog/search.hpp"

using namespace provlog;

namespace {

Formula schema( Schema s )
{
    SchemaArgs a;
    a.letters = { { "A", Formula::var( "p" ) }, { "B", Formula::var( "q" ) }, { "C", Formula::var( "r" ) } };
    return instantiate_schema( s, a );
}

// Relation under a permutation, as a sorted edge list; the least one over all
// permutations is a canonical form.
std::vector< std::pair< std::size_t, std::size_t > > canonical( const Frame& fr )
{
    std::vector< std::size_t > perm( fr.size() );
    std::iota( perm.begin(), perm.end(), 0 );
    std::vector< std::pair< std::size_t, std::size_t > > best;
    bool first = true;
    do {
        auto edges = fr.edges();
        for ( auto& [ a, b ] : edges ) {
            a = perm[ a ];
            b = perm[ b ];
        }
        std::sort( edges.begin(), edges.end() );
        if ( first || edges < best )
            best = edges;
        first = false;
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
    return best;
}

} // namespace

TEST_CASE( "brute-force search examples" )
{
    CHECK_FALSE( countermodel_search( schema( Schema::L ), FrameClass::GL, 4 ).has_value() );

    auto fork = countermodel_search( schema( Schema::Linearity ), FrameClass::GL, 3 );
    REQUIRE( fork.has_value() );
    CHECK( fork->model.frame().size() == 3 );
    CHECK( fork->world == 0 );
    CHECK_FALSE( frame_class( fork->model.frame() ).linear );
    CHECK_FALSE( check( fork->model, 0, schema( Schema::Linearity ) ) );

    CHECK_FALSE( countermodel_search( schema( Schema::Q2 ), FrameClass::C, 6 ).has_value() );
    CHECK_FALSE( countermodel_search( schema( Schema::Linearity ), FrameClass::Linear, 5 ).has_value() );
    CHECK( countermodel_search( schema( Schema::Q1 ), FrameClass::GL, 4 ).has_value() );

    CHECK_THROWS_AS( (void)countermodel_search( schema( Schema::L ), FrameClass::GL, 9 ), ResourceLimit );
    CHECK_THROWS_AS( (void)countermodel_search( parse( "[1]p" ), FrameClass::GL, 2 ), PreconditionError );
}

TEST_CASE( "rooted frame lists" )
{
    // rooted posets up to isomorphism on 1..5 points
    const std::size_t rooted_posets[] = { 1, 1, 2, 5, 16 };
    for ( std::size_t n = 1; n <= 5; ++n ) {
        auto gl = rooted_frames( FrameClass::GL, n );
        std::set< std::vector< std::pair< std::size_t, std::size_t > > > classes;
        for ( const auto& fr : gl ) {
            CHECK( frame_class( fr ).gl_frame() );
            classes.insert( canonical( fr ) );
        }
        CHECK( classes.size() == rooted_posets[ n - 1 ] );
        CHECK( rooted_frames( FrameClass::Linear, n ).size() == 1 );
    }
}

TEST_CASE( "level sequences are exactly the rooted class C frames" )
{
    for ( std::size_t n = 1; n <= 6; ++n ) {
        std::set< std::vector< std::pair< std::size_t, std::size_t > > > expected;
        for ( const auto& fr : rooted_frames( FrameClass::GL, n ) )
            if ( frame_class( fr ).in_class_c() )
                expected.insert( canonical( fr ) );
        std::set< std::vector< std::pair< std::size_t, std::size_t > > > listed;
        auto c = rooted_frames( FrameClass::C, n );
        for ( const auto& fr : c ) {
            CHECK( frame_class( fr ).in_class_c() );
            listed.insert( canonical( fr ) );
        }
        CHECK( listed.size() == c.size() );
        CHECK( listed == expected );
    }
}

TEST_CASE( "results do not depend on the thread count" )
{
    FormulaGenerator gen( 3 );
    for ( int k = 0; k < 40; ++k ) {
        auto f = gen.gl( 2, 3, 8 );
        auto a = countermodel_search( f, FrameClass::GL, 4, { 1, {} } );
        auto b = countermodel_search( f, FrameClass::GL, 4, { 4, {} } );
        REQUIRE( a.has_value() == b.has_value() );
        if ( a )
            CHECK( model_to_json( a->model ) == model_to_json( b->model ) );
    }
}

TEST_CASE( "layered search agrees with brute force" )
{
    FormulaGenerator gen( 77 );
    for ( int k = 0; k < 120; ++k ) {
        auto f = gen.gl( 2, 3, 8 );
        Budget budget;
        auto lin = layered_countermodel_search( f, LayerShape::Linear, 5, budget );
        auto lin_bf = countermodel_search( f, FrameClass::Linear, 5 );
        REQUIRE( lin.has_value() == lin_bf.has_value() );
        if ( lin ) {
            CHECK( lin->model.frame().size() == lin_bf->model.frame().size() );
            CHECK_FALSE( check( lin->model, lin->world, f ) );
            CHECK( frame_class( lin->model.frame() ).linear );
        }

        auto c = layered_countermodel_search( f, LayerShape::ClassC, 5, budget );
        auto c_bf = countermodel_search( f, FrameClass::C, 5 );
        REQUIRE( c.has_value() == c_bf.has_value() );
        if ( c ) {
            CHECK( c->model.frame().size() == c_bf->model.frame().size() );
            CHECK_FALSE( check( c->model, c->world, f ) );
            CHECK( frame_class( c->model.frame() ).in_class_c() );
        }

        auto g = layered_countermodel_search( f, LayerShape::G1, 3, budget );
        if ( g )
            CHECK_FALSE( check( g->model, g->world, f ) );
    }
}

TEST_CASE( "non-transitive search" )
{
    auto four = parse( "[]p -> [][]p" );
    CHECK_FALSE( countermodel_search( four, FrameClass::GL, 4 ).has_value() );
    auto cm = countermodel_search( four, FrameClass::Irreflexive, 3 );
    REQUIRE( cm.has_value() );
    CHECK_FALSE( frame_class( cm->model.frame() ).transitive );
    CHECK( cm->model.frame().size() <= 3 );
}
