#include <doctest.h>

#include <algorithm>

#include "provlog/formula.hpp"
#include "provlog/random.hpp"

using namespace provlog;

namespace {

const Formula p = Formula::var( "p" );
const Formula q = Formula::var( "q" );
const Formula r = Formula::var( "r" );

bool contains( const std::vector< Formula >& fs, const Formula& f ) { return std::find( fs.begin(), fs.end(), f ) != fs.end(); }

SchemaArgs args( std::initializer_list< std::pair< const char*, Formula > > items )
{
    SchemaArgs a;
    for ( const auto& [ k, v ] : items )
        a.letters.emplace( k, v );
    return a;
}

} // namespace

TEST_CASE( "parse builds the expected trees" )
{
    CHECK( parse( "bot" ) == Formula::bot() );
    CHECK( parse( "[]([]p -> p) -> []p" )
           == Formula::implies( Formula::box( Formula::implies( Formula::box( p ), p ) ), Formula::box( p ) ) );
    CHECK( parse( "p |> q -> r", Language::full_il() ) == Formula::implies( Formula::rhd( p, q ), r ) );
    CHECK( parse( "p & q | r" ) == Formula::disj( Formula::conj( p, q ), r ) );
    CHECK( parse( "p -> q -> r" ) == Formula::implies( p, Formula::implies( q, r ) ) );
    CHECK( parse( "[2]p" ).level() == 2 );
    CHECK( parse( "<1>top" ) == Formula::diamond( 1, Formula::top() ) );
    CHECK( parse( "v12" ) == Formula::var( "v12" ) );
    CHECK( parse( "s2", Language::fn( 2 ) ) == Formula::constant( 2 ) );
}

TEST_CASE( "parse rejects bad input and fragment violations" )
{
    CHECK_THROWS_AS( (void)parse( "p ->" ), SyntaxError );
    CHECK_THROWS_AS( (void)parse( "(p" ), SyntaxError );
    CHECK_THROWS_AS( (void)parse( "p |> q" ), FragmentError );
    CHECK_THROWS_AS( (void)parse( "[]p", Language::closed_b() ), FragmentError );
    CHECK_THROWS_AS( (void)parse( "[1]bot", Language::closed_b() ), FragmentError );
    CHECK_NOTHROW( (void)parse( "[1]bot", Language::closed_d() ) );
    CHECK_THROWS_AS( (void)parse( "s2", Language::fn( 1 ) ), FragmentError );
}

TEST_CASE( "print and parse round-trip" )
{
    FormulaGenerator gen( 11 );
    for ( int k = 0; k < 300; ++k ) {
        auto f = gen.gl( 3, 4, 10 );
        CHECK( parse( print( f ) ) == f );
        auto g = gen.il( 2, 3, 6 );
        CHECK( parse( print( g ), Language::full_il() ) == g );
        auto d = gen.closed_d( 3, 2, 6 );
        CHECK( parse( print( d ), Language::closed_d() ) == d );
        auto s = gen.fn( 2, 3, 8 );
        CHECK( parse( print( s ), Language::fn( 2 ) ) == s );
    }
}

TEST_CASE( "modal depth" )
{
    CHECK( modal_depth( Formula::bot() ) == 0 );
    CHECK( modal_depth( parse( "[]bot" ) ) == 1 );
    for ( unsigned n = 0; n < 5; ++n ) {
        auto f = Formula::conj( Formula::diamond_power( n, Formula::top() ), Formula::box_power( n + 1, Formula::bot() ) );
        CHECK( modal_depth( f ) == n + 1 );
    }
    CHECK( modal_depth( parse( "p |> q", Language::full_il() ) ) == 2 );

    FormulaGenerator gen( 5 );
    for ( int k = 0; k < 100; ++k ) {
        auto a = gen.gl( 2, 3 );
        auto l = instantiate_schema( Schema::L, args( { { "A", a } } ) );
        CHECK( modal_depth( l ) == modal_depth( a ) + 2 );
        for ( const auto& s : subformulas( a ) )
            CHECK( modal_depth( s ) <= modal_depth( a ) );
    }
}

TEST_CASE( "subformulas" )
{
    auto bb = parse( "[]bot" );
    auto subs = subformulas( bb );
    CHECK( subs.size() == 2 );
    CHECK( contains( subs, bb ) );
    CHECK( contains( subs, Formula::bot() ) );

    auto imp = parse( "p -> q" );
    CHECK( subformulas( imp ).size() == 3 );

    auto q2 = instantiate_schema( Schema::Q2, args( { { "A", p }, { "B", q } } ) );
    auto s = subformulas( q2 );
    for ( const char* text : { "<>(<>p & []q)", "[](<>p | q)", "<>p", "[]q", "p", "q" } )
        CHECK_MESSAGE( contains( s, parse( text ) ), text );

    FormulaGenerator gen( 9 );
    for ( int k = 0; k < 100; ++k ) {
        auto f = gen.gl( 2, 3 );
        auto fs = subformulas( f );
        CHECK( contains( fs, f ) );
        CHECK( fs.size() <= f.size() );
        for ( const auto& g : fs )
            for ( const auto& h : subformulas( g ) )
                CHECK( contains( fs, h ) );
    }
}

TEST_CASE( "schema instances" )
{
    CHECK( instantiate_schema( Schema::L, args( { { "A", p } } ) ) == parse( "[]([]p -> p) -> []p" ) );
    CHECK( instantiate_schema( Schema::K, args( { { "A", p }, { "B", q } } ) ) == parse( "[](p -> q) -> ([]p -> []q)" ) );

    SchemaArgs fgl = args( { { "B", parse( "[]bot" ) } } );
    fgl.n = 1;
    fgl.index = 0;
    CHECK( instantiate_schema( Schema::FGL, fgl ) == parse( "[](~s1 -> []bot) -> [][]bot", Language::fn( 1 ) ) );
    fgl.index = 1;
    CHECK( instantiate_schema( Schema::FGL, fgl ) == parse( "[](s1 -> []bot) -> [][]bot", Language::fn( 1 ) ) );

    SchemaArgs nb = args( { { "A1", p }, { "A2", q } } );
    CHECK( instantiate_schema( Schema::NonBranching, nb ) == parse( "[](boxplus p -> q) | [](boxplus q -> p)" ) );

    CHECK( instantiate_schema( Schema::J5, args( { { "A", p } } ) ) == parse( "<>p |> p", Language::full_il() ) );
    CHECK( instantiate_schema( Schema::M, args( { { "A", p }, { "B", q }, { "C", r } } ) )
           == parse( "p |> q -> (p & []r) |> (q & []r)", Language::full_il() ) );

    CHECK_THROWS_AS( (void)instantiate_schema( Schema::K, args( { { "A", p } } ) ), SchemaError );
    SchemaArgs bad = args( { { "B", p } } );
    bad.n = 1;
    CHECK_THROWS( (void)instantiate_schema( Schema::FGL, bad ) );
}

TEST_CASE( "GL schemata with closed arguments stay closed" )
{
    FormulaGenerator gen( 21 );
    for ( int k = 0; k < 50; ++k ) {
        auto a = gen.closed_b( 2 );
        auto b = gen.closed_b( 2 );
        auto c = gen.closed_b( 2 );
        REQUIRE( in_fragment( a, Language::closed_b() ) );
        for ( auto s : { Schema::K, Schema::L, Schema::Four, Schema::Linearity, Schema::Q1, Schema::Q2 } ) {
            auto f = instantiate_schema( s, args( { { "A", a }, { "B", b }, { "C", c } } ) );
            CHECK( in_fragment( f, Language::closed_b() ) );
        }
    }
}

TEST_CASE( "schema names round-trip" )
{
    for ( auto s : { Schema::K, Schema::L, Schema::Four, Schema::Linearity, Schema::Q1, Schema::Q2, Schema::FGL,
                     Schema::NonBranching, Schema::L1, Schema::J4, Schema::W } )
        CHECK( schema_from_name( schema_name( s ) ) == s );
    CHECK( is_il_schema( Schema::J2 ) );
    CHECK_FALSE( is_il_schema( Schema::Q1 ) );
}

TEST_CASE( "substitution and atoms" )
{
    auto f = parse( "[]p -> q" );
    CHECK( substitute( f, { { "p", q }, { "q", p } } ) == parse( "[]q -> p" ) );
    CHECK( atoms( f ).size() == 2 );
    CHECK( box_count( parse( "[]p -> []p & [][]p" ) ) == 2 );
    CHECK( is_box_bot_combination( parse( "[][]bot -> ~[]bot" ) ) );
    CHECK_FALSE( is_box_bot_combination( parse( "[]p" ) ) );
}
