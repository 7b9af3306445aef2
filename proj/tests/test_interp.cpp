#include <doctest.h>

#include "provlog/interp.hpp"
#include "provlog/random.hpp"

using namespace provlog;

namespace {

Formula il( const char* text ) { return parse( text, Language::full_il() ); }

SchemaArgs pqr()
{
    SchemaArgs a;
    a.letters = { { "A", Formula::var( "p" ) }, { "B", Formula::var( "q" ) }, { "C", Formula::var( "r" ) } };
    return a;
}

} // namespace

TEST_CASE( "translation" )
{
    CHECK( translate_tr( il( "p |> q" ) ) == parse( "[](p -> q | <>q)" ) );
    CHECK( translate_tr( il( "[]p -> []p" ) ) == parse( "[]p -> []p" ) );
    CHECK( translate_tr( il( "(p |> q) -> (q |> p)" ) ) == parse( "[](p -> q | <>q) -> [](q -> p | <>p)" ) );
    CHECK_THROWS_AS( (void)translate_tr( Formula::box( 1, Formula::var( "p" ) ) ), PreconditionError );

    FormulaGenerator gen( 3 );
    for ( int k = 0; k < 200; ++k ) {
        auto f = gen.il( 2, 3, 6 );
        auto t = translate_tr( f );
        CHECK_FALSE( contains_rhd( t ) );
        CHECK( modal_depth( t ) <= modal_depth( f ) );
    }
}

TEST_CASE( "ILW.3 examples" )
{
    CHECK( is_provable( decide_ilw3( il( "p |> q -> p |> (q & []~p)" ) ) ) );
    CHECK( is_provable( decide_ilw3( il( "top |> top" ) ) ) );
    CHECK( is_provable( decide_ilw3( il_axiom_instance( Schema::M, pqr() ) ) ) );
    CHECK( is_provable( decide_ilw3( il_axiom_instance( Schema::P, pqr() ) ) ) );

    auto v = decide_ilw3( il( "p |> q" ) );
    REQUIRE_FALSE( is_provable( v ) );
    CHECK( std::get< Refuted >( v ).note.rfind( "countermodel to the translation", 0 ) == 0 );
    CHECK_FALSE( is_provable( decide_ilw3( il( "q |> p -> p |> q" ) ) ) );
}

TEST_CASE( "axiom instances" )
{
    SchemaArgs a;
    a.letters = { { "A", Formula::var( "p" ) } };
    CHECK( il_axiom_instance( Schema::J5, a ) == il( "<>p |> p" ) );
    SchemaArgs tops;
    tops.letters = { { "A", Formula::top() }, { "B", Formula::top() }, { "C", Formula::top() } };
    CHECK( il_axiom_instance( Schema::J2, tops ) == il( "(top |> top) & (top |> top) -> top |> top" ) );
    CHECK( il_axiom_instance( Schema::M, pqr() ) == il( "p |> q -> (p & []r) |> (q & []r)" ) );
    CHECK( il_axiom_instance( Schema::W, pqr() ) == il( "p |> q -> p |> (q & []~p)" ) );
    CHECK( il_axiom_instance( Schema::Linearity, pqr() ) == il( "[]([]p -> q) | [](boxplus q -> p)" ) );
    CHECK_THROWS_AS( (void)il_axiom_instance( Schema::Q1, pqr() ), SchemaError );
}
