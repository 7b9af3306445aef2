#include "provlog/experiments.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "provlog/fgl.hpp"
#include "provlog/glprover.hpp"
#include "provlog/ignatiev.hpp"
#include "provlog/interp.hpp"
#include "provlog/pmorphism.hpp"
#include "provlog/random.hpp"
#include "provlog/search.hpp"

namespace provlog {

bool SuiteResult::passed() const
{
    return std::all_of( checks.begin(), checks.end(), []( const CheckResult& c ) { return c.passed; } );
}

const std::vector< std::string >& suite_ids()
{
    static const std::vector< std::string > ids{ "gl", "gl3", "thm2.1", "thm4.5", "thm5.4", "prop6.5", "gl4", "thm7.12" };
    return ids;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since( Clock::time_point t0 ) { return std::chrono::duration< double >( Clock::now() - t0 ).count(); }

// Counts passes over a batch and keeps the first failure for the report.
struct Tally
{
    std::size_t total = 0;
    std::size_t ok = 0;
    std::string first_failure;

    void add( bool passed, const std::function< std::string() >& describe )
    {
        ++total;
        if ( passed )
            ++ok;
        else if ( first_failure.empty() )
            first_failure = describe();
    }

    CheckResult result( std::string name ) const
    {
        std::string detail = std::to_string( ok ) + "/" + std::to_string( total );
        if ( !first_failure.empty() )
            detail += "; first failure: " + first_failure;
        return { std::move( name ), ok == total && total > 0, detail };
    }
};

SchemaArgs letters( std::initializer_list< std::pair< const char*, Formula > > items )
{
    SchemaArgs args;
    for ( const auto& [ k, v ] : items )
        args.letters.emplace( k, v );
    return args;
}

const Formula P = Formula::var( "p" );
const Formula Q = Formula::var( "q" );
const Formula R = Formula::var( "r" );

// ---------------------------------------------------------------------------

SuiteResult gl_oracle_suite( unsigned threads )
{
    SuiteResult out{ "gl", "sequent search agrees with brute force over GL-frames (<= 4 worlds)", {}, 0 };
    auto t0 = Clock::now();
    FormulaGenerator gen( 0x6c5eed01 );
    Tally tally;
    std::size_t refuted = 0;
    for ( int k = 0; k < 500; ++k ) {
        auto f = gen.gl( 2, 3, 8 );
        Budget budget( std::chrono::seconds( 60 ) );
        auto seq = gl_sequent_search( f, budget );
        auto brute = countermodel_search( f, FrameClass::GL, 4, SearchOptions{ threads, budget } );
        refuted += brute.has_value();
        tally.add( seq.has_value() == brute.has_value(), [ & ] {
            return print( f ) + " (sequent search: " + ( seq ? "refuted" : "provable" )
                   + ", brute force: " + ( brute ? "refuted" : "no countermodel" ) + ")";
        } );
    }
    auto elapsed = seconds_since( t0 );
    out.checks.push_back( tally.result( "same verdict on 500 random formulas, 2 variables, depth <= 3" ) );
    out.checks.back().detail += "; " + std::to_string( refuted ) + " refuted";
    out.checks.push_back( { "runtime under 60 s", elapsed < 60, std::to_string( elapsed ) + " s" } );
    return out;
}

SuiteResult linear_order_suite()
{
    SuiteResult out{ "gl3", "linearity and the rank-defining formulas", {}, 0 };
    FormulaGenerator gen( 0x6c3 );
    Tally lin;
    for ( int k = 0; k < 50; ++k ) {
        auto a = gen.gl( 2, 2, 5 );
        auto b = gen.gl( 2, 2, 5 );
        auto inst = instantiate_schema( Schema::Linearity, letters( { { "A", a }, { "B", b } } ) );
        lin.add( is_provable( decide_gl3( inst ) ), [ & ] { return print( inst ); } );
    }
    out.checks.push_back( lin.result( "GL.3 proves 50 random linearity instances" ) );

    Tally ranks;
    Model chain( linear_frame( 10 ) );
    for ( unsigned n = 0; n <= 4; ++n ) {
        auto truth = truth_set( chain, rank_formula( n ) );
        ranks.add( truth.count() == 1 && truth.test( n ), [ & ] { return print( rank_formula( n ) ); } );
    }
    out.checks.push_back( ranks.result( "<>^n top & []^(n+1) bot holds exactly at rank n, n <= 4" ) );

    auto inst = instantiate_schema( Schema::Linearity, letters( { { "A", P }, { "B", Q } } ) );
    auto v = decide_gl( inst );
    const auto* r = std::get_if< Refuted >( &v );
    out.checks.push_back( { "GL refutes linearity with at most 3 worlds", r && r->model.frame().size() <= 3,
                            r ? std::to_string( r->model.frame().size() ) + " worlds" : "not refuted" } );
    return out;
}

// Formulas of depth <= 2 over p and q in a fixed order.
std::vector< Formula > substitution_corpus()
{
    std::vector< Formula > d0{ P, Q, Formula::bot(), Formula::neg( P ), Formula::neg( Q ), Formula::conj( P, Q ),
                               Formula::disj( P, Q ), Formula::implies( P, Q ) };
    std::vector< Formula > d1;
    for ( const auto& x : d0 ) {
        d1.push_back( Formula::box( x ) );
        d1.push_back( Formula::diamond( x ) );
    }
    for ( std::size_t i = 0; i < 4; ++i )
        for ( std::size_t j = 0; j < 4; ++j ) {
            d1.push_back( Formula::implies( d1[ i ], d0[ j ] ) );
            d1.push_back( Formula::conj( d1[ i ], d0[ j ] ) );
        }
    std::vector< Formula > out = d0;
    out.insert( out.end(), d1.begin(), d1.end() );
    for ( std::size_t i = 0; out.size() < 200 && i < d1.size(); ++i ) {
        out.push_back( Formula::box( d1[ i ] ) );
        if ( out.size() < 200 )
            out.push_back( Formula::diamond( d1[ i ] ) );
    }
    for ( std::size_t i = 0; out.size() < 200; ++i )
        out.push_back( Formula::implies( Formula::box( d1[ i % d1.size() ] ), Formula::diamond( d0[ i % d0.size() ] ) ) );
    return out;
}

SuiteResult substitution_suite()
{
    SuiteResult out{ "thm2.1", "restricted substitution on linear models with <= 4 ranks", {}, 0 };
    const auto corpus = substitution_corpus();
    Tally tally;
    for ( std::size_t n = 1; n <= 4; ++n ) {
        Frame fr = linear_frame( n );
        Model defining( fr );
        std::vector< Formula > D;
        for ( unsigned x = 0; x < n; ++x )
            D.push_back( rank_formula( x ) );
        for ( std::uint64_t v = 0; v < ( std::uint64_t{ 1 } << ( 2 * n ) ); ++v ) {
            std::map< std::string, WorldSet > val{ { "p", fr.empty_set() }, { "q", fr.empty_set() } };
            for ( std::size_t w = 0; w < n; ++w ) {
                if ( ( v >> w ) & 1u )
                    val[ "p" ].set( w );
                if ( ( v >> ( n + w ) ) & 1u )
                    val[ "q" ].set( w );
            }
            Model m( fr, val );
            for ( std::size_t i = 0; i < n; ++i ) {
                auto star = restricted_substitution( defining, i, val, D );
                WorldSet up = fr.successors( i );
                up.set( i );
                for ( const auto& c : corpus ) {
                    auto lhs = truth_set( m, c );
                    auto rhs = truth_set( defining, substitute( c, star ) );
                    tally.add( ( ( lhs ^ rhs ) & up ).none(), [ & ] {
                        return print( c ) + " on " + std::to_string( n ) + " ranks, i = " + std::to_string( i );
                    } );
                }
            }
        }
    }
    out.checks.push_back( tally.result( "<F,V>, j |= C iff M, j |= C* for all j in i-up, " + std::to_string( corpus.size() )
                                        + " formulas" ) );
    return out;
}

SuiteResult ignatiev_suite()
{
    SuiteResult out{ "thm4.5", "root points, GLP schemata and linearity on truncations of Ignatiev's frame", {}, 0 };

    TruncatedUniverse big( 4, 0 );
    std::vector< IgnatievPoint > roots;
    for ( const auto& p : big.points() )
        if ( p == root_point( p.at( 0 ) ) )
            roots.push_back( p );
    Tally tri;
    for ( const auto& a : roots )
        for ( const auto& b : roots ) {
            RootOrder expect = compare( a.at( 0 ), b.at( 0 ) ) == Comparison::GT   ? RootOrder::R0_ab
                               : compare( a.at( 0 ), b.at( 0 ) ) == Comparison::LT ? RootOrder::R0_ba
                                                                                    : RootOrder::Equal;
            bool ok = false;
            try {
                ok = roots_trichotomy( a.at( 0 ), b.at( 0 ) ) == expect;
            } catch ( const std::logic_error& ) {
                ok = false;
            }
            tri.add( ok, [ & ] { return print_point( a ) + " vs " + print_point( b ); } );
        }
    out.checks.push_back( tri.result( "trichotomy on all " + std::to_string( roots.size() ) + " root points, bound 4" ) );

    TruncatedUniverse tu( 3, 2 );
    FormulaGenerator gen( 0x1647 );
    auto valid = [ & ]( const Formula& f ) {
        auto t = tu.truth( f );
        return std::all_of( t.begin(), t.end(), []( char x ) { return x != 0; } );
    };
    Tally loeb, mono, persist;
    for ( int k = 0; k < 30; ++k ) {
        auto a = gen.closed_d( 2, 2, 5 );
        unsigned n = gen.below( 3 );
        auto f = Formula::implies( Formula::box( n, Formula::implies( Formula::box( n, a ), a ) ), Formula::box( n, a ) );
        loeb.add( valid( f ), [ & ] { return print( f ); } );
    }
    for ( int k = 0; k < 30; ++k ) {
        auto a = gen.closed_d( 2, 2, 5 );
        unsigned n = gen.below( 3 );
        unsigned m = gen.below( n + 1 );
        auto f = Formula::implies( Formula::box( m, a ), Formula::box( n, a ) );
        mono.add( valid( f ), [ & ] { return print( f ); } );
    }
    for ( int k = 0; k < 30; ++k ) {
        auto a = gen.closed_d( 2, 2, 5 );
        unsigned n = 1 + gen.below( 2 );
        unsigned m = gen.below( n );
        auto f = Formula::implies( Formula::diamond( m, a ), Formula::box( n, Formula::diamond( m, a ) ) );
        persist.add( valid( f ), [ & ] { return print( f ); } );
    }
    out.checks.push_back( loeb.result( "[n]([n]A -> A) -> [n]A valid on the bound-3 truncation" ) );
    out.checks.push_back( mono.result( "[m]A -> [n]A, m <= n, valid on the bound-3 truncation" ) );
    out.checks.push_back( persist.result( "<m>A -> [n]<m>A, m < n, valid on the bound-3 truncation" ) );

    Tally lin;
    for ( int k = 0; k < 30; ++k ) {
        auto a = gen.closed_d( 2, 2, 5 );
        auto b = gen.closed_d( 2, 2, 5 );
        auto rep = linearity_experiment( tu, a, b );
        lin.add( rep.violations.empty(), [ & ] {
            return print( rep.instance ) + " fails at " + print_point( rep.violations.front().point );
        } );
    }
    out.checks.push_back( lin.result( "linearity has no violations for 30 random closed pairs" ) );
    return out;
}

SuiteResult constants_suite()
{
    SuiteResult out{ "thm5.4", "FGL_1 on G_1*: normal forms, theoremhood, GL.4 axioms", {}, 0 };
    FormulaGenerator gen( 0x5454 );
    Tally nf, boxed;
    std::size_t boxed_provable = 0;
    for ( int k = 0; k < 200; ++k ) {
        auto f = gen.fn( 1, 3, 8 );
        auto d = modal_depth( f );
        auto form = normal_form( 1, f );
        nf.add( gn_truth_table( 1, d + 2, f ) == gn_truth_table( 1, d + 2, form.to_formula() ),
                [ & ] { return print( f ) + " vs " + form.to_string(); } );
        bool box_ok = is_provable( decide_fgl( 1, Formula::box( f ) ) );
        boxed_provable += box_ok;
        boxed.add( !box_ok || is_provable( decide_fgl( 1, f ) ), [ & ] { return print( f ); } );
    }
    out.checks.push_back( nf.result( "normal form agrees with f on rows <= depth+2, 200 random formulas" ) );
    out.checks.push_back( boxed.result( "[]f provable implies f provable" ) );
    out.checks.back().detail += "; " + std::to_string( boxed_provable ) + " with []f provable";

    Tally axioms;
    for ( unsigned i = 0; i < 2; ++i )
        for ( int k = 0; k < 30; ++k ) {
            SchemaArgs args;
            args.n = 1;
            args.index = i;
            args.letters.emplace( "B", gen.box_bot_combination( 3, 3 ) );
            auto inst = instantiate_schema( Schema::FGL, args );
            axioms.add( is_provable( decide_fgl( 1, inst ) ), [ & ] { return print( inst ); } );
        }
    out.checks.push_back( axioms.result( "both FGL_1 axiom schemata, 30 random B each" ) );

    auto q1 = instantiate_schema( Schema::Q1, letters( { { "A", P }, { "B", Q }, { "C", R } } ) );
    auto q2 = instantiate_schema( Schema::Q2, letters( { { "A", P }, { "B", Q } } ) );
    auto lin = instantiate_schema( Schema::Linearity, letters( { { "A", P }, { "B", Q } } ) );
    out.checks.push_back( { "GL.4 proves Q1", is_provable( decide_gl4( q1 ) ), print( q1 ) } );
    out.checks.push_back( { "GL.4 proves Q2", is_provable( decide_gl4( q2 ) ), print( q2 ) } );
    out.checks.push_back( { "GL.4 refutes linearity", !is_provable( decide_gl4( lin ) ), print( lin ) } );
    return out;
}

SuiteResult g1_embedding_suite()
{
    SuiteResult out{ "prop6.5", "G_1 p-morphisms onto every class C frame with <= 5 worlds", {}, 0 };
    auto t0 = Clock::now();
    Tally tally;
    std::size_t frames = 0;
    for ( std::size_t n = 1; n <= 5; ++n ) {
        std::vector< std::pair< std::size_t, std::size_t > > slots;
        for ( std::size_t a = 0; a < n; ++a )
            for ( std::size_t b = 0; b < n; ++b )
                if ( a != b )
                    slots.emplace_back( a, b );
        for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << slots.size() ); ++s ) {
            std::vector< std::uint64_t > succ( n, 0 );
            for ( std::size_t k = 0; k < slots.size(); ++k )
                if ( ( s >> k ) & 1u )
                    succ[ slots[ k ].first ] |= std::uint64_t{ 1 } << slots[ k ].second;
            bool transitive = true;
            for ( std::size_t a = 0; a < n && transitive; ++a )
                for ( std::size_t b = 0; b < n; ++b )
                    if ( ( ( succ[ a ] >> b ) & 1u ) && ( succ[ b ] & ~succ[ a ] ) ) {
                        transitive = false;
                        break;
                    }
            if ( !transitive )
                continue;
            std::vector< std::pair< std::size_t, std::size_t > > edges;
            for ( std::size_t a = 0; a < n; ++a )
                for ( std::size_t b = 0; b < n; ++b )
                    if ( ( succ[ a ] >> b ) & 1u )
                        edges.emplace_back( a, b );
            Frame fr = Frame::from_edges( n, edges );
            bool counted = false;
            for ( std::size_t x = 0; x < n; ++x ) {
                if ( !frame_class( generated_subframe( fr, x ) ).in_class_c() )
                    continue;
                if ( !counted ) {
                    ++frames;
                    counted = true;
                }
                std::string error;
                bool ok = false;
                try {
                    auto emb = build_pmorphism_from_G1( fr, x );
                    ok = static_cast< bool >( verify_pmorphism( emb.morphism ) );
                } catch ( const std::exception& e ) {
                    error = e.what();
                }
                tally.add( ok, [ & ] { return "world " + std::to_string( x ) + " of an " + std::to_string( n ) + "-world frame: " + error; } );
            }
        }
    }
    auto elapsed = seconds_since( t0 );
    out.checks.push_back( tally.result( "verified p-morphism for every world generating a class C subframe" ) );
    out.checks.back().detail += " (" + std::to_string( frames ) + " labelled frames)";
    out.checks.push_back( { "runtime under 5 min", elapsed < 300, std::to_string( elapsed ) + " s" } );
    return out;
}

SuiteResult gl4_engines_suite()
{
    SuiteResult out{ "gl4", "GL.4 engines agree; branching schemata", {}, 0 };
    FormulaGenerator gen( 0x6140 );
    Tally tally;
    std::size_t refuted = 0;
    for ( int k = 0; k < 200; ++k ) {
        auto f = gen.gl( 2, 2, 8 );
        bool a = is_provable( decide_gl4( f, GL4Engine::ClassC ) );
        bool b = is_provable( decide_gl4( f, GL4Engine::G1 ) );
        refuted += !a;
        tally.add( a == b, [ & ] { return print( f ); } );
    }
    out.checks.push_back( tally.result( "class C search and G_1 search agree on 200 random formulas" ) );
    out.checks.back().detail += "; " + std::to_string( refuted ) + " refuted";

    auto q1 = instantiate_schema( Schema::Q1, letters( { { "A", P }, { "B", Q }, { "C", R } } ) );
    auto q2 = instantiate_schema( Schema::Q2, letters( { { "A", P }, { "B", Q } } ) );
    for ( const auto& [ name, f ] : { std::pair{ "Q1", q1 }, std::pair{ "Q2", q2 } } ) {
        bool ok = is_provable( decide_gl4( f, GL4Engine::ClassC ) ) && is_provable( decide_gl4( f, GL4Engine::G1 ) );
        out.checks.push_back( { std::string( "both engines prove " ) + name, ok, print( f ) } );
    }

    SchemaArgs nb0 = letters( { { "A1", P }, { "A2", Q } } );
    nb0.n = 0;
    auto s0 = instantiate_schema( Schema::NonBranching, nb0 );
    out.checks.push_back( { "GL.3 proves the non-branching schema, n = 0", is_provable( decide_gl3( s0 ) ), print( s0 ) } );
    SchemaArgs nb1 = letters( { { "A1", P }, { "A2", Q }, { "A3", R } } );
    nb1.n = 1;
    auto s1 = instantiate_schema( Schema::NonBranching, nb1 );
    bool ok1 = is_provable( decide_gl4( s1, GL4Engine::ClassC ) ) && is_provable( decide_gl4( s1, GL4Engine::G1 ) );
    out.checks.push_back( { "GL.4 proves the non-triple-branching schema, n = 1", ok1, print( s1 ) } );
    return out;
}

SuiteResult translation_suite( unsigned threads )
{
    SuiteResult out{ "thm7.12", "the translation into GL.3 of the interpretability axioms", {}, 0 };
    FormulaGenerator gen( 0x7120 );
    const std::vector< Schema > schemas{ Schema::L1, Schema::L2, Schema::L3, Schema::J1, Schema::J2, Schema::J3,
                                         Schema::J4, Schema::J5, Schema::M,  Schema::P,  Schema::W,  Schema::Linearity };
    std::vector< Formula > pool;
    for ( auto s : schemas ) {
        Tally tally;
        for ( int k = 0; k < 50; ++k ) {
            SchemaArgs args;
            for ( const auto& l : schema_letters( s ) )
                args.letters.emplace( l, gen.il( 2, 2, 4 ) );
            auto inst = il_axiom_instance( s, args );
            if ( k < 2 )
                pool.push_back( inst );
            tally.add( is_provable( decide_gl3( translate_tr( inst ) ) ), [ & ] { return print( inst ); } );
        }
        out.checks.push_back( tally.result( "GL.3 proves tr of 50 instances of " + std::string( schema_name( s ) ) ) );
    }

    for ( int k = 0; k < 16; ++k )
        pool.push_back( gen.il( 2, 2, 5 ) );
    std::map< Formula, bool > provable;
    auto proves = [ & ]( const Formula& f ) {
        auto it = provable.find( f );
        if ( it == provable.end() )
            it = provable.emplace( f, is_provable( decide_ilw3( f ) ) ).first;
        return it->second;
    };
    Tally mp, nec;
    std::size_t mp_premises = 0;
    for ( const auto& a : pool )
        for ( const auto& b : pool ) {
            if ( !proves( a ) || !proves( Formula::implies( a, b ) ) )
                continue;
            ++mp_premises;
            mp.add( proves( b ), [ & ] { return print( a ) + " => " + print( b ); } );
        }
    for ( const auto& a : pool )
        if ( proves( a ) )
            nec.add( proves( Formula::box( a ) ), [ & ] { return print( a ); } );
    out.checks.push_back( mp.result( "modus ponens closure on " + std::to_string( mp_premises ) + " premise pairs" ) );
    out.checks.push_back( nec.result( "necessitation closure" ) );

    for ( auto s : { Schema::J2, Schema::J4 } ) {
        auto inst = il_axiom_instance( s, letters( { { "A", P }, { "B", Q }, { "C", R } } ) );
        auto tr = translate_tr( inst );
        auto cm = countermodel_search( tr, FrameClass::Irreflexive, 3, SearchOptions{ threads, Budget{} } );
        std::size_t three_world = 0;
        for ( const auto& fr : rooted_frames( FrameClass::Irreflexive, 3 ) ) {
            if ( frame_class( fr ).transitive )
                continue;
            for ( unsigned v = 0; v < ( 1u << 9 ); ++v ) {
                std::map< std::string, WorldSet > val;
                for ( unsigned k = 0; k < 3; ++k ) {
                    WorldSet set = fr.empty_set();
                    for ( unsigned w = 0; w < 3; ++w )
                        if ( ( v >> ( 3 * k + w ) ) & 1u )
                            set.set( w );
                    val.emplace( std::string( 1, "pqr"[ k ] ), std::move( set ) );
                }
                if ( !check( Model( fr, std::move( val ) ), 0, tr ) ) {
                    ++three_world;
                    break;
                }
            }
        }
        bool ok = cm && !frame_class( cm->model.frame() ).transitive && three_world > 0;
        std::string detail = cm ? "least countermodel " + std::to_string( cm->model.frame().size() ) + " worlds, non-transitive"
                                : std::string( "no countermodel" );
        detail += "; " + std::to_string( three_world ) + " non-transitive rooted 3-world frames refute it";
        out.checks.push_back( { "tr(" + std::string( schema_name( s ) ) + ") fails on a non-transitive 3-world model", ok, detail } );
    }
    return out;
}

} // namespace

SuiteResult run_suite( std::string_view id, unsigned threads )
{
    auto t0 = Clock::now();
    SuiteResult r;
    if ( id == "gl" )
        r = gl_oracle_suite( threads );
    else if ( id == "gl3" )
        r = linear_order_suite();
    else if ( id == "thm2.1" )
        r = substitution_suite();
    else if ( id == "thm4.5" )
        r = ignatiev_suite();
    else if ( id == "thm5.4" )
        r = constants_suite();
    else if ( id == "prop6.5" )
        r = g1_embedding_suite();
    else if ( id == "gl4" )
        r = gl4_engines_suite();
    else if ( id == "thm7.12" )
        r = translation_suite( threads );
    else
        throw std::invalid_argument( "unknown suite '" + std::string( id ) + "'" );
    r.seconds = seconds_since( t0 );
    return r;
}

} // namespace provlog
