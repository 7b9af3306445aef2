#include "provlog/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "provlog/experiments.hpp"
#include "provlog/fgl.hpp"
#include "provlog/glprover.hpp"
#include "provlog/ignatiev.hpp"
#include "provlog/interp.hpp"
#include "provlog/kripke_io.hpp"
#include "provlog/pmorphism.hpp"
#include "provlog/search.hpp"

namespace provlog {

namespace {

using nlohmann::json;

constexpr const char* schema_version = "provlog/1";

json read_json_file( const std::string& path )
{
    std::ifstream in( path );
    if ( !in )
        throw PreconditionError( "cannot open " + path );
    try {
        return json::parse( in );
    } catch ( const json::parse_error& e ) {
        throw PreconditionError( path + ": " + e.what() );
    }
}

void write_file( const std::string& path, const std::string& text )
{
    std::ofstream f( path );
    if ( !f )
        throw PreconditionError( "cannot write " + path );
    f << text;
}

struct DecideArgs
{
    std::string logic;
    std::string formula;
    bool cross_check = false;
    std::string dot;
    bool json = false;
    std::size_t max_worlds = 6;
    double timeout = 10;
};

int decide( const DecideArgs& a, std::ostream& out )
{
    DecideOptions opts;
    opts.cross_check = a.cross_check;
    opts.max_worlds = a.max_worlds;
    opts.timeout = std::chrono::milliseconds( static_cast< long long >( a.timeout * 1000 ) );
    opts.threads = default_threads();

    Verdict v;
    if ( a.logic == "gl" )
        v = decide_gl( parse( a.formula ), opts );
    else if ( a.logic == "gl3" )
        v = decide_gl3( parse( a.formula ), opts );
    else if ( a.logic == "gl4" )
        v = decide_gl4( parse( a.formula ), opts );
    else if ( a.logic == "glclosed" )
        v = decide_gl_closed( parse( a.formula, Language::closed_b() ), opts );
    else if ( a.logic == "ilw3" )
        v = decide_ilw3( parse( a.formula, Language::full_il() ), opts );
    else if ( a.logic.rfind( "fgl:", 0 ) == 0 ) {
        unsigned n = 0;
        try {
            std::size_t used = 0;
            n = static_cast< unsigned >( std::stoul( a.logic.substr( 4 ), &used ) );
            if ( used != a.logic.size() - 4 )
                throw std::invalid_argument( "trailing text" );
        } catch ( const std::logic_error& ) {
            throw PreconditionError( "bad logic '" + a.logic + "', expected fgl:<n>" );
        }
        v = decide_fgl( n, parse( a.formula, Language::fn( n ) ) );
    } else
        throw PreconditionError( "unknown logic '" + a.logic + "'" );

    const auto* r = std::get_if< Refuted >( &v );
    if ( r && !a.dot.empty() )
        write_file( a.dot, model_to_dot( r->model, r->world ) );
    if ( a.json ) {
        json j{ { "schema", schema_version }, { "logic", a.logic }, { "verdict", r ? "refuted" : "provable" } };
        if ( r ) {
            j[ "note" ] = r->note;
            j[ "world" ] = r->model.frame().name( r->world );
            j[ "model" ] = model_to_json( r->model );
        }
        out << j.dump( 2 ) << "\n";
    } else if ( r ) {
        out << "refuted: " << r->note << "\n";
        if ( a.dot.empty() )
            out << model_to_dot( r->model, r->world );
    } else
        out << "provable\n";
    return r ? 1 : 0;
}

int ignatiev( std::size_t bound, unsigned levels, const std::string& export_format,
              const std::vector< std::string >& linearity, std::ostream& out )
{
    TruncatedUniverse tu( bound, levels );
    if ( export_format == "json" ) {
        out << truncation_to_json( tu ).dump( 2 ) << "\n";
        return 0;
    }
    if ( export_format == "dot" ) {
        out << truncation_to_dot( tu );
        return 0;
    }
    if ( !linearity.empty() ) {
        auto report = linearity_experiment( tu, parse( linearity[ 0 ], Language::closed_d() ),
                                            parse( linearity[ 1 ], Language::closed_d() ) );
        out << "instance: " << print( report.instance ) << "\n";
        out << "points checked: " << report.points_checked << "\n";
        out << "violations: " << report.violations.size() << "\n";
        for ( const auto& v : report.violations )
            out << "  at " << print_point( v.point ) << ": " << print_point( v.left_witness ) << " / "
                << print_point( v.right_witness ) << "\n";
        return report.violations.empty() ? 0 : 1;
    }
    out << "bound " << bound << ", levels 0.." << levels << " (approximation of the full frame)\n";
    out << "points: " << tu.points().size() << "\n";
    for ( unsigned n = 0; n <= levels; ++n ) {
        std::size_t edges = 0;
        for ( std::size_t p = 0; p < tu.points().size(); ++p )
            edges += tu.successors( n, p ).size();
        out << "R" << n << " edges: " << edges << "\n";
    }
    return 0;
}

int pmorph( const std::string& path, const std::string& world, std::ostream& out )
{
    Frame target = frame_from_json( read_json_file( path ) );
    auto x = target.find( world );
    if ( !x )
        throw PreconditionError( "frame has no world '" + world + "'" );
    auto emb = build_pmorphism_from_G1( target, *x );
    auto check = verify_pmorphism( emb.morphism );
    json map = json::object();
    for ( std::size_t s = 0; s < emb.morphism.map.size(); ++s )
        map[ emb.morphism.source.name( s ) ] = emb.morphism.target.name( emb.morphism.map[ s ] );
    json j{ { "schema", schema_version },
            { "point", { { "row", emb.row }, { "column", emb.column } } },
            { "map", map },
            { "verified", check.ok } };
    out << j.dump( 2 ) << "\n";
    return check.ok ? 0 : 1;
}

int experiment( const std::string& suite, bool as_json, std::ostream& out )
{
    std::vector< std::string > ids;
    if ( suite == "all" )
        ids = suite_ids();
    else
        ids.push_back( suite );
    bool all_passed = true;
    json results = json::array();
    for ( const auto& id : ids ) {
        auto r = run_suite( id, default_threads() );
        all_passed = all_passed && r.passed();
        if ( as_json ) {
            json checks = json::array();
            for ( const auto& c : r.checks )
                checks.push_back( { { "name", c.name }, { "passed", c.passed }, { "detail", c.detail } } );
            results.push_back( { { "id", r.id }, { "title", r.title }, { "passed", r.passed() }, { "checks", checks } } );
            continue;
        }
        out << ( r.passed() ? "PASS " : "FAIL " ) << r.id << "  " << r.title << "\n";
        for ( const auto& c : r.checks )
            out << "  [" << ( c.passed ? "ok" : "FAILED" ) << "] " << c.name << ": " << c.detail << "\n";
    }
    if ( as_json )
        out << json{ { "schema", schema_version }, { "suites", results } }.dump( 2 ) << "\n";
    return all_passed ? 0 : 1;
}

} // namespace

int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Decision procedures and experiments for provability logics", "provlog" };
    app.require_subcommand( 1 );

    DecideArgs da;
    auto* dec = app.add_subcommand( "decide", "decide theoremhood, printing a countermodel when refuted" );
    dec->add_option( "--logic", da.logic, "gl, gl3, gl4, glclosed, fgl:<n> or ilw3" )->required();
    dec->add_option( "--formula", da.formula )->required();
    dec->add_flag( "--cross-check", da.cross_check, "run the independent engines and compare" );
    dec->add_option( "--dot", da.dot, "write the countermodel as Graphviz to this path" );
    dec->add_flag( "--json", da.json );
    dec->add_option( "--max-worlds", da.max_worlds, "brute-force enumeration cap" )->check( CLI::Range( 1, 8 ) );
    dec->add_option( "--timeout", da.timeout, "seconds per decision" )->check( CLI::PositiveNumber );

    unsigned nf_n = 1;
    std::string nf_formula;
    bool nf_json = false;
    auto* nf = app.add_subcommand( "normalform", "normal form of a formula over the constants s1..sn" );
    nf->add_option( "--n", nf_n )->required()->check( CLI::Range( 0, 8 ) );
    nf->add_option( "--formula", nf_formula )->required();
    nf->add_flag( "--json", nf_json );

    std::string tr_formula;
    auto* tr = app.add_subcommand( "translate", "translate an interpretability formula into GL" );
    tr->add_option( "--formula", tr_formula )->required();

    std::string mc_model, mc_world, mc_formula;
    auto* mc = app.add_subcommand( "modelcheck", "truth of a formula at a world of a JSON model" );
    mc->add_option( "--model", mc_model, "model JSON file" )->required();
    mc->add_option( "--world", mc_world )->required();
    mc->add_option( "--formula", mc_formula )->required();

    std::size_t ig_bound = 3;
    unsigned ig_levels = 2;
    std::string ig_export;
    std::vector< std::string > ig_linearity;
    auto* ig = app.add_subcommand( "ignatiev", "truncations of Ignatiev's universal frame" );
    ig->add_option( "--bound", ig_bound, "representation size bound" )->check( CLI::Range( 1, 6 ) );
    ig->add_option( "--levels", ig_levels, "highest materialized relation" )->check( CLI::Range( 0, 8 ) );
    auto* ig_export_opt = ig->add_option( "--export", ig_export )->check( CLI::IsMember( { "json", "dot" } ) );
    ig->add_option( "--linearity", ig_linearity, "closed formulas A B" )->expected( 2 )->excludes( ig_export_opt );

    std::string pm_frame, pm_world;
    auto* pm = app.add_subcommand( "pmorph", "p-morphism from G_1 onto a class C frame" );
    pm->add_option( "--frame", pm_frame, "frame JSON file" )->required();
    pm->add_option( "--world", pm_world )->required();

    std::string ex_suite;
    bool ex_json = false;
    std::vector< std::string > choices = suite_ids();
    choices.push_back( "all" );
    auto* ex = app.add_subcommand( "experiment", "run an acceptance suite" );
    ex->add_option( "--suite", ex_suite )->required()->check( CLI::IsMember( choices ) );
    ex->add_flag( "--json", ex_json );

    try {
        app.parse( argc, argv );
    } catch ( const CLI::CallForHelp& e ) {
        app.exit( e, out, err );
        return 0;
    } catch ( const CLI::CallForAllHelp& e ) {
        app.exit( e, out, err );
        return 0;
    } catch ( const CLI::ParseError& e ) {
        app.exit( e, out, err );
        return 2;
    }

    try {
        if ( dec->parsed() )
            return decide( da, out );
        if ( nf->parsed() ) {
            auto form = normal_form( nf_n, parse( nf_formula, Language::fn( nf_n ) ) );
            if ( nf_json )
                out << json{ { "schema", schema_version }, { "normal_form", form.to_string() }, { "steps", form.steps } }.dump( 2 )
                    << "\n";
            else
                out << form.to_string() << "\n";
            return 0;
        }
        if ( tr->parsed() ) {
            out << print( translate_tr( parse( tr_formula, Language::full_il() ) ) ) << "\n";
            return 0;
        }
        if ( mc->parsed() ) {
            Model m = model_from_json( read_json_file( mc_model ) );
            bool value = check( m, mc_world, parse( mc_formula ) );
            out << ( value ? "true" : "false" ) << "\n";
            return value ? 0 : 1;
        }
        if ( ig->parsed() )
            return ignatiev( ig_bound, ig_levels, ig_export, ig_linearity, out );
        if ( pm->parsed() )
            return pmorph( pm_frame, pm_world, out );
        if ( ex->parsed() )
            return experiment( ex_suite, ex_json, out );
    } catch ( const std::exception& e ) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace provlog
