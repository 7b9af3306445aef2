#include "provlog/kripke_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace provlog {

namespace {

bool numeric_id( const std::string& s )
{
    if ( s.empty() || s.size() > 18 )
        return false;
    if ( s.size() > 1 && s[ 0 ] == '0' )
        return false;
    return std::all_of( s.begin(), s.end(), []( char c ) { return std::isdigit( static_cast< unsigned char >( c ) ); } );
}

nlohmann::json id_to_json( const std::string& s )
{
    if ( numeric_id( s ) )
        return std::stoll( s );
    return s;
}

std::string id_from_json( const nlohmann::json& j )
{
    if ( j.is_string() )
        return j.get< std::string >();
    if ( j.is_number_integer() )
        return std::to_string( j.get< long long >() );
    throw PreconditionError( "world ids must be strings or integers, got " + j.dump() );
}

std::string quote( const std::string& s )
{
    std::string out = "\"";
    for ( char c : s ) {
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

nlohmann::json frame_to_json( const Frame& fr )
{
    nlohmann::json worlds = nlohmann::json::array();
    for ( const auto& n : fr.names() )
        worlds.push_back( id_to_json( n ) );
    nlohmann::json rel = nlohmann::json::array();
    for ( auto [ a, b ] : fr.edges() )
        rel.push_back( { id_to_json( fr.name( a ) ), id_to_json( fr.name( b ) ) } );
    return { { "worlds", worlds }, { "rel", rel } };
}

nlohmann::json model_to_json( const Model& m )
{
    auto j = frame_to_json( m.frame() );
    nlohmann::json val = nlohmann::json::object();
    for ( const auto& [ atom, set ] : m.valuation() ) {
        nlohmann::json ws = nlohmann::json::array();
        for ( auto w = set.find_first(); w != WorldSet::npos; w = set.find_next( w ) )
            ws.push_back( id_to_json( m.frame().name( w ) ) );
        val[ atom ] = ws;
    }
    j[ "val" ] = val;
    return j;
}

Frame frame_from_json( const nlohmann::json& j )
{
    if ( !j.is_object() || !j.contains( "worlds" ) || !j[ "worlds" ].is_array() )
        throw PreconditionError( "frame JSON needs a \"worlds\" array" );
    std::vector< std::string > worlds;
    for ( const auto& w : j[ "worlds" ] )
        worlds.push_back( id_from_json( w ) );
    std::vector< Frame::Edge > rel;
    if ( j.contains( "rel" ) ) {
        if ( !j[ "rel" ].is_array() )
            throw PreconditionError( "\"rel\" must be an array of pairs" );
        for ( const auto& e : j[ "rel" ] ) {
            if ( !e.is_array() || e.size() != 2 )
                throw PreconditionError( "relation entries must be pairs, got " + e.dump() );
            rel.emplace_back( id_from_json( e[ 0 ] ), id_from_json( e[ 1 ] ) );
        }
    }
    return Frame( std::move( worlds ), rel );
}

Model model_from_json( const nlohmann::json& j )
{
    Frame fr = frame_from_json( j );
    std::map< std::string, WorldSet > val;
    if ( j.contains( "val" ) ) {
        if ( !j[ "val" ].is_object() )
            throw PreconditionError( "\"val\" must map atoms to world lists" );
        for ( const auto& [ atom, ws ] : j[ "val" ].items() ) {
            if ( !ws.is_array() )
                throw PreconditionError( "valuation of '" + atom + "' must be an array" );
            WorldSet s = fr.empty_set();
            for ( const auto& w : ws )
                s.set( fr.index( id_from_json( w ) ) );
            val.emplace( atom, std::move( s ) );
        }
    }
    return Model( std::move( fr ), std::move( val ) );
}

std::string frame_to_dot( const Frame& fr, std::optional< std::size_t > marked )
{
    std::ostringstream out;
    out << "digraph frame {\n  rankdir=BT;\n";
    for ( std::size_t w = 0; w < fr.size(); ++w )
        out << "  w" << w << " [label=" << quote( fr.name( w ) )
            << ( marked && *marked == w ? ", shape=doublecircle" : ", shape=circle" ) << "];\n";
    for ( auto [ a, b ] : fr.edges() )
        out << "  w" << a << " -> w" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string model_to_dot( const Model& m, std::optional< std::size_t > marked )
{
    const auto& fr = m.frame();
    std::ostringstream out;
    out << "digraph model {\n  rankdir=BT;\n";
    for ( std::size_t w = 0; w < fr.size(); ++w ) {
        std::string atoms;
        for ( const auto& [ atom, set ] : m.valuation() )
            if ( set.test( w ) )
                atoms += " " + atom;
        std::string label = atoms.empty() ? fr.name( w ) : fr.name( w ) + ":" + atoms;
        out << "  w" << w << " [label=" << quote( label )
            << ( marked && *marked == w ? ", shape=doublecircle" : ", shape=circle" ) << "];\n";
    }
    for ( auto [ a, b ] : fr.edges() )
        out << "  w" << a << " -> w" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace provlog
