#include "provlog/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace provlog {

struct Formula::Node
{
    Kind kind;
    unsigned data = 0;  // box level or constant index
    std::string name;
    std::vector< Formula > kids;
    std::size_t hash = 0;
    std::size_t size = 1;
};

namespace {

std::size_t mix( std::size_t seed, std::size_t value )
{
    return seed ^ ( value + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ) );
}

bool is_keyword( std::string_view id )
{
    return id == "bot" || id == "top" || id == "boxplus";
}

bool is_constant_name( std::string_view id )
{
    return id.size() >= 2 && id[ 0 ] == 's'
           && std::all_of( id.begin() + 1, id.end(), []( char c ) { return std::isdigit( static_cast< unsigned char >( c ) ); } );
}

bool valid_identifier( std::string_view id )
{
    if ( id.empty() || !std::islower( static_cast< unsigned char >( id[ 0 ] ) ) )
        return false;
    return std::all_of( id.begin(), id.end(), []( char c ) {
        return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_';
    } );
}

} // namespace

// ---------------------------------------------------------------------------
// construction

Formula Formula::bot()
{
    static const Formula instance{ std::make_shared< const Node >( Node{ Kind::Bot, 0, {}, {}, 0x51ed270b27b1f5a1ULL, 1 } ) };
    return instance;
}

Formula Formula::var( std::string name )
{
    if ( !valid_identifier( name ) || is_keyword( name ) || is_constant_name( name ) )
        throw std::invalid_argument( "invalid variable name '" + name + "'" );
    auto h = mix( 0x2545f4914f6cdd1dULL, std::hash< std::string >{}( name ) );
    return Formula{ std::make_shared< const Node >( Node{ Kind::Var, 0, std::move( name ), {}, h, 1 } ) };
}

Formula Formula::constant( unsigned index )
{
    if ( index == 0 )
        throw std::invalid_argument( "constant indices start at 1" );
    auto h = mix( 0x9b05688c2b3e6c1fULL, index );
    return Formula{ std::make_shared< const Node >( Node{ Kind::Const, index, {}, {}, h, 1 } ) };
}

Formula Formula::implies( Formula lhs, Formula rhs )
{
    auto h = mix( mix( 0x1f83d9abfb41bd6bULL, lhs.hash() ), rhs.hash() );
    auto s = 1 + lhs.size() + rhs.size();
    return Formula{ std::make_shared< const Node >( Node{ Kind::Implies, 0, {}, { std::move( lhs ), std::move( rhs ) }, h, s } ) };
}

Formula Formula::box( unsigned level, Formula body )
{
    auto h = mix( mix( 0x5be0cd19137e2179ULL, level ), body.hash() );
    auto s = 1 + body.size();
    return Formula{ std::make_shared< const Node >( Node{ Kind::Box, level, {}, { std::move( body ) }, h, s } ) };
}

Formula Formula::rhd( Formula lhs, Formula rhs )
{
    auto h = mix( mix( 0xcbbb9d5dc1059ed8ULL, lhs.hash() ), rhs.hash() );
    auto s = 1 + lhs.size() + rhs.size();
    return Formula{ std::make_shared< const Node >( Node{ Kind::Rhd, 0, {}, { std::move( lhs ), std::move( rhs ) }, h, s } ) };
}

Formula Formula::top() { return implies( bot(), bot() ); }
Formula Formula::neg( Formula f ) { return implies( std::move( f ), bot() ); }

Formula Formula::conj( Formula lhs, Formula rhs )
{
    return neg( implies( std::move( lhs ), neg( std::move( rhs ) ) ) );
}

Formula Formula::disj( Formula lhs, Formula rhs )
{
    return implies( neg( std::move( lhs ) ), std::move( rhs ) );
}

Formula Formula::iff( Formula lhs, Formula rhs )
{
    return conj( implies( lhs, rhs ), implies( rhs, lhs ) );
}

Formula Formula::diamond( unsigned level, Formula body )
{
    return neg( box( level, neg( std::move( body ) ) ) );
}

Formula Formula::boxplus( Formula body )
{
    auto boxed = box( 0, body );
    return conj( std::move( body ), std::move( boxed ) );
}

Formula Formula::box_power( unsigned k, Formula body )
{
    for ( unsigned i = 0; i < k; ++i )
        body = box( 0, std::move( body ) );
    return body;
}

Formula Formula::diamond_power( unsigned k, Formula body )
{
    for ( unsigned i = 0; i < k; ++i )
        body = diamond( 0, std::move( body ) );
    return body;
}

// ---------------------------------------------------------------------------
// accessors

Formula::Kind Formula::kind() const { return _node->kind; }

const std::string& Formula::name() const
{
    if ( kind() != Kind::Var )
        throw std::logic_error( "Formula::name on a non-variable" );
    return _node->name;
}

unsigned Formula::index() const
{
    if ( kind() != Kind::Const )
        throw std::logic_error( "Formula::index on a non-constant" );
    return _node->data;
}

unsigned Formula::level() const
{
    if ( kind() != Kind::Box )
        throw std::logic_error( "Formula::level on a non-box" );
    return _node->data;
}

const Formula& Formula::lhs() const
{
    if ( kind() != Kind::Implies && kind() != Kind::Rhd )
        throw std::logic_error( "Formula::lhs on a non-binary node" );
    return _node->kids[ 0 ];
}

const Formula& Formula::rhs() const
{
    if ( kind() != Kind::Implies && kind() != Kind::Rhd )
        throw std::logic_error( "Formula::rhs on a non-binary node" );
    return _node->kids[ 1 ];
}

const Formula& Formula::body() const
{
    if ( kind() != Kind::Box )
        throw std::logic_error( "Formula::body on a non-box" );
    return _node->kids[ 0 ];
}

std::string Formula::atom_name() const
{
    if ( kind() == Kind::Var )
        return _node->name;
    if ( kind() == Kind::Const )
        return "s" + std::to_string( _node->data );
    throw std::logic_error( "Formula::atom_name on a non-atom" );
}

std::size_t Formula::hash() const { return _node->hash; }
std::size_t Formula::size() const { return _node->size; }

bool operator==( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return true;
    if ( a._node->hash != b._node->hash || a._node->size != b._node->size )
        return false;
    return ( a <=> b ) == 0;
}

std::strong_ordering operator<=>( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;
    const auto& x = *a._node;
    const auto& y = *b._node;
    if ( auto c = x.kind <=> y.kind; c != 0 )
        return c;
    if ( auto c = x.data <=> y.data; c != 0 )
        return c;
    if ( auto c = x.name <=> y.name; c != 0 )
        return c;
    for ( std::size_t i = 0; i < x.kids.size(); ++i )
        if ( auto c = x.kids[ i ] <=> y.kids[ i ]; c != 0 )
            return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// fragments

std::string Language::to_string() const
{
    switch ( kind ) {
    case Kind::ClosedB: return "closed fragment B";
    case Kind::ClosedD: return "closed fragment D";
    case Kind::Fn: return "fragment F" + std::to_string( n );
    case Kind::FullGL: return "full GL language";
    case Kind::FullIL: return "full IL language";
    }
    return "?";
}

namespace {

// Returns the first subformula violating the fragment, or nullptr.
const Formula* fragment_violation( const Formula& f, const Language& lang )
{
    using K = Formula::Kind;
    switch ( f.kind() ) {
    case K::Bot: return nullptr;
    case K::Var:
        return lang.kind == Language::Kind::FullGL || lang.kind == Language::Kind::FullIL ? nullptr : &f;
    case K::Const:
        switch ( lang.kind ) {
        case Language::Kind::FullGL:
        case Language::Kind::FullIL: return nullptr;
        case Language::Kind::Fn: return f.index() <= lang.n ? nullptr : &f;
        default: return &f;
        }
    case K::Implies:
        if ( auto* v = fragment_violation( f.lhs(), lang ) )
            return v;
        return fragment_violation( f.rhs(), lang );
    case K::Box:
        if ( f.level() > 0 && lang.kind != Language::Kind::ClosedD && lang.kind != Language::Kind::FullGL
             && lang.kind != Language::Kind::FullIL )
            return &f;
        return fragment_violation( f.body(), lang );
    case K::Rhd:
        if ( lang.kind != Language::Kind::FullIL )
            return &f;
        if ( auto* v = fragment_violation( f.lhs(), lang ) )
            return v;
        return fragment_violation( f.rhs(), lang );
    }
    return nullptr;
}

} // namespace

bool in_fragment( const Formula& f, const Language& lang ) { return fragment_violation( f, lang ) == nullptr; }

void require_fragment( const Formula& f, const Language& lang )
{
    if ( const auto* bad = fragment_violation( f, lang ) )
        throw FragmentError( "formula " + print( f ) + " is outside the " + lang.to_string() + ": offending part "
                             + print( *bad ) );
}

// ---------------------------------------------------------------------------
// parser

namespace {

enum class Tok : std::uint8_t { LParen, RParen, Not, And, Or, Imp, Iff, Box, Diamond, Rhd, Boxplus, Bot, Top, Ident, End };

struct Token
{
    Tok type;
    std::size_t pos;
    unsigned level = 0;
    std::string text{};
};

std::vector< Token > lex( std::string_view s )
{
    std::vector< Token > out;
    std::size_t i = 0;
    auto digits = [ & ]( std::size_t from, std::size_t& to ) {
        to = from;
        while ( to < s.size() && std::isdigit( static_cast< unsigned char >( s[ to ] ) ) )
            ++to;
        return to > from;
    };
    while ( i < s.size() ) {
        char c = s[ i ];
        if ( std::isspace( static_cast< unsigned char >( c ) ) ) {
            ++i;
            continue;
        }
        std::size_t start = i;
        switch ( c ) {
        case '(': out.push_back( { Tok::LParen, start } ); ++i; continue;
        case ')': out.push_back( { Tok::RParen, start } ); ++i; continue;
        case '~': out.push_back( { Tok::Not, start } ); ++i; continue;
        case '&': out.push_back( { Tok::And, start } ); ++i; continue;
        case '|':
            if ( i + 1 < s.size() && s[ i + 1 ] == '>' ) {
                out.push_back( { Tok::Rhd, start } );
                i += 2;
            } else {
                out.push_back( { Tok::Or, start } );
                ++i;
            }
            continue;
        case '-':
            if ( i + 1 < s.size() && s[ i + 1 ] == '>' ) {
                out.push_back( { Tok::Imp, start } );
                i += 2;
                continue;
            }
            throw SyntaxError( "expected '->'", start );
        case '[': {
            if ( i + 1 < s.size() && s[ i + 1 ] == ']' ) {
                out.push_back( { Tok::Box, start, 0 } );
                i += 2;
                continue;
            }
            std::size_t end;
            if ( digits( i + 1, end ) && end < s.size() && s[ end ] == ']' ) {
                out.push_back( { Tok::Box, start, static_cast< unsigned >( std::stoul( std::string( s.substr( i + 1, end - i - 1 ) ) ) ) } );
                i = end + 1;
                continue;
            }
            throw SyntaxError( "malformed box", start );
        }
        case '<': {
            if ( i + 2 < s.size() && s[ i + 1 ] == '-' && s[ i + 2 ] == '>' ) {
                out.push_back( { Tok::Iff, start } );
                i += 3;
                continue;
            }
            if ( i + 1 < s.size() && s[ i + 1 ] == '>' ) {
                out.push_back( { Tok::Diamond, start, 0 } );
                i += 2;
                continue;
            }
            std::size_t end;
            if ( digits( i + 1, end ) && end < s.size() && s[ end ] == '>' ) {
                out.push_back( { Tok::Diamond, start, static_cast< unsigned >( std::stoul( std::string( s.substr( i + 1, end - i - 1 ) ) ) ) } );
                i = end + 1;
                continue;
            }
            throw SyntaxError( "malformed diamond", start );
        }
        default: break;
        }
        if ( std::isalpha( static_cast< unsigned char >( c ) ) ) {
            std::size_t end = i;
            while ( end < s.size() && ( std::isalnum( static_cast< unsigned char >( s[ end ] ) ) || s[ end ] == '_' ) )
                ++end;
            std::string id( s.substr( i, end - i ) );
            if ( id == "bot" )
                out.push_back( { Tok::Bot, start } );
            else if ( id == "top" )
                out.push_back( { Tok::Top, start } );
            else if ( id == "boxplus" )
                out.push_back( { Tok::Boxplus, start } );
            else if ( !std::islower( static_cast< unsigned char >( id[ 0 ] ) ) )
                throw SyntaxError( "identifiers must start with a lowercase letter: '" + id + "'", start );
            else
                out.push_back( { Tok::Ident, start, 0, id } );
            i = end;
            continue;
        }
        throw SyntaxError( std::string( "unexpected character '" ) + c + "'", start );
    }
    out.push_back( { Tok::End, s.size() } );
    return out;
}

class Parser
{
public:
    Parser( std::vector< Token > toks, const Language& lang ) : _toks{ std::move( toks ) }, _lang{ lang } {}

    Formula run()
    {
        auto f = implication();
        if ( peek().type != Tok::End )
            throw SyntaxError( "unexpected trailing input", peek().pos );
        return f;
    }

private:
    const Token& peek() const { return _toks[ _pos ]; }
    const Token& next() { return _toks[ _pos++ ]; }

    Formula implication()
    {
        auto lhs = rhd_level();
        if ( peek().type == Tok::Imp ) {
            next();
            return Formula::implies( std::move( lhs ), implication() );
        }
        if ( peek().type == Tok::Iff ) {
            next();
            return Formula::iff( std::move( lhs ), implication() );
        }
        return lhs;
    }

    Formula rhd_level()
    {
        auto lhs = disjunction();
        while ( peek().type == Tok::Rhd ) {
            auto pos = next().pos;
            if ( _lang.kind != Language::Kind::FullIL )
                throw FragmentError( "'|>' at position " + std::to_string( pos ) + " is outside the " + _lang.to_string() );
            lhs = Formula::rhd( std::move( lhs ), disjunction() );
        }
        return lhs;
    }

    Formula disjunction()
    {
        auto lhs = conjunction();
        while ( peek().type == Tok::Or ) {
            next();
            lhs = Formula::disj( std::move( lhs ), conjunction() );
        }
        return lhs;
    }

    Formula conjunction()
    {
        auto lhs = unary();
        while ( peek().type == Tok::And ) {
            next();
            lhs = Formula::conj( std::move( lhs ), unary() );
        }
        return lhs;
    }

    Formula unary()
    {
        const auto& t = peek();
        switch ( t.type ) {
        case Tok::Not: next(); return Formula::neg( unary() );
        case Tok::Box: {
            auto level = next().level;
            return Formula::box( level, unary() );
        }
        case Tok::Diamond: {
            auto level = next().level;
            return Formula::diamond( level, unary() );
        }
        case Tok::Boxplus: next(); return Formula::boxplus( unary() );
        default: return atom();
        }
    }

    Formula atom()
    {
        const auto& t = next();
        switch ( t.type ) {
        case Tok::Bot: return Formula::bot();
        case Tok::Top: return Formula::top();
        case Tok::Ident:
            if ( is_constant_name( t.text ) ) {
                auto idx = std::stoul( t.text.substr( 1 ) );
                if ( idx == 0 )
                    throw SyntaxError( "constant indices start at 1", t.pos );
                return Formula::constant( static_cast< unsigned >( idx ) );
            }
            return Formula::var( t.text );
        case Tok::LParen: {
            auto f = implication();
            if ( peek().type != Tok::RParen )
                throw SyntaxError( "expected ')'", peek().pos );
            next();
            return f;
        }
        case Tok::End: throw SyntaxError( "unexpected end of input", t.pos );
        default: throw SyntaxError( "expected a formula", t.pos );
        }
    }

    std::vector< Token > _toks;
    Language _lang;
    std::size_t _pos = 0;
};

} // namespace

Formula parse( std::string_view text, const Language& lang )
{
    auto f = Parser{ lex( text ), lang }.run();
    require_fragment( f, lang );
    return f;
}

// ---------------------------------------------------------------------------
// printer

namespace {

// Binding strength of the printed form; higher binds tighter.
enum Prec : int { PrecImp = 0, PrecRhd = 1, PrecOr = 2, PrecAnd = 3, PrecUnary = 4 };

bool is_neg( const Formula& f ) { return f.is( Formula::Kind::Implies ) && f.rhs().is( Formula::Kind::Bot ); }

// Recognized derived shape of an Implies node.
struct View
{
    enum Kind { Top, Not, And, Or, Diamond, Iff, Boxplus, Imp } kind;
    const Formula* a = nullptr;
    const Formula* b = nullptr;
    unsigned level = 0;
};

View view_of( const Formula& f )
{
    const auto& l = f.lhs();
    const auto& r = f.rhs();
    if ( r.is( Formula::Kind::Bot ) ) {
        if ( l.is( Formula::Kind::Bot ) )
            return { View::Top };
        if ( l.is( Formula::Kind::Implies ) && is_neg( l.rhs() ) ) {
            // ~(A -> ~B) is A & B
            const auto& a = l.lhs();
            const auto& b = l.rhs().lhs();
            if ( a.is( Formula::Kind::Implies ) && b.is( Formula::Kind::Implies ) && a.lhs() == b.rhs()
                 && a.rhs() == b.lhs() )
                return { View::Iff, &a.lhs(), &a.rhs() };
            if ( b.is( Formula::Kind::Box ) && b.level() == 0 && b.body() == a )
                return { View::Boxplus, &a };
            return { View::And, &a, &b };
        }
        if ( l.is( Formula::Kind::Box ) && is_neg( l.body() ) )
            return { View::Diamond, &l.body().lhs(), nullptr, l.level() };
        return { View::Not, &l };
    }
    if ( is_neg( l ) )
        return { View::Or, &l.lhs(), &r };
    return { View::Imp, &l, &r };
}

void emit( const Formula& f, int ctx, std::string& out );

void emit_prefix( const std::string& op, const Formula& operand, int ctx, std::string& out )
{
    bool paren = ctx > PrecUnary;
    if ( paren )
        out += '(';
    out += op;
    emit( operand, PrecUnary, out );
    if ( paren )
        out += ')';
}

void emit_binary( const Formula& a, const char* op, const Formula& b, int prec, int lctx, int rctx, int ctx, std::string& out )
{
    bool paren = ctx > prec;
    if ( paren )
        out += '(';
    emit( a, lctx, out );
    out += op;
    emit( b, rctx, out );
    if ( paren )
        out += ')';
}

void emit( const Formula& f, int ctx, std::string& out )
{
    using K = Formula::Kind;
    switch ( f.kind() ) {
    case K::Bot: out += "bot"; return;
    case K::Var:
    case K::Const: out += f.atom_name(); return;
    case K::Box:
        emit_prefix( f.level() == 0 ? "[]" : "[" + std::to_string( f.level() ) + "]", f.body(), ctx, out );
        return;
    case K::Rhd: emit_binary( f.lhs(), " |> ", f.rhs(), PrecRhd, PrecRhd, PrecOr, ctx, out ); return;
    case K::Implies: break;
    }
    auto v = view_of( f );
    switch ( v.kind ) {
    case View::Top: out += "top"; return;
    case View::Not: emit_prefix( "~", *v.a, ctx, out ); return;
    case View::Diamond: emit_prefix( v.level == 0 ? "<>" : "<" + std::to_string( v.level ) + ">", *v.a, ctx, out ); return;
    case View::Boxplus: emit_prefix( "boxplus ", *v.a, ctx, out ); return;
    case View::And: emit_binary( *v.a, " & ", *v.b, PrecAnd, PrecAnd, PrecUnary, ctx, out ); return;
    case View::Or: emit_binary( *v.a, " | ", *v.b, PrecOr, PrecOr, PrecAnd, ctx, out ); return;
    case View::Iff: emit_binary( *v.a, " <-> ", *v.b, PrecImp, PrecRhd, PrecImp, ctx, out ); return;
    case View::Imp: emit_binary( *v.a, " -> ", *v.b, PrecImp, PrecRhd, PrecImp, ctx, out ); return;
    }
}

} // namespace

std::string print( const Formula& f )
{
    std::string out;
    emit( f, PrecImp, out );
    return out;
}

// ---------------------------------------------------------------------------
// structural analysis

unsigned modal_depth( const Formula& f )
{
    using K = Formula::Kind;
    switch ( f.kind() ) {
    case K::Bot:
    case K::Var:
    case K::Const: return 0;
    case K::Implies: return std::max( modal_depth( f.lhs() ), modal_depth( f.rhs() ) );
    case K::Box: return 1 + modal_depth( f.body() );
    case K::Rhd: return 2 + std::max( modal_depth( f.lhs() ), modal_depth( f.rhs() ) );
    }
    return 0;
}

namespace {

void collect( const Formula& f, std::unordered_set< Formula, FormulaHash >& seen )
{
    if ( !seen.insert( f ).second )
        return;
    switch ( f.kind() ) {
    case Formula::Kind::Implies:
    case Formula::Kind::Rhd:
        collect( f.lhs(), seen );
        collect( f.rhs(), seen );
        break;
    case Formula::Kind::Box: collect( f.body(), seen ); break;
    default: break;
    }
}

std::vector< Formula > sorted( const std::unordered_set< Formula, FormulaHash >& s )
{
    std::vector< Formula > v( s.begin(), s.end() );
    std::sort( v.begin(), v.end() );
    return v;
}

} // namespace

std::vector< Formula > subformulas( const Formula& f )
{
    std::unordered_set< Formula, FormulaHash > seen;
    collect( f, seen );
    return sorted( seen );
}

std::vector< Formula > atoms( const Formula& f )
{
    std::vector< Formula > out;
    for ( auto& g : subformulas( f ) )
        if ( g.is_atom() )
            out.push_back( g );
    return out;
}

std::size_t box_count( const Formula& f )
{
    auto subs = subformulas( f );
    return static_cast< std::size_t >(
        std::count_if( subs.begin(), subs.end(), []( const Formula& g ) { return g.is( Formula::Kind::Box ); } ) );
}

unsigned max_box_level( const Formula& f )
{
    switch ( f.kind() ) {
    case Formula::Kind::Implies:
    case Formula::Kind::Rhd: return std::max( max_box_level( f.lhs() ), max_box_level( f.rhs() ) );
    case Formula::Kind::Box: return std::max( f.level(), max_box_level( f.body() ) );
    default: return 0;
    }
}

bool contains_rhd( const Formula& f )
{
    switch ( f.kind() ) {
    case Formula::Kind::Rhd: return true;
    case Formula::Kind::Implies: return contains_rhd( f.lhs() ) || contains_rhd( f.rhs() );
    case Formula::Kind::Box: return contains_rhd( f.body() );
    default: return false;
    }
}

Formula substitute( const Formula& f, const std::map< std::string, Formula >& subst )
{
    switch ( f.kind() ) {
    case Formula::Kind::Var: {
        auto it = subst.find( f.name() );
        return it == subst.end() ? f : it->second;
    }
    case Formula::Kind::Implies: return Formula::implies( substitute( f.lhs(), subst ), substitute( f.rhs(), subst ) );
    case Formula::Kind::Rhd: return Formula::rhd( substitute( f.lhs(), subst ), substitute( f.rhs(), subst ) );
    case Formula::Kind::Box: return Formula::box( f.level(), substitute( f.body(), subst ) );
    default: return f;
    }
}

} // namespace provlog
