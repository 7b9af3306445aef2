#include "provlog/interp.hpp"

namespace provlog {

Formula translate_tr( const Formula& f )
{
    switch ( f.kind() ) {
    case Formula::Kind::Bot:
    case Formula::Kind::Var:
    case Formula::Kind::Const: return f;
    case Formula::Kind::Implies: return Formula::implies( translate_tr( f.lhs() ), translate_tr( f.rhs() ) );
    case Formula::Kind::Box:
        if ( f.level() != 0 )
            throw PreconditionError( "translation is defined for level-0 boxes only" );
        return Formula::box( translate_tr( f.body() ) );
    case Formula::Kind::Rhd: {
        auto a = translate_tr( f.lhs() );
        auto b = translate_tr( f.rhs() );
        return Formula::box( Formula::implies( a, Formula::disj( b, Formula::diamond( b ) ) ) );
    }
    }
    return f;
}

Verdict decide_ilw3( const Formula& f, const DecideOptions& opts )
{
    auto tr = translate_tr( f );
    auto v = decide_gl3( tr, opts );
    if ( auto* r = std::get_if< Refuted >( &v ) )
        r->note = "countermodel to the translation " + print( tr ) + ": " + r->note;
    else
        std::get< Provable >( v ).trace.insert( std::get< Provable >( v ).trace.begin(), "translated to " + print( tr ) );
    return v;
}

Formula il_axiom_instance( Schema s, const SchemaArgs& args )
{
    if ( !is_il_schema( s ) )
        throw SchemaError( "schema " + std::string( schema_name( s ) ) + " is not an interpretability axiom" );
    return instantiate_schema( s, args );
}

} // namespace provlog
