#pragma once

#include "provlog/formula.hpp"
#include "provlog/glprover.hpp"

namespace provlog {

/// The identity on every connective except |>, which becomes
///   (A |> B)^tr = [](A^tr -> (B^tr | <>B^tr)).
/// PreconditionError for boxes above level 0.
[[nodiscard]] Formula translate_tr( const Formula& f );

/// ILW.3 through GL.3: decide_gl3 applied to translate_tr(f). A refutation
/// carries a linear countermodel of the translation, not of f itself.
[[nodiscard]] Verdict decide_ilw3( const Formula& f, const DecideOptions& opts = {} );

// Instances of L1-L3, J1-J5, M, P, W and the linearity axiom; SchemaError otherwise.
[[nodiscard]] Formula il_axiom_instance( Schema s, const SchemaArgs& args );

} // namespace provlog
