#pragma once

#include <string>

#include "qmono/algebra.hpp"
#include "qmono/stable.hpp"

namespace qmono {

/// Line-oriented presentation grammar:
///   vertices: name (name)*
///   arrow name: vertex -> vertex
///   relation b.a        # the path "a then b"
/// `#` starts a comment; blank lines are skipped; duplicate declarations
/// are errors. Errors carry line/column positions.
MonomialPresentation parse_presentation(const std::string& text);

/// Canonical text of a presentation; parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const MonomialPresentation& p);

/// Module expressions: terms `A(arrow)`, `S(vertex)`, `P(vertex)`,
/// optionally `k*term`, joined by `+`. `0` denotes the empty sum.
/// Whitespace is insignificant.
StableObject parse_object_expr(const AlgebraPtr& algebra, const std::string& text);

}  // namespace qmono
