#pragma once

#include <string>
#include <vector>

#include "triplekit/dicyclic.hpp"
#include "triplekit/fkts.hpp"
#include "triplekit/io.hpp"
#include "triplekit/jternary.hpp"
#include "triplekit/lie_algebra.hpp"

namespace triplekit::fixtures {

/// Triple product identically zero; valid for any sign pair.
Fkts<Rational> zero(std::size_t n, int eps, int delta);

/// Dimension-2 system over the symplectic form s (s(e0,e1) = 1) with
/// xyz = s(x,y)z - s(x,z)y; epsilon = delta = 1, K(x,y) = -s(x,y) id,
/// unitary and balanced.
Fkts<Rational> fkts_b();

/// Dimension-1 system with 111 = 1 and epsilon = delta = -1; K(1,1) = 2 id.
Fkts<Rational> osp();

/// Dimension-1 system with 111 = 1, epsilon = -1, delta = 1; K vanishes.
Fkts<Rational> jts();

/// J = F1, T = F^2 with the symplectic angle form and the fkts_b triple.
JTernary<Rational> sp2();

/// J = F id, T = F with angle <x|x> = 2 and triple 1; sign = -1.
JTernary<Rational> osp_jt();

/// Dicyclic ternary algebra of sp2 (dimension 3: unit of J, then T).
Dicyclic<Rational> dic_sp2();

/// Plain sl2 with its own frame, as a Lie-algebra file.
LieAlgebra<Rational> sl2_algebra();

/// Names accepted by emit, in listing order.
const std::vector<std::string>& names();

/// Serialized form of the named fixture; throws ParseError for unknown names.
Json emit(const std::string& name);

} // namespace triplekit::fixtures
