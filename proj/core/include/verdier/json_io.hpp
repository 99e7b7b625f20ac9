#pragma once

#include <string>

#include "verdier/diagram.hpp"
#include "verdier/duality.hpp"
#include "verdier/simplicial.hpp"

namespace verdier {

// Poset files: { "elements": [id...], "covers": [[low, high]...] }.
// Parsers reject duplicate elements, unknown references and cycles.
std::string poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const std::string& text);

// Complex files: { "facets": [[vertex...]...] }; faces are generated by
// downward closure.
std::string complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const std::string& text);

// Diagram files:
// { "poset": ..., "ring": "Z"|"F2"|..., "at": { elem: { "degrees": [lo,hi],
//   "ranks": {deg: n}, "differentials": {deg: matrix} } },
//   "edges": { "p->q" (with a unicode arrow): {deg: matrix} } }.
// Elements absent from "at" carry the zero complex.
std::string diagram_to_json(const Diagram& f);
Diagram diagram_from_json(const std::string& text);

// The dual is serialized with the same schema; the arrow in an edge key
// points along the map, i.e. cover (p, q) is written "q->p".
std::string opdiagram_to_json(const OpDiagram& f);

// Reports: { "property", "seed" (number or null), "timing_ms", "verdict",
// "witnesses" } with canonical key order and integers only.
std::string report_to_json(const VerdictReport& r);
std::string report_to_text(const VerdictReport& r);

} // namespace verdier
