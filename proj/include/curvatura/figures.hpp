#pragma once

#include <string>
#include <vector>

#include "curvatura/jsonfmt.hpp"

namespace curvatura {

// Figure ids: fig1 (right-triangle transversal bounds), fig2 (angle of
// parallelism), fig3 (equilateral chain with its vertex locus), fig4
// (birectangular quadrilateral with base bisector), fig6 (Saccheri
// quadrilateral with its fold line), fig7 (perpendiculars straddling the
// intersection threshold), profile (perpendicular-distance profile).
std::vector<std::string> figure_ids();

// Built-in parameters per figure; user params are merged over these.
ojson default_figure_params(const std::string& id);

// Render to an SVG document.  Hyperbolic scenes project to the Poincare disk
// (geodesics drawn as circular arcs orthogonal to the boundary), spherical
// scenes orthographically, Euclidean scenes directly.
std::string render_figure(const std::string& id, const ojson& params);

}  // namespace curvatura
