#pragma once

#include <lincolor/algebra/basis.hpp>
#include <lincolor/algebra/field.hpp>
#include <lincolor/algebra/matrix.hpp>
#include <lincolor/algebra/point.hpp>
#include <lincolor/coloring/amalgam.hpp>
#include <lincolor/coloring/color.hpp>
#include <lincolor/generators.hpp>
#include <lincolor/grid/rectangles.hpp>
#include <lincolor/hj/embedding.hpp>
#include <lincolor/hj/lines.hpp>
#include <lincolor/hypergraph/closure.hpp>
#include <lincolor/hypergraph/linear_hypergraph.hpp>
#include <lincolor/hypergraph/presets.hpp>
#include <lincolor/io/certificate.hpp>
#include <lincolor/io/spec_format.hpp>
#include <lincolor/poset/condition.hpp>
#include <lincolor/poset/merge.hpp>
#include <lincolor/quotient/remainder.hpp>
#include <lincolor/ramsey/bounds.hpp>
#include <lincolor/ramsey/finite_poset.hpp>
