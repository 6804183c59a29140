#ifndef ORBI_ORBI_HPP
#define ORBI_ORBI_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "complex.hpp"
#include "labeled.hpp"
#include "sectors.hpp"
#include "invariants.hpp"
#include "field.hpp"
#include "charts.hpp"
#include "gallery.hpp"
#include "random.hpp"
#include "io.hpp"

#endif // ORBI_ORBI_HPP
