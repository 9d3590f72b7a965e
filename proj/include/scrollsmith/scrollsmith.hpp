#pragma once

#include "scrollsmith/bihom_form.hpp"
#include "scrollsmith/binary_form.hpp"
#include "scrollsmith/contracted_lines.hpp"
#include "scrollsmith/criterion.hpp"
#include "scrollsmith/enumerator.hpp"
#include "scrollsmith/field.hpp"
#include "scrollsmith/linalg.hpp"
#include "scrollsmith/oracle.hpp"
#include "scrollsmith/poly.hpp"
#include "scrollsmith/scroll.hpp"
#include "scrollsmith/tracking_field.hpp"
