#pragma once

#include "gl11/cyclotomic.hpp"
#include "gl11/diagrams.hpp"
#include "gl11/io.hpp"
#include "gl11/tqft.hpp"
#include "gl11/error.hpp"
#include "gl11/field.hpp"
#include "gl11/homspace.hpp"
#include "gl11/matrix.hpp"
#include "gl11/mode.hpp"
#include "gl11/module.hpp"
#include "gl11/mtrace.hpp"
#include "gl11/rational.hpp"
#include "gl11/ribbon.hpp"
#include "gl11/std_object.hpp"
