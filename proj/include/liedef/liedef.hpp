#pragma once

// Everything except the command-line layer (cli.hpp, io.hpp), which also
// needs OpenSSL for digests.
#include "liedef/rational.hpp"
#include "liedef/multipoly.hpp"
#include "liedef/ratfun.hpp"
#include "liedef/matrix.hpp"
#include "liedef/echelon.hpp"
#include "liedef/exterior.hpp"
#include "liedef/coderivation.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/classify3.hpp"
#include "liedef/deform.hpp"
#include "liedef/fixtures.hpp"
#include "liedef/moduli_graph.hpp"
