#pragma once

#include "latdeg/bigint.hpp"
#include "latdeg/cas_script.hpp"
#include "latdeg/determinant.hpp"
#include "latdeg/error.hpp"
#include "latdeg/hermite.hpp"
#include "latdeg/hilbert.hpp"
#include "latdeg/io.hpp"
#include "latdeg/lattice.hpp"
#include "latdeg/report.hpp"
#include "latdeg/sandpile.hpp"
#include "latdeg/smith.hpp"
#include "latdeg/toric.hpp"
#include "latdeg/zmatrix.hpp"
