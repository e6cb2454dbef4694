#pragma once

#include "orthokit/core.hpp"
#include "orthokit/format.hpp"
#include "orthokit/relsys.hpp"
#include "orthokit/induce.hpp"
#include "orthokit/axioms.hpp"
#include "orthokit/church.hpp"
#include "orthokit/decomp.hpp"
#include "orthokit/amalgam.hpp"
#include "orthokit/enumerate.hpp"
